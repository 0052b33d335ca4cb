// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace adequacy {

/// Two-state generating unit: available at full capacity with the given
/// probability, otherwise on outage at zero.
struct GenUnit {
    std::string name;
    double capacity_mw = 0.0;
    double availability = 0.0;
};

/// Exact probability mass function on a uniform MW grid.
///
/// Atom i sits at origin_mw + i * step_mw. Mass must total 1 within 1e-9;
/// construction trims leading/trailing atoms whose mass is exactly zero but
/// never drops small positive tail mass. Immutable after construction;
/// cdf() and expected_shortfall() are O(1) via prefix sums.
class DiscreteDistribution {
public:
    DiscreteDistribution(double origin_mw, double step_mw, std::vector<double> probs);

    [[nodiscard]] double origin_mw() const { return origin_mw_; }
    [[nodiscard]] double step_mw() const { return step_mw_; }
    [[nodiscard]] const std::vector<double>& probs() const { return probs_; }
    [[nodiscard]] std::size_t size() const { return probs_.size(); }

    [[nodiscard]] double min_support() const { return origin_mw_; }
    [[nodiscard]] double max_support() const {
        return origin_mw_ + static_cast<double>(probs_.size() - 1) * step_mw_;
    }
    [[nodiscard]] double value_at(std::size_t i) const {
        return origin_mw_ + static_cast<double>(i) * step_mw_;
    }

    /// Pr(X <= x); right-continuous, closed at atoms. Throws on non-finite x.
    [[nodiscard]] double cdf(double x) const {
        check_finite(x, "cdf");
        const std::ptrdiff_t i = index_at_or_below(x);
        if (i < 0) return 0.0;
        if (static_cast<std::size_t>(i) >= probs_.size()) return cum_prob_.back();
        return cum_prob_[static_cast<std::size_t>(i)];
    }

    /// E[max(level - X, 0)]. Throws on non-finite level.
    [[nodiscard]] double expected_shortfall(double level) const {
        check_finite(level, "expected_shortfall");
        std::ptrdiff_t i = index_at_or_below(level);
        if (i < 0) return 0.0;
        const auto last = static_cast<std::ptrdiff_t>(probs_.size()) - 1;
        if (i > last) i = last;
        const auto u = static_cast<std::size_t>(i);
        return level * cum_prob_[u] - cum_weighted_[u];
    }

    /// Point mass of a single draw at value_mw.
    static DiscreteDistribution degenerate(double value_mw, double step_mw = 1.0);

private:
    static void check_finite(double x, const char* where);

    // Grid index of the last atom at or below x; -1 below support, size()
    // above it. Values within 1e-6 of a step of an atom snap onto it, so
    // exact-atom queries survive the floating point division.
    [[nodiscard]] std::ptrdiff_t index_at_or_below(double x) const {
        const double r = (x - origin_mw_) * inv_step_;
        if (r < -1e-6) return -1;
        if (r >= static_cast<double>(probs_.size())) {
            return static_cast<std::ptrdiff_t>(probs_.size());
        }
        // r bounded: integer casts below are safe
        const double nearest = fast_floor(r + 0.5);
        const double diff = r - nearest;
        const double snapped = (diff <= 1e-6 && diff >= -1e-6) ? nearest : fast_floor(r);
        return snapped < 0.0 ? 0 : static_cast<std::ptrdiff_t>(snapped);
    }

    static double fast_floor(double r) {
        const double t = static_cast<double>(static_cast<long long>(r));
        return (r < t) ? t - 1.0 : t;
    }

    double origin_mw_;
    double step_mw_;
    double inv_step_;
    std::vector<double> probs_;
    std::vector<double> cum_prob_;     // prefix sums of probs
    std::vector<double> cum_weighted_; // prefix sums of probs[i] * value_at(i)
};

struct Moments {
    double mean_mw = 0.0;
    double std_mw = 0.0;
};

/// Distribution of total available capacity from independent two-state
/// units (the capacity outage probability table). Unit capacities are
/// rounded half-up onto the grid before convolution.
DiscreteDistribution build_copt(const std::vector<GenUnit>& units, double step_mw);

/// Distribution of the sum of independent draws. Grid steps must match.
DiscreteDistribution convolve(const DiscreteDistribution& a, const DiscreteDistribution& b);

/// Distribution of (delta - V) for V ~ dist. Builds -D and M = X - D supports.
DiscreteDistribution negate_and_shift(const DiscreteDistribution& dist, double delta_mw);

/// Exact mean and population standard deviation.
Moments moments(const DiscreteDistribution& dist);

} // namespace adequacy
