// SPDX-License-Identifier: Apache-2.0
#include "adequacy/discrete_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adequacy/errors.hpp"
#include "adequacy/parallel.hpp"

namespace adequacy {

namespace {

constexpr double kMassTolerance = 1e-9;

void trim_zeros(std::vector<double>& probs, double& origin_mw, double step_mw) {
    std::size_t first = 0;
    while (first < probs.size() && probs[first] == 0.0) ++first;
    if (first == probs.size()) {
        throw NumericalError("distribution has no nonzero mass");
    }
    std::size_t last = probs.size() - 1;
    while (probs[last] == 0.0) --last;
    if (first > 0 || last + 1 < probs.size()) {
        probs.assign(probs.begin() + static_cast<std::ptrdiff_t>(first),
                     probs.begin() + static_cast<std::ptrdiff_t>(last) + 1);
        origin_mw += static_cast<double>(first) * step_mw;
    }
}

} // namespace

DiscreteDistribution::DiscreteDistribution(double origin_mw, double step_mw,
                                           std::vector<double> probs)
    : origin_mw_(origin_mw), step_mw_(step_mw), probs_(std::move(probs)) {
    if (!(step_mw_ > 0.0) || !std::isfinite(step_mw_)) {
        throw NumericalError("grid step must be positive and finite");
    }
    if (!std::isfinite(origin_mw_)) {
        throw NumericalError("grid origin must be finite");
    }
    if (probs_.empty()) {
        throw NumericalError("distribution needs at least one atom");
    }
    KahanSum mass;
    for (double p : probs_) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw NumericalError("probabilities must be finite and nonnegative");
        }
        mass.add(p);
    }
    if (std::abs(mass.value() - 1.0) > kMassTolerance) {
        throw NumericalError("probability mass " + std::to_string(mass.value()) +
                             " deviates from 1 beyond tolerance");
    }
    trim_zeros(probs_, origin_mw_, step_mw_);
    inv_step_ = 1.0 / step_mw_;

    cum_prob_.resize(probs_.size());
    cum_weighted_.resize(probs_.size());
    KahanSum cp;
    KahanSum cw;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        cp.add(probs_[i]);
        cw.add(probs_[i] * value_at(i));
        cum_prob_[i] = cp.value();
        cum_weighted_[i] = cw.value();
    }
}

void DiscreteDistribution::check_finite(double x, const char* where) {
    if (!std::isfinite(x)) {
        throw NumericalError(std::string(where) + ": non-finite argument");
    }
}

DiscreteDistribution DiscreteDistribution::degenerate(double value_mw, double step_mw) {
    return DiscreteDistribution(value_mw, step_mw, {1.0});
}

DiscreteDistribution build_copt(const std::vector<GenUnit>& units, double step_mw) {
    if (units.empty()) {
        throw DataError("unit list is empty");
    }
    if (!(step_mw > 0.0) || !std::isfinite(step_mw)) {
        throw NumericalError("grid step must be positive and finite");
    }
    std::size_t total_steps = 0;
    for (const auto& u : units) {
        if (!std::isfinite(u.capacity_mw) || u.capacity_mw < 0.0) {
            throw DataError("unit '" + u.name + "': capacity must be finite and nonnegative");
        }
        if (!std::isfinite(u.availability) || u.availability < 0.0 || u.availability > 1.0) {
            throw DataError("unit '" + u.name + "': availability must lie in [0,1]");
        }
        total_steps += static_cast<std::size_t>(std::llround(u.capacity_mw / step_mw));
    }

    // Sparse accumulation, one two-state unit at a time, in place from the
    // top so each mass is spread exactly once.
    std::vector<double> probs(total_steps + 1, 0.0);
    probs[0] = 1.0;
    std::size_t used = 0; // highest occupied index so far
    for (const auto& u : units) {
        const auto k = static_cast<std::size_t>(std::llround(u.capacity_mw / step_mw));
        if (k == 0) continue; // rounds onto the grid at zero: contributes nothing
        const double p = u.availability;
        const double q = 1.0 - p;
        for (std::size_t j = used + 1; j-- > 0;) {
            const double m = probs[j];
            if (m == 0.0) continue;
            probs[j + k] += m * p;
            probs[j] = m * q;
        }
        used += k;
    }
    return DiscreteDistribution(0.0, step_mw, std::move(probs));
}

DiscreteDistribution convolve(const DiscreteDistribution& a, const DiscreteDistribution& b) {
    if (a.step_mw() != b.step_mw()) {
        throw NumericalError("convolve: mismatched grid steps");
    }
    const auto& pa = a.probs();
    const auto& pb = b.probs();
    std::vector<double> out(pa.size() + pb.size() - 1, 0.0);
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const double w = pa[i];
        if (w == 0.0) continue;
        for (std::size_t j = 0; j < pb.size(); ++j) {
            out[i + j] += w * pb[j];
        }
    }
    return DiscreteDistribution(a.origin_mw() + b.origin_mw(), a.step_mw(), std::move(out));
}

DiscreteDistribution negate_and_shift(const DiscreteDistribution& dist, double delta_mw) {
    if (!std::isfinite(delta_mw)) {
        throw NumericalError("negate_and_shift: non-finite shift");
    }
    std::vector<double> probs(dist.probs().rbegin(), dist.probs().rend());
    const double new_origin = delta_mw - dist.max_support();
    return DiscreteDistribution(new_origin, dist.step_mw(), std::move(probs));
}

Moments moments(const DiscreteDistribution& dist) {
    KahanSum mean_acc;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        mean_acc.add(dist.probs()[i] * dist.value_at(i));
    }
    const double mean = mean_acc.value();
    KahanSum var_acc;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const double d = dist.value_at(i) - mean;
        var_acc.add(dist.probs()[i] * d * d);
    }
    return Moments{mean, std::sqrt(var_acc.value())};
}

} // namespace adequacy
