// SPDX-License-Identifier: Apache-2.0
//
// Independent test oracles. These deliberately avoid the library's
// algorithms: the COPT oracle enumerates all 2^n outage states, the risk
// oracle samples the model, and the capacity-value oracle scans the risk
// curve at fine resolution.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "adequacy/discrete_distribution.hpp"
#include "adequacy/joint_model.hpp"
#include "adequacy/rng.hpp"

namespace oracles {

/// All 2^n unit states, probabilities accumulated per total capacity (after
/// half-up rounding onto the grid). Feasible for n <= ~20.
inline std::map<long long, double> enumerate_copt(const std::vector<adequacy::GenUnit>& units,
                                                  double step_mw) {
    std::map<long long, double> atoms;
    const std::size_t n = units.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        double p = 1.0;
        long long cap_steps = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
                p *= units[i].availability;
                cap_steps += std::llround(units[i].capacity_mw / step_mw);
            } else {
                p *= 1.0 - units[i].availability;
            }
        }
        atoms[cap_steps] += p;
    }
    return atoms;
}

/// Monte-Carlo LOLP: sample an atom of the model (demand index, wind index),
/// then a conventional capacity draw, and count shortfalls (X <= net demand).
inline double mc_lolp(const adequacy::DiscreteDistribution& copt,
                      const adequacy::JointModel& model, std::size_t n_draws,
                      adequacy::RngStream& rng) {
    // Inverse-CDF sampling from the COPT via its own pmf (recomputed here).
    std::vector<double> cum;
    cum.reserve(copt.size());
    double acc = 0.0;
    for (double p : copt.probs()) {
        acc += p;
        cum.push_back(acc);
    }

    const auto& demand = model.demand();
    const auto& wind = model.wind();
    const bool paired = model.kind() == adequacy::ModelKind::hindcast;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n_draws; ++i) {
        const std::size_t t = rng.uniform_below(demand.size());
        const std::size_t s = paired ? t : rng.uniform_below(wind.size());
        double lam = 1.0;
        if (model.kind() == adequacy::ModelKind::rescaled) {
            lam = model.scaling()(demand[t]);
        }
        const double net = demand[t] - lam * wind[s];

        const double u = rng.uniform01();
        const auto it = std::lower_bound(cum.begin(), cum.end(), u);
        const auto idx = static_cast<std::size_t>(
            std::min<std::ptrdiff_t>(it - cum.begin(),
                                     static_cast<std::ptrdiff_t>(cum.size()) - 1));
        const double x = copt.value_at(idx);
        if (x <= net) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(n_draws);
}

/// First v (scanning upward at `resolution` MW) where the step risk curve
/// drops to or below the target; the crossing is reported mid-cell.
template <class RiskFn>
double scan_decreasing_root(const RiskFn& risk, double target, double hi, double resolution) {
    double prev = 0.0;
    for (double v = 0.0; v <= hi + resolution; v += resolution) {
        if (risk(v) <= target) {
            return 0.5 * (prev + v);
        }
        prev = v;
    }
    return hi;
}

/// Direct weighted least squares for the LOESS oracle: tricube weights over
/// the q nearest points of x0, straight 2x2 normal equations.
inline double direct_loess_point(const std::vector<double>& x, const std::vector<double>& y,
                                 double span, double x0) {
    const std::size_t n = x.size();
    const auto q = static_cast<std::size_t>(std::ceil(span * static_cast<double>(n)));
    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) dist[i] = std::abs(x[i] - x0);
    std::vector<double> sorted_dist = dist;
    std::nth_element(sorted_dist.begin(), sorted_dist.begin() + static_cast<std::ptrdiff_t>(q - 1),
                     sorted_dist.end());
    const double h = sorted_dist[q - 1];
    double sw = 0, swt = 0, swtt = 0, swy = 0, swty = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (h <= 0.0 || dist[i] >= h) {
            if (!(dist[i] == 0.0 && h == 0.0)) continue;
        }
        const double u = h > 0.0 ? dist[i] / h : 0.0;
        if (u >= 1.0) continue;
        const double c = 1.0 - u * u * u;
        const double w = c * c * c;
        const double t = x[i] - x0;
        sw += w;
        swt += w * t;
        swtt += w * t * t;
        swy += w * y[i];
        swty += w * t * y[i];
    }
    const double denom = sw * swtt - swt * swt;
    if (denom <= 0.0) return swy / sw;
    return (swtt * swy - swt * swty) / denom;
}

} // namespace oracles
