// SPDX-License-Identifier: Apache-2.0
#include "adequacy/risk.hpp"

#include <algorithm>
#include <numeric>

#include "adequacy/errors.hpp"

namespace adequacy {

double lolp(const DiscreteDistribution& copt, const JointModel& model, int threads) {
    return model.fold_mean([&](double v) { return copt.cdf(v); }, 0.0, threads);
}

double epu(const DiscreteDistribution& copt, const JointModel& model, int threads) {
    return model.fold_mean([&](double v) { return copt.expected_shortfall(v); }, 0.0, threads);
}

RiskIndices season_indices(const DiscreteDistribution& copt, const JointModel& model,
                           int n_periods, int threads) {
    if (n_periods <= 0) throw ConfigError("n_periods must be positive");
    RiskIndices out;
    out.n_periods = n_periods;
    out.lolp = lolp(copt, model, threads);
    out.epu_mw = epu(copt, model, threads);
    out.lole_hours = out.lolp * n_periods;
    out.eeu_mwh = out.epu_mw * n_periods;
    return out;
}

std::vector<double> top_n_curve(const DiscreteDistribution& copt, const JointModel& model,
                                std::size_t n_max) {
    if (model.kind() != ModelKind::hindcast) {
        throw ConfigError("top-n decomposition is defined for hindcast models only");
    }
    const std::size_t n = model.demand().size();
    if (n_max < 1 || n_max > n) {
        throw ConfigError("top-n: n must lie in [1, number of observations]");
    }

    std::vector<double> contrib(n);
    for (std::size_t t = 0; t < n; ++t) {
        contrib[t] = copt.cdf(model.demand()[t] - model.wind()[t]);
    }
    KahanSum total_acc;
    for (double c : contrib) total_acc.add(c);
    const double total = total_acc.value();
    if (total <= 0.0) {
        throw NumericalError("top-n share undefined: LOLP is zero");
    }

    // Sort by contribution descending; stable sort keeps earlier observations
    // first among ties (series order is timestamp order).
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return contrib[a] > contrib[b]; });

    // Plain cumulative sums: adding nonnegative terms is monotone in FP, so
    // the share curve never dips.
    std::vector<double> shares;
    shares.reserve(n_max);
    double acc = 0.0;
    for (std::size_t i = 0; i < n_max; ++i) {
        acc += contrib[order[i]];
        shares.push_back(std::min(1.0, acc / total));
    }
    if (n_max == n) shares.back() = 1.0;
    return shares;
}

double top_n_share(const DiscreteDistribution& copt, const JointModel& model, std::size_t n) {
    return top_n_curve(copt, model, n).back();
}

} // namespace adequacy
