// SPDX-License-Identifier: Apache-2.0
#include "adequacy/capacity_value.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "adequacy/errors.hpp"
#include "adequacy/risk.hpp"

namespace adequacy {

namespace {

// Monotone step risk sampled on multiples of `step`, interpolated
// log-linearly in between (linearly where a cell endpoint is zero, since
// log-space is unavailable there). Evaluations are cached: bisection
// revisits neighbouring cells.
class InterpolatedRiskCurve {
public:
    InterpolatedRiskCurve(std::function<double(double)> risk_at, double step)
        : risk_at_(std::move(risk_at)), step_(step) {}

    double at_grid(long long k) {
        const auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
        const double r = risk_at_(static_cast<double>(k) * step_);
        cache_.emplace(k, r);
        return r;
    }

    double operator()(double v) {
        const double pos = v / step_;
        auto k = static_cast<long long>(std::floor(pos));
        const double frac = pos - static_cast<double>(k);
        const double r0 = at_grid(k);
        if (frac == 0.0) return r0;
        const double r1 = at_grid(k + 1);
        if (r0 == r1) return r0;
        if (r0 > 0.0 && r1 > 0.0) {
            return std::exp(std::log(r0) + frac * (std::log(r1) - std::log(r0)));
        }
        return r0 + frac * (r1 - r0);
    }

    [[nodiscard]] std::size_t evaluations() const { return cache_.size(); }

private:
    std::function<double(double)> risk_at_;
    double step_;
    std::map<long long, double> cache_;
};

struct SolveOutcome {
    double root = 0.0;
    double achieved = 0.0;
    int iterations = 0;
};

// Bisection for curve(v) == target on [0, hi]. `decreasing` states the
// curve's orientation; the bracket keeps target between its endpoints.
SolveOutcome bisect_risk(InterpolatedRiskCurve& curve, double target, double hi_mw,
                         bool decreasing, double tol_mw) {
    double lo = 0.0;
    double hi = hi_mw;
    const double f_lo = curve(lo);
    const double f_hi = curve(hi);
    const double sign = decreasing ? -1.0 : 1.0;
    if (sign * (f_lo - target) > 0.0 || sign * (f_hi - target) < 0.0) {
        throw NumericalError("capacity value solve: target risk not bracketed");
    }
    SolveOutcome out;
    while (hi - lo > tol_mw) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = curve(mid);
        ++out.iterations;
        if (sign * (f_mid - target) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    out.root = 0.5 * (lo + hi);
    out.achieved = curve(out.root);
    return out;
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

} // namespace

double risk_with_firm(const DiscreteDistribution& copt, const JointModel& demand_only,
                      double firm_mw, int threads) {
    if (!std::isfinite(firm_mw)) throw NumericalError("risk_with_firm: non-finite capacity");
    return demand_only.fold_mean([&](double v) { return copt.cdf(v); }, -firm_mw, threads);
}

CapacityValueResult efc(const DiscreteDistribution& copt, const JointModel& model_with_wind,
                        double tol_mw, double installed_mw, int threads) {
    if (!(tol_mw > 0.0)) throw ConfigError("efc: tolerance must be positive");
    const JointModel demand_only = model_with_wind.demand_only();

    CapacityValueResult out;
    out.metric = CapacityMetric::efc;
    out.target_risk = lolp(copt, model_with_wind, threads);
    const double baseline = risk_with_firm(copt, demand_only, 0.0, threads);
    if (out.target_risk <= 0.0) {
        throw NumericalError(
            "efc: system with wind carries zero risk; equivalent firm capacity is unbounded");
    }
    const double max_wind = max_of(model_with_wind.wind());
    if (out.target_risk >= baseline || max_wind <= 0.0) {
        // Wind contributes nothing (e.g. zero installed capacity).
        out.value_mw = 0.0;
        out.achieved_risk = baseline;
        out.pct_installed = installed_mw > 0.0
                                ? 0.0
                                : std::numeric_limits<double>::quiet_NaN();
        return out;
    }

    InterpolatedRiskCurve curve(
        [&](double v) { return risk_with_firm(copt, demand_only, v, threads); },
        copt.step_mw());
    const double hi = max_of(demand_only.demand()) - copt.min_support() + copt.step_mw();
    const SolveOutcome s = bisect_risk(curve, out.target_risk, std::max(hi, copt.step_mw()),
                                       /*decreasing=*/true, tol_mw);
    out.value_mw = s.root;
    out.achieved_risk = s.achieved;
    out.iterations = s.iterations;
    out.pct_installed = installed_mw > 0.0 ? 100.0 * out.value_mw / installed_mw
                                           : std::numeric_limits<double>::quiet_NaN();
    return out;
}

CapacityValueResult elcc(const DiscreteDistribution& copt, const JointModel& model_with_wind,
                         const JointModel& demand_only, double tol_mw, double installed_mw,
                         int threads) {
    if (!(tol_mw > 0.0)) throw ConfigError("elcc: tolerance must be positive");

    CapacityValueResult out;
    out.metric = CapacityMetric::elcc;
    out.target_risk = lolp(copt, demand_only, threads);
    if (out.target_risk <= 0.0) {
        throw NumericalError("elcc: baseline system carries zero risk");
    }

    const double risk_no_shift = lolp(copt, model_with_wind, threads);
    if (risk_no_shift >= out.target_risk || max_of(model_with_wind.wind()) <= 0.0) {
        out.value_mw = 0.0;
        out.achieved_risk = risk_no_shift;
        out.pct_installed = installed_mw > 0.0
                                ? 0.0
                                : std::numeric_limits<double>::quiet_NaN();
        return out;
    }

    InterpolatedRiskCurve curve(
        [&](double e) {
            return model_with_wind.fold_mean([&](double v) { return copt.cdf(v); }, e, threads);
        },
        copt.step_mw());
    const double hi = max_of(model_with_wind.wind()) + copt.step_mw();
    const SolveOutcome s = bisect_risk(curve, out.target_risk, hi,
                                       /*decreasing=*/false, tol_mw);
    out.value_mw = s.root;
    out.achieved_risk = s.achieved;
    out.iterations = s.iterations;
    out.pct_installed = installed_mw > 0.0 ? 100.0 * out.value_mw / installed_mw
                                           : std::numeric_limits<double>::quiet_NaN();
    return out;
}

} // namespace adequacy
