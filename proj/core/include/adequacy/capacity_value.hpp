// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "adequacy/discrete_distribution.hpp"
#include "adequacy/joint_model.hpp"

namespace adequacy {

enum class CapacityMetric { efc, elcc };

struct CapacityValueResult {
    CapacityMetric metric = CapacityMetric::efc;
    double value_mw = 0.0;
    double pct_installed = 0.0; // NaN when no installed capacity was given
    double target_risk = 0.0;
    double achieved_risk = 0.0; // on the interpolated risk curve
    int iterations = 0;
};

/// LOLP with the wind fleet replaced by firm capacity v:
/// sum of weight * F_X(d_t - v) over the demand-only model's atoms.
double risk_with_firm(const DiscreteDistribution& copt, const JointModel& demand_only,
                      double firm_mw, int threads = 1);

/// Equivalent firm capacity: the v solving risk_with_firm(v) = LOLP(with
/// wind). Risk is interpolated log-linearly between evaluations on the COPT
/// grid step, and the root found by bisection to within tol_mw.
CapacityValueResult efc(const DiscreteDistribution& copt, const JointModel& model_with_wind,
                        double tol_mw = 0.1, double installed_mw = -1.0, int threads = 1);

/// Effective load carrying capability: the uniform extra demand e at which
/// LOLP of the wind model shifted by +e returns to the no-wind baseline.
CapacityValueResult elcc(const DiscreteDistribution& copt, const JointModel& model_with_wind,
                         const JointModel& demand_only, double tol_mw = 0.1,
                         double installed_mw = -1.0, int threads = 1);

} // namespace adequacy
