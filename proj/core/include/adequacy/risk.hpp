// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "adequacy/discrete_distribution.hpp"
#include "adequacy/joint_model.hpp"

namespace adequacy {

/// Season adequacy indices. lole = lolp * n_periods, eeu = epu * n_periods.
struct RiskIndices {
    double lolp = 0.0;     // probability at a random in-season hour
    double lole_hours = 0.0;
    double epu_mw = 0.0;   // expected power unserved at a random hour
    double eeu_mwh = 0.0;
    int n_periods = 0;     // hours in the season
};

/// Loss of load probability: sum over net-demand atoms of weight * F_X(value).
/// A shortfall at exactly zero margin counts as loss of load.
double lolp(const DiscreteDistribution& copt, const JointModel& model, int threads = 1);

/// Expected power unserved: sum of weight * E[max(value - X, 0)].
double epu(const DiscreteDistribution& copt, const JointModel& model, int threads = 1);

RiskIndices season_indices(const DiscreteDistribution& copt, const JointModel& model,
                           int n_periods, int threads = 1);

/// Cumulative share of total hourly LOLP carried by the n atoms with the
/// highest F_X(net demand), for n = 1..n_max. Hindcast models only; ties in
/// F_X break towards the earlier observation.
std::vector<double> top_n_curve(const DiscreteDistribution& copt, const JointModel& model,
                                std::size_t n_max);

/// Single point of top_n_curve.
double top_n_share(const DiscreteDistribution& copt, const JointModel& model, std::size_t n);

} // namespace adequacy
