// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adequacy/bootstrap.hpp"
#include "adequacy/discrete_distribution.hpp"
#include "adequacy/ingest.hpp"
#include "adequacy/joint_model.hpp"
#include "adequacy/scaling.hpp"
#include "adequacy/series.hpp"

namespace adequacy {

/// A fully specified study: data files, future-scenario parameters, model
/// choice, and solver/bootstrap settings. Paths are resolved relative to the
/// config file's directory.
struct Scenario {
    std::string units_csv;
    std::string demand_csv;
    std::string wind_csv;
    std::string acs_csv;
    bool demand_halfhourly = false;

    double acs_target_mw = 0.0;
    double response_adjustment_mw = 700.0;
    double installed_wind_mw = 0.0;
    std::vector<double> capacities_mw; // sweep list; defaults to {installed_wind_mw}

    ModelKind model = ModelKind::independence;
    double lambda_d1_norm = 0.95;
    double lambda_d2_norm = 1.03;
    double lambda_l1 = 1.0;
    double lambda_l2 = 0.5;

    double copt_step_mw = 1.0;
    SeasonSpec season;
    int n_periods = 0; // 0: weeks_per_winter * 168

    int bootstrap_replicates = 0; // 0: no bootstrap in sweeps
    double bootstrap_ci_level = 0.95;
    std::uint64_t bootstrap_seed = 0;

    double loess_span = 0.75;
    double loess_min_demand_norm = 0.9;

    bool allow_gaps = false;

    [[nodiscard]] int effective_n_periods() const {
        return n_periods > 0 ? n_periods : season.weeks_per_winter * 168;
    }
    [[nodiscard]] ScalingFunction scaling() const {
        return ScalingFunction{lambda_d1_norm, lambda_d2_norm, lambda_l1, lambda_l2,
                               acs_target_mw};
    }
};

Scenario load_scenario(const std::string& config_path);

/// Loaded and preprocessed scenario data: COPT built from the unit list,
/// demand collapsed to hourly / rescaled to the target ACS / adjusted, wind
/// as load factors. Series and models are derived per installed capacity.
class ScenarioRun {
public:
    explicit ScenarioRun(Scenario scenario);

    [[nodiscard]] const Scenario& scenario() const { return scenario_; }
    [[nodiscard]] const DiscreteDistribution& copt() const { return copt_; }
    [[nodiscard]] const DemandSeries& demand() const { return demand_; }
    [[nodiscard]] const WindSeries& wind() const { return wind_; }
    [[nodiscard]] const std::map<std::string, double>& acs() const { return acs_; }
    [[nodiscard]] const std::vector<GenUnit>& units() const { return units_; }

    [[nodiscard]] PairedSeries series(double installed_wind_mw) const;
    [[nodiscard]] JointModel model(const PairedSeries& series) const;
    [[nodiscard]] JointModel model(const PairedSeries& series, ModelKind kind) const;

    /// Paired blocks for hindcast, independent streams otherwise.
    [[nodiscard]] ResampleScheme resample_scheme() const;
    [[nodiscard]] BootstrapSpec bootstrap_spec() const;

private:
    Scenario scenario_;
    std::vector<GenUnit> units_;
    DiscreteDistribution copt_;
    DemandSeries demand_;
    WindSeries wind_;
    std::map<std::string, double> acs_;
};

} // namespace adequacy
