// SPDX-License-Identifier: Apache-2.0
#include "adequacy/scenario.hpp"

#include <filesystem>

#include "adequacy/config.hpp"
#include "adequacy/errors.hpp"

namespace adequacy {

namespace {

std::string resolve(const std::filesystem::path& base, const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_absolute()) return p.string();
    return (base / p).string();
}

} // namespace

Scenario load_scenario(const std::string& config_path) {
    Config cfg = Config::parse_file(config_path);
    const auto base = std::filesystem::path(config_path).parent_path();

    Scenario sc;
    sc.units_csv = resolve(base, cfg.get_string("data.units_csv"));
    sc.demand_csv = resolve(base, cfg.get_string("data.demand_csv"));
    sc.wind_csv = resolve(base, cfg.get_string("data.wind_csv"));
    sc.acs_csv = resolve(base, cfg.get_string("data.acs_csv"));
    const std::string resolution = cfg.get_string("data.demand_resolution", "hourly");
    if (resolution == "halfhourly") {
        sc.demand_halfhourly = true;
    } else if (resolution != "hourly") {
        throw ConfigError("data.demand_resolution must be 'hourly' or 'halfhourly'");
    }

    sc.acs_target_mw = cfg.get_double("scenario.acs_target_mw");
    if (!(sc.acs_target_mw > 0.0)) throw ConfigError("scenario.acs_target_mw must be positive");
    sc.response_adjustment_mw = cfg.get_double("scenario.response_adjustment_mw", 700.0);
    sc.installed_wind_mw = cfg.get_double("scenario.installed_wind_mw", 0.0);
    if (cfg.has("scenario.capacities_mw")) {
        sc.capacities_mw = cfg.get_double_list("scenario.capacities_mw");
        if (sc.capacities_mw.empty()) throw ConfigError("scenario.capacities_mw is empty");
        for (double c : sc.capacities_mw) {
            if (c < 0.0) throw ConfigError("scenario.capacities_mw: capacities must be >= 0");
        }
    } else {
        sc.capacities_mw = {sc.installed_wind_mw};
    }

    sc.model = model_kind_from_string(cfg.get_string("model.kind", "independence"));
    sc.lambda_d1_norm = cfg.get_double("lambda.d1_norm", 0.95);
    sc.lambda_d2_norm = cfg.get_double("lambda.d2_norm", 1.03);
    sc.lambda_l1 = cfg.get_double("lambda.l1", 1.0);
    sc.lambda_l2 = cfg.get_double("lambda.l2", 0.5);

    sc.copt_step_mw = cfg.get_double("copt.step_mw", 1.0);
    if (!(sc.copt_step_mw > 0.0)) throw ConfigError("copt.step_mw must be positive");
    sc.season.weeks_per_winter = cfg.get_int("season.weeks_per_winter", 20);
    if (sc.season.weeks_per_winter < 3) {
        throw ConfigError("season.weeks_per_winter must be at least 3");
    }
    sc.n_periods = cfg.get_int("season.n_periods", 0);

    sc.bootstrap_replicates = cfg.get_int("bootstrap.replicates", 0);
    sc.bootstrap_ci_level = cfg.get_double("bootstrap.ci_level", 0.95);
    if (!(sc.bootstrap_ci_level > 0.0) || !(sc.bootstrap_ci_level < 1.0)) {
        throw ConfigError("bootstrap.ci_level must lie in (0,1)");
    }
    sc.bootstrap_seed = cfg.get_u64("bootstrap.seed", 0);

    sc.loess_span = cfg.get_double("loess.span", 0.75);
    sc.loess_min_demand_norm = cfg.get_double("loess.min_demand_norm", 0.9);
    sc.allow_gaps = cfg.get_bool("io.allow_gaps", false);

    cfg.reject_unused();

    // Fail early on inconsistent scaling parameters.
    sc.scaling().validate();
    return sc;
}

ScenarioRun::ScenarioRun(Scenario scenario)
    : scenario_(std::move(scenario)),
      units_(load_units_csv(scenario_.units_csv)),
      copt_(build_copt(units_, scenario_.copt_step_mw)),
      demand_(load_demand_csv(scenario_.demand_csv)),
      wind_(load_wind_csv(scenario_.wind_csv)),
      acs_(load_acs_csv(scenario_.acs_csv)) {
    if (scenario_.demand_halfhourly) {
        demand_ = halfhourly_to_hourly(demand_);
    }
    demand_ = rescale_demand(demand_, acs_, scenario_.acs_target_mw);
    demand_ = add_response_adjustment(demand_, scenario_.response_adjustment_mw);
}

PairedSeries ScenarioRun::series(double installed_wind_mw) const {
    return align_and_block(demand_, wind_, installed_wind_mw, scenario_.season,
                           scenario_.allow_gaps);
}

JointModel ScenarioRun::model(const PairedSeries& series) const {
    return model(series, scenario_.model);
}

JointModel ScenarioRun::model(const PairedSeries& series, ModelKind kind) const {
    const ScalingFunction sf = scenario_.scaling();
    return JointModel::from_series(kind, series, &sf);
}

ResampleScheme ScenarioRun::resample_scheme() const {
    return scenario_.model == ModelKind::hindcast ? ResampleScheme::paired_blocks
                                                  : ResampleScheme::independent_blocks;
}

BootstrapSpec ScenarioRun::bootstrap_spec() const {
    BootstrapSpec spec;
    spec.n_replicates = scenario_.bootstrap_replicates > 0 ? scenario_.bootstrap_replicates : 1000;
    spec.ci_level = scenario_.bootstrap_ci_level;
    spec.seed = scenario_.bootstrap_seed;
    spec.scheme = resample_scheme();
    return spec;
}

} // namespace adequacy
