// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adequacy/discrete_distribution.hpp"
#include "adequacy/series.hpp"

namespace adequacy {

/// Knobs for the GB-like synthetic fixture. The defaults echo published
/// scenario magnitudes (55.55 GW ACS target, ~58.8 GW mean available
/// conventional capacity, 10.12 GW installed wind) while staying clearly
/// synthetic. Cold episodes plant a few multi-day spells where extreme
/// demand coincides with a deep wind lull, which is what concentrates
/// hindcast risk in a handful of historical hours.
struct SynthSpec {
    int winters = 7;
    int weeks = 20;
    std::uint64_t seed = 1;
    bool halfhourly_demand = true;
    int first_year = 2005;

    double acs_target_mw = 55550.0;
    double base_acs_mw = 55000.0;
    double acs_spread_mw = 800.0;

    // hourly wind load factor: logistic of an AR(1) process
    double wind_logit_mean = -0.55;
    double wind_logit_sd = 1.3;
    double wind_corr_hours = 36.0;
    // logit depression per unit of (d/acs - 0.95)/0.08 above 0.95
    double wind_demand_coupling = 0.85;

    // joint high-demand / low-wind episodes
    int episodes = 3;
    int episode_days = 3;
    double episode_demand_boost = 0.050;
    double episode_wind_logit_drop = 2.5;

    // demand texture
    double daily_noise_sd = 0.035;
    double hourly_noise_sd = 0.012;
};

struct SynthData {
    DemandSeries demand; // half-hourly when spec.halfhourly_demand
    WindSeries wind;
    std::map<std::string, double> acs_by_winter;
    std::vector<GenUnit> units;
};

SynthData generate_synthetic(const SynthSpec& spec);

/// The fixed synthetic conventional fleet (132 two-state units).
std::vector<GenUnit> synthetic_units();

/// Writes units.csv, demand.csv, wind.csv, acs.csv and scenario.conf under
/// dir (created if needed); returns the config path.
std::string write_synthetic_scenario(const SynthSpec& spec, const std::string& dir);

} // namespace adequacy
