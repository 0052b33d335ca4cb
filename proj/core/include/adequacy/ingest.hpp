// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adequacy/discrete_distribution.hpp"
#include "adequacy/series.hpp"

namespace adequacy {

/// Demand CSV: header `timestamp,demand_mw,winter_id`, ISO-8601 UTC stamps.
DemandSeries load_demand_csv(const std::string& path);

/// Wind CSV: header `timestamp,load_factor`.
WindSeries load_wind_csv(const std::string& path);

/// ACS CSV: header `winter_id,acs_peak_mw`.
std::map<std::string, double> load_acs_csv(const std::string& path);

/// Unit CSV: header `name,capacity_mw,availability`.
std::vector<GenUnit> load_units_csv(const std::string& path);

/// Collapses half-hourly demand to hourly, keeping for each hour the higher
/// of its two half-hourly values. Records must pair up on clock hours.
DemandSeries halfhourly_to_hourly(const DemandSeries& series);

/// Multiplies each winter's observations by acs_target / acs of that winter.
DemandSeries rescale_demand(const DemandSeries& series,
                            const std::map<std::string, double>& acs_by_winter,
                            double acs_target_mw);

/// Adds a flat MW adjustment to every record (frequency-response holdback).
DemandSeries add_response_adjustment(const DemandSeries& series, double adj_mw = 700.0);

/// Hourly wind MW at the given installed capacity: load_factor * installed.
std::vector<double> wind_to_capacity(const WindSeries& series, double installed_mw);

/// Inner-joins demand and wind on timestamps, restricted to each winter's
/// season window, and assigns resampling blocks; the wind column is scaled
/// to installed_wind_mw. By default any missing hour inside a window is an
/// error; with allow_gaps, blocks with missing hours are dropped whole.
/// A winter whose window has no overlap at all is always an error.
PairedSeries align_and_block(const DemandSeries& demand, const WindSeries& wind,
                             double installed_wind_mw, const SeasonSpec& spec,
                             bool allow_gaps = false);

/// Weekly wind blocks for the independent resampling scheme: every christmas
/// block splits into its two one-week halves, normal blocks pass through.
std::vector<Block> weekly_wind_blocks(const PairedSeries& series);

} // namespace adequacy
