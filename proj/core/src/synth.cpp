// SPDX-License-Identifier: Apache-2.0
#include "adequacy/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "adequacy/errors.hpp"
#include "adequacy/rng.hpp"
#include "adequacy/time.hpp"

namespace adequacy {

namespace {

// GB-ish winter weekday demand profile, evening peak at 17:00 UTC.
constexpr double kDiurnal[24] = {0.72, 0.69, 0.67, 0.66, 0.66, 0.68, 0.74, 0.82,
                                 0.88, 0.91, 0.93, 0.94, 0.94, 0.93, 0.92, 0.93,
                                 0.97, 1.00, 0.99, 0.96, 0.92, 0.86, 0.80, 0.75};

double weekday_factor(std::int64_t ts) {
    const auto wd = ((day_index(ts) % 7) + 7 + 4) % 7; // epoch day 0 was a Thursday
    if (wd == 0) return 0.90;                          // Sunday
    if (wd == 6) return 0.93;                          // Saturday
    return 1.0;
}

double logistic(double g) { return 1.0 / (1.0 + std::exp(-g)); }

struct Episode {
    int winter = 0;
    int start_day = 0; // relative to Nov 1
    int days = 0;
};

} // namespace

std::vector<GenUnit> synthetic_units() {
    struct UnitClass {
        const char* prefix;
        int count;
        double capacity_mw;
        double availability;
    };
    // Mix chosen so the available-capacity distribution has mean ~58.8 GW
    // and standard deviation ~1.95 GW.
    const UnitClass classes[] = {
        {"nuclear", 6, 1180.0, 0.86}, {"ccgt", 47, 850.0, 0.925}, {"coal", 13, 520.0, 0.88},
        {"hydro", 30, 180.0, 0.95},   {"peaker", 36, 135.0, 0.97},
    };
    std::vector<GenUnit> units;
    for (const auto& cls : classes) {
        for (int i = 1; i <= cls.count; ++i) {
            char name[32];
            std::snprintf(name, sizeof(name), "%s-%02d", cls.prefix, i);
            units.push_back(GenUnit{name, cls.capacity_mw, cls.availability});
        }
    }
    return units;
}

SynthData generate_synthetic(const SynthSpec& spec) {
    if (spec.winters < 1 || spec.weeks < 3) {
        throw ConfigError("synthetic fixture needs >= 1 winter and >= 3 weeks");
    }
    SynthData out;
    out.units = synthetic_units();

    RngStream acs_rng(spec.seed, {1});
    std::vector<double> acs(static_cast<std::size_t>(spec.winters));
    for (int w = 0; w < spec.winters; ++w) {
        acs[static_cast<std::size_t>(w)] =
            spec.base_acs_mw + spec.acs_spread_mw * (2.0 * acs_rng.uniform01() - 1.0);
    }

    // Episode placement: spread over distinct winters, landing mid-December
    // to late January.
    RngStream ep_rng(spec.seed, {2});
    std::vector<Episode> episodes;
    for (int e = 0; e < spec.episodes; ++e) {
        Episode ep;
        ep.winter = spec.winters <= 1
                        ? 0
                        : static_cast<int>((static_cast<std::int64_t>(e) * spec.winters +
                                            spec.winters / 2) /
                                           std::max(1, spec.episodes)) %
                              spec.winters;
        ep.start_day = 44 + static_cast<int>(ep_rng.uniform_below(40)); // Dec 15 .. Jan 23
        ep.days = spec.episode_days;
        episodes.push_back(ep);
    }

    for (int w = 0; w < spec.winters; ++w) {
        const int year = spec.first_year + w;
        char label[16];
        std::snprintf(label, sizeof(label), "%04d-%02d", year, (year + 1) % 100);
        out.acs_by_winter[label] = acs[static_cast<std::size_t>(w)];

        // Cover the season window (first Sunday in November + weeks) with
        // margin on both sides.
        const std::int64_t season_start = first_sunday_of_november(year);
        const std::int64_t gen_start = season_start - 12 * 86400;
        const std::int64_t gen_end = season_start + (spec.weeks * 7 + 12) * 86400;
        const std::int64_t season_day0 = day_index(season_start);

        RngStream demand_rng(spec.seed, {3, static_cast<std::uint64_t>(w)});
        RngStream wind_rng(spec.seed, {4, static_cast<std::uint64_t>(w)});
        RngStream half_rng(spec.seed, {5, static_cast<std::uint64_t>(w)});

        // Daily cold-spell level: AR(1) across days.
        const int n_days = static_cast<int>((gen_end - gen_start) / 86400) + 1;
        std::vector<double> cold(static_cast<std::size_t>(n_days));
        const double rho_d = 0.55;
        cold[0] = spec.daily_noise_sd * demand_rng.gaussian();
        for (int d = 1; d < n_days; ++d) {
            cold[static_cast<std::size_t>(d)] =
                rho_d * cold[static_cast<std::size_t>(d - 1)] +
                spec.daily_noise_sd * std::sqrt(1.0 - rho_d * rho_d) * demand_rng.gaussian();
        }

        const double rho_h = std::exp(-1.0 / 8.0);
        double hnoise = spec.hourly_noise_sd * demand_rng.gaussian();

        const double rho_w = std::exp(-1.0 / spec.wind_corr_hours);
        double g = spec.wind_logit_mean + spec.wind_logit_sd * wind_rng.gaussian();

        for (std::int64_t ts = gen_start; ts < gen_end; ts += kSecondsPerHour) {
            const std::int64_t day = day_index(ts) - day_index(gen_start);
            const std::int64_t season_day = day_index(ts) - season_day0;
            const int hod = static_cast<int>((ts / kSecondsPerHour) % 24);

            // Seasonal level peaking in early January.
            const double x = (static_cast<double>(season_day) - 65.0) / 34.0;
            const double seasonal = 0.80 + 0.13 * std::exp(-x * x);

            hnoise = rho_h * hnoise + spec.hourly_noise_sd *
                                          std::sqrt(1.0 - rho_h * rho_h) *
                                          demand_rng.gaussian();

            double episode_shape = 0.0;
            for (const auto& ep : episodes) {
                if (ep.winter != w) continue;
                const double pos = static_cast<double>(season_day - ep.start_day);
                if (pos >= 0.0 && pos < static_cast<double>(ep.days)) {
                    const double frac = (pos + 0.5) / static_cast<double>(ep.days);
                    episode_shape =
                        std::max(episode_shape, std::sin(3.14159265358979323846 * frac));
                }
            }

            double demand = acs[static_cast<std::size_t>(w)] * seasonal * kDiurnal[hod] *
                            weekday_factor(ts) *
                            (1.0 + cold[static_cast<std::size_t>(day)]) * (1.0 + hnoise) *
                            (1.0 + spec.episode_demand_boost * episode_shape);
            demand = std::max(demand, 0.0);

            // Wind: AR(1) in logit space, depressed at high normalized
            // demand and further during episodes.
            g = spec.wind_logit_mean + rho_w * (g - spec.wind_logit_mean) +
                spec.wind_logit_sd * std::sqrt(1.0 - rho_w * rho_w) * wind_rng.gaussian();
            const double d_norm = demand / acs[static_cast<std::size_t>(w)];
            double g_eff = g - spec.wind_demand_coupling * std::max(0.0, (d_norm - 0.95) / 0.08) -
                           spec.episode_wind_logit_drop * episode_shape;
            const double lf = logistic(g_eff);

            if (spec.halfhourly_demand) {
                const double dip = 1.0 - 0.01 * half_rng.uniform01();
                out.demand.timestamps.push_back(ts);
                out.demand.demand_mw.push_back(demand * dip);
                out.demand.winter_index.push_back(static_cast<std::uint32_t>(w));
                out.demand.timestamps.push_back(ts + 1800);
                out.demand.demand_mw.push_back(demand);
                out.demand.winter_index.push_back(static_cast<std::uint32_t>(w));
            } else {
                out.demand.timestamps.push_back(ts);
                out.demand.demand_mw.push_back(demand);
                out.demand.winter_index.push_back(static_cast<std::uint32_t>(w));
            }
            out.wind.timestamps.push_back(ts);
            out.wind.load_factor.push_back(std::clamp(lf, 0.0, 1.0));
        }
        out.demand.winters.push_back(label);
    }
    return out;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw DataError("cannot write '" + path + "'");
    outf << content;
}

std::string fmt(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

} // namespace

std::string write_synthetic_scenario(const SynthSpec& spec, const std::string& dir) {
    const SynthData data = generate_synthetic(spec);
    std::filesystem::create_directories(dir);
    const std::filesystem::path base(dir);

    {
        std::string csv = "name,capacity_mw,availability\n";
        for (const auto& u : data.units) {
            csv += u.name + "," + fmt(u.capacity_mw, 0) + "," + fmt(u.availability, 3) + "\n";
        }
        write_file((base / "units.csv").string(), csv);
    }
    {
        std::string csv = "timestamp,demand_mw,winter_id\n";
        for (std::size_t i = 0; i < data.demand.size(); ++i) {
            csv += format_iso_utc(data.demand.timestamps[i]) + "," +
                   fmt(data.demand.demand_mw[i], 3) + "," + data.demand.winter_of(i) + "\n";
        }
        write_file((base / "demand.csv").string(), csv);
    }
    {
        std::string csv = "timestamp,load_factor\n";
        for (std::size_t i = 0; i < data.wind.size(); ++i) {
            csv += format_iso_utc(data.wind.timestamps[i]) + "," +
                   fmt(data.wind.load_factor[i], 5) + "\n";
        }
        write_file((base / "wind.csv").string(), csv);
    }
    {
        std::string csv = "winter_id,acs_peak_mw\n";
        for (const auto& [winter, acs] : data.acs_by_winter) {
            csv += winter + "," + fmt(acs, 2) + "\n";
        }
        write_file((base / "acs.csv").string(), csv);
    }

    std::string conf;
    conf += "# synthetic GB-like adequacy scenario (generated fixture)\n";
    conf += "data.units_csv = units.csv\n";
    conf += "data.demand_csv = demand.csv\n";
    conf += "data.wind_csv = wind.csv\n";
    conf += "data.acs_csv = acs.csv\n";
    conf += std::string("data.demand_resolution = ") +
            (spec.halfhourly_demand ? "halfhourly" : "hourly") + "\n";
    conf += "\n";
    conf += "scenario.acs_target_mw = " + fmt(spec.acs_target_mw, 0) + "\n";
    conf += "scenario.response_adjustment_mw = 700\n";
    conf += "scenario.installed_wind_mw = 10120\n";
    conf += "scenario.capacities_mw = 0,5000,10000,15000,20000,25000,30000\n";
    conf += "\n";
    conf += "model.kind = independence\n";
    conf += "lambda.d1_norm = 0.95\n";
    conf += "lambda.d2_norm = 1.03\n";
    conf += "lambda.l1 = 1\n";
    conf += "lambda.l2 = 0.5\n";
    conf += "\n";
    conf += "copt.step_mw = 1\n";
    conf += "season.weeks_per_winter = " + std::to_string(spec.weeks) + "\n";
    conf += "\n";
    conf += "bootstrap.replicates = 0\n";
    conf += "bootstrap.ci_level = 0.95\n";
    conf += "bootstrap.seed = 1\n";
    conf += "\n";
    conf += "loess.span = 0.75\n";
    conf += "loess.min_demand_norm = 0.9\n";
    const std::string conf_path = (base / "scenario.conf").string();
    write_file(conf_path, conf);
    return conf_path;
}

} // namespace adequacy
