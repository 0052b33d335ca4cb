// SPDX-License-Identifier: Apache-2.0
//
// adequacy: generation adequacy risk engine.
//
//   adequacy synth    --out DIR             generate a synthetic scenario
//   adequacy validate --config FILE         check data and report coverage
//   adequacy risk     --config FILE         LOLP/LOLE/EPU/EEU as JSON
//   adequacy sweep    --config FILE         LOLE + EFC across capacities (CSV)
//   adequacy topn     --config FILE         hindcast risk concentration (CSV)
//   adequacy loess    --config FILE         wind-vs-demand smoothed curve (CSV)
//
// Exit codes: 0 ok, 2 configuration error, 3 data error, 4 numerical error.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adequacy/bootstrap.hpp"
#include "adequacy/capacity_value.hpp"
#include "adequacy/errors.hpp"
#include "adequacy/loess.hpp"
#include "adequacy/parallel.hpp"
#include "adequacy/risk.hpp"
#include "adequacy/scenario.hpp"
#include "adequacy/synth.hpp"
#include "adequacy/time.hpp"

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw adequacy::DataError("cannot write output file '" + path + "'");
    out << content;
}

struct CommonOpts {
    std::string config_path;
    std::string out_path = "-";
    int threads = 0;
    bool allow_gaps = false;
    // optional overrides
    std::string model_override;
    std::vector<double> capacities_override;
    int replicates_override = -1;
    std::uint64_t seed_override = 0;
    bool seed_given = false;
    double span_override = -1.0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_config = true) {
    auto* c = cmd->add_option("--config", opts.config_path, "Scenario config file");
    if (needs_config) c->required();
    cmd->add_option("--out", opts.out_path, "Output file ('-' for stdout)");
    cmd->add_option("--threads", opts.threads,
                    "Worker threads (0 = all cores); never changes results");
    cmd->add_flag("--allow-gaps", opts.allow_gaps,
                  "Drop incomplete blocks instead of failing on missing hours");
    cmd->add_option("--model", opts.model_override, "Override model.kind")
        ->check(CLI::IsMember({"hindcast", "independence", "rescaled"}));
    cmd->add_option("--capacities", opts.capacities_override,
                    "Override scenario.capacities_mw (comma separated)")
        ->delimiter(',');
    cmd->add_option("--replicates", opts.replicates_override,
                    "Override bootstrap.replicates (0 disables bootstrap)");
    cmd->add_option("--seed", opts.seed_override, "Override bootstrap.seed")
        ->each([&opts](const std::string&) { opts.seed_given = true; });
    cmd->add_option("--span", opts.span_override, "Override loess.span");
}

adequacy::Scenario load_with_overrides(const CommonOpts& opts) {
    adequacy::Scenario sc = adequacy::load_scenario(opts.config_path);
    if (opts.allow_gaps) sc.allow_gaps = true;
    if (!opts.model_override.empty()) {
        sc.model = adequacy::model_kind_from_string(opts.model_override);
    }
    if (!opts.capacities_override.empty()) sc.capacities_mw = opts.capacities_override;
    if (opts.replicates_override >= 0) sc.bootstrap_replicates = opts.replicates_override;
    if (opts.seed_given) sc.bootstrap_seed = opts.seed_override;
    if (opts.span_override > 0.0) sc.loess_span = opts.span_override;
    return sc;
}

// ---- validate ----

int cmd_validate(const CommonOpts& opts) {
    const adequacy::Scenario sc = load_with_overrides(opts);
    const adequacy::ScenarioRun run(sc);

    std::string report;
    report += "scenario: " + opts.config_path + "\n";
    report += "model: " + std::string(adequacy::to_string(sc.model)) + "\n";
    report += "acs_target_mw: " + fmt_fixed(sc.acs_target_mw, 1) + "\n";

    const auto m = adequacy::moments(run.copt());
    report += "units: " + std::to_string(run.units().size()) + "\n";
    double total_cap = 0.0;
    double mean_avail_cap = 0.0;
    for (const auto& u : run.units()) {
        total_cap += u.capacity_mw;
        mean_avail_cap += u.capacity_mw * u.availability;
    }
    report += "installed_conventional_mw: " + fmt_fixed(total_cap, 1) + "\n";
    report += "copt_mean_mw: " + fmt_fixed(m.mean_mw, 3) + "\n";
    report += "copt_std_mw: " + fmt_fixed(m.std_mw, 3) + "\n";
    report += "copt_mean_check_mw: " + fmt_fixed(mean_avail_cap, 3) + "\n";

    report += "demand_rows_hourly: " + std::to_string(run.demand().size()) + "\n";
    report += "wind_rows: " + std::to_string(run.wind().size()) + "\n";

    const adequacy::PairedSeries series = run.series(sc.installed_wind_mw);
    report += "paired_rows: " + std::to_string(series.size()) + "\n";
    const std::size_t normal = series.count_blocks(adequacy::BlockKind::normal);
    const std::size_t christmas = series.count_blocks(adequacy::BlockKind::christmas);
    report += "normal_blocks: " + std::to_string(normal) + "\n";
    report += "christmas_blocks: " + std::to_string(christmas) + "\n";
    report += "wind_weekly_blocks: " + std::to_string(adequacy::weekly_wind_blocks(series).size()) + "\n";

    std::map<std::string, std::size_t> hours_per_winter;
    for (std::size_t i = 0; i < series.size(); ++i) {
        ++hours_per_winter[series.winters[series.winter_index[i]]];
    }
    for (const auto& [winter, hours] : hours_per_winter) {
        report += "winter " + winter + ": " + std::to_string(hours) + " h of " +
                  std::to_string(sc.season.hours_per_winter()) + "\n";
    }
    report += "ok\n";
    write_output(opts.out_path, report);
    return 0;
}

// ---- risk ----

int cmd_risk(const CommonOpts& opts) {
    const adequacy::Scenario sc = load_with_overrides(opts);
    const int threads = adequacy::resolve_threads(opts.threads);
    const adequacy::ScenarioRun run(sc);
    const adequacy::PairedSeries series = run.series(sc.installed_wind_mw);
    const adequacy::JointModel model = run.model(series);
    const adequacy::RiskIndices idx =
        adequacy::season_indices(run.copt(), model, sc.effective_n_periods(), threads);

    json record;
    record["lolp"] = idx.lolp;
    record["lole_hours"] = idx.lole_hours;
    record["epu_mw"] = idx.epu_mw;
    record["eeu_mwh"] = idx.eeu_mwh;
    record["n_periods"] = idx.n_periods;
    write_output(opts.out_path, record.dump(2) + "\n");
    return 0;
}

// ---- sweep ----

int cmd_sweep(const CommonOpts& opts) {
    const adequacy::Scenario sc = load_with_overrides(opts);
    const int threads = adequacy::resolve_threads(opts.threads);
    const adequacy::ScenarioRun run(sc);
    const int n_periods = sc.effective_n_periods();
    const bool with_ci = sc.bootstrap_replicates > 0;
    const adequacy::ScalingFunction sf = sc.scaling();

    std::string csv = "capacity_mw,lole_hours,efc_mw,efc_pct_installed";
    if (with_ci) csv += ",lole_ci_lo,lole_ci_hi,efc_ci_lo,efc_ci_hi";
    csv += "\n";

    for (const double capacity : sc.capacities_mw) {
        const adequacy::PairedSeries series = run.series(capacity);
        const adequacy::JointModel model = run.model(series);
        const double lole =
            adequacy::lolp(run.copt(), model, threads) * n_periods;
        const adequacy::CapacityValueResult cv =
            adequacy::efc(run.copt(), model, 0.1, capacity, threads);

        csv += fmt_double(capacity) + "," + fmt_double(lole) + "," + fmt_double(cv.value_mw) +
               ",";
        if (capacity > 0.0) csv += fmt_fixed(cv.pct_installed, 1);

        if (with_ci) {
            const auto make_model = [&](const adequacy::ResampleDraw& d) {
                switch (sc.model) {
                    case adequacy::ModelKind::hindcast:
                        return adequacy::JointModel::hindcast(d.demand_mw, d.wind_mw);
                    case adequacy::ModelKind::independence:
                        return adequacy::JointModel::independence(d.demand_mw, d.wind_mw);
                    default:
                        return adequacy::JointModel::rescaled(d.demand_mw, d.wind_mw, sf);
                }
            };
            const adequacy::BootstrapSpec bspec = run.bootstrap_spec();
            const auto lole_res = adequacy::bootstrap_ci(
                series, bspec,
                [&](const adequacy::ResampleDraw& d) {
                    return adequacy::lolp(run.copt(), make_model(d), 1) * n_periods;
                },
                threads);
            const auto efc_res = adequacy::bootstrap_ci(
                series, bspec,
                [&](const adequacy::ResampleDraw& d) {
                    return adequacy::efc(run.copt(), make_model(d), 0.1, capacity, 1).value_mw;
                },
                threads);
            csv += "," + fmt_double(lole_res.ci_lo) + "," + fmt_double(lole_res.ci_hi) + "," +
                   fmt_double(efc_res.ci_lo) + "," + fmt_double(efc_res.ci_hi);
        }
        csv += "\n";
    }
    write_output(opts.out_path, csv);
    return 0;
}

// ---- topn ----

int cmd_topn(const CommonOpts& opts, std::size_t n_max) {
    const adequacy::Scenario sc = load_with_overrides(opts);
    const adequacy::ScenarioRun run(sc);
    if (sc.model != adequacy::ModelKind::hindcast) {
        throw adequacy::ConfigError("topn requires model.kind = hindcast");
    }

    std::string csv = "capacity_mw,n,share\n";
    for (const double capacity : sc.capacities_mw) {
        const adequacy::PairedSeries series = run.series(capacity);
        const adequacy::JointModel model = run.model(series);
        const std::size_t limit = std::min<std::size_t>(n_max, model.atom_count());
        const std::vector<double> shares = adequacy::top_n_curve(run.copt(), model, limit);
        for (std::size_t n = 1; n <= shares.size(); ++n) {
            csv += fmt_double(capacity) + "," + std::to_string(n) + "," +
                   fmt_double(shares[n - 1]) + "\n";
        }
    }
    write_output(opts.out_path, csv);
    return 0;
}

// ---- loess ----

int cmd_loess(const CommonOpts& opts) {
    const adequacy::Scenario sc = load_with_overrides(opts);
    const adequacy::ScenarioRun run(sc);
    // Wind column at 1 MW installed capacity = plain load factor.
    const adequacy::PairedSeries series = run.series(1.0);

    // Daily-peak observations: the highest-demand hour of each UTC day.
    std::map<std::int64_t, std::size_t> day_peak;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const std::int64_t day = adequacy::day_index(series.timestamps[i]);
        const auto it = day_peak.find(day);
        if (it == day_peak.end() || series.demand_mw[i] > series.demand_mw[it->second]) {
            day_peak[day] = i;
        }
    }
    std::vector<double> x;
    std::vector<double> y;
    for (const auto& [day, i] : day_peak) {
        const double d_norm = series.demand_mw[i] / sc.acs_target_mw;
        if (d_norm > sc.loess_min_demand_norm) {
            x.push_back(d_norm);
            y.push_back(series.wind_mw[i]);
        }
    }
    if (x.size() < 10) {
        throw adequacy::DataError(
            "loess: fewer than 10 daily-peak observations above the demand threshold");
    }
    const adequacy::LoessFit fit(x, y, sc.loess_span);

    std::string csv = "tag,demand_norm,loess_load_factor\n";
    for (std::size_t i = 0; i < x.size(); ++i) {
        csv += "data," + fmt_double(x[i]) + "," + fmt_double(y[i]) + "\n";
    }
    constexpr int kCurvePoints = 101;
    for (int i = 0; i < kCurvePoints; ++i) {
        const double p =
            fit.x_min() + (fit.x_max() - fit.x_min()) * i / double(kCurvePoints - 1);
        csv += "loess," + fmt_double(p) + "," + fmt_double(fit(p)) + "\n";
    }
    write_output(opts.out_path, csv);
    return 0;
}

// ---- synth ----

int cmd_synth(const adequacy::SynthSpec& spec, const std::string& out_dir) {
    const std::string conf = adequacy::write_synthetic_scenario(spec, out_dir);
    std::cout << conf << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generation adequacy risk engine"};
    app.require_subcommand(1);

    CommonOpts validate_opts, risk_opts, sweep_opts, topn_opts, loess_opts;
    std::size_t topn_max = 100;

    add_common(app.add_subcommand("validate", "Check scenario data and report coverage"),
               validate_opts);
    add_common(app.add_subcommand("risk", "Season risk indices as JSON"), risk_opts);
    add_common(app.add_subcommand("sweep", "LOLE and EFC across installed capacities"),
               sweep_opts);
    auto* topn_cmd =
        app.add_subcommand("topn", "Share of LOLE from the n highest net-demand hours");
    add_common(topn_cmd, topn_opts);
    topn_cmd->add_option("--n-max", topn_max, "Largest n to report");
    add_common(app.add_subcommand("loess", "Wind load factor vs normalized demand"), loess_opts);

    adequacy::SynthSpec synth_spec;
    std::string synth_dir;
    bool synth_hourly = false;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic GB-like scenario");
    synth_cmd->add_option("--out", synth_dir, "Output directory")->required();
    synth_cmd->add_option("--seed", synth_spec.seed, "Generator seed");
    synth_cmd->add_option("--winters", synth_spec.winters, "Number of winters");
    synth_cmd->add_option("--weeks", synth_spec.weeks, "Season weeks per winter");
    synth_cmd->add_option("--episodes", synth_spec.episodes, "Cold episodes across the dataset");
    synth_cmd->add_flag("--hourly", synth_hourly, "Write hourly demand instead of half-hourly");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand("validate")) return cmd_validate(validate_opts);
        if (app.got_subcommand("risk")) return cmd_risk(risk_opts);
        if (app.got_subcommand("sweep")) return cmd_sweep(sweep_opts);
        if (app.got_subcommand("topn")) return cmd_topn(topn_opts, topn_max);
        if (app.got_subcommand("loess")) return cmd_loess(loess_opts);
        if (app.got_subcommand("synth")) {
            synth_spec.halfhourly_demand = !synth_hourly;
            return cmd_synth(synth_spec, synth_dir);
        }
    } catch (const adequacy::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const adequacy::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const adequacy::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
