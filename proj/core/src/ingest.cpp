// SPDX-License-Identifier: Apache-2.0
#include "adequacy/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "adequacy/errors.hpp"
#include "adequacy/time.hpp"

namespace adequacy {

namespace {

class CsvReader {
public:
    explicit CsvReader(const std::string& path) : path_(path), in_(path) {
        if (!in_) throw DataError("cannot open '" + path + "'");
    }

    // Reads the next non-empty line into fields. Returns false at EOF.
    bool next(std::vector<std::string>& fields) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            fields.clear();
            std::size_t start = 0;
            while (true) {
                const std::size_t comma = line.find(',', start);
                fields.push_back(trim(line.substr(start, comma - start)));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            return true;
        }
        return false;
    }

    void expect_header(const std::string& expected) {
        std::vector<std::string> fields;
        if (!next(fields)) fail("missing header row (expected '" + expected + "')");
        std::string got;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i > 0) got += ',';
            got += fields[i];
        }
        if (got != expected) {
            fail("bad header '" + got + "' (expected '" + expected + "')");
        }
    }

    double parse_double(const std::string& field, const char* what) const {
        double v = 0.0;
        const char* begin = field.data();
        const char* end = begin + field.size();
        const auto res = std::from_chars(begin, end, v);
        if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(v)) {
            fail(std::string("bad ") + what + " value '" + field + "'");
        }
        return v;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw DataError(path_ + ":" + std::to_string(line_no_) + ": " + msg);
    }

    [[nodiscard]] std::size_t line_no() const { return line_no_; }

private:
    static std::string trim(std::string s) {
        const auto notspace = [](unsigned char c) { return !std::isspace(c); };
        s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
        s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
        return s;
    }

    std::string path_;
    std::ifstream in_;
    std::size_t line_no_ = 0;
};

std::uint32_t intern_winter(std::vector<std::string>& winters, const std::string& label) {
    for (std::size_t i = 0; i < winters.size(); ++i) {
        if (winters[i] == label) return static_cast<std::uint32_t>(i);
    }
    winters.push_back(label);
    return static_cast<std::uint32_t>(winters.size() - 1);
}

} // namespace

DemandSeries load_demand_csv(const std::string& path) {
    CsvReader csv(path);
    csv.expect_header("timestamp,demand_mw,winter_id");
    DemandSeries out;
    std::vector<std::string> fields;
    while (csv.next(fields)) {
        if (fields.size() != 3) csv.fail("expected 3 fields");
        std::int64_t ts = 0;
        try {
            ts = parse_iso_utc(fields[0]);
        } catch (const DataError& e) {
            csv.fail(e.what());
        }
        const double mw = csv.parse_double(fields[1], "demand_mw");
        if (mw < 0.0) csv.fail("demand_mw must be nonnegative");
        if (fields[2].empty()) csv.fail("winter_id must be nonempty");
        if (!out.timestamps.empty() && ts <= out.timestamps.back()) {
            csv.fail("timestamps must be strictly increasing");
        }
        out.timestamps.push_back(ts);
        out.demand_mw.push_back(mw);
        out.winter_index.push_back(intern_winter(out.winters, fields[2]));
    }
    if (out.timestamps.empty()) throw DataError(path + ": no demand rows");
    return out;
}

WindSeries load_wind_csv(const std::string& path) {
    CsvReader csv(path);
    csv.expect_header("timestamp,load_factor");
    WindSeries out;
    std::vector<std::string> fields;
    while (csv.next(fields)) {
        if (fields.size() != 2) csv.fail("expected 2 fields");
        std::int64_t ts = 0;
        try {
            ts = parse_iso_utc(fields[0]);
        } catch (const DataError& e) {
            csv.fail(e.what());
        }
        const double lf = csv.parse_double(fields[1], "load_factor");
        if (lf < 0.0 || lf > 1.0) csv.fail("load_factor must lie in [0,1]");
        if (!out.timestamps.empty() && ts <= out.timestamps.back()) {
            csv.fail("timestamps must be strictly increasing");
        }
        out.timestamps.push_back(ts);
        out.load_factor.push_back(lf);
    }
    if (out.timestamps.empty()) throw DataError(path + ": no wind rows");
    return out;
}

std::map<std::string, double> load_acs_csv(const std::string& path) {
    CsvReader csv(path);
    csv.expect_header("winter_id,acs_peak_mw");
    std::map<std::string, double> out;
    std::vector<std::string> fields;
    while (csv.next(fields)) {
        if (fields.size() != 2) csv.fail("expected 2 fields");
        if (fields[0].empty()) csv.fail("winter_id must be nonempty");
        const double acs = csv.parse_double(fields[1], "acs_peak_mw");
        if (!(acs > 0.0)) csv.fail("acs_peak_mw must be positive");
        if (!out.emplace(fields[0], acs).second) csv.fail("duplicate winter_id '" + fields[0] + "'");
    }
    if (out.empty()) throw DataError(path + ": no ACS rows");
    return out;
}

std::vector<GenUnit> load_units_csv(const std::string& path) {
    CsvReader csv(path);
    csv.expect_header("name,capacity_mw,availability");
    std::vector<GenUnit> out;
    std::vector<std::string> fields;
    while (csv.next(fields)) {
        if (fields.size() != 3) csv.fail("expected 3 fields");
        GenUnit u;
        u.name = fields[0];
        u.capacity_mw = csv.parse_double(fields[1], "capacity_mw");
        u.availability = csv.parse_double(fields[2], "availability");
        if (u.capacity_mw < 0.0) csv.fail("capacity_mw must be nonnegative");
        if (u.availability < 0.0 || u.availability > 1.0) {
            csv.fail("availability must lie in [0,1]");
        }
        out.push_back(std::move(u));
    }
    if (out.empty()) throw DataError(path + ": no units");
    return out;
}

DemandSeries halfhourly_to_hourly(const DemandSeries& series) {
    if (series.size() % 2 != 0) {
        throw DataError("half-hourly series has odd record count");
    }
    DemandSeries out;
    out.winters = series.winters;
    out.timestamps.reserve(series.size() / 2);
    out.demand_mw.reserve(series.size() / 2);
    out.winter_index.reserve(series.size() / 2);
    for (std::size_t i = 0; i < series.size(); i += 2) {
        const std::int64_t t0 = series.timestamps[i];
        const std::int64_t t1 = series.timestamps[i + 1];
        if (t0 % kSecondsPerHour != 0 || t1 != t0 + 1800) {
            throw DataError("half-hourly records misaligned near " + format_iso_utc(t0));
        }
        if (series.winter_index[i] != series.winter_index[i + 1]) {
            throw DataError("half-hour pair spans two winters at " + format_iso_utc(t0));
        }
        out.timestamps.push_back(t0);
        out.demand_mw.push_back(std::max(series.demand_mw[i], series.demand_mw[i + 1]));
        out.winter_index.push_back(series.winter_index[i]);
    }
    return out;
}

DemandSeries rescale_demand(const DemandSeries& series,
                            const std::map<std::string, double>& acs_by_winter,
                            double acs_target_mw) {
    if (!(acs_target_mw > 0.0)) {
        throw ConfigError("ACS target must be positive");
    }
    std::vector<double> factor(series.winters.size());
    for (std::size_t w = 0; w < series.winters.size(); ++w) {
        const auto it = acs_by_winter.find(series.winters[w]);
        if (it == acs_by_winter.end()) {
            throw DataError("winter '" + series.winters[w] + "' missing from ACS table");
        }
        if (!(it->second > 0.0)) {
            throw DataError("winter '" + series.winters[w] + "': ACS peak must be positive");
        }
        factor[w] = acs_target_mw / it->second;
    }
    DemandSeries out = series;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.demand_mw[i] *= factor[out.winter_index[i]];
    }
    return out;
}

DemandSeries add_response_adjustment(const DemandSeries& series, double adj_mw) {
    if (adj_mw < 0.0) {
        throw ConfigError("response adjustment must be nonnegative");
    }
    DemandSeries out = series;
    for (double& d : out.demand_mw) d += adj_mw;
    return out;
}

std::vector<double> wind_to_capacity(const WindSeries& series, double installed_mw) {
    if (installed_mw < 0.0) {
        throw ConfigError("installed wind capacity must be nonnegative");
    }
    std::vector<double> out(series.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = series.load_factor[i] * installed_mw;
    }
    return out;
}

namespace {

// A winter's season anchors on the November inside it: the calendar year of
// the winter's first observation when that lands Jul-Dec, otherwise the year
// before (data beginning after New Year).
int anchor_year(std::int64_t first_obs_ts) {
    const CivilDate d = civil_from_epoch(first_obs_ts);
    return d.month >= 7 ? d.year : d.year - 1;
}

std::size_t find_timestamp(const std::vector<std::int64_t>& ts, std::int64_t want) {
    const auto it = std::lower_bound(ts.begin(), ts.end(), want);
    if (it == ts.end() || *it != want) return ts.size();
    return static_cast<std::size_t>(it - ts.begin());
}

} // namespace

PairedSeries align_and_block(const DemandSeries& demand, const WindSeries& wind,
                             double installed_wind_mw, const SeasonSpec& spec,
                             bool allow_gaps) {
    if (spec.weeks_per_winter < 3) {
        throw ConfigError("season must span at least 3 weeks");
    }
    if (installed_wind_mw < 0.0) {
        throw ConfigError("installed wind capacity must be nonnegative");
    }

    PairedSeries out;
    out.winters = demand.winters;

    std::vector<std::int64_t> first_obs(demand.winters.size(), -1);
    for (std::size_t i = 0; i < demand.size(); ++i) {
        auto& slot = first_obs[demand.winter_index[i]];
        if (slot < 0) slot = demand.timestamps[i];
    }

    const std::int64_t week_s = kHoursPerWeek * kSecondsPerHour;
    for (std::uint32_t w = 0; w < demand.winters.size(); ++w) {
        const std::string& label = demand.winters[w];
        const int year = anchor_year(first_obs[w]);
        const std::int64_t season_start = first_sunday_of_november(year);
        const std::int64_t season_end = season_start + spec.weeks_per_winter * week_s;

        // Week slot holding Dec 25; christmas needs that week and the next
        // both inside the window.
        const std::int64_t xmas = christmas_day(year);
        std::ptrdiff_t xmas_week = -1;
        if (xmas >= season_start && xmas < season_end) {
            const auto cw = (xmas - season_start) / week_s;
            if (cw + 1 < spec.weeks_per_winter) xmas_week = cw;
        }

        bool winter_has_rows = false;
        std::ptrdiff_t slot = 0;
        while (slot < spec.weeks_per_winter) {
            const bool is_xmas = (slot == xmas_week);
            const std::int64_t block_start_ts = season_start + slot * week_s;
            const std::int64_t n_hours = (is_xmas ? 2 : 1) * kHoursPerWeek;

            std::vector<std::size_t> d_idx;
            std::vector<std::size_t> y_idx;
            d_idx.reserve(static_cast<std::size_t>(n_hours));
            y_idx.reserve(static_cast<std::size_t>(n_hours));
            bool complete = true;
            for (std::int64_t h = 0; h < n_hours; ++h) {
                const std::int64_t ts = block_start_ts + h * kSecondsPerHour;
                const std::size_t di = find_timestamp(demand.timestamps, ts);
                const std::size_t yi = find_timestamp(wind.timestamps, ts);
                if (di == demand.size() || yi == wind.size()) {
                    complete = false;
                    if (!allow_gaps) {
                        throw DataError("winter '" + label + "': missing hour " +
                                        format_iso_utc(ts) + " in " +
                                        (di == demand.size() ? "demand" : "wind") + " data");
                    }
                    break;
                }
                if (demand.winter_index[di] != w) {
                    throw DataError("hour " + format_iso_utc(ts) + " lies in the '" + label +
                                    "' season window but is labelled '" +
                                    demand.winter_of(di) + "'");
                }
                d_idx.push_back(di);
                y_idx.push_back(yi);
            }

            if (complete) {
                winter_has_rows = true;
                Block block;
                block.start = out.size();
                block.length = static_cast<std::size_t>(n_hours);
                block.kind = is_xmas ? BlockKind::christmas : BlockKind::normal;
                block.id = is_xmas ? label + "/christmas"
                                   : label + "/w" + std::to_string(slot);
                for (std::int64_t h = 0; h < n_hours; ++h) {
                    const auto di = d_idx[static_cast<std::size_t>(h)];
                    const auto yi = y_idx[static_cast<std::size_t>(h)];
                    out.timestamps.push_back(demand.timestamps[di]);
                    out.demand_mw.push_back(demand.demand_mw[di]);
                    out.wind_mw.push_back(wind.load_factor[yi] * installed_wind_mw);
                    out.winter_index.push_back(w);
                }
                out.blocks.push_back(std::move(block));
            }
            slot += is_xmas ? 2 : 1;
        }

        if (!winter_has_rows) {
            bool any_overlap = false;
            for (std::size_t i = 0; i < demand.size() && !any_overlap; ++i) {
                any_overlap = demand.winter_index[i] == w &&
                              demand.timestamps[i] >= season_start &&
                              demand.timestamps[i] < season_end &&
                              find_timestamp(wind.timestamps, demand.timestamps[i]) != wind.size();
            }
            if (!any_overlap) {
                throw DataError("winter '" + label + "': no overlapping demand/wind data in season window " +
                                format_iso_utc(season_start) + " .. " + format_iso_utc(season_end));
            }
        }
    }
    return out;
}

std::vector<Block> weekly_wind_blocks(const PairedSeries& series) {
    std::vector<Block> out;
    out.reserve(series.blocks.size() + series.count_blocks(BlockKind::christmas));
    for (const auto& b : series.blocks) {
        if (b.kind == BlockKind::normal) {
            out.push_back(b);
            continue;
        }
        if (b.length % 2 != 0) {
            throw DataError("christmas block '" + b.id + "' has odd length");
        }
        const std::size_t half = b.length / 2;
        out.push_back(Block{b.start, half, BlockKind::normal, b.id + "/a"});
        out.push_back(Block{b.start + half, half, BlockKind::normal, b.id + "/b"});
    }
    return out;
}

} // namespace adequacy
