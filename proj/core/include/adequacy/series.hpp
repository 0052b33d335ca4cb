// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace adequacy {

/// Hourly (or half-hourly, prior to collapsing) demand observations.
/// Each observation carries the label of the winter it belongs to;
/// winter labels live in `winters` and observations index into it.
struct DemandSeries {
    std::vector<std::int64_t> timestamps; // epoch seconds UTC, strictly increasing
    std::vector<double> demand_mw;
    std::vector<std::uint32_t> winter_index;
    std::vector<std::string> winters; // distinct labels, in order of first appearance

    [[nodiscard]] std::size_t size() const { return timestamps.size(); }
    [[nodiscard]] const std::string& winter_of(std::size_t i) const {
        return winters[winter_index[i]];
    }
};

/// Hourly wind availability expressed as load factor in [0,1].
struct WindSeries {
    std::vector<std::int64_t> timestamps;
    std::vector<double> load_factor;

    [[nodiscard]] std::size_t size() const { return timestamps.size(); }
};

enum class BlockKind { normal, christmas };

/// Contiguous run of observations forming one resampling block.
struct Block {
    std::size_t start = 0;
    std::size_t length = 0;
    BlockKind kind = BlockKind::normal;
    std::string id;
};

/// Coincident hourly (demand MW, wind MW) observations cut into resampling
/// blocks. Blocks partition the series in time order: normal blocks cover a
/// Sunday-to-Saturday week, christmas blocks the week containing Dec 25 plus
/// the following week.
struct PairedSeries {
    std::vector<std::int64_t> timestamps;
    std::vector<double> demand_mw;
    std::vector<double> wind_mw;
    std::vector<std::uint32_t> winter_index;
    std::vector<std::string> winters;
    std::vector<Block> blocks;

    [[nodiscard]] std::size_t size() const { return timestamps.size(); }
    [[nodiscard]] std::size_t count_blocks(BlockKind kind) const {
        std::size_t n = 0;
        for (const auto& b : blocks) n += (b.kind == kind) ? 1 : 0;
        return n;
    }
};

/// Season window and blocking rules. The season of each winter starts on the
/// first Sunday in November and spans `weeks_per_winter` whole weeks. The
/// christmas block is the week block containing Dec 25 plus the following
/// week block; if either week falls outside the window the rule is vacuous
/// and all in-window weeks stay normal.
struct SeasonSpec {
    int weeks_per_winter = 20;

    [[nodiscard]] std::int64_t hours_per_winter() const {
        return static_cast<std::int64_t>(weeks_per_winter) * 168;
    }
};

} // namespace adequacy
