// SPDX-License-Identifier: Apache-2.0
#include "adequacy/bootstrap.hpp"

#include <algorithm>
#include <cmath>

#include "adequacy/errors.hpp"
#include "adequacy/ingest.hpp"
#include "adequacy/parallel.hpp"

namespace adequacy {

namespace {

std::vector<std::size_t> blocks_of_kind(const std::vector<Block>& blocks, BlockKind kind) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].kind == kind) out.push_back(i);
    }
    return out;
}

} // namespace

PairedSeries resample_paired(const PairedSeries& series, RngStream& rng) {
    if (series.blocks.empty()) throw DataError("resample: series has no blocks");
    const auto normal = blocks_of_kind(series.blocks, BlockKind::normal);
    const auto christmas = blocks_of_kind(series.blocks, BlockKind::christmas);

    PairedSeries out;
    out.winters = series.winters;
    out.timestamps.reserve(series.size());
    out.demand_mw.reserve(series.size());
    out.wind_mw.reserve(series.size());
    out.winter_index.reserve(series.size());
    out.blocks.reserve(series.blocks.size());

    for (const auto& slot : series.blocks) {
        const auto& pool = slot.kind == BlockKind::normal ? normal : christmas;
        // Nonempty by construction: the slot itself is in the pool.
        const Block& src = series.blocks[pool[rng.uniform_below(pool.size())]];
        Block copy = src;
        copy.start = out.size();
        for (std::size_t i = src.start; i < src.start + src.length; ++i) {
            out.timestamps.push_back(series.timestamps[i]);
            out.demand_mw.push_back(series.demand_mw[i]);
            out.wind_mw.push_back(series.wind_mw[i]);
            out.winter_index.push_back(series.winter_index[i]);
        }
        out.blocks.push_back(std::move(copy));
    }
    return out;
}

ResampleDraw resample_independent(const PairedSeries& series, RngStream& demand_rng,
                                  RngStream& wind_rng) {
    if (series.blocks.empty()) throw DataError("resample: series has no blocks");
    const auto normal = blocks_of_kind(series.blocks, BlockKind::normal);
    const auto christmas = blocks_of_kind(series.blocks, BlockKind::christmas);
    const auto wind_blocks = weekly_wind_blocks(series);
    if (wind_blocks.size() != normal.size() + 2 * christmas.size()) {
        throw DataError("resample: weekly wind block count mismatch");
    }

    ResampleDraw out;
    out.demand_mw.reserve(series.size());
    out.wind_mw.reserve(series.size());

    for (const auto& slot : series.blocks) {
        const auto& pool = slot.kind == BlockKind::normal ? normal : christmas;
        const Block& src = series.blocks[pool[demand_rng.uniform_below(pool.size())]];
        for (std::size_t i = src.start; i < src.start + src.length; ++i) {
            out.demand_mw.push_back(series.demand_mw[i]);
        }
    }
    for (std::size_t slot = 0; slot < wind_blocks.size(); ++slot) {
        const Block& src = wind_blocks[wind_rng.uniform_below(wind_blocks.size())];
        for (std::size_t i = src.start; i < src.start + src.length; ++i) {
            out.wind_mw.push_back(series.wind_mw[i]);
        }
    }
    return out;
}

double interpolated_quantile(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw NumericalError("quantile of empty sample");
    if (p <= 0.0) return sorted.front();
    if (p >= 1.0) return sorted.back();
    const double rank = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(rank);
    const double frac = rank - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

BootstrapResult bootstrap_ci(const PairedSeries& data, const BootstrapSpec& spec,
                             const std::function<double(const ResampleDraw&)>& statistic,
                             int threads) {
    if (spec.n_replicates < 1) throw ConfigError("bootstrap: n_replicates must be >= 1");
    if (!(spec.ci_level > 0.0) || !(spec.ci_level < 1.0)) {
        throw ConfigError("bootstrap: ci_level must lie in (0,1)");
    }

    BootstrapResult out;
    out.point_estimate = statistic(ResampleDraw{data.demand_mw, data.wind_mw});
    out.replicates.resize(static_cast<std::size_t>(spec.n_replicates));

    std::vector<std::string> failures(static_cast<std::size_t>(spec.n_replicates));
    parallel_chunks(static_cast<std::size_t>(spec.n_replicates), threads, [&](std::size_t r) {
        try {
            if (spec.scheme == ResampleScheme::paired_blocks) {
                RngStream rng = RngStream(spec.seed).derive(r);
                const PairedSeries draw = resample_paired(data, rng);
                out.replicates[r] = statistic(ResampleDraw{draw.demand_mw, draw.wind_mw});
            } else {
                RngStream demand_rng = RngStream(spec.seed, {r, 0});
                RngStream wind_rng = RngStream(spec.seed, {r, 1});
                out.replicates[r] = statistic(resample_independent(data, demand_rng, wind_rng));
            }
        } catch (const std::exception& e) {
            failures[r] = e.what();
        }
    });
    for (std::size_t r = 0; r < failures.size(); ++r) {
        if (!failures[r].empty()) {
            throw NumericalError("bootstrap: statistic failed on replicate " +
                                 std::to_string(r) + ": " + failures[r]);
        }
    }

    std::vector<double> sorted = out.replicates;
    std::sort(sorted.begin(), sorted.end());
    const double alpha = (1.0 - spec.ci_level) / 2.0;
    out.ci_lo = interpolated_quantile(sorted, alpha);
    out.ci_hi = interpolated_quantile(sorted, 1.0 - alpha);
    return out;
}

} // namespace adequacy
