// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "adequacy/rng.hpp"
#include "adequacy/series.hpp"

namespace adequacy {

enum class ResampleScheme { paired_blocks, independent_blocks };

struct BootstrapSpec {
    int n_replicates = 1000;
    double ci_level = 0.95;
    std::uint64_t seed = 0;
    ResampleScheme scheme = ResampleScheme::paired_blocks;
};

struct BootstrapResult {
    double point_estimate = 0.0;
    std::vector<double> replicates;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
};

/// One resampled dataset. Under the paired scheme demand and wind stay
/// aligned (equal length, drawn from the same blocks); under the independent
/// scheme they are drawn from separate streams and carry no pairing.
struct ResampleDraw {
    std::vector<double> demand_mw;
    std::vector<double> wind_mw;
};

/// Paired block resample: every block slot is refilled by a block of the
/// same kind drawn uniformly with replacement, concatenated in slot order
/// with within-block order preserved. Timestamps/labels are copied from the
/// source blocks, so they are generally not monotone in the result.
PairedSeries resample_paired(const PairedSeries& series, RngStream& rng);

/// Independent scheme: demand refills its kind-matched block slots while
/// wind is drawn as one-week blocks (christmas split in half, no special
/// status) from its own stream.
ResampleDraw resample_independent(const PairedSeries& series, RngStream& demand_rng,
                                  RngStream& wind_rng);

/// Linear-interpolation quantile of a sorted sample (rank 1 + p*(n-1)).
double interpolated_quantile(std::span<const double> sorted, double p);

/// Percentile-bootstrap confidence interval for an arbitrary scalar
/// statistic. The point estimate is the statistic on the original data;
/// replicate r draws from the substream (seed, r), so the replicate vector
/// is bit-identical for every thread count.
BootstrapResult bootstrap_ci(const PairedSeries& data, const BootstrapSpec& spec,
                             const std::function<double(const ResampleDraw&)>& statistic,
                             int threads = 1);

} // namespace adequacy
