// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "adequacy/errors.hpp"
#include "adequacy/parallel.hpp"
#include "adequacy/scaling.hpp"
#include "adequacy/series.hpp"

namespace adequacy {

enum class ModelKind { hindcast, independence, rescaled };

const char* to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

/// Weighted net-demand atoms (d - y realizations). Weights are uniform and
/// sum to 1.
struct NetDemandAtoms {
    std::vector<double> values;
    std::vector<double> weights;
};

/// Estimated joint distribution of (demand, wind), viewed as a weighted
/// multiset of net-demand atoms d - y:
///
///   hindcast      N paired atoms (d_t - y_t, 1/N)
///   independence  Nd*Ny product atoms (d_t - y_s, 1/(Nd*Ny))
///   rescaled      Nd*Ny product atoms (d_t - lambda(d_t)*y_s, 1/(Nd*Ny))
///
/// Product-model atoms are never materialized by the risk folds; fold_mean
/// streams them in fixed chunk order so results are bit-identical for every
/// thread count.
class JointModel {
public:
    static JointModel hindcast(std::vector<double> demand_mw, std::vector<double> wind_mw);
    static JointModel independence(std::vector<double> demand_mw, std::vector<double> wind_mw);
    static JointModel rescaled(std::vector<double> demand_mw, std::vector<double> wind_mw,
                               const ScalingFunction& scaling);

    /// Builds the configured kind from an aligned series (paired columns).
    static JointModel from_series(ModelKind kind, const PairedSeries& series,
                                  const ScalingFunction* scaling = nullptr);

    /// Demand-only counterpart (wind identically zero), sharing this model's
    /// demand atoms. Used as the baseline in capacity value solves.
    [[nodiscard]] JointModel demand_only() const;

    [[nodiscard]] ModelKind kind() const { return kind_; }
    [[nodiscard]] const std::vector<double>& demand() const { return demand_mw_; }
    [[nodiscard]] const std::vector<double>& wind() const { return wind_mw_; }
    [[nodiscard]] const ScalingFunction& scaling() const { return scaling_; }

    /// Number of (value, weight) atoms the model stands for.
    [[nodiscard]] std::size_t atom_count() const {
        return kind_ == ModelKind::hindcast ? demand_mw_.size()
                                            : demand_mw_.size() * wind_mw_.size();
    }

    /// Materializes all atoms with uniform weights. Product models explode
    /// to Nd*Ny entries; intended for small inputs and tests.
    [[nodiscard]] NetDemandAtoms net_demand_atoms() const;

    /// Mean of f over the atoms, optionally with every atom value shifted:
    /// (1/W) * sum f(value + shift). Deterministic for any thread count.
    template <class F>
    double fold_mean(F&& f, double shift = 0.0, int threads = 1) const;

private:
    JointModel(ModelKind kind, std::vector<double> demand, std::vector<double> wind,
               ScalingFunction scaling);

    ModelKind kind_;
    std::vector<double> demand_mw_;
    std::vector<double> wind_mw_;
    ScalingFunction scaling_; // meaningful for rescaled only
    std::vector<double> lambda_; // cached lambda(d_t) for rescaled, else empty
};

/// CDF of the wind marginal implicitly assumed by a rescaled model,
/// (1/Nd) * sum_t F_Y(y / lambda(d_t)), evaluated at each grid value.
/// F_Y is the empirical CDF of the model's wind atoms.
std::vector<double> implied_wind_marginal(const JointModel& model,
                                          std::span<const double> grid_mw);

// ---- implementation ----

template <class F>
double JointModel::fold_mean(F&& f, double shift, int threads) const {
    const std::size_t n_d = demand_mw_.size();
    const std::size_t n_y = wind_mw_.size();

    if (kind_ == ModelKind::hindcast) {
        constexpr std::size_t kChunk = 4096;
        const std::size_t n_chunks = (n_d + kChunk - 1) / kChunk;
        std::vector<double> partial(n_chunks);
        parallel_chunks(n_chunks, threads, [&](std::size_t c) {
            const std::size_t lo = c * kChunk;
            const std::size_t hi = std::min(lo + kChunk, n_d);
            KahanSum acc;
            for (std::size_t t = lo; t < hi; ++t) {
                acc.add(f(demand_mw_[t] - wind_mw_[t] + shift));
            }
            partial[c] = acc.value();
        });
        KahanSum total;
        for (double p : partial) total.add(p);
        return total.value() / static_cast<double>(n_d);
    }

    // Product models: outer chunks over demand atoms, full wind sweep inside.
    constexpr std::size_t kChunk = 64;
    const std::size_t n_chunks = (n_d + kChunk - 1) / kChunk;
    std::vector<double> partial(n_chunks);
    const bool scaled = kind_ == ModelKind::rescaled;
    parallel_chunks(n_chunks, threads, [&](std::size_t c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(lo + kChunk, n_d);
        KahanSum acc;
        for (std::size_t t = lo; t < hi; ++t) {
            const double base = demand_mw_[t] + shift;
            const double lam = scaled ? lambda_[t] : 1.0;
            for (std::size_t s = 0; s < n_y; ++s) {
                acc.add(f(base - lam * wind_mw_[s]));
            }
        }
        partial[c] = acc.value();
    });
    KahanSum total;
    for (double p : partial) total.add(p);
    return total.value() / (static_cast<double>(n_d) * static_cast<double>(n_y));
}

} // namespace adequacy
