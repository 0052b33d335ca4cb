// SPDX-License-Identifier: Apache-2.0
#include "adequacy/joint_model.hpp"

#include <algorithm>
#include <cmath>

namespace adequacy {

const char* to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::hindcast: return "hindcast";
        case ModelKind::independence: return "independence";
        case ModelKind::rescaled: return "rescaled";
    }
    return "?";
}

ModelKind model_kind_from_string(const std::string& name) {
    if (name == "hindcast") return ModelKind::hindcast;
    if (name == "independence") return ModelKind::independence;
    if (name == "rescaled") return ModelKind::rescaled;
    throw ConfigError("unknown model kind '" + name + "'");
}

JointModel::JointModel(ModelKind kind, std::vector<double> demand, std::vector<double> wind,
                       ScalingFunction scaling)
    : kind_(kind), demand_mw_(std::move(demand)), wind_mw_(std::move(wind)), scaling_(scaling) {
    if (demand_mw_.empty() || wind_mw_.empty()) {
        throw DataError("joint model requires nonempty demand and wind series");
    }
    if (kind_ == ModelKind::hindcast && demand_mw_.size() != wind_mw_.size()) {
        throw DataError("hindcast model requires paired series of equal length");
    }
    for (double d : demand_mw_) {
        if (!std::isfinite(d)) throw DataError("joint model: non-finite demand value");
    }
    for (double y : wind_mw_) {
        if (!std::isfinite(y) || y < 0.0) {
            throw DataError("joint model: wind values must be finite and nonnegative");
        }
    }
    if (kind_ == ModelKind::rescaled) {
        scaling_.validate();
        lambda_.resize(demand_mw_.size());
        for (std::size_t t = 0; t < demand_mw_.size(); ++t) {
            lambda_[t] = scaling_(demand_mw_[t]);
        }
    }
}

JointModel JointModel::hindcast(std::vector<double> demand_mw, std::vector<double> wind_mw) {
    return JointModel(ModelKind::hindcast, std::move(demand_mw), std::move(wind_mw), {});
}

JointModel JointModel::independence(std::vector<double> demand_mw, std::vector<double> wind_mw) {
    return JointModel(ModelKind::independence, std::move(demand_mw), std::move(wind_mw), {});
}

JointModel JointModel::rescaled(std::vector<double> demand_mw, std::vector<double> wind_mw,
                                const ScalingFunction& scaling) {
    return JointModel(ModelKind::rescaled, std::move(demand_mw), std::move(wind_mw), scaling);
}

JointModel JointModel::from_series(ModelKind kind, const PairedSeries& series,
                                   const ScalingFunction* scaling) {
    switch (kind) {
        case ModelKind::hindcast:
            return hindcast(series.demand_mw, series.wind_mw);
        case ModelKind::independence:
            return independence(series.demand_mw, series.wind_mw);
        case ModelKind::rescaled:
            if (scaling == nullptr) {
                throw ConfigError("rescaled model requires a scaling function");
            }
            return rescaled(series.demand_mw, series.wind_mw, *scaling);
    }
    throw ConfigError("unknown model kind");
}

JointModel JointModel::demand_only() const {
    return hindcast(demand_mw_, std::vector<double>(demand_mw_.size(), 0.0));
}

NetDemandAtoms JointModel::net_demand_atoms() const {
    NetDemandAtoms out;
    const std::size_t n = atom_count();
    out.values.reserve(n);
    const double w = 1.0 / static_cast<double>(n);
    if (kind_ == ModelKind::hindcast) {
        for (std::size_t t = 0; t < demand_mw_.size(); ++t) {
            out.values.push_back(demand_mw_[t] - wind_mw_[t]);
        }
    } else {
        const bool scaled = kind_ == ModelKind::rescaled;
        for (std::size_t t = 0; t < demand_mw_.size(); ++t) {
            const double lam = scaled ? lambda_[t] : 1.0;
            for (double y : wind_mw_) {
                out.values.push_back(demand_mw_[t] - lam * y);
            }
        }
    }
    out.weights.assign(out.values.size(), w);
    return out;
}

std::vector<double> implied_wind_marginal(const JointModel& model,
                                          std::span<const double> grid_mw) {
    if (model.kind() != ModelKind::rescaled) {
        throw ConfigError("implied wind marginal is defined for rescaled models only");
    }
    std::vector<double> sorted_wind = model.wind();
    std::sort(sorted_wind.begin(), sorted_wind.end());
    const auto n_y = static_cast<double>(sorted_wind.size());
    const auto& sf = model.scaling();

    std::vector<double> out;
    out.reserve(grid_mw.size());
    for (double y : grid_mw) {
        KahanSum acc;
        for (double d : model.demand()) {
            const double scaled_y = y / sf(d);
            const auto it = std::upper_bound(sorted_wind.begin(), sorted_wind.end(), scaled_y);
            acc.add(static_cast<double>(it - sorted_wind.begin()) / n_y);
        }
        out.push_back(acc.value() / static_cast<double>(model.demand().size()));
    }
    return out;
}

} // namespace adequacy
