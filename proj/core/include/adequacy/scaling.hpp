// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "adequacy/errors.hpp"

namespace adequacy {

/// Demand-dependent wind rescaling factor: 1 at or below d1_norm, l2 at or
/// above d2_norm, linear in between. Demand is normalized by acs_ref_mw
/// before the thresholds apply. The conditional wind distribution is then
/// F(y | D = d) = F_Y(y / lambda(d)).
struct ScalingFunction {
    double d1_norm = 0.95;
    double d2_norm = 1.03;
    double l1 = 1.0;
    double l2 = 0.5;
    double acs_ref_mw = 0.0;

    void validate() const {
        if (!(acs_ref_mw > 0.0)) throw ConfigError("scaling: acs_ref_mw must be positive");
        if (!(d1_norm < d2_norm)) throw ConfigError("scaling: requires d1_norm < d2_norm");
        if (!(l2 > 0.0) || !(l2 <= l1) || !(l1 <= 1.0)) {
            throw ConfigError("scaling: requires 0 < l2 <= l1 <= 1");
        }
    }

    /// lambda(d) for absolute demand in MW.
    [[nodiscard]] double operator()(double demand_mw) const {
        const double d = demand_mw / acs_ref_mw;
        if (d <= d1_norm) return l1;
        if (d >= d2_norm) return l2;
        return l1 + (d - d1_norm) / (d2_norm - d1_norm) * (l2 - l1);
    }
};

} // namespace adequacy
