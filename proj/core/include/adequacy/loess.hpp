// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

namespace adequacy {

/// Local linear regression with tricube weights over the span-nearest
/// neighbours (no robustness iterations). Evaluate anywhere after fitting.
class LoessFit {
public:
    /// Requires >= 10 points, 0 < span <= 1, and enough neighbours for a
    /// degree-1 fit (at least 3 in every window).
    LoessFit(std::span<const double> x, std::span<const double> y, double span = 0.75);

    [[nodiscard]] double operator()(double x0) const;

    [[nodiscard]] std::vector<double> evaluate(std::span<const double> points) const;

    [[nodiscard]] double x_min() const { return x_.front(); }
    [[nodiscard]] double x_max() const { return x_.back(); }

private:
    std::vector<double> x_; // sorted
    std::vector<double> y_; // reordered alongside x_
    std::size_t window_;
};

} // namespace adequacy
