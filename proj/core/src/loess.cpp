// SPDX-License-Identifier: Apache-2.0
#include "adequacy/loess.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "adequacy/errors.hpp"

namespace adequacy {

LoessFit::LoessFit(std::span<const double> x, std::span<const double> y, double span) {
    if (x.size() != y.size()) throw DataError("loess: x and y lengths differ");
    if (x.size() < 10) throw DataError("loess: needs at least 10 points");
    if (!(span > 0.0) || span > 1.0) throw ConfigError("loess: span must lie in (0,1]");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
            throw DataError("loess: non-finite input");
        }
    }

    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    x_.reserve(x.size());
    y_.reserve(y.size());
    for (std::size_t i : order) {
        x_.push_back(x[i]);
        y_.push_back(y[i]);
    }
    if (x_.front() == x_.back()) throw DataError("loess: degenerate x (all values equal)");

    window_ = static_cast<std::size_t>(std::ceil(span * static_cast<double>(x_.size())));
    window_ = std::min(window_, x_.size());
    if (window_ < 3) throw ConfigError("loess: span too small for a local linear fit");
}

double LoessFit::operator()(double x0) const {
    const std::size_t n = x_.size();
    // Window of the `window_` nearest neighbours on the sorted abscissae.
    std::size_t hi = static_cast<std::size_t>(
        std::lower_bound(x_.begin(), x_.end(), x0) - x_.begin());
    std::size_t lo = hi;
    while (hi - lo < window_) {
        if (lo == 0) {
            ++hi;
        } else if (hi == n) {
            --lo;
        } else if (x0 - x_[lo - 1] <= x_[hi] - x0) {
            --lo;
        } else {
            ++hi;
        }
    }
    double h = std::max(x0 - x_[lo], x_[hi - 1] - x0);
    if (h <= 0.0) {
        // All neighbours sit exactly at x0: plain average.
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += y_[i];
        return s / static_cast<double>(hi - lo);
    }

    // Tricube-weighted least squares of y on (x - x0); the fitted value at
    // x0 is the intercept.
    double sw = 0.0, swt = 0.0, swtt = 0.0, swy = 0.0, swty = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        const double u = std::abs(x_[i] - x0) / h;
        if (u >= 1.0) continue;
        const double omu = 1.0 - u * u * u;
        const double w = omu * omu * omu;
        const double t = x_[i] - x0;
        sw += w;
        swt += w * t;
        swtt += w * t * t;
        swy += w * y_[i];
        swty += w * t * y_[i];
    }
    if (sw <= 0.0) {
        // Every in-window point is at distance h (weight zero); fall back to
        // the unweighted window mean.
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += y_[i];
        return s / static_cast<double>(hi - lo);
    }
    const double denom = sw * swtt - swt * swt;
    if (denom <= 1e-12 * sw * sw * h * h) {
        return swy / sw;
    }
    return (swtt * swy - swt * swty) / denom;
}

std::vector<double> LoessFit::evaluate(std::span<const double> points) const {
    std::vector<double> out;
    out.reserve(points.size());
    for (double p : points) out.push_back((*this)(p));
    return out;
}

} // namespace adequacy
