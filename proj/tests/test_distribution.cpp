// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "adequacy/discrete_distribution.hpp"
#include "adequacy/errors.hpp"
#include "adequacy/rng.hpp"
#include "oracles.hpp"

using namespace adequacy;

namespace {

DiscreteDistribution two_atoms(double v0, double p0, double v1, double p1) {
    const double step = v1 - v0;
    return DiscreteDistribution(v0, step, {p0, p1});
}

std::vector<GenUnit> random_units(RngStream& rng, std::size_t n) {
    std::vector<GenUnit> units;
    for (std::size_t i = 0; i < n; ++i) {
        GenUnit u;
        u.name = "u" + std::to_string(i);
        u.capacity_mw = 1.0 + static_cast<double>(rng.uniform_below(80));
        u.availability = 0.05 + 0.9 * rng.uniform01();
        units.push_back(u);
    }
    return units;
}

} // namespace

TEST_SUITE("distribution") {

TEST_CASE("single unit copt is a Bernoulli") {
    const auto d = build_copt({{"g", 10.0, 0.9}}, 1.0);
    CHECK(d.origin_mw() == 0.0);
    CHECK(d.size() == 11);
    CHECK(d.probs().front() == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(d.probs().back() == doctest::Approx(0.9).epsilon(1e-12));
    for (std::size_t i = 1; i + 1 < d.size(); ++i) CHECK(d.probs()[i] == 0.0);
}

TEST_CASE("two identical units convolve to the binomial") {
    const std::vector<GenUnit> units = {{"a", 10.0, 0.9}, {"b", 10.0, 0.9}};
    const auto d = build_copt(units, 1.0);
    CHECK(d.cdf(0.0) == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(d.cdf(10.0) == doctest::Approx(0.19).epsilon(1e-12));
    CHECK(d.cdf(20.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.probs()[10] == doctest::Approx(0.18).epsilon(1e-12));
}

TEST_CASE("copt equals exhaustive enumeration for 12 heterogeneous units") {
    RngStream rng(2024);
    const auto units = random_units(rng, 12);
    const auto d = build_copt(units, 1.0);
    const auto atoms = oracles::enumerate_copt(units, 1.0);
    for (const auto& [steps, p] : atoms) {
        const auto idx = static_cast<std::size_t>(steps);
        const double got = idx < d.size() ? d.probs()[idx] : 0.0;
        CHECK(std::abs(got - p) <= 1e-12);
    }
}

TEST_CASE("copt is order independent") {
    RngStream rng(7);
    auto units = random_units(rng, 9);
    const auto a = build_copt(units, 1.0);
    std::reverse(units.begin(), units.end());
    std::swap(units[0], units[4]);
    const auto b = build_copt(units, 1.0);
    REQUIRE(a.size() == b.size());
    CHECK(a.origin_mw() == b.origin_mw());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(std::abs(a.probs()[i] - b.probs()[i]) <= 1e-12);
    }
}

TEST_CASE("copt mean matches sum of capacity times availability") {
    RngStream rng(11);
    const auto units = random_units(rng, 14);
    const auto d = build_copt(units, 1.0);
    double want = 0.0;
    for (const auto& u : units) want += std::llround(u.capacity_mw) * u.availability;
    CHECK(moments(d).mean_mw == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("copt input validation") {
    CHECK_THROWS_AS(build_copt({}, 1.0), DataError);
    CHECK_THROWS_AS(build_copt({{"g", -5.0, 0.5}}, 1.0), DataError);
    CHECK_THROWS_AS(build_copt({{"g", 5.0, 1.5}}, 1.0), DataError);
    CHECK_THROWS_AS(build_copt({{"g", std::nan(""), 0.5}}, 1.0), DataError);
    CHECK_THROWS_AS(build_copt({{"g", 5.0, 0.5}}, 0.0), NumericalError);
}

TEST_CASE("cdf steps and boundaries") {
    const auto d = two_atoms(0.0, 0.1, 100.0, 0.9);
    CHECK(d.cdf(50.0) == doctest::Approx(0.1));
    CHECK(d.cdf(100.0) == doctest::Approx(1.0));
    CHECK(d.cdf(-1.0) == 0.0);
    CHECK(d.cdf(0.0) == doctest::Approx(0.1));
    CHECK(d.cdf(1e9) == doctest::Approx(1.0));
    CHECK_THROWS_AS(d.cdf(std::nan("")), NumericalError);
}

TEST_CASE("cdf is monotone and right-continuous") {
    RngStream rng(3);
    const auto d = build_copt(random_units(rng, 8), 1.0);
    double prev = -1.0;
    for (double x = d.min_support() - 2.0; x <= d.max_support() + 2.0; x += 0.25) {
        const double c = d.cdf(x);
        CHECK(c >= prev);
        prev = c;
    }
    CHECK(d.cdf(d.max_support()) == doctest::Approx(1.0).epsilon(1e-9));
    // right-continuity: value at an atom equals the limit from just above
    const double at = d.cdf(d.min_support());
    const double above = d.cdf(d.min_support() + 0.5);
    CHECK(at == doctest::Approx(above));
}

TEST_CASE("convolve identity and hand example") {
    const auto point = DiscreteDistribution::degenerate(0.0, 10.0);
    const auto d = two_atoms(0.0, 0.5, 10.0, 0.5);
    const auto same = convolve(point, d);
    CHECK(same.origin_mw() == d.origin_mw());
    REQUIRE(same.size() == d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(same.probs()[i] == doctest::Approx(d.probs()[i]).epsilon(1e-12));
    }

    const auto sum = convolve(d, d);
    CHECK(sum.probs()[0] == doctest::Approx(0.25));
    CHECK(sum.probs()[1] == doctest::Approx(0.5));
    CHECK(sum.probs()[2] == doctest::Approx(0.25));
}

TEST_CASE("convolve adds means and conserves mass") {
    RngStream rng(5);
    const auto a = build_copt(random_units(rng, 6), 1.0);
    const auto b = build_copt(random_units(rng, 5), 1.0);
    const auto c = convolve(a, b);
    CHECK(moments(c).mean_mw ==
          doctest::Approx(moments(a).mean_mw + moments(b).mean_mw).epsilon(1e-9));
    const double mass = std::accumulate(c.probs().begin(), c.probs().end(), 0.0);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("convolve is commutative and associative") {
    RngStream rng(6);
    const auto a = build_copt(random_units(rng, 5), 1.0);
    const auto b = build_copt(random_units(rng, 4), 1.0);
    const auto c = build_copt(random_units(rng, 3), 1.0);

    const auto ab = convolve(a, b);
    const auto ba = convolve(b, a);
    REQUIRE(ab.size() == ba.size());
    for (std::size_t i = 0; i < ab.size(); ++i) {
        CHECK(std::abs(ab.probs()[i] - ba.probs()[i]) <= 1e-9);
    }

    const auto ab_c = convolve(ab, c);
    const auto a_bc = convolve(a, convolve(b, c));
    REQUIRE(ab_c.size() == a_bc.size());
    for (std::size_t i = 0; i < ab_c.size(); ++i) {
        CHECK(std::abs(ab_c.probs()[i] - a_bc.probs()[i]) <= 1e-9);
    }
}

TEST_CASE("convolve rejects mismatched steps") {
    const auto a = DiscreteDistribution::degenerate(0.0, 1.0);
    const auto b = DiscreteDistribution::degenerate(0.0, 2.0);
    CHECK_THROWS_AS(convolve(a, b), NumericalError);
}

TEST_CASE("negate_and_shift") {
    const auto point = DiscreteDistribution::degenerate(10.0, 1.0);
    const auto neg = negate_and_shift(point, 0.0);
    CHECK(neg.min_support() == -10.0);
    CHECK(neg.probs().front() == 1.0);

    const auto d = two_atoms(0.0, 0.5, 10.0, 0.5);
    const auto sym = negate_and_shift(d, 10.0);
    CHECK(sym.min_support() == 0.0);
    CHECK(sym.max_support() == 10.0);
    CHECK(sym.probs().front() == doctest::Approx(0.5));

    RngStream rng(8);
    const auto c = build_copt(random_units(rng, 7), 1.0);
    const double delta = 123.0;
    CHECK(moments(negate_and_shift(c, delta)).mean_mw ==
          doctest::Approx(-moments(c).mean_mw + delta).epsilon(1e-9));
}

TEST_CASE("moments on simple distributions") {
    const auto d = two_atoms(0.0, 0.5, 10.0, 0.5);
    const auto m = moments(d);
    CHECK(m.mean_mw == doctest::Approx(5.0));
    CHECK(m.std_mw == doctest::Approx(5.0));

    const auto atom = DiscreteDistribution::degenerate(42.0);
    CHECK(moments(atom).mean_mw == doctest::Approx(42.0));
    CHECK(moments(atom).std_mw == 0.0);
}

TEST_CASE("moments match enumeration for a 12 unit copt") {
    RngStream rng(12);
    const auto units = random_units(rng, 12);
    const auto d = build_copt(units, 1.0);
    const auto atoms = oracles::enumerate_copt(units, 1.0);
    double mean = 0.0;
    for (const auto& [steps, p] : atoms) mean += static_cast<double>(steps) * p;
    double var = 0.0;
    for (const auto& [steps, p] : atoms) {
        var += (static_cast<double>(steps) - mean) * (static_cast<double>(steps) - mean) * p;
    }
    const auto m = moments(d);
    CHECK(m.mean_mw == doctest::Approx(mean).epsilon(1e-9));
    CHECK(m.std_mw == doctest::Approx(std::sqrt(var)).epsilon(1e-9));
}

TEST_CASE("expected shortfall examples") {
    const auto point = DiscreteDistribution::degenerate(100.0);
    CHECK(point.expected_shortfall(150.0) == doctest::Approx(50.0));

    const auto d = two_atoms(0.0, 0.5, 100.0, 0.5);
    CHECK(d.expected_shortfall(50.0) == doctest::Approx(25.0));
    CHECK(d.expected_shortfall(-10.0) == 0.0);
    CHECK_THROWS_AS(d.expected_shortfall(std::nan("")), NumericalError);
}

TEST_CASE("expected shortfall is convex piecewise linear with kinks at atoms") {
    RngStream rng(9);
    const auto d = build_copt(random_units(rng, 6), 1.0);
    // between atoms the function must be exactly linear: check midpoints
    const double lo = d.min_support();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        const double a = lo + static_cast<double>(i);
        const double b = a + 1.0;
        const double mid = 0.5 * (a + b);
        const double lin = 0.5 * (d.expected_shortfall(a) + d.expected_shortfall(b));
        CHECK(d.expected_shortfall(mid) == doctest::Approx(lin).epsilon(1e-9));
    }
    // convex + nondecreasing on a coarse sweep
    double prev = d.expected_shortfall(lo - 5.0);
    double prev_slope = -1.0;
    for (double x = lo - 4.5; x < d.max_support() + 5.0; x += 0.5) {
        const double cur = d.expected_shortfall(x);
        const double slope = cur - prev;
        CHECK(cur >= prev);
        CHECK(slope >= prev_slope - 1e-12);
        prev = cur;
        prev_slope = slope;
    }
}

TEST_CASE("distribution invariants enforced") {
    CHECK_THROWS_AS(DiscreteDistribution(0.0, 1.0, {0.5, 0.4}), NumericalError);
    CHECK_THROWS_AS(DiscreteDistribution(0.0, 1.0, {1.2, -0.2}), NumericalError);
    CHECK_THROWS_AS(DiscreteDistribution(0.0, -1.0, {1.0}), NumericalError);
    // zero tails are trimmed
    const DiscreteDistribution d(0.0, 1.0, {0.0, 0.25, 0.75, 0.0});
    CHECK(d.min_support() == 1.0);
    CHECK(d.max_support() == 2.0);
    CHECK(d.probs().front() > 0.0);
    CHECK(d.probs().back() > 0.0);
}

} // TEST_SUITE
