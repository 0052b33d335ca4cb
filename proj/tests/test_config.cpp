// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "adequacy/config.hpp"
#include "adequacy/errors.hpp"

using namespace adequacy;

TEST_SUITE("config") {

TEST_CASE("parses dotted keys, comments and types") {
    Config cfg = Config::parse_string(
        "# comment\n"
        "a.b = 1.5\n"
        "a.c = hello   # trailing comment\n"
        "a.d = 3\n"
        "a.e = true\n"
        "a.list = 1, 2,3\n");
    CHECK(cfg.get_double("a.b") == 1.5);
    CHECK(cfg.get_string("a.c") == "hello");
    CHECK(cfg.get_int("a.d", 0) == 3);
    CHECK(cfg.get_bool("a.e", false));
    const auto list = cfg.get_double_list("a.list");
    REQUIRE(list.size() == 3);
    CHECK(list[2] == 3.0);
    cfg.reject_unused();
}

TEST_CASE("missing and malformed keys") {
    Config cfg = Config::parse_string("x.y = 5\n");
    CHECK(cfg.get_double("x.z", 7.0) == 7.0);
    CHECK_THROWS_AS(cfg.get_string("nope"), ConfigError);
    CHECK_THROWS_AS(Config::parse_string("novalue\n"), ConfigError);
    CHECK_THROWS_AS(Config::parse_string("a=1\na=2\n"), ConfigError);

    Config bad = Config::parse_string("x.y = abc\n");
    CHECK_THROWS_AS(bad.get_double("x.y"), ConfigError);
}

TEST_CASE("unknown keys are rejected") {
    Config cfg = Config::parse_string("known = 1\nmystery.key = 2\n");
    cfg.get_double("known");
    CHECK_THROWS_AS(cfg.reject_unused(), ConfigError);
}

} // TEST_SUITE
