// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "adequacy/errors.hpp"
#include "adequacy/time.hpp"

using namespace adequacy;

TEST_SUITE("time") {

TEST_CASE("iso parse and format round trip") {
    const char* samples[] = {"2005-11-06T00:00:00Z", "2012-02-29T23:00:00Z",
                             "1999-12-31T17:30:05Z"};
    for (const char* s : samples) {
        CHECK(format_iso_utc(parse_iso_utc(s)) == s);
    }
    CHECK(parse_iso_utc("1970-01-01T00:00:00Z") == 0);
    CHECK(parse_iso_utc("1970-01-02T00:00:00") == 86400);
}

TEST_CASE("iso parse rejects malformed input") {
    CHECK_THROWS_AS(parse_iso_utc("2005-13-01T00:00:00Z"), DataError);
    CHECK_THROWS_AS(parse_iso_utc("2005-11-31T00:00:00Z"), DataError);
    CHECK_THROWS_AS(parse_iso_utc("2005-11-06 00:00"), DataError);
    CHECK_THROWS_AS(parse_iso_utc("not a time"), DataError);
    CHECK_THROWS_AS(parse_iso_utc("2005-11-06T25:00:00Z"), DataError);
}

TEST_CASE("first sunday of november") {
    // Nov 1 2005 was a Tuesday; first Sunday was Nov 6.
    CHECK(format_iso_utc(first_sunday_of_november(2005)) == "2005-11-06T00:00:00Z");
    // Nov 1 2009 was itself a Sunday.
    CHECK(format_iso_utc(first_sunday_of_november(2009)) == "2009-11-01T00:00:00Z");
    CHECK(format_iso_utc(first_sunday_of_november(2011)) == "2011-11-06T00:00:00Z");
}

TEST_CASE("civil date and day index") {
    const auto ts = parse_iso_utc("2010-12-25T13:00:00Z");
    const CivilDate d = civil_from_epoch(ts);
    CHECK(d.year == 2010);
    CHECK(d.month == 12);
    CHECK(d.day == 25);
    CHECK(day_index(ts) == ts / 86400);
    CHECK(format_iso_utc(christmas_day(2010)) == "2010-12-25T00:00:00Z");
}

} // TEST_SUITE
