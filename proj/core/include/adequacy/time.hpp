// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace adequacy {

constexpr std::int64_t kSecondsPerHour = 3600;
constexpr std::int64_t kHoursPerWeek = 168;

/// Parses "YYYY-MM-DDTHH:MM:SS" with optional trailing "Z" as a UTC instant,
/// returning seconds since the Unix epoch. Throws DataError on anything else.
std::int64_t parse_iso_utc(std::string_view text);

/// Formats an epoch-seconds instant as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_iso_utc(std::int64_t epoch_seconds);

/// Midnight UTC of the first Sunday in November of the given calendar year.
std::int64_t first_sunday_of_november(int year);

/// Midnight UTC of December 25 of the given calendar year.
std::int64_t christmas_day(int year);

/// Calendar year / month (1-12) / day (1-31) of a UTC instant.
struct CivilDate {
    int year;
    unsigned month;
    unsigned day;
};
CivilDate civil_from_epoch(std::int64_t epoch_seconds);

/// Days since the Unix epoch of the UTC day containing the instant.
std::int64_t day_index(std::int64_t epoch_seconds);

} // namespace adequacy
