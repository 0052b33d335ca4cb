// SPDX-License-Identifier: Apache-2.0
#include "adequacy/time.hpp"

#include <chrono>
#include <cstdio>

#include "adequacy/errors.hpp"

namespace adequacy {

namespace {

using days_t = std::chrono::sys_days;

bool all_digits(std::string_view s) {
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return !s.empty();
}

int to_int(std::string_view s) {
    int v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

} // namespace

std::int64_t parse_iso_utc(std::string_view text) {
    // YYYY-MM-DDTHH:MM:SS[Z]
    if (text.size() == 20 && text.back() == 'Z') text.remove_suffix(1);
    if (text.size() != 19 || text[4] != '-' || text[7] != '-' ||
        (text[10] != 'T' && text[10] != ' ') || text[13] != ':' || text[16] != ':') {
        throw DataError("bad timestamp '" + std::string(text) + "' (expected YYYY-MM-DDTHH:MM:SSZ)");
    }
    const auto y = text.substr(0, 4);
    const auto mo = text.substr(5, 2);
    const auto d = text.substr(8, 2);
    const auto h = text.substr(11, 2);
    const auto mi = text.substr(14, 2);
    const auto s = text.substr(17, 2);
    if (!all_digits(y) || !all_digits(mo) || !all_digits(d) || !all_digits(h) ||
        !all_digits(mi) || !all_digits(s)) {
        throw DataError("bad timestamp '" + std::string(text) + "': non-numeric field");
    }
    const int year = to_int(y);
    const unsigned month = static_cast<unsigned>(to_int(mo));
    const unsigned day = static_cast<unsigned>(to_int(d));
    const int hour = to_int(h);
    const int minute = to_int(mi);
    const int second = to_int(s);
    const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                          std::chrono::day{day}};
    if (!ymd.ok() || hour > 23 || minute > 59 || second > 60) {
        throw DataError("bad timestamp '" + std::string(text) + "': out-of-range field");
    }
    const auto dp = days_t{ymd};
    return std::chrono::duration_cast<std::chrono::seconds>(dp.time_since_epoch()).count() +
           hour * 3600LL + minute * 60LL + second;
}

std::string format_iso_utc(std::int64_t epoch_seconds) {
    const auto days = static_cast<std::int64_t>(
        epoch_seconds >= 0 ? epoch_seconds / 86400 : (epoch_seconds - 86399) / 86400);
    const auto sod = epoch_seconds - days * 86400;
    const std::chrono::year_month_day ymd{days_t{std::chrono::days{days}}};
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ",
                  static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                  static_cast<unsigned>(ymd.day()), static_cast<long long>(sod / 3600),
                  static_cast<long long>((sod % 3600) / 60), static_cast<long long>(sod % 60));
    return buf;
}

std::int64_t first_sunday_of_november(int year) {
    const auto nov1 = days_t{std::chrono::year{year} / std::chrono::November / 1};
    const std::chrono::weekday wd{nov1};
    const unsigned offset = (7 - wd.c_encoding()) % 7; // Sunday == 0
    const auto sunday = nov1 + std::chrono::days{offset};
    return std::chrono::duration_cast<std::chrono::seconds>(sunday.time_since_epoch()).count();
}

std::int64_t christmas_day(int year) {
    const auto dp = days_t{std::chrono::year{year} / std::chrono::December / 25};
    return std::chrono::duration_cast<std::chrono::seconds>(dp.time_since_epoch()).count();
}

CivilDate civil_from_epoch(std::int64_t epoch_seconds) {
    const std::chrono::year_month_day ymd{days_t{std::chrono::days{day_index(epoch_seconds)}}};
    return CivilDate{static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                     static_cast<unsigned>(ymd.day())};
}

std::int64_t day_index(std::int64_t epoch_seconds) {
    return epoch_seconds >= 0 ? epoch_seconds / 86400 : (epoch_seconds - 86399) / 86400;
}

} // namespace adequacy
