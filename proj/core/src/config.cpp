// SPDX-License-Identifier: Apache-2.0
#include "adequacy/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "adequacy/errors.hpp"

namespace adequacy {

namespace {

std::string trim(std::string s) {
    const auto notspace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    return s;
}

} // namespace

Config Config::parse_string(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty key");
        }
        if (!cfg.values_.emplace(key, value).second) {
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": duplicate key '" +
                              key + "'");
        }
        cfg.used_.emplace(key, false);
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

bool Config::has(const std::string& key) const { return values_.count(key) != 0; }

std::string Config::get_string(const std::string& key) {
    const auto it = values_.find(key);
    if (it == values_.end()) {
        throw ConfigError(origin_ + ": missing required key '" + key + "'");
    }
    used_[key] = true;
    return it->second;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) {
    if (!has(key)) return fallback;
    return get_string(key);
}

double Config::get_double(const std::string& key) {
    const std::string raw = get_string(key);
    double v = 0.0;
    const auto res = std::from_chars(raw.data(), raw.data() + raw.size(), v);
    if (res.ec != std::errc{} || res.ptr != raw.data() + raw.size() || !std::isfinite(v)) {
        throw ConfigError(origin_ + ": key '" + key + "': bad number '" + raw + "'");
    }
    return v;
}

double Config::get_double(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    return get_double(key);
}

int Config::get_int(const std::string& key, int fallback) {
    if (!has(key)) return fallback;
    const double v = get_double(key);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw ConfigError(origin_ + ": key '" + key + "': expected an integer");
    }
    return i;
}

std::uint64_t Config::get_u64(const std::string& key, std::uint64_t fallback) {
    if (!has(key)) return fallback;
    const std::string raw = get_string(key);
    std::uint64_t v = 0;
    const auto res = std::from_chars(raw.data(), raw.data() + raw.size(), v);
    if (res.ec != std::errc{} || res.ptr != raw.data() + raw.size()) {
        throw ConfigError(origin_ + ": key '" + key + "': bad unsigned integer '" + raw + "'");
    }
    return v;
}

bool Config::get_bool(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const std::string raw = get_string(key);
    if (raw == "true" || raw == "1" || raw == "yes") return true;
    if (raw == "false" || raw == "0" || raw == "no") return false;
    throw ConfigError(origin_ + ": key '" + key + "': expected a boolean, got '" + raw + "'");
}

std::vector<double> Config::get_double_list(const std::string& key) {
    const std::string raw = get_string(key);
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= raw.size()) {
        const std::size_t comma = raw.find(',', start);
        const std::string item = trim(raw.substr(start, comma - start));
        if (!item.empty()) {
            double v = 0.0;
            const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
            if (res.ec != std::errc{} || res.ptr != item.data() + item.size() ||
                !std::isfinite(v)) {
                throw ConfigError(origin_ + ": key '" + key + "': bad number '" + item + "'");
            }
            out.push_back(v);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

void Config::reject_unused() const {
    std::string unknown;
    for (const auto& [key, used] : used_) {
        if (!used) {
            if (!unknown.empty()) unknown += ", ";
            unknown += key;
        }
    }
    if (!unknown.empty()) {
        throw ConfigError(origin_ + ": unknown key(s): " + unknown);
    }
}

} // namespace adequacy
