// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace adequacy {

/// Flat dotted-key configuration file:
///
///   # comment
///   section.key = value
///
/// Values are strings until a typed getter parses them. Every key must be
/// consumed by the loader; leftovers are reported as errors (typo guard).
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text, const std::string& origin = "<string>");

    [[nodiscard]] bool has(const std::string& key) const;

    std::string get_string(const std::string& key);
    std::string get_string(const std::string& key, const std::string& fallback);
    double get_double(const std::string& key);
    double get_double(const std::string& key, double fallback);
    int get_int(const std::string& key, int fallback);
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback);
    bool get_bool(const std::string& key, bool fallback);
    std::vector<double> get_double_list(const std::string& key);

    /// Throws ConfigError naming any keys never retrieved.
    void reject_unused() const;

    [[nodiscard]] const std::string& origin() const { return origin_; }

private:
    std::string origin_;
    std::map<std::string, std::string> values_;
    std::map<std::string, bool> used_;
};

} // namespace adequacy
