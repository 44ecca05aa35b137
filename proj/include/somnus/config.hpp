#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace somnus {

// Line-oriented "key = value" configuration; lists are comma-separated.
// Normalization sorts keys, which makes the config hash stable.
struct ExperimentConfig {
    std::map<std::string, std::string> kv;

    static ExperimentConfig parse(std::istream& in);
    static ExperimentConfig parse_file(const std::string& path);

    bool has(const std::string& key) const { return kv.count(key) != 0; }
    void set(const std::string& key, const std::string& value) { kv[key] = value; }

    std::string get(const std::string& key, const std::string& fallback = "") const;
    std::string require(const std::string& key) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    double get_double(const std::string& key, double fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<std::int64_t> get_int_list(const std::string& key,
                                           const std::vector<std::int64_t>& fallback) const;

    std::string normalized() const;
    std::string hash() const;  // fnv1a-64 of the normalized text, hex
};

}  // namespace somnus
