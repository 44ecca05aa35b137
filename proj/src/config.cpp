#include "somnus/config.hpp"

#include <fstream>
#include <sstream>

#include "somnus/graph.hpp"

namespace somnus {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos) throw Error("config: missing '=' in line: " + line);
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw Error("config: empty key in line: " + line);
        cfg.kv[key] = value;
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("config: cannot open " + path);
    return parse(in);
}

std::string ExperimentConfig::get(const std::string& key, const std::string& fallback) const {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
}

std::string ExperimentConfig::require(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error("config: missing required key '" + key + "'");
    return it->second;
}

std::int64_t ExperimentConfig::get_int(const std::string& key, std::int64_t fallback) const {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
        return std::stoll(it->second);
    } catch (...) {
        throw Error("config: key '" + key + "' is not an integer: " + it->second);
    }
}

double ExperimentConfig::get_double(const std::string& key, double fallback) const {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
        return std::stod(it->second);
    } catch (...) {
        throw Error("config: key '" + key + "' is not a number: " + it->second);
    }
}

bool ExperimentConfig::get_bool(const std::string& key, bool fallback) const {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    if (it->second == "1" || it->second == "true" || it->second == "on") return true;
    if (it->second == "0" || it->second == "false" || it->second == "off") return false;
    throw Error("config: key '" + key + "' is not a boolean: " + it->second);
}

std::vector<std::int64_t> ExperimentConfig::get_int_list(
    const std::string& key, const std::vector<std::int64_t>& fallback) const {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    std::vector<std::int64_t> out;
    std::istringstream in(it->second);
    std::string token;
    while (std::getline(in, token, ',')) {
        std::string t = trim(token);
        if (t.empty()) continue;
        try {
            out.push_back(std::stoll(t));
        } catch (...) {
            throw Error("config: key '" + key + "' has a non-integer entry: " + t);
        }
    }
    return out;
}

std::string ExperimentConfig::normalized() const {
    std::ostringstream out;
    for (const auto& [k, v] : kv) out << k << " = " << v << "\n";
    return out.str();
}

std::string ExperimentConfig::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : normalized()) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

}  // namespace somnus
