#include "hardylab/config.hpp"

#include <string>

#include "hardylab/error.hpp"

namespace hardylab {
namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double to_positive(const std::string& key, const std::string& v, bool allow_zero) {
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || !(allow_zero ? x >= 0.0 : x > 0.0)) {
        throw DomainError("config: bad value for " + key + ": '" + v + "'");
    }
    return x;
}

}  // namespace

std::string to_string(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

OutputFormat parse_output_format(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw DomainError("unknown output format '" + s + "'");
}

RunConfig parse_run_config(std::istream& in, RunConfig cfg) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw DomainError("config line " + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "mode") {
            cfg.mode = parse_weight_mode(value);
        } else if (key == "step") {
            cfg.step = to_positive(key, value, true);
        } else if (key == "tol") {
            cfg.tol = to_positive(key, value, false);
        } else if (key == "eps") {
            cfg.eps = to_positive(key, value, false);
        } else if (key == "cache_dir") {
            cfg.cache_dir = value;
        } else if (key == "format") {
            cfg.format = parse_output_format(value);
        } else if (key == "workers") {
            cfg.workers = static_cast<unsigned>(to_positive(key, value, true));
        } else {
            throw DomainError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

}  // namespace hardylab
