#pragma once

// Run configuration for the verification pipeline: which subalgebra to
// certify (a named fixture, a seeded random input, or inline generator
// matrices), the derivative order, the enumeration mode, the check subset,
// oracle tolerances, and output options. Configurations are json files;
// every parse error names the offending field, and matrix errors name the
// generator, row, and entry.

#include "curvature/holonomy.hpp"
#include "walker/hspec.hpp"

#include "json.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace verifier {

using polycore::Matrix;
using polycore::Rational;

struct OracleSettings {
    double fd_step = 1e-4;    // central-difference step for the pointwise checks
    double fd_rel_tol = 1e-6; // relative tolerance against the exact values
    double loop_eps = 1e-3;   // rectangle side for the transport loop
    int loop_steps = 64;      // integration steps per rectangle edge
    std::vector<unsigned> point_seeds = {11, 12, 13};
};

struct RunConfig {
    std::string fixture;  // "F0".."F4" or "random"; when set, overrides n and generators
    unsigned seed = 1;    // input seed for the "random" fixture
    int n = 0;
    std::vector<Matrix<Rational>> generators;
    int max_order = -1;  // highest derivative order; -1 resolves to N + 1
    curvature::EnumMode mode = curvature::EnumMode::pruned;
    std::vector<std::string> checks;  // empty runs every applicable check
    bool corrupt_u = false;           // deliberately break one u-term (negative control)
    bool require_bracket_closed = true;
    OracleSettings oracle;
    std::string format = "text";  // "text" or "json"
    std::string output;           // report path; empty writes to stdout
};

namespace detail {

inline Rational config_rational(const nlohmann::json& v, const std::string& where) {
    try {
        if (v.is_string()) return polycore::rational_from_string(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
    } catch (const std::exception& e) {
        throw std::invalid_argument("config: " + where + ": " + e.what());
    }
    throw std::invalid_argument("config: " + where + ": expected an integer or a \"p/q\" string");
}

inline Matrix<Rational> config_matrix(const nlohmann::json& v, int k) {
    const std::string who = "generator " + std::to_string(k + 1);
    if (!v.is_array() || v.empty())
        throw std::invalid_argument("config: " + who + " must be a non-empty array of rows");
    int rows = static_cast<int>(v.size());
    std::vector<Rational> data;
    for (int i = 0; i < rows; ++i) {
        const auto& row = v[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != rows)
            throw std::invalid_argument("config: " + who + ", row " + std::to_string(i + 1) +
                                        " must be an array of " + std::to_string(rows) + " entries");
        for (int j = 0; j < rows; ++j)
            data.push_back(config_rational(row[static_cast<size_t>(j)],
                                           who + ", row " + std::to_string(i + 1) + ", entry " +
                                               std::to_string(j + 1)));
    }
    return Matrix<Rational>(rows, rows, std::move(data));
}

template <class T>
inline T config_get(const nlohmann::json& j, const std::string& key, const char* type_name) {
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw std::invalid_argument("config: \"" + key + "\" must be " + type_name);
    }
}

}  // namespace detail

inline RunConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("config: top level must be a json object");
    static const std::vector<std::string> known = {
        "fixture", "seed",      "n",      "generators",             "max_order", "mode",
        "checks",  "corrupt_u", "oracle", "require_bracket_closed", "format",    "output"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const auto& k : known) ok = ok || k == key;
        if (!ok) throw std::invalid_argument("config: unknown key \"" + key + "\"");
    }

    RunConfig cfg;
    if (j.contains("fixture")) cfg.fixture = detail::config_get<std::string>(j, "fixture", "a string");
    if (j.contains("seed")) cfg.seed = detail::config_get<unsigned>(j, "seed", "a non-negative integer");
    if (j.contains("n")) cfg.n = detail::config_get<int>(j, "n", "an integer");
    if (j.contains("generators")) {
        const auto& gens = j.at("generators");
        if (!gens.is_array())
            throw std::invalid_argument("config: \"generators\" must be an array of matrices");
        for (size_t k = 0; k < gens.size(); ++k)
            cfg.generators.push_back(detail::config_matrix(gens[k], static_cast<int>(k)));
    }
    if (j.contains("max_order"))
        cfg.max_order = detail::config_get<int>(j, "max_order", "an integer");
    if (j.contains("mode")) {
        std::string m = detail::config_get<std::string>(j, "mode", "a string");
        if (m == "pruned")
            cfg.mode = curvature::EnumMode::pruned;
        else if (m == "exhaustive")
            cfg.mode = curvature::EnumMode::exhaustive;
        else
            throw std::invalid_argument("config: \"mode\" must be \"pruned\" or \"exhaustive\"");
    }
    if (j.contains("checks")) {
        const auto& arr = j.at("checks");
        if (!arr.is_array())
            throw std::invalid_argument("config: \"checks\" must be an array of check names");
        for (const auto& v : arr) {
            if (!v.is_string())
                throw std::invalid_argument("config: \"checks\" must contain only strings");
            cfg.checks.push_back(v.get<std::string>());
        }
    }
    if (j.contains("corrupt_u"))
        cfg.corrupt_u = detail::config_get<bool>(j, "corrupt_u", "a boolean");
    if (j.contains("require_bracket_closed"))
        cfg.require_bracket_closed =
            detail::config_get<bool>(j, "require_bracket_closed", "a boolean");
    if (j.contains("oracle")) {
        const auto& o = j.at("oracle");
        if (!o.is_object()) throw std::invalid_argument("config: \"oracle\" must be an object");
        for (const auto& [key, value] : o.items()) {
            (void)value;
            if (key != "fd_step" && key != "fd_rel_tol" && key != "loop_eps" &&
                key != "loop_steps" && key != "point_seeds")
                throw std::invalid_argument("config: unknown oracle key \"" + key + "\"");
        }
        if (o.contains("fd_step"))
            cfg.oracle.fd_step = detail::config_get<double>(o, "fd_step", "a number");
        if (o.contains("fd_rel_tol"))
            cfg.oracle.fd_rel_tol = detail::config_get<double>(o, "fd_rel_tol", "a number");
        if (o.contains("loop_eps"))
            cfg.oracle.loop_eps = detail::config_get<double>(o, "loop_eps", "a number");
        if (o.contains("loop_steps"))
            cfg.oracle.loop_steps = detail::config_get<int>(o, "loop_steps", "an integer");
        if (o.contains("point_seeds")) {
            const auto& arr = o.at("point_seeds");
            if (!arr.is_array() || arr.empty())
                throw std::invalid_argument("config: \"point_seeds\" must be a non-empty array");
            cfg.oracle.point_seeds.clear();
            for (const auto& v : arr) {
                if (!v.is_number_unsigned() && !v.is_number_integer())
                    throw std::invalid_argument("config: \"point_seeds\" must contain integers");
                cfg.oracle.point_seeds.push_back(v.get<unsigned>());
            }
        }
    }
    if (j.contains("format")) {
        cfg.format = detail::config_get<std::string>(j, "format", "a string");
        if (cfg.format != "text" && cfg.format != "json")
            throw std::invalid_argument("config: \"format\" must be \"text\" or \"json\"");
    }
    if (j.contains("output")) cfg.output = detail::config_get<std::string>(j, "output", "a string");
    return cfg;
}

inline RunConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open \"" + path + "\"");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config: \"" + path + "\" is not valid json: " + e.what());
    }
    return config_from_json(j);
}

// The fixture name wins over inline generators; inline input requires a
// positive n (generators may be empty, which means h = 0). Validation
// errors name the offending generator.
inline walker::HSpec resolve_spec(const RunConfig& cfg) {
    walker::HSpec spec;
    if (cfg.fixture == "random")
        spec = walker::random_h(cfg.seed);
    else if (!cfg.fixture.empty())
        spec = walker::fixture(cfg.fixture);
    else if (cfg.n >= 1)
        spec = walker::HSpec{cfg.n, cfg.generators};
    else
        throw std::invalid_argument("config: provide a fixture name or a positive n");
    walker::validate_hspec(spec, cfg.require_bracket_closed);
    return spec;
}

}  // namespace verifier
