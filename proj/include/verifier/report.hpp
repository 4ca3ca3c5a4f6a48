#pragma once

// Report rendering. Both formats are pure functions of the RunReport, so
// repeated runs over the same input produce byte-identical output.

#include "verifier/run.hpp"

#include "json.hpp"

#include <string>

namespace verifier {

namespace detail {

inline const char* metric_convention() {
    return "g = 2 dx^1 dx^{n+3} + 2 dx^2 dx^{n+4} + sum_i (dx^i)^2 "
           "+ 2 sum_i u^i dx^i dx^{n+4} + f (dx^{n+3})^2 + f (dx^{n+4})^2, "
           "u^i = sum_{j,a} (A_a)_{ij} x^j (x^{n+3})^a, f = sum_i (x^i)^2";
}

inline const char* curvature_convention() {
    return "R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb} "
           "+ Gamma^a_{cf} Gamma^f_{db} - Gamma^a_{df} Gamma^f_{cb}";
}

inline const char* derivative_convention() {
    return "each covariant derivative appends its direction as the last index";
}

}  // namespace detail

inline std::string render_json(const RunReport& rep) {
    nlohmann::ordered_json j;
    j["tool"] = "holocert";
    j["schema"] = 1;
    j["conventions"] = {
        {"metric", detail::metric_convention()},
        {"curvature_sign", detail::curvature_convention()},
        {"derivative_slots", detail::derivative_convention()},
    };
    j["input"] = {
        {"fixture", rep.fixture_label},
        {"seed", rep.seed},
        {"n", rep.n},
        {"N", rep.N},
        {"dimension", rep.dimension},
        {"max_order", rep.max_order},
        {"mode", rep.mode},
        {"corrupt_u", rep.corrupt},
        {"generators", rep.generators},
    };
    j["work"] = {
        {"tensor_entries", rep.tensor_entries},
        {"tuples_enumerated", rep.tuples_enumerated},
        {"zero_operators", rep.zero_operators},
        {"nonzero_operators", rep.nonzero_operators},
        {"holonomy_dim", rep.holonomy_dim},
        {"stabilizer_dim", rep.stabilizer_dim},
    };
    j["notes"] = rep.notes;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : rep.results) {
        nlohmann::ordered_json c = {
            {"name", r.name},
            {"status", r.status},
            {"detail", r.detail},
        };
        if (!r.witness.empty()) c["witness"] = r.witness;
        j["checks"].push_back(std::move(c));
    }
    j["summary"] = {
        {"pass", rep.pass_count},
        {"fail", rep.fail_count},
        {"heuristic_pass", rep.heuristic_count},
        {"exit_code", rep.exit_code()},
    };
    return j.dump(2) + "\n";
}

inline std::string render_text(const RunReport& rep) {
    std::string out;
    out += "holonomy certification report\n";
    out += "input: " + rep.fixture_label + " (n = " + std::to_string(rep.n) + ", N = " +
           std::to_string(rep.N) + ", dimension " + std::to_string(rep.dimension) +
           "), max order " + std::to_string(rep.max_order) + ", " + rep.mode + " enumeration";
    if (rep.corrupt) out += ", corrupted u";
    out += "\n";
    out += "conventions:\n";
    out += "  metric: " + std::string(detail::metric_convention()) + "\n";
    out += "  curvature: " + std::string(detail::curvature_convention()) + "\n";
    out += "  derivatives: " + std::string(detail::derivative_convention()) + "\n";
    out += "notes:\n";
    for (const auto& note : rep.notes) out += "  - " + note + "\n";
    out += "work: ";
    out += "tensor entries per order [";
    for (size_t r = 0; r < rep.tensor_entries.size(); ++r) {
        if (r) out += ", ";
        out += std::to_string(rep.tensor_entries[r]);
    }
    out += "], " + std::to_string(rep.tuples_enumerated) + " tuples enumerated, " +
           std::to_string(rep.nonzero_operators) + " nonzero operators, holonomy dimension " +
           std::to_string(rep.holonomy_dim) + ", stabilizer dimension " +
           std::to_string(rep.stabilizer_dim) + "\n";
    out += "checks:\n";
    for (const auto& r : rep.results) {
        std::string line = "  " + r.status;
        line.append(line.size() < 18 ? 18 - line.size() : 1, ' ');
        line += r.name;
        line.append(line.size() < 52 ? 52 - line.size() : 1, ' ');
        out += line + r.detail + "\n";
        if (!r.witness.empty()) out += "      witness: " + r.witness + "\n";
    }
    out += "summary: " + std::to_string(rep.pass_count) + " pass, " +
           std::to_string(rep.fail_count) + " fail, " + std::to_string(rep.heuristic_count) +
           " heuristic-pass; exit code " + std::to_string(rep.exit_code()) + "\n";
    return out;
}

}  // namespace verifier
