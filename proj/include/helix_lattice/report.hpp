#pragma once

// JSON and CSV serialization of reports. Schema documented in docs/report_schema.md.

#include <cmath>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "helix_lattice/lattice.hpp"
#include "helix_lattice/verify.hpp"

namespace helix_lattice {

inline constexpr int kReportSchema = 1;

/// 17 significant digits, enough to round-trip any double.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline nlohmann::json to_json(const Vec3& v) { return nlohmann::json::array({v.x, v.y, v.z}); }

inline nlohmann::json to_json(const Coeffs& c) { return nlohmann::json::array({c[0], c[1], c[2]}); }

inline nlohmann::json to_json(const AffineLattice& l) {
    return {{"origin", to_json(l.origin())},
            {"v1", to_json(l.basis()[0])},
            {"v2", to_json(l.basis()[1])},
            {"v3", to_json(l.basis()[2])}};
}

inline nlohmann::json to_json(const Helix& h) {
    return {{"kappa", h.kappa}, {"tau", h.tau}, {"a", h.a}, {"b", h.b}};
}

inline nlohmann::json to_json(const LatticeConstants& c) {
    nlohmann::json j = {{"lambda1", c.lambda1},
                        {"d_min", c.d_min},
                        {"d_min_coeffs", to_json(c.d_min_coeffs)},
                        {"a_min_lb", c.a_min_lb},
                        {"a_min_exact", nullptr}};
    if (c.a_min_exact) j["a_min_exact"] = *c.a_min_exact;
    return j;
}

inline nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json j;
    j["theorem_id"] = std::string(to_string(r.theorem));
    nlohmann::json inputs = {{"delta", r.delta}};
    if (r.helix) inputs["helix"] = to_json(*r.helix);
    if (r.constants) inputs["lattice_constants"] = to_json(*r.constants);
    if (r.circle_norm) inputs["n"] = *r.circle_norm;
    j["inputs"] = inputs;
    j["bound_value"] = r.bound_value;
    j["observed_min"] = r.observed_min ? nlohmann::json(*r.observed_min) : nlohmann::json(nullptr);
    j["admissible"] = r.admissible;
    j["tightness"] = r.tightness ? nlohmann::json(*r.tightness) : nlohmann::json(nullptr);
    j["vacuous"] = r.vacuous;
    j["passed"] = r.passed;
    j["points"] = r.points;
    j["triples"] = r.triples;
    nlohmann::json witness = nlohmann::json::object();
    if (!r.witness_points.empty()) {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : r.witness_points) pts.push_back(to_json(p));
        witness["points"] = pts;
    }
    if (!r.witness_coeffs.empty()) {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : r.witness_coeffs) cs.push_back(to_json(c));
        witness["coeffs"] = cs;
    }
    j["witness"] = witness.empty() ? nlohmann::json(nullptr) : witness;
    nlohmann::json audit = nlohmann::json::object();
    for (const auto& [k, v] : r.audit) audit[k] = v;
    j["audit"] = audit;
    j["note"] = r.note;
    return j;
}

}  // namespace helix_lattice
