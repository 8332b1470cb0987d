#pragma once

// Report rendering. Each report is built once as an ordered JSON document;
// the text form is an aligned key/value listing of the same document.

#include <algorithm>
#include <ostream>
#include <string>

#include "json.hpp"

#include "lrc/bounds.hpp"
#include "lrc/characterize.hpp"
#include "lrc/constructions.hpp"
#include "lrc/repair.hpp"
#include "lrc/verifier.hpp"

namespace lrc::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kTool = "lrc";
inline constexpr const char* kVersion = "1.0.0";

inline Json envelope(const std::string& command, Json params) {
    Json j;
    j["tool"] = kTool;
    j["version"] = kVersion;
    j["command"] = command;
    j["params"] = std::move(params);
    return j;
}

template <class T>
Json opt(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

inline Json matrix_rows(const GfMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(std::vector<elem_t>(m.row(r).begin(), m.row(r).end()));
    return rows;
}

inline Json to_json(const NecessaryConditions& c) {
    Json j;
    j["case"] = to_string(c.which);
    j["ok"] = c.ok;
    if (c.which == Thm2Case::r_divides_k) {
        j["n_divisible"] = c.n_divisible;
        Json pairs = Json::array();
        for (auto [a, b] : c.overlapping_rows) pairs.push_back({a, b});
        j["overlapping_rows"] = pairs;
        j["wrong_weight_rows"] = c.wrong_weight_rows;
    } else {
        j["subset_size"] = c.subset_size;
        j["required_coverage"] = c.required_coverage;
        j["undercovering_subsets"] = c.undercovering_subsets;
    }
    return j;
}

inline void fill(Json& j, const VerifyReport& v) {
    j["n"] = v.n;
    j["k"] = v.k;
    j["r"] = v.r;
    j["d_exact"] = v.d_exact;
    j["distance_method"] = to_string(v.distance_method);
    j["singleton_like"] = v.singleton_like;
    j["optimal"] = v.optimal;
    j["full_rank"] = v.full_rank;
    j["locality_ok"] = v.locality_ok;
    j["measured_locality"] = v.measured_locality;
    j["per_symbol_locality"] = v.per_symbol_locality;
    j["thm2_case"] = to_string(v.thm2_case);
    j["thm2_ok"] = v.thm2_ok;
    j["general_bound"] = v.general_bound ? Json(v.general_bound->value) : Json(nullptr);
    j["general_bound_t"] = v.general_bound ? Json(v.general_bound->t) : Json(nullptr);
    j["dependence_witness"] = {{"columns", v.dependence_witness.columns},
                               {"combination", v.dependence_witness.combination}};
    j["locality_witnesses"] = v.locality_witnesses;
    j["conditions"] = v.conditions ? to_json(*v.conditions) : Json(nullptr);
    j["notes"] = v.notes;
}

inline void fill(Json& j, const BoundReport& b) {
    j["n"] = b.n;
    j["k"] = b.k;
    j["r"] = b.r;
    j["q"] = b.q;
    j["d"] = b.d_target;
    j["singleton_like"] = b.singleton_like;
    j["general_bound"] = b.general_bound ? Json(b.general_bound->value) : Json(nullptr);
    j["general_bound_t"] = b.general_bound ? Json(b.general_bound->t) : Json(nullptr);
    j["cm_bound_k"] = b.cm_bound_k ? Json(b.cm_bound_k->value) : Json(nullptr);
    j["cm_bound_t"] = b.cm_bound_k ? Json(b.cm_bound_k->t) : Json(nullptr);
    j["rate_ok"] = b.rate_ok;
    j["s"] = opt(b.s);
    j["availability_bound"] = opt(b.availability_bound);
    j["availability_status"] = b.availability_bound ? Json("unproven") : Json(nullptr);
    j["estimators"] = {{"mode", to_string(b.estimator)},
                       {"d_opt", b.estimator == Estimator::closed_form
                                     ? Json::array({"singleton", "griesmer", "plotkin"})
                                     : Json::array({"systematic-enumeration"})}};
    j["notes"] = b.notes;
}

inline void fill(Json& j, const SimulationMetrics& m) {
    j["success_rate"] = opt(m.success_rate());
    j["mean_reads"] = opt(m.mean_reads());
    j["baseline_reads"] = m.baseline_reads;
    j["max_reads"] = m.max_reads;
    j["trials"] = m.trials;
    j["seed"] = m.seed;
}

inline void fill(Json& j, const CharacterizedPcm& cp, std::size_t n, std::size_t k, std::size_t r) {
    j["l"] = cp.l();
    j["l_window_ok"] = check_l_window(n, k, r, cp.l());
    j["h1"] = matrix_rows(cp.h1);
    j["h2"] = matrix_rows(cp.h2);
    j["coverage"] = cp.coverage;
}

inline void fill(Json& j, const SearchResult& s) {
    j["found"] = s.alphas.has_value();
    j["k"] = s.k;
    j["phase"] = s.alphas ? Json(s.phase) : Json(nullptr);
    j["reason"] = s.alphas ? Json(nullptr) : Json(s.reason);
    j["candidates_examined"] = s.candidates_examined;
    j["seed"] = s.seed;
    if (s.alphas) {
        Json groups = Json::array();
        for (std::size_t i = 0; i < s.alphas->l; ++i) {
            Json g = Json::array();
            for (std::size_t c = 0; c <= s.alphas->r; ++c) g.push_back(s.alphas->at(i, c));
            groups.push_back(g);
        }
        j["alphas"] = groups;
    } else {
        j["alphas"] = nullptr;
    }
}

inline void fill(Json& j, const Construction& c) {
    j["family"] = to_string(c.family);
    j["field"] = c.code.field().header();
    j["base_q"] = c.base_q;
    Json checks = Json::array();
    for (const auto& ch : c.conditions.checks) checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
    j["alpha_checks"] = checks;
    Json groups = Json::array();
    for (std::size_t i = 0; i < c.alphas.l; ++i) {
        Json g = Json::array();
        for (std::size_t col = 0; col <= c.alphas.r; ++col) g.push_back(c.alphas.at(i, col));
        groups.push_back(g);
    }
    j["alphas"] = groups;
}

/// Aligned `key  value` lines; nested values are written as compact JSON, null as n/a.
inline void write_text(std::ostream& out, const Json& j) {
    std::size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        out << it.key() << std::string(width - it.key().size() + 2, ' ');
        if (it->is_string())
            out << it->get<std::string>();
        else if (it->is_null())
            out << "n/a";
        else
            out << it->dump();
        out << '\n';
    }
}

inline void write(std::ostream& out, const Json& j, bool structured) {
    if (structured)
        out << j.dump(2) << '\n';
    else
        write_text(out, j);
}

}  // namespace lrc::report
