#pragma once

// Optimality audit: exact distance against the Singleton-like bound, measured
// locality, and the structural conditions every optimal code must satisfy.

#include <algorithm>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lrc/bounds.hpp"
#include "lrc/characterize.hpp"
#include "lrc/code.hpp"

namespace lrc {

enum class Thm2Case { r_divides_k, r_not_divides_k, not_applicable };

inline const char* to_string(Thm2Case c) {
    switch (c) {
        case Thm2Case::r_divides_k: return "r_divides_k";
        case Thm2Case::r_not_divides_k: return "r_not_divides_k";
        case Thm2Case::not_applicable: return "not_applicable";
    }
    return "?";
}

/// Verdicts of the necessary conditions for meeting the Singleton-like bound.
struct NecessaryConditions {
    Thm2Case which = Thm2Case::not_applicable;
    bool ok = true;
    // r | k
    bool n_divisible = true;
    std::vector<std::pair<std::size_t, std::size_t>> overlapping_rows;
    std::vector<std::size_t> wrong_weight_rows;
    // r does not divide k
    std::size_t subset_size = 0;
    std::size_t required_coverage = 0;
    std::vector<std::vector<std::size_t>> undercovering_subsets;
};

/// If r | k: (r+1) | n, locality rows pairwise disjoint, each of weight r+1.
/// Otherwise: every ceil(k/r) locality rows together cover >= k + ceil(k/r)
/// coordinates. Violations are listed in lexicographic order.
inline NecessaryConditions check_necessary_conditions(const CharacterizedPcm& cp, std::size_t n, std::size_t k,
                                                      std::size_t r) {
    if (r < 1) throw Error("locality r must be at least 1");
    NecessaryConditions out;
    const std::size_t l = cp.l();
    std::vector<std::vector<std::size_t>> supports;
    for (std::size_t i = 0; i < l; ++i) supports.push_back(support(cp.h1.row(i)));

    if (k % r == 0) {
        out.which = Thm2Case::r_divides_k;
        out.n_divisible = n % (r + 1) == 0;
        for (std::size_t i = 0; i < l; ++i) {
            if (supports[i].size() != r + 1) out.wrong_weight_rows.push_back(i);
            for (std::size_t j = i + 1; j < l; ++j) {
                std::vector<std::size_t> common;
                std::set_intersection(supports[i].begin(), supports[i].end(), supports[j].begin(),
                                      supports[j].end(), std::back_inserter(common));
                if (!common.empty()) out.overlapping_rows.emplace_back(i, j);
            }
        }
        out.ok = out.n_divisible && out.overlapping_rows.empty() && out.wrong_weight_rows.empty();
        return out;
    }

    out.which = Thm2Case::r_not_divides_k;
    out.subset_size = (k + r - 1) / r;
    out.required_coverage = k + out.subset_size;
    if (out.subset_size <= l) {
        std::vector<std::size_t> idx(out.subset_size);
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        while (true) {
            std::set<std::size_t> cover;
            for (auto i : idx) cover.insert(supports[i].begin(), supports[i].end());
            if (cover.size() < out.required_coverage) out.undercovering_subsets.push_back(idx);
            std::size_t a = idx.size();
            while (a > 0 && idx[a - 1] == l - idx.size() + (a - 1)) --a;
            if (a == 0) break;
            ++idx[a - 1];
            for (std::size_t b = a; b < idx.size(); ++b) idx[b] = idx[b - 1] + 1;
        }
    }
    out.ok = out.undercovering_subsets.empty();
    return out;
}

struct VerifyReport {
    std::size_t n = 0, k = 0, r = 0;
    std::size_t d_exact = 0;
    DistanceMethod distance_method = DistanceMethod::automatic;
    std::size_t singleton_like = 0;
    bool optimal = false;
    bool full_rank = false;
    bool locality_ok = false;
    std::size_t measured_locality = 0;
    std::vector<std::size_t> per_symbol_locality;
    Thm2Case thm2_case = Thm2Case::not_applicable;
    bool thm2_ok = true;
    std::optional<TBound> general_bound;  // informational
    DependenceWitness dependence_witness;
    std::vector<std::vector<elem_t>> locality_witnesses;
    std::optional<NecessaryConditions> conditions;
    std::optional<CharacterizedPcm> characterized;
    std::vector<std::string> notes;
};

/// Exact distance, locality profile and rank, compared against the bound for
/// the claimed locality r. The structural conditions are evaluated only for
/// optimal codes with r < k whose measured locality is within the claim.
inline VerifyReport verify(const LinearCode& code, std::size_t r, const SearchCaps& caps = {}) {
    if (r < 1) throw Error("locality r must be at least 1");
    VerifyReport rep;
    rep.n = code.n();
    rep.k = code.k();
    rep.r = r;
    rep.full_rank = rank(code.pcm()) == code.n() - code.k();

    auto dist = min_distance_with_witness(code, caps);
    rep.d_exact = dist.distance;
    rep.distance_method = dist.method;
    rep.dependence_witness = std::move(dist.witness);

    rep.singleton_like = singleton_like(rep.n, rep.k, r);
    rep.optimal = rep.d_exact == rep.singleton_like;

    const LocalityProfile prof = locality_profile(code, caps);
    rep.per_symbol_locality = prof.per_symbol;
    rep.measured_locality = prof.all_symbol;
    rep.locality_ok = prof.all_repairable && prof.all_symbol <= r;
    rep.locality_witnesses = prof.witness_rows;
    if (!prof.all_repairable) rep.notes.push_back("some coordinate is covered by no parity check");
    if (rep.d_exact > rep.singleton_like && rep.locality_ok)
        rep.notes.push_back("distance exceeds the Singleton-like bound: inconsistent input");

    if (rate_bound_ok(rep.n, rep.k, r)) {
        try {
            rep.general_bound = general_bound(rep.n, rep.k, r, code.field().size());
        } catch (const Error&) {
        }
    }

    if (rep.optimal && r < rep.k && rep.locality_ok) {
        rep.characterized = characterize(code, r, caps);
        rep.conditions = check_necessary_conditions(*rep.characterized, rep.n, rep.k, r);
        rep.thm2_case = rep.conditions->which;
        rep.thm2_ok = rep.conditions->ok;
        rep.notes.push_back("structural conditions checked on the canonical locality rows; other choices of H1 exist");
    }
    return rep;
}

}  // namespace lrc
