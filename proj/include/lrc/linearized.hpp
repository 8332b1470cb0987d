#pragma once

// Linear independence over a subfield and the Moore determinant.
//
// Two independent routes to the same question: the rank route expands
// products gamma_j * beta_i over GF(p), the Moore route evaluates
// det[beta_i^(q^(j-1))]. They agree on every input (nonzero determinant iff
// the elements are independent over GF(q)).

#include <span>
#include <vector>

#include "lrc/field.hpp"
#include "lrc/matrix.hpp"

namespace lrc {

namespace detail {

inline void require_elements(const Field& f, std::span<const elem_t> elems) {
    for (auto e : elems)
        if (!f.contains(e)) throw Error("element " + std::to_string(e) + " out of range");
}

}  // namespace detail

/// True iff no nontrivial GF(base_q)-combination of `elems` vanishes.
/// The empty set is independent.
///
/// With gamma_1..gamma_t a GF(p)-basis of GF(base_q), the GF(base_q)-span of
/// the betas has GF(p)-dimension t * dim, so independence over GF(base_q) is
/// equivalent to the t*n products gamma_j * beta_i having full GF(p)-rank.
inline bool linearly_independent_over_base(const FieldRef& field, std::span<const elem_t> elems,
                                           std::uint64_t base_q) {
    const Field& f = *field;
    detail::require_elements(f, elems);
    const auto gammas = f.subfield_basis(base_q);
    if (elems.empty()) return true;
    const std::size_t want = elems.size() * gammas.size();
    if (want > f.degree()) return false;

    auto prime = Field::make(f.characteristic(), 1);
    GfMatrix coords(prime, 0, f.degree());
    for (auto beta : elems)
        for (auto gamma : gammas) coords.append_row(f.digits(f.mul(gamma, beta)));
    return rank(coords) == want;
}

inline bool linearly_independent_over_base(std::span<const Felt> elems, std::uint64_t base_q) {
    if (elems.empty()) return true;
    std::vector<elem_t> raw;
    for (const auto& e : elems) {
        if (!(*e.field() == *elems.front().field())) throw Error("field mismatch");
        raw.push_back(e.value());
    }
    return linearly_independent_over_base(elems.front().field(), raw, base_q);
}

/// The n x n Moore matrix with entry (i, j) = beta_i^(q^j).
inline GfMatrix moore_matrix(const FieldRef& field, std::span<const elem_t> elems, std::uint64_t base_q) {
    const Field& f = *field;
    detail::require_elements(f, elems);
    f.subfield_degree(base_q);
    const std::size_t n = elems.size();
    GfMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        elem_t v = elems[i];
        for (std::size_t j = 0; j < n; ++j) {
            m.set(i, j, v);
            v = f.pow(v, base_q);
        }
    }
    return m;
}

inline elem_t moore_determinant(const FieldRef& field, std::span<const elem_t> elems, std::uint64_t base_q) {
    if (elems.empty()) {
        field->subfield_degree(base_q);
        return 1;
    }
    return determinant(moore_matrix(field, elems, base_q));
}

inline Felt moore_determinant(std::span<const Felt> elems, std::uint64_t base_q) {
    if (elems.empty()) throw Error("moore_determinant of Felt list needs at least one element");
    std::vector<elem_t> raw;
    for (const auto& e : elems) {
        if (!(*e.field() == *elems.front().field())) throw Error("field mismatch");
        raw.push_back(e.value());
    }
    return {elems.front().field(), moore_determinant(elems.front().field(), raw, base_q)};
}

}  // namespace lrc
