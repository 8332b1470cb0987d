#pragma once

// Splits a parity-check matrix into locality rows H1 (low-weight dual
// codewords that together cover every coordinate) and a completion H2.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "lrc/code.hpp"

namespace lrc {

struct CharacterizedPcm {
    GfMatrix h1;
    GfMatrix h2;
    /// coverage[i] is the set of coordinates covered by rows 0..i of h1 (0-based, sorted).
    std::vector<std::vector<std::size_t>> coverage;

    std::size_t l() const { return h1.rows(); }
    GfMatrix stacked() const { return GfMatrix::stack(h1, h2); }
};

/// k/r <= n/(r+1) <= l <= n-k, compared exactly over the rationals.
inline bool check_l_window(std::size_t n, std::size_t k, std::size_t r, std::size_t l) {
    if (r == 0) return false;
    const bool a = k * (r + 1) <= n * r;  // k/r <= n/(r+1)
    const bool b = n <= l * (r + 1);      // n/(r+1) <= l
    const bool c = l + k <= n;            // l <= n-k
    return a && b && c;
}

namespace detail {

// Among dual codewords of weight `w` that are nonzero at j, the one covering
// the most coordinates outside `covered`; ties go to the lexicographically
// first support. A minimal support T + {j} means G_T is independent and
// g_j in span(G_T), which pins the word up to scaling.
inline std::vector<elem_t> best_cover_row(const GfMatrix& g, std::size_t j, std::size_t w,
                                          const std::set<std::size_t>& covered) {
    const Field& f = g.field();
    const std::size_t n = g.cols();
    const std::vector<elem_t> target = g.column(j);
    if (w == 1) {
        std::vector<elem_t> e(n, 0);
        e[j] = 1;
        return e;
    }
    std::vector<std::size_t> others;
    for (std::size_t c = 0; c < n; ++c)
        if (c != j) others.push_back(c);
    const std::size_t size = w - 1;
    std::vector<elem_t> best;
    std::size_t best_gain = 0;
    std::vector<std::size_t> idx(size), chosen(size);
    for (std::size_t a = 0; a < size; ++a) idx[a] = a;
    while (true) {
        for (std::size_t a = 0; a < size; ++a) chosen[a] = others[idx[a]];
        const GfMatrix sub = g.select_columns(chosen);
        if (rank(sub) == size) {
            GfMatrix with_target(g.field_ref(), g.rows(), size + 1);
            for (std::size_t r = 0; r < g.rows(); ++r) {
                for (std::size_t c = 0; c < size; ++c) with_target.set(r, c, sub(r, c));
                with_target.set(r, size, target[r]);
            }
            if (rank(with_target) == size) {
                std::size_t gain = covered.count(j) ? 0 : 1;
                for (auto c : chosen) gain += covered.count(c) ? 0 : 1;
                if (best.empty() || gain > best_gain) {
                    const auto x = solve(sub, target);
                    std::vector<elem_t> v(n, 0);
                    v[j] = 1;
                    for (std::size_t c = 0; c < size; ++c) v[chosen[c]] = f.neg(x[c]);
                    normalize_leading(f, v);
                    best = std::move(v);
                    best_gain = gain;
                }
            }
        }
        std::size_t a = size;
        while (a > 0 && idx[a - 1] == others.size() - size + (a - 1)) --a;
        if (a == 0) break;
        ++idx[a - 1];
        for (std::size_t b = a; b < size; ++b) idx[b] = idx[b - 1] + 1;
    }
    if (best.empty()) throw Error("internal: no dual codeword of the measured locality weight");
    return best;
}

}  // namespace detail

/// Greedy cover: while some coordinate is uncovered, take the smallest one j and
/// add a minimum-weight dual codeword nonzero at j, preferring the one that
/// covers the most new coordinates (then the first support); then extend to a
/// full-rank (n-k) x n matrix with rows of the reduced dual basis.
inline CharacterizedPcm characterize(const LinearCode& code, std::size_t r, const SearchCaps& caps = {}) {
    const std::size_t n = code.n();
    const LocalityProfile prof = locality_profile(code, caps);
    if (!prof.all_repairable || prof.all_symbol > r)
        throw Error("code lacks all-symbol locality " + std::to_string(r) +
                    " (measured " + (prof.all_repairable ? std::to_string(prof.all_symbol) : std::string("unbounded")) + ")");

    const GfMatrix g = generator_from_pcm(code);
    CharacterizedPcm out{GfMatrix(code.field_ref(), 0, n), GfMatrix(code.field_ref(), 0, n), {}};
    std::set<std::size_t> covered;
    while (covered.size() < n) {
        std::size_t j = 0;
        while (covered.count(j)) ++j;
        const auto row = detail::best_cover_row(g, j, prof.per_symbol[j] + 1, covered);
        out.h1.append_row(row);
        for (auto c : support(row)) covered.insert(c);
        out.coverage.emplace_back(covered.begin(), covered.end());
    }

    GfMatrix current = out.h1;
    std::size_t current_rank = rank(current);
    const GfMatrix dual_basis = rref(code.pcm()).reduced;
    for (std::size_t i = 0; i < dual_basis.rows() && current_rank < code.n() - code.k(); ++i) {
        GfMatrix trial = current;
        trial.append_row(dual_basis.row(i));
        const std::size_t tr = rank(trial);
        if (tr > current_rank) {
            current = std::move(trial);
            current_rank = tr;
            out.h2.append_row(dual_basis.row(i));
        }
    }
    if (current_rank != code.n() - code.k()) throw Error("internal: completion to full rank failed");
    return out;
}

}  // namespace lrc
