#pragma once

// Linear codes given by a full-rank parity-check matrix: generator, dual,
// exact minimum distance and per-symbol locality.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/field.hpp"
#include "lrc/matrix.hpp"

namespace lrc {

/// Work limits for the exhaustive searches. Exceeding one is an error,
/// never a silent approximation.
struct SearchCaps {
    std::uint64_t max_codewords = std::uint64_t{1} << 26;
    std::uint64_t max_subset_nodes = std::uint64_t{1} << 28;
};

class LinearCode {
public:
    /// Takes ownership of a full-rank (n-k) x n parity-check matrix with 1 <= k < n.
    explicit LinearCode(GfMatrix pcm) : pcm_(std::move(pcm)) {
        if (pcm_.cols() == 0) throw Error("code length must be positive");
        if (pcm_.rows() == 0) throw Error("parity-check matrix has no rows (k would equal n)");
        if (pcm_.rows() >= pcm_.cols()) throw Error("parity-check matrix must have fewer rows than columns");
        if (rank(pcm_) != pcm_.rows()) throw Error("parity-check matrix is not full rank");
    }

    std::size_t n() const { return pcm_.cols(); }
    std::size_t k() const { return pcm_.cols() - pcm_.rows(); }
    const GfMatrix& pcm() const { return pcm_; }
    const FieldRef& field_ref() const { return pcm_.field_ref(); }
    const Field& field() const { return pcm_.field(); }

private:
    GfMatrix pcm_;
};

/// The code spanned by the rows of a full-rank generator matrix.
inline LinearCode code_from_generator(const GfMatrix& generator) {
    if (rank(generator) != generator.rows()) throw Error("generator matrix is not full rank");
    return LinearCode(null_space(generator));
}

/// Canonical generator: the reduced row echelon basis of the null space of H.
/// Satisfies G * H^T == 0 and its pivot columns form an identity (systematic).
inline GfMatrix generator_from_pcm(const LinearCode& code) { return rref(null_space(code.pcm())).reduced; }

inline LinearCode dual_code(const LinearCode& code) { return LinearCode(generator_from_pcm(code)); }

/// Same length, same dimension, and the parity checks of one annihilate the other.
inline bool same_code(const LinearCode& a, const LinearCode& b) {
    if (a.n() != b.n() || a.k() != b.k()) return false;
    return rank(GfMatrix::stack(a.pcm(), b.pcm())) == a.n() - a.k();
}

inline std::size_t weight(std::span<const elem_t> v) {
    std::size_t w = 0;
    for (auto x : v) w += (x != 0);
    return w;
}

inline std::vector<std::size_t> support(std::span<const elem_t> v) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(i);
    return s;
}

/// Number of vectors spanned by `rows` rows over GF(q), saturating.
inline std::uint64_t span_size(std::uint64_t q, std::size_t rows) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < rows; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        total *= q;
    }
    return total;
}

/// Calls `visit(word)` for every nonzero vector in the row space of `basis`
/// (rows assumed independent). `visit` returns false to stop early.
///
/// Scalars of GF(p^m) are walked as GF(p)-combinations of x^j, so every step
/// adds one precomputed vector x^j * b_i: a p-ary odometer over k*m digits.
template <class Visit>
void for_each_nonzero_combination(const GfMatrix& basis, std::uint64_t cap, Visit&& visit) {
    const Field& f = basis.field();
    const std::size_t n = basis.cols();
    if (span_size(f.size(), basis.rows()) > cap)
        throw CapExceeded("enumeration of " + std::to_string(f.size()) + "^" + std::to_string(basis.rows()) +
                          " vectors exceeds the codeword cap");
    std::vector<std::vector<elem_t>> steps;
    elem_t xj = 1;
    std::vector<elem_t> powers;
    for (unsigned j = 0; j < f.degree(); ++j) {
        powers.push_back(xj);
        xj *= f.characteristic();
    }
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (auto s : powers) {
            std::vector<elem_t> v(n);
            for (std::size_t c = 0; c < n; ++c) v[c] = f.mul(s, basis(i, c));
            steps.push_back(std::move(v));
        }
    std::vector<std::uint32_t> digit(steps.size(), 0);
    std::vector<elem_t> word(n, 0);
    const std::uint32_t p = f.characteristic();
    while (true) {
        std::size_t d = 0;
        while (d < steps.size()) {
            for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], steps[d][c]);
            if (++digit[d] < p) break;
            digit[d] = 0;
            ++d;
        }
        if (d == steps.size()) return;  // wrapped back to zero
        if (!visit(std::span<const elem_t>(word))) return;
    }
}

enum class DistanceMethod { automatic, enumeration, column_search };

inline const char* to_string(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::automatic: return "automatic";
        case DistanceMethod::enumeration: return "enumeration";
        case DistanceMethod::column_search: return "column_search";
    }
    return "?";
}

struct DistanceResult {
    std::size_t distance;
    DistanceMethod method;
    /// Columns of H that are dependent, with the vanishing combination (a
    /// minimum-weight codeword restricted to its support).
    DependenceWitness witness;
};

namespace detail {

inline long double binomial(std::size_t n, std::size_t k) {
    long double r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    return r;
}

inline DistanceResult distance_by_enumeration(const LinearCode& code, const SearchCaps& caps) {
    const GfMatrix g = generator_from_pcm(code);
    std::size_t best = code.n() + 1;
    std::vector<elem_t> best_word;
    for_each_nonzero_combination(g, caps.max_codewords, [&](std::span<const elem_t> w) {
        const std::size_t wt = weight(w);
        if (wt < best) {
            best = wt;
            best_word.assign(w.begin(), w.end());
        }
        return best > 1;
    });
    DependenceWitness wit;
    for (std::size_t i = 0; i < best_word.size(); ++i)
        if (best_word[i] != 0) {
            wit.columns.push_back(i);
            wit.combination.push_back(best_word[i]);
        }
    return {best, DistanceMethod::enumeration, std::move(wit)};
}

inline DistanceResult distance_by_columns(const LinearCode& code, const SearchCaps& caps) {
    // Any n-k+1 columns of an (n-k)-row matrix are dependent.
    const std::size_t limit = code.n() - code.k() + 1;
    auto wit = min_dependent_columns(code.pcm(), limit, caps.max_subset_nodes);
    if (!wit) throw Error("internal: no dependent column set within n-k+1");
    const std::size_t d = wit->columns.size();
    return {d, DistanceMethod::column_search, std::move(*wit)};
}

}  // namespace detail

/// Exact minimum Hamming weight over nonzero codewords (equivalently, by the
/// column-dependence characterization, the fewest dependent columns of H).
/// `automatic` picks whichever route has the smaller estimated work.
inline DistanceResult min_distance_with_witness(const LinearCode& code, const SearchCaps& caps = {},
                                                DistanceMethod method = DistanceMethod::automatic) {
    if (method == DistanceMethod::automatic) {
        const long double enum_cost =
            static_cast<long double>(span_size(code.field().size(), code.k())) * static_cast<long double>(code.n());
        long double col_cost = 0;
        for (std::size_t s = 1; s <= code.n() - code.k() + 1; ++s)
            col_cost += detail::binomial(code.n(), s) * static_cast<long double>(code.n() - code.k());
        const bool enum_ok = span_size(code.field().size(), code.k()) <= caps.max_codewords;
        method = (enum_ok && enum_cost <= col_cost) ? DistanceMethod::enumeration : DistanceMethod::column_search;
    }
    if (method == DistanceMethod::enumeration) return detail::distance_by_enumeration(code, caps);
    return detail::distance_by_columns(code, caps);
}

inline std::size_t min_distance(const LinearCode& code, const SearchCaps& caps = {},
                                DistanceMethod method = DistanceMethod::automatic) {
    return min_distance_with_witness(code, caps, method).distance;
}

/// Locality of one coordinate: the fewest other symbols that determine it
/// through a single parity check. `repairable` is false when no dual codeword
/// covers the coordinate (then `locality` is n and `witness` is empty).
struct SymbolLocality {
    std::size_t locality = 0;
    bool repairable = false;
    std::vector<elem_t> witness;
};

struct LocalityProfile {
    std::vector<std::size_t> per_symbol;
    std::size_t all_symbol = 0;
    bool all_repairable = true;
    std::vector<std::vector<elem_t>> witness_rows;
};

enum class LocalityMethod { automatic, dual_enumeration, generator_search };

namespace detail {

// Witness order: lower weight, then lexicographically-first support, then
// lexicographically smaller values.
inline bool better_witness(std::span<const elem_t> a, std::span<const elem_t> b) {
    const std::size_t wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb;
    const auto sa = support(a), sb = support(b);
    if (sa != sb) return sa < sb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::vector<SymbolLocality> localities_by_dual_enumeration(const LinearCode& code, const SearchCaps& caps) {
    const std::size_t n = code.n();
    std::vector<SymbolLocality> out(n);
    for_each_nonzero_combination(code.pcm(), caps.max_codewords, [&](std::span<const elem_t> w) {
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] == 0) continue;
            auto& cur = out[i];
            if (!cur.repairable || better_witness(w, cur.witness)) {
                cur.repairable = true;
                cur.witness.assign(w.begin(), w.end());
            }
        }
        return true;
    });
    for (auto& s : out) s.locality = s.repairable ? weight(s.witness) - 1 : n;
    return out;
}

inline void normalize_leading(const Field& f, std::vector<elem_t>& v) {
    for (auto x : v)
        if (x != 0) {
            const elem_t inv = f.inv(x);
            for (auto& y : v) y = f.mul(y, inv);
            return;
        }
}

// Smallest T (size ascending, lexicographic) with g_i in span(G_T). Minimality
// makes G_T independent, so the dual word supported on T + {i} is unique up
// to scaling and matches the dual-enumeration witness after normalization.
inline SymbolLocality locality_by_generator_search(const GfMatrix& g, std::size_t i, std::uint64_t& nodes,
                                                   std::uint64_t max_nodes) {
    const Field& f = g.field();
    const std::size_t n = g.cols();
    const std::vector<elem_t> target = g.column(i);
    SymbolLocality out;
    out.locality = n;
    if (std::all_of(target.begin(), target.end(), [](elem_t x) { return x == 0; })) {
        // Column i of G is zero: the unit vector e_i is a dual codeword.
        out.repairable = true;
        out.locality = 0;
        out.witness.assign(n, 0);
        out.witness[i] = 1;
        return out;
    }
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < n; ++j)
        if (j != i) others.push_back(j);

    std::vector<std::size_t> chosen;
    for (std::size_t size = 1; size <= others.size(); ++size) {
        std::vector<std::size_t> idx(size);
        for (std::size_t a = 0; a < size; ++a) idx[a] = a;
        while (true) {
            if (++nodes > max_nodes) throw CapExceeded("locality search exceeded its node cap");
            chosen.clear();
            for (auto a : idx) chosen.push_back(others[a]);
            const GfMatrix sub = g.select_columns(chosen);
            const std::size_t rs = rank(sub);
            if (rs == size) {
                GfMatrix with_target(g.field_ref(), g.rows(), size + 1);
                for (std::size_t r = 0; r < g.rows(); ++r) {
                    for (std::size_t c = 0; c < size; ++c) with_target.set(r, c, sub(r, c));
                    with_target.set(r, size, target[r]);
                }
                if (rank(with_target) == rs) {
                    const auto x = solve(sub, target);
                    std::vector<elem_t> w(n, 0);
                    w[i] = 1;
                    for (std::size_t c = 0; c < size; ++c) w[chosen[c]] = f.neg(x[c]);
                    normalize_leading(f, w);
                    out.repairable = true;
                    out.locality = size;
                    out.witness = std::move(w);
                    return out;
                }
            }
            // next combination
            std::size_t a = size;
            while (a > 0 && idx[a - 1] == others.size() - size + (a - 1)) --a;
            if (a == 0) break;
            ++idx[a - 1];
            for (std::size_t b = a; b < size; ++b) idx[b] = idx[b - 1] + 1;
        }
    }
    return out;
}

// Dual enumeration touches q^(n-k) words of length n; the generator search
// tries at most n * sum_{s<=k} C(n-1, s) column subsets, each an O(k^2 s) rank.
inline LocalityMethod pick_locality_method(const LinearCode& code, const SearchCaps& caps) {
    const std::uint64_t words = span_size(code.field().size(), code.n() - code.k());
    if (words > caps.max_codewords) return LocalityMethod::generator_search;
    const long double n = static_cast<long double>(code.n()), k = static_cast<long double>(code.k());
    long double subsets = 0;
    for (std::size_t s = 1; s <= code.k(); ++s) subsets += binomial(code.n() - 1, s) * k * k * static_cast<long double>(s + 1);
    return static_cast<long double>(words) * n <= n * subsets ? LocalityMethod::dual_enumeration
                                                               : LocalityMethod::generator_search;
}

inline std::vector<SymbolLocality> localities(const LinearCode& code, const SearchCaps& caps, LocalityMethod method) {
    if (method == LocalityMethod::automatic) method = pick_locality_method(code, caps);
    if (method == LocalityMethod::dual_enumeration) return localities_by_dual_enumeration(code, caps);
    const GfMatrix g = generator_from_pcm(code);
    std::uint64_t nodes = 0;
    std::vector<SymbolLocality> out;
    for (std::size_t i = 0; i < code.n(); ++i)
        out.push_back(locality_by_generator_search(g, i, nodes, caps.max_subset_nodes));
    return out;
}

}  // namespace detail

/// Minimum over dual codewords e with e_i != 0 of wt(e) - 1, with the witness
/// chosen by weight, then first support, then smallest values.
inline SymbolLocality symbol_locality(const LinearCode& code, std::size_t i, const SearchCaps& caps = {},
                                      LocalityMethod method = LocalityMethod::automatic) {
    if (i >= code.n()) throw Error("coordinate out of range");
    if (method == LocalityMethod::automatic) method = detail::pick_locality_method(code, caps);
    if (method == LocalityMethod::generator_search) {
        std::uint64_t nodes = 0;
        return detail::locality_by_generator_search(generator_from_pcm(code), i, nodes, caps.max_subset_nodes);
    }
    return detail::localities_by_dual_enumeration(code, caps)[i];
}

inline LocalityProfile locality_profile(const LinearCode& code, const SearchCaps& caps = {},
                                        LocalityMethod method = LocalityMethod::automatic) {
    LocalityProfile prof;
    for (auto& s : detail::localities(code, caps, method)) {
        prof.per_symbol.push_back(s.locality);
        prof.all_repairable = prof.all_repairable && s.repairable;
        prof.all_symbol = std::max(prof.all_symbol, s.locality);
        prof.witness_rows.push_back(std::move(s.witness));
    }
    return prof;
}

}  // namespace lrc
