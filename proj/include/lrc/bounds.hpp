#pragma once

// Upper bounds on the minimum distance and dimension of LRCs with all-symbol
// locality, plus the d_opt / k_opt estimators they are built from.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "lrc/code.hpp"
#include "lrc/error.hpp"
#include "lrc/field.hpp"

namespace lrc {

namespace detail {

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

inline void require_lrc_params(std::size_t n, std::size_t k, std::size_t r) {
    if (r < 1) throw Error("locality r must be at least 1");
    if (k < 1 || k >= n) throw Error("parameters must satisfy 1 <= k < n");
}

}  // namespace detail

/// d <= n - k - ceil(k/r) + 2.
inline std::size_t singleton_like(std::size_t n, std::size_t k, std::size_t r) {
    detail::require_lrc_params(n, k, r);
    return n - k - detail::ceil_div(k, r) + 2;
}

/// d <= n - k - ceil((s(k-1)+1) / (s(r-1)+1)) + 2 for availability s.
inline std::size_t availability_bound(std::size_t n, std::size_t k, std::size_t r, std::size_t s) {
    detail::require_lrc_params(n, k, r);
    if (s < 1) throw Error("availability s must be at least 1");
    return n - k - detail::ceil_div(s * (k - 1) + 1, s * (r - 1) + 1) + 2;
}

/// k/n <= r/(r+1), i.e. k(r+1) <= nr.
inline bool rate_bound_ok(std::size_t n, std::size_t k, std::size_t r) { return k * (r + 1) <= n * r; }

enum class Estimator { closed_form, exhaustive };

inline const char* to_string(Estimator e) { return e == Estimator::closed_form ? "closed-form" : "exhaustive"; }

/// Work cap for the exhaustive estimators: candidates * codewords per candidate.
inline constexpr std::uint64_t kExhaustiveWorkCap = std::uint64_t{1} << 26;

namespace detail {

inline std::size_t singleton_dopt(std::size_t n, std::size_t k) { return n - k + 1; }

/// Largest d with sum_{i<k} ceil(d / q^i) <= n.
inline std::size_t griesmer_dopt(std::size_t n, std::size_t k, std::uint64_t q) {
    auto length_needed = [&](std::size_t d) {
        std::uint64_t total = 0, qi = 1;
        for (std::size_t i = 0; i < k; ++i) {
            total += (d + qi - 1) / qi;
            if (total > n) return total;
            if (qi <= d) qi = (qi > std::numeric_limits<std::uint64_t>::max() / q) ? std::numeric_limits<std::uint64_t>::max() : qi * q;
        }
        return total;
    };
    std::size_t d = 0;
    while (d < n && length_needed(d + 1) <= n) ++d;
    return d;
}

/// Average nonzero weight of a linear code: d <= floor(n (q-1) q^(k-1) / (q^k - 1)).
inline std::size_t plotkin_dopt(std::size_t n, std::size_t k, std::uint64_t q) {
    const std::uint64_t qk = span_size(q, k);
    if (qk <= (std::uint64_t{1} << 40)) {
        const unsigned __int128 num = static_cast<unsigned __int128>(n) * (q - 1) * (qk / q);
        return static_cast<std::size_t>(num / (qk - 1));
    }
    // q^k > n q + 1: the correction term is below 1/q and never changes the floor.
    return static_cast<std::size_t>(static_cast<std::uint64_t>(n) * (q - 1) / q);
}

inline std::size_t exhaustive_dopt(std::size_t n, std::size_t k, std::uint64_t q, std::size_t ceiling) {
    if (k == n) return 1;
    const FieldRef f = Field::of_order(q);
    const std::size_t cells = k * (n - k);
    const std::uint64_t candidates = span_size(q, cells);
    const std::uint64_t words = span_size(q, k);
    if (candidates == std::numeric_limits<std::uint64_t>::max() || words == std::numeric_limits<std::uint64_t>::max() ||
        static_cast<long double>(candidates) * static_cast<long double>(words) > kExhaustiveWorkCap)
        throw CapExceeded("exhaustive d_opt(" + std::to_string(n) + "," + std::to_string(k) + ") over GF(" +
                          std::to_string(q) + ") exceeds the work cap");
    // Every linear code is equivalent, by column permutation, to one with a
    // systematic generator [I | P].
    std::vector<elem_t> cellv(cells, 0);
    std::size_t best = 0;
    while (true) {
        GfMatrix g(f, k, n);
        for (std::size_t i = 0; i < k; ++i) {
            g.set(i, i, 1);
            for (std::size_t j = 0; j < n - k; ++j) g.set(i, k + j, cellv[i * (n - k) + j]);
        }
        std::size_t d = n;
        for_each_nonzero_combination(g, kExhaustiveWorkCap, [&](std::span<const elem_t> w) {
            d = std::min(d, weight(w));
            return d > best;
        });
        best = std::max(best, d);
        if (best >= ceiling) return best;
        std::size_t pos = 0;
        while (pos < cells && ++cellv[pos] == q) cellv[pos++] = 0;
        if (pos == cells) break;
    }
    return best;
}

}  // namespace detail

/// Upper estimate of the largest minimum distance of a q-ary [n, k] linear code.
/// closed_form: min(Singleton, Griesmer, Plotkin). exhaustive: exact, tiny sizes only.
inline std::size_t d_opt_upper(std::size_t n, std::size_t k, std::uint64_t q, Estimator mode = Estimator::closed_form) {
    if (k < 1 || k > n) throw Error("d_opt needs 1 <= k <= n");
    if (q < 2) throw Error("field size must be at least 2");
    const std::size_t closed = std::min({detail::singleton_dopt(n, k), detail::griesmer_dopt(n, k, q),
                                         detail::plotkin_dopt(n, k, q)});
    if (mode == Estimator::closed_form) return closed;
    return detail::exhaustive_dopt(n, k, q, closed);
}

/// Largest k with d_opt_upper(n, k, q) >= d; 0 when no code of length n reaches d.
inline std::size_t k_opt_upper(long long n, std::size_t d, std::uint64_t q, Estimator mode = Estimator::closed_form) {
    if (d < 1) throw Error("distance must be at least 1");
    if (n <= 0 || d > static_cast<std::size_t>(n)) return 0;
    const auto len = static_cast<std::size_t>(n);
    std::size_t k = len;
    while (k >= 1 && d_opt_upper(len, k, q, Estimator::closed_form) < d) --k;
    if (mode == Estimator::closed_form) return k;
    // The exhaustive value never exceeds the closed-form one, so start there.
    while (k >= 1 && d_opt_upper(len, k, q, Estimator::exhaustive) < d) --k;
    return k;
}

struct TBound {
    std::size_t value;
    std::size_t t;
};

/// min over 1 <= t <= ceil(k/r)-1 of d_opt(n - t(r+1), k - tr). Empty range (r >= k) gives nullopt.
inline std::optional<TBound> general_bound(std::size_t n, std::size_t k, std::size_t r, std::uint64_t q,
                                           Estimator mode = Estimator::closed_form) {
    detail::require_lrc_params(n, k, r);
    const std::size_t tmax = detail::ceil_div(k, r) - 1;
    if (tmax < 1) return std::nullopt;
    std::optional<TBound> best;
    for (std::size_t t = 1; t <= tmax; ++t) {
        if (t * (r + 1) >= n || n - t * (r + 1) < k - t * r)
            throw Error("no code of length " + std::to_string(n) + " and dimension " + std::to_string(k) +
                        " has all-symbol locality " + std::to_string(r));
        const std::size_t v = d_opt_upper(n - t * (r + 1), k - t * r, q, mode);
        if (!best || v < best->value) best = TBound{v, t};
    }
    return best;
}

/// min over 1 <= t <= ceil(k_hint/r)-1 of t r + k_opt(n - t(r+1), d).
inline std::optional<TBound> cm_bound_k(std::size_t n, std::size_t d, std::size_t r, std::uint64_t q,
                                        std::size_t k_hint, Estimator mode = Estimator::closed_form) {
    if (r < 1) throw Error("locality r must be at least 1");
    if (k_hint < 1) throw Error("k_hint must be at least 1");
    const std::size_t tmax = detail::ceil_div(k_hint, r) - 1;
    if (tmax < 1) return std::nullopt;
    std::optional<TBound> best;
    for (std::size_t t = 1; t <= tmax; ++t) {
        const long long len = static_cast<long long>(n) - static_cast<long long>(t * (r + 1));
        const std::size_t v = t * r + k_opt_upper(len, d, q, mode);
        if (!best || v < best->value) best = TBound{v, t};
    }
    return best;
}

struct BoundReport {
    std::size_t n = 0, k = 0, r = 0;
    std::uint64_t q = 0;
    std::size_t d_target = 0;
    std::size_t singleton_like = 0;
    std::optional<TBound> general_bound;
    std::optional<TBound> cm_bound_k;
    bool rate_ok = false;
    std::optional<std::size_t> s;
    std::optional<std::size_t> availability_bound;
    Estimator estimator = Estimator::closed_form;
    std::vector<std::string> notes;
};

/// Evaluates every bound. `d` feeds the dimension bound; it defaults to the
/// general bound (or the Singleton-like bound when the t-range is empty).
inline BoundReport bound_report(std::size_t n, std::size_t k, std::size_t r, std::uint64_t q,
                                std::optional<std::size_t> d = std::nullopt,
                                std::optional<std::size_t> s = std::nullopt,
                                Estimator mode = Estimator::closed_form) {
    BoundReport rep;
    rep.n = n;
    rep.k = k;
    rep.r = r;
    rep.q = q;
    rep.estimator = mode;
    rep.singleton_like = singleton_like(n, k, r);
    rep.rate_ok = rate_bound_ok(n, k, r);
    if (!rep.rate_ok) {
        rep.notes.push_back("rate bound k/n <= r/(r+1) violated: no code with these parameters has all-symbol locality r");
    } else {
        rep.general_bound = general_bound(n, k, r, q, mode);
    }
    if (!rep.general_bound)
        rep.notes.push_back("general bound t-range 1..ceil(k/r)-1 is empty or undefined; Singleton-like bound applies");
    rep.d_target = d.value_or(rep.general_bound ? rep.general_bound->value : rep.singleton_like);
    rep.cm_bound_k = cm_bound_k(n, rep.d_target, r, q, k, mode);
    if (!rep.cm_bound_k) rep.notes.push_back("dimension bound t-range is empty (r >= k)");
    if (s) {
        rep.s = s;
        rep.availability_bound = availability_bound(n, k, r, *s);
        rep.notes.push_back("availability_bound: unproven formula, reported for reference only");
    }
    return rep;
}

}  // namespace lrc
