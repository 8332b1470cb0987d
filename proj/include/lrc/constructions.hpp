#pragma once

// Optimal LRC families built from block parity-check matrices
//
//     H = [ locality rows: all-ones on each disjoint group of r+1 columns ]
//         [ evaluation rows: f_1(alpha), ..., f_e(alpha)                 ]
//
// where the evaluation rows are Frobenius powers alpha^(q^j) (linearized
// family) or ordinary powers alpha^j (Vandermonde families).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lrc/bounds.hpp"
#include "lrc/code.hpp"
#include "lrc/field.hpp"
#include "lrc/linearized.hpp"
#include "lrc/matrix.hpp"

namespace lrc {

enum class Family { linearized, vdm_d4, vdm_d5, d3_variant, r2_d5_variant };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::linearized: return "linearized";
        case Family::vdm_d4: return "vdm_d4";
        case Family::vdm_d5: return "vdm_d5";
        case Family::d3_variant: return "d3_variant";
        case Family::r2_d5_variant: return "r2_d5_variant";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    for (auto f : {Family::linearized, Family::vdm_d4, Family::vdm_d5, Family::d3_variant, Family::r2_d5_variant})
        if (s == to_string(f)) return f;
    throw Error("unknown family '" + std::string(s) + "'");
}

/// l groups of r+1 evaluation points; group i owns columns i(r+1) .. i(r+1)+r.
struct AlphaAssignment {
    FieldRef field;
    std::size_t l = 0;
    std::size_t r = 0;
    std::vector<elem_t> grid;  // row-major l x (r+1)

    elem_t at(std::size_t i, std::size_t j) const { return grid[i * (r + 1) + j]; }
    std::size_t n() const { return l * (r + 1); }
};

struct ConstructionParams {
    Family family = Family::vdm_d4;
    std::uint64_t q = 0;  // base field size
    unsigned m = 1;       // extension degree (linearized family only)
    std::size_t n = 0;
    std::size_t r = 0;
    std::optional<std::size_t> k;  // required for linearized, derived otherwise
    std::optional<AlphaAssignment> alphas;
    std::uint64_t seed = 0;  // drives the sampled pivot checks
};

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct ConditionReport {
    std::vector<Check> checks;
    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
    const Check* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
};

struct Construction {
    LinearCode code;
    AlphaAssignment alphas;
    Family family;
    std::size_t r;
    std::uint64_t base_q;
    ConditionReport conditions;
};

/// Number of evaluation rows below the locality rows, per family (linearized: s+1).
inline std::size_t evaluation_rows(Family f, std::size_t n, std::size_t r, std::optional<std::size_t> k) {
    const std::size_t l = n / (r + 1);
    switch (f) {
        case Family::vdm_d4: return 2;
        case Family::vdm_d5: return 3;
        case Family::d3_variant: return 1;
        case Family::r2_d5_variant: return 2;
        case Family::linearized:
            if (!k) throw Error("linearized family needs k");
            if (*k + l >= n) throw Error("linearized family needs s = n-k-l-1 >= 0");
            return n - *k - l;
    }
    return 0;
}

/// l x n matrix of all-ones rows on disjoint consecutive groups of r+1 columns.
inline GfMatrix locality_rows(const FieldRef& field, std::size_t l, std::size_t r) {
    GfMatrix h(field, l, l * (r + 1));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j <= r; ++j) h.set(i, i * (r + 1) + j, 1);
    return h;
}

/// Locality rows stacked over the power rows alpha^1, ..., alpha^power_count.
inline GfMatrix vandermonde_pcm(const AlphaAssignment& a, std::size_t power_count) {
    const Field& f = *a.field;
    GfMatrix h = locality_rows(a.field, a.l, a.r);
    std::vector<elem_t> row(a.n());
    for (std::size_t e = 1; e <= power_count; ++e) {
        for (std::size_t c = 0; c < a.n(); ++c) row[c] = f.pow(a.grid[c], e);
        h.append_row(row);
    }
    return h;
}

/// Locality rows stacked over alpha^(q^0), ..., alpha^(q^s).
inline GfMatrix linearized_pcm(const AlphaAssignment& a, std::uint64_t base_q, std::size_t s) {
    const Field& f = *a.field;
    GfMatrix h = locality_rows(a.field, a.l, a.r);
    std::vector<elem_t> row(a.grid);
    for (std::size_t e = 0; e <= s; ++e) {
        h.append_row(row);
        for (auto& v : row) v = f.pow(v, base_q);
    }
    return h;
}

namespace detail {

inline Check within_group_check(const AlphaAssignment& a) {
    Check c{"within_group_distinct", true, ""};
    for (std::size_t i = 0; i < a.l && c.passed; ++i)
        for (std::size_t j1 = 0; j1 <= a.r && c.passed; ++j1)
            for (std::size_t j2 = j1 + 1; j2 <= a.r; ++j2)
                if (a.at(i, j1) == a.at(i, j2)) {
                    c.passed = false;
                    c.detail = "group " + std::to_string(i) + " repeats value " + std::to_string(a.at(i, j1)) +
                               " at positions " + std::to_string(j1) + "," + std::to_string(j2);
                    break;
                }
    return c;
}

inline std::vector<elem_t> pair_sums(const Field& f, std::span<const elem_t> group) {
    std::vector<elem_t> out;
    for (std::size_t a = 0; a < group.size(); ++a)
        for (std::size_t b = a + 1; b < group.size(); ++b) out.push_back(f.add(group[a], group[b]));
    return out;
}

inline Check cross_sum_check(const AlphaAssignment& a) {
    const Field& f = *a.field;
    Check c{"cross_group_sum_distinct", true, ""};
    std::vector<std::vector<elem_t>> sums;
    for (std::size_t i = 0; i < a.l; ++i)
        sums.push_back(pair_sums(f, std::span<const elem_t>(a.grid).subspan(i * (a.r + 1), a.r + 1)));
    for (std::size_t i1 = 0; i1 < a.l && c.passed; ++i1)
        for (std::size_t i2 = i1 + 1; i2 < a.l && c.passed; ++i2) {
            std::set<elem_t> s1(sums[i1].begin(), sums[i1].end());
            for (auto v : sums[i2])
                if (s1.count(v)) {
                    c.passed = false;
                    c.detail = "groups " + std::to_string(i1) + " and " + std::to_string(i2) +
                               " share pairwise sum " + std::to_string(v);
                    break;
                }
        }
    return c;
}

inline std::vector<elem_t> differences_to_pivot(const AlphaAssignment& a, std::span<const std::size_t> pivot) {
    const Field& f = *a.field;
    std::vector<elem_t> out;
    for (std::size_t i = 0; i < a.l; ++i)
        for (std::size_t j = 0; j <= a.r; ++j)
            if (j != pivot[i]) out.push_back(f.sub(a.at(i, j), a.at(i, pivot[i])));
    return out;
}

}  // namespace detail

/// Evaluates the hypothesis set of `family` on an alpha grid. For the
/// linearized family this also samples 50 random pivot choices w_i and checks
/// that the shifted differences alpha_{i,j} - alpha_{i,w_i} stay independent.
inline ConditionReport check_alpha_hypotheses(const AlphaAssignment& a, Family family, std::uint64_t base_q,
                                              std::uint64_t seed = 0) {
    ConditionReport rep;
    if (a.grid.size() != a.l * (a.r + 1)) {
        rep.checks.push_back({"grid_shape", false, "grid has " + std::to_string(a.grid.size()) + " entries"});
        return rep;
    }
    for (auto v : a.grid)
        if (!a.field->contains(v)) {
            rep.checks.push_back({"grid_range", false, "value " + std::to_string(v) + " is not a field element"});
            return rep;
        }
    switch (family) {
        case Family::linearized: {
            std::vector<std::size_t> last(a.l, a.r);
            const auto diffs = detail::differences_to_pivot(a, last);
            const bool indep = linearly_independent_over_base(a.field, diffs, base_q);
            rep.checks.push_back({"difference_independence", indep,
                                  indep ? "" : "alpha_{i,j} - alpha_{i,r+1} are dependent over GF(" +
                                                   std::to_string(base_q) + ")"});
            Check sampled{"shifted_pivot_independence", true, ""};
            std::mt19937_64 rng(seed);
            for (int trial = 0; trial < 50 && sampled.passed; ++trial) {
                std::vector<std::size_t> pivot(a.l);
                for (auto& w : pivot) w = static_cast<std::size_t>(rng() % (a.r + 1));
                if (!linearly_independent_over_base(a.field, detail::differences_to_pivot(a, pivot), base_q)) {
                    sampled.passed = false;
                    sampled.detail = "dependent for pivot choice in trial " + std::to_string(trial);
                }
            }
            rep.checks.push_back(sampled);
            break;
        }
        case Family::vdm_d4:
        case Family::d3_variant:
            rep.checks.push_back(detail::within_group_check(a));
            break;
        case Family::vdm_d5:
        case Family::r2_d5_variant:
            rep.checks.push_back(detail::within_group_check(a));
            rep.checks.push_back(detail::cross_sum_check(a));
            break;
    }
    return rep;
}

namespace detail {

inline void require_layout(std::size_t n, std::size_t r) {
    if (r < 1) throw Error("locality r must be at least 1");
    if (n < r + 1 || n % (r + 1) != 0) throw Error("(r+1) must divide n");
}

/// alpha_{i,r+1} = 1 and alpha_{i,j} = 1 + b_{i r + j}, where b is the greedy
/// GF(q)-basis prefix of GF(q^m) in canonical order (the polynomial basis
/// 1, x, x^2, ... when q is prime).
inline AlphaAssignment auto_alphas_linearized(const FieldRef& field, std::uint64_t base_q, std::size_t n,
                                              std::size_t r, unsigned m) {
    const std::size_t l = n / (r + 1);
    const std::size_t need = l * r;
    if (need > m)
        throw Error("automatic alphas need m >= n r/(r+1) = " + std::to_string(need) + " (got m=" +
                    std::to_string(m) + ")");
    const Field& f = *field;
    std::vector<elem_t> basis;
    for (elem_t c = 1; c < f.size() && basis.size() < need; ++c) {
        basis.push_back(c);
        if (!linearly_independent_over_base(field, basis, base_q)) basis.pop_back();
    }
    if (basis.size() < need) throw Error("internal: basis scan fell short");
    AlphaAssignment a{field, l, r, std::vector<elem_t>(n)};
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < r; ++j) a.grid[i * (r + 1) + j] = f.add(1, basis[i * r + j]);
        a.grid[i * (r + 1) + r] = 1;
    }
    return a;
}

/// Group i uses canonical values 0..r.
inline AlphaAssignment auto_alphas_distinct(const FieldRef& field, std::size_t n, std::size_t r) {
    if (field->size() < r + 1)
        throw Error("field of size " + std::to_string(field->size()) + " cannot hold r+1 = " +
                    std::to_string(r + 1) + " distinct values");
    AlphaAssignment a{field, n / (r + 1), r, std::vector<elem_t>(n)};
    for (std::size_t c = 0; c < n; ++c) a.grid[c] = static_cast<elem_t>(c % (r + 1));
    return a;
}

/// Lexicographically-first grid (groups as increasing tuples, chosen in order
/// with backtracking) whose groups have distinct values and pairwise-disjoint
/// pair-sum sets.
inline std::optional<AlphaAssignment> auto_alphas_sum_distinct(const FieldRef& field, std::size_t n, std::size_t r,
                                                               std::uint64_t max_nodes = 10'000'000) {
    const Field& f = *field;
    const std::size_t l = n / (r + 1);
    const std::size_t g = r + 1;
    if (f.size() < g) return std::nullopt;
    std::vector<elem_t> grid;
    std::vector<std::size_t> sum_count(f.size(), 0);  // multiset of sums owned by completed groups
    std::uint64_t nodes = 0;

    auto fits = [&](std::size_t group_start, elem_t v) {
        for (std::size_t i = group_start; i < grid.size(); ++i)
            if (sum_count[f.add(grid[i], v)] > 0) return false;
        return true;
    };
    auto add_group_sums = [&](std::size_t start, int delta) {
        for (std::size_t a = start; a < start + g; ++a)
            for (std::size_t b = a + 1; b < start + g; ++b) {
                auto& cnt = sum_count[f.add(grid[a], grid[b])];
                cnt = static_cast<std::size_t>(static_cast<long long>(cnt) + delta);
            }
    };

    auto place = [&](auto&& self, std::size_t group, elem_t min_value) -> bool {
        if (group == l) return true;
        const std::size_t start = group * g;
        const std::size_t pos = grid.size() - start;
        if (pos == g) {
            add_group_sums(start, +1);
            if (self(self, group + 1, 0)) return true;
            add_group_sums(start, -1);
            return false;
        }
        for (elem_t v = min_value; v + (g - pos - 1) < f.size(); ++v) {
            if (++nodes > max_nodes) return false;
            if (!fits(start, v)) continue;
            grid.push_back(v);
            if (self(self, group, v + 1)) return true;
            grid.pop_back();
        }
        return false;
    };
    if (!place(place, 0, 0)) return std::nullopt;
    return AlphaAssignment{field, l, r, grid};
}

inline void reconcile_k(const ConstructionParams& p, std::size_t derived) {
    if (p.k && *p.k != derived)
        throw Error("family " + std::string(to_string(p.family)) + " has k = n-l-" +
                    std::to_string(p.n - p.n / (p.r + 1) - derived) + " = " + std::to_string(derived) +
                    "; requested k=" + std::to_string(*p.k));
}

inline void require_alpha_shape(const AlphaAssignment& a, const FieldRef& field, std::size_t n, std::size_t r) {
    if (!(*a.field == *field)) throw Error("alpha grid is over a different field");
    if (a.r != r || a.l * (r + 1) != n || a.grid.size() != n)
        throw Error("alpha grid shape does not match n=" + std::to_string(n) + ", r=" + std::to_string(r));
}

inline void require_conditions(const ConditionReport& rep) {
    if (const Check* c = rep.first_failure())
        throw Error("alpha hypothesis violated: " + c->name + (c->detail.empty() ? "" : " (" + c->detail + ")"));
}

inline Construction build_vandermonde(const ConstructionParams& p, std::size_t power_rows) {
    const FieldRef field = Field::of_order(p.q);
    if (p.m != 1) throw Error("family " + std::string(to_string(p.family)) + " works over GF(q); m must be 1");
    const std::size_t l = p.n / (p.r + 1);
    if (p.n < l + power_rows + 1) throw Error("n too small: derived dimension would be < 1");
    const std::size_t k = p.n - l - power_rows;
    reconcile_k(p, k);

    AlphaAssignment a;
    if (p.alphas) {
        require_alpha_shape(*p.alphas, field, p.n, p.r);
        a = *p.alphas;
    } else if (p.family == Family::vdm_d5 || p.family == Family::r2_d5_variant) {
        if (p.family == Family::vdm_d5 && p.q < 2 * p.n + 1)
            throw Error("automatic alphas for vdm_d5 need q >= 2n+1 = " + std::to_string(2 * p.n + 1));
        auto found = auto_alphas_sum_distinct(field, p.n, p.r);
        if (!found) throw Error("no alpha grid with distinct cross-group sums found over GF(" + std::to_string(p.q) + ")");
        a = std::move(*found);
    } else {
        a = auto_alphas_distinct(field, p.n, p.r);
    }
    auto rep = check_alpha_hypotheses(a, p.family, p.q, p.seed);
    require_conditions(rep);
    LinearCode code(vandermonde_pcm(a, power_rows));
    return {std::move(code), std::move(a), p.family, p.r, p.q, std::move(rep)};
}

}  // namespace detail

/// Linearized family: l all-ones locality rows over alpha^(q^0..q^s), s = n-k-l-1,
/// over GF(q^m). Requires {alpha_{i,j} - alpha_{i,r+1}} independent over GF(q).
inline Construction construct_linearized(const ConstructionParams& p) {
    detail::require_layout(p.n, p.r);
    if (!p.k) throw Error("linearized family needs k");
    if (*p.k < 1) throw Error("k must be at least 1");
    const std::size_t l = p.n / (p.r + 1);
    if (*p.k + l + 1 > p.n) throw Error("linearized family needs s = n-k-l-1 >= 0");
    const std::size_t s = p.n - *p.k - l - 1;
    auto pm = prime_power(p.q);
    if (!pm) throw Error("q=" + std::to_string(p.q) + " is not a prime power");
    if (p.m < 1) throw Error("m must be at least 1");
    const FieldRef field = Field::make(pm->first, pm->second * p.m);

    AlphaAssignment a;
    if (p.alphas) {
        detail::require_alpha_shape(*p.alphas, field, p.n, p.r);
        a = *p.alphas;
    } else {
        a = detail::auto_alphas_linearized(field, p.q, p.n, p.r, p.m);
    }
    auto rep = check_alpha_hypotheses(a, Family::linearized, p.q, p.seed);
    detail::require_conditions(rep);
    LinearCode code(linearized_pcm(a, p.q, s));
    return {std::move(code), std::move(a), Family::linearized, p.r, p.q, std::move(rep)};
}

/// l locality rows over alpha, alpha^2: an (n, n-l-2, r) code with d = 4.
inline Construction construct_vdm_d4(const ConstructionParams& p) {
    detail::require_layout(p.n, p.r);
    if (p.r < 3) throw Error("vdm_d4 needs r >= 3");
    return detail::build_vandermonde(p, 2);
}

/// l locality rows over alpha, alpha^2, alpha^3: an (n, n-l-3, r) code with d = 5.
inline Construction construct_vdm_d5(const ConstructionParams& p) {
    detail::require_layout(p.n, p.r);
    if (p.r < 4) throw Error("vdm_d5 needs r >= 4");
    return detail::build_vandermonde(p, 3);
}

/// d3_variant: one alpha row (d = 3). r2_d5_variant: r = 2 with alpha, alpha^2 (d = 5).
inline Construction construct_low_d_variant(const ConstructionParams& p) {
    detail::require_layout(p.n, p.r);
    if (p.family == Family::d3_variant) {
        if (p.r < 2) throw Error("d3_variant needs r >= 2");
        return detail::build_vandermonde(p, 1);
    }
    if (p.family == Family::r2_d5_variant) {
        if (p.r != 2) throw Error("r2_d5_variant needs r = 2");
        return detail::build_vandermonde(p, 2);
    }
    throw Error("construct_low_d_variant handles d3_variant and r2_d5_variant only");
}

inline Construction construct(const ConstructionParams& p) {
    switch (p.family) {
        case Family::linearized: return construct_linearized(p);
        case Family::vdm_d4: return construct_vdm_d4(p);
        case Family::vdm_d5: return construct_vdm_d5(p);
        case Family::d3_variant:
        case Family::r2_d5_variant: return construct_low_d_variant(p);
    }
    throw Error("unknown family");
}

struct SearchOptions {
    std::uint64_t seed = 0;
    std::uint64_t max_sequential = 20'000;
    std::uint64_t max_random = 20'000;
};

struct SearchResult {
    std::optional<AlphaAssignment> alphas;
    std::string reason;  // why nothing was found, empty on success
    std::string phase;   // "sequential" or "random" on success
    std::uint64_t candidates_examined = 0;
    std::uint64_t seed = 0;
    std::size_t k = 0;
};

namespace detail {

// A grid passes the cheap screen when every group has distinct values and,
// with exactly two power rows and target d >= 5, cross-group pair sums differ
// (with two power rows the 2+2 column minor is (a-b)(c-d)[(a+b)-(c+d)]).
inline bool cheap_screen(const AlphaAssignment& a, std::size_t extra_rows, std::size_t target_d) {
    if (!within_group_check(a).passed) return false;
    if (extra_rows == 2 && target_d >= 5 && !cross_sum_check(a).passed) return false;
    return true;
}

inline bool meets_target(const AlphaAssignment& a, std::size_t extra_rows, std::size_t target_d) {
    const GfMatrix h = vandermonde_pcm(a, extra_rows);
    if (rank(h) != h.rows()) return false;
    return !min_dependent_columns(h, target_d - 1).has_value();
}

}  // namespace detail

/// Searches alpha grids over GF(q) so that the l locality rows over
/// alpha^1..alpha^extra_rows give minimum distance >= target_d. First a
/// deterministic scan (groups as increasing tuples, groups non-decreasing,
/// lexicographic), then seeded random grids.
inline SearchResult search_alphas(std::uint64_t q, std::size_t n, std::size_t r, std::size_t extra_rows,
                                  std::size_t target_d, const SearchOptions& opt = {}) {
    detail::require_layout(n, r);
    if (extra_rows < 1) throw Error("extra_rows must be at least 1");
    if (target_d < 2) throw Error("target distance must be at least 2");
    const FieldRef field = Field::of_order(q);
    const std::size_t l = n / (r + 1);
    SearchResult res;
    res.seed = opt.seed;
    if (n <= l + extra_rows) {
        res.reason = "no valid dimension: n - l - extra_rows < 1";
        return res;
    }
    res.k = n - l - extra_rows;
    if (target_d > singleton_like(n, res.k, r)) {
        res.reason = "exceeds Singleton-like bound";
        return res;
    }
    const std::size_t g = r + 1;
    if (q < g) {
        res.reason = "field too small for distinct values within a group";
        return res;
    }

    // All increasing (r+1)-tuples, in lexicographic order.
    std::vector<std::vector<elem_t>> combos;
    {
        if (detail::binomial(q, g) > 2'000'000.0L) throw Error("search space too large for this field and r");
        std::vector<elem_t> c(g);
        for (std::size_t i = 0; i < g; ++i) c[i] = static_cast<elem_t>(i);
        while (true) {
            combos.push_back(c);
            std::size_t i = g;
            while (i > 0 && c[i - 1] == q - g + (i - 1)) --i;
            if (i == 0) break;
            ++c[i - 1];
            for (std::size_t j = i; j < g; ++j) c[j] = c[j - 1] + 1;
        }
    }

    auto assemble = [&](const std::vector<std::size_t>& idx) {
        AlphaAssignment a{field, l, r, {}};
        for (auto i : idx) a.grid.insert(a.grid.end(), combos[i].begin(), combos[i].end());
        return a;
    };

    std::vector<std::size_t> idx(l, 0);
    for (std::uint64_t step = 0; step < opt.max_sequential; ++step) {
        AlphaAssignment a = assemble(idx);
        ++res.candidates_examined;
        if (detail::cheap_screen(a, extra_rows, target_d) && detail::meets_target(a, extra_rows, target_d)) {
            res.alphas = std::move(a);
            res.phase = "sequential";
            return res;
        }
        // next non-decreasing index tuple
        std::size_t pos = l;
        while (pos > 0 && idx[pos - 1] == combos.size() - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < l; ++j) idx[j] = idx[pos - 1];
    }

    std::mt19937_64 rng(opt.seed);
    std::vector<elem_t> pool(q);
    for (std::uint64_t step = 0; step < opt.max_random; ++step) {
        AlphaAssignment a{field, l, r, {}};
        for (std::size_t i = 0; i < l; ++i) {
            for (std::size_t v = 0; v < q; ++v) pool[v] = static_cast<elem_t>(v);
            for (std::size_t j = 0; j < g; ++j) std::swap(pool[j], pool[j + rng() % (q - j)]);
            std::vector<elem_t> grp(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(g));
            std::sort(grp.begin(), grp.end());
            a.grid.insert(a.grid.end(), grp.begin(), grp.end());
        }
        ++res.candidates_examined;
        if (detail::cheap_screen(a, extra_rows, target_d) && detail::meets_target(a, extra_rows, target_d)) {
            res.alphas = std::move(a);
            res.phase = "random";
            return res;
        }
    }
    res.reason = "search cap exhausted";
    return res;
}

}  // namespace lrc
