#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/field.hpp"

namespace lrc {

/// Dense row-major matrix over one finite field.
class GfMatrix {
public:
    GfMatrix(FieldRef field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    GfMatrix(FieldRef field, std::size_t rows, std::size_t cols, std::vector<elem_t> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) throw Error("matrix entry count does not match shape");
        for (auto v : data_)
            if (!field_->contains(v)) throw Error("matrix entry " + std::to_string(v) + " out of range");
    }

    static GfMatrix identity(FieldRef field, std::size_t n) {
        GfMatrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    const FieldRef& field_ref() const { return field_; }
    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    elem_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, elem_t v) { data_[r * cols_ + c] = v; }

    std::span<const elem_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<elem_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    const std::vector<elem_t>& entries() const { return data_; }

    std::vector<elem_t> column(std::size_t c) const {
        std::vector<elem_t> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    bool operator==(const GfMatrix& o) const {
        return *field_ == *o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    GfMatrix transpose() const {
        GfMatrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
        return t;
    }

    GfMatrix operator*(const GfMatrix& o) const {
        if (cols_ != o.rows_) throw Error("matrix shape mismatch in product");
        require_same_field(o);
        const Field& f = *field_;
        GfMatrix out(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const elem_t a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    out.set(i, j, f.add(out(i, j), f.mul(a, o(k, j))));
            }
        return out;
    }

    /// M * x for a column vector x.
    std::vector<elem_t> apply(std::span<const elem_t> x) const {
        if (x.size() != cols_) throw Error("vector length does not match matrix");
        const Field& f = *field_;
        std::vector<elem_t> out(rows_, 0);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out[r] = f.add(out[r], f.mul((*this)(r, c), x[c]));
        return out;
    }

    GfMatrix select_columns(std::span<const std::size_t> cols) const {
        GfMatrix out(field_, rows_, cols.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < cols.size(); ++j) out.set(r, j, (*this)(r, cols[j]));
        return out;
    }

    GfMatrix select_rows(std::span<const std::size_t> rows) const {
        GfMatrix out(field_, rows.size(), cols_);
        for (std::size_t i = 0; i < rows.size(); ++i)
            std::copy_n(row(rows[i]).begin(), cols_, out.row(i).begin());
        return out;
    }

    /// Rows of `top` followed by rows of `bottom`.
    static GfMatrix stack(const GfMatrix& top, const GfMatrix& bottom) {
        if (top.cols_ != bottom.cols_) throw Error("column count mismatch in stack");
        top.require_same_field(bottom);
        std::vector<elem_t> data = top.data_;
        data.insert(data.end(), bottom.data_.begin(), bottom.data_.end());
        return GfMatrix(top.field_, top.rows_ + bottom.rows_, top.cols_, std::move(data));
    }

    void append_row(std::span<const elem_t> r) {
        if (r.size() != cols_) throw Error("row length mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    void require_same_field(const GfMatrix& o) const {
        if (field_ != o.field_ && !(*field_ == *o.field_)) throw Error("field mismatch");
    }

private:
    FieldRef field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<elem_t> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    GfMatrix reduced;
    std::vector<std::size_t> pivots;
};

namespace detail {

/// In-place Gauss-Jordan elimination over the first `ncols` columns.
/// Returns pivot columns; pivot entries are normalized to 1.
inline std::vector<std::size_t> gauss_jordan(GfMatrix& m, std::size_t ncols) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < ncols && prow < m.rows(); ++c) {
        std::size_t sel = prow;
        while (sel < m.rows() && m(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != prow) std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(prow).begin());
        const elem_t pinv = f.inv(m(prow, c));
        for (auto& v : m.row(prow)) v = f.mul(v, pinv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == prow) continue;
            const elem_t factor = m(r, c);
            if (factor == 0) continue;
            auto dst = m.row(r);
            auto src = m.row(prow);
            for (std::size_t j = c; j < m.cols(); ++j) dst[j] = f.sub(dst[j], f.mul(factor, src[j]));
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

}  // namespace detail

inline Echelon rref(const GfMatrix& m) {
    GfMatrix work = m;
    auto pivots = detail::gauss_jordan(work, work.cols());
    return {std::move(work), std::move(pivots)};
}

inline std::size_t rank(const GfMatrix& m) { return rref(m).pivots.size(); }

inline elem_t determinant(const GfMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant requires a square matrix");
    const Field& f = m.field();
    GfMatrix work = m;
    const std::size_t n = m.rows();
    elem_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && work(sel, c) == 0) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            std::swap_ranges(work.row(sel).begin(), work.row(sel).end(), work.row(c).begin());
            det = f.neg(det);
        }
        const elem_t pivot = work(c, c);
        det = f.mul(det, pivot);
        const elem_t pinv = f.inv(pivot);
        for (std::size_t r = c + 1; r < n; ++r) {
            const elem_t factor = f.mul(work(r, c), pinv);
            if (factor == 0) continue;
            for (std::size_t j = c; j < n; ++j) work.set(r, j, f.sub(work(r, j), f.mul(factor, work(c, j))));
        }
    }
    return det;
}

/// One solution x of M x = rhs (free variables set to zero).
inline std::vector<elem_t> solve(const GfMatrix& m, std::span<const elem_t> rhs) {
    if (rhs.size() != m.rows()) throw Error("right-hand side length does not match matrix");
    GfMatrix aug(m.field_ref(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m(r, c));
        aug.set(r, m.cols(), rhs[r]);
    }
    const auto pivots = detail::gauss_jordan(aug, m.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
        if (aug(r, m.cols()) != 0) throw Error("inconsistent system");
    std::vector<elem_t> x(m.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    return x;
}

/// Basis (as rows) of the right kernel { x : M x = 0 }.
inline GfMatrix null_space(const GfMatrix& m) {
    const Field& f = m.field();
    const auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    GfMatrix basis(m.field_ref(), 0, m.cols());
    std::vector<elem_t> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(red(i, free));
        basis.append_row(v);
    }
    return basis;
}

/// A set of linearly dependent columns and the nonzero combination that vanishes.
struct DependenceWitness {
    std::vector<std::size_t> columns;
    std::vector<elem_t> combination;
};

namespace detail {

// Incremental echelon basis used by the column-subset search. Each stored
// vector has a leading entry 1 at `lead`, and is reduced against earlier ones.
class IncrementalBasis {
public:
    IncrementalBasis(const Field& f, std::size_t dim) : f_(f), dim_(dim) {}

    /// Reduces v against the basis; returns true when v became zero.
    bool reduces_to_zero(std::vector<elem_t>& v) const {
        for (std::size_t b = 0; b < vecs_.size(); ++b) {
            const elem_t c = v[leads_[b]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) v[j] = f_.sub(v[j], f_.mul(c, vecs_[b][j]));
        }
        return std::all_of(v.begin(), v.end(), [](elem_t x) { return x == 0; });
    }

    void push_reduced(std::vector<elem_t> v) {
        std::size_t lead = 0;
        while (v[lead] == 0) ++lead;
        const elem_t inv = f_.inv(v[lead]);
        for (auto& x : v) x = f_.mul(x, inv);
        vecs_.push_back(std::move(v));
        leads_.push_back(lead);
    }

    void pop() {
        vecs_.pop_back();
        leads_.pop_back();
    }

private:
    const Field& f_;
    std::size_t dim_;
    std::vector<std::vector<elem_t>> vecs_;
    std::vector<std::size_t> leads_;
};

}  // namespace detail

/// Smallest number of linearly dependent columns of M, searched by subset
/// size ascending and lexicographic order within a size, up to `limit`.
/// Returns nullopt when every subset of at most `limit` columns is independent.
/// The witness is the lexicographically first dependent set of minimum size.
/// `max_nodes` bounds the number of search nodes (CapExceeded beyond it).
inline std::optional<DependenceWitness> min_dependent_columns(const GfMatrix& m, std::size_t limit,
                                                              std::uint64_t max_nodes = std::uint64_t{1} << 32) {
    if (limit > m.cols()) throw Error("limit exceeds column count");
    const Field& f = m.field();
    std::vector<std::vector<elem_t>> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));

    std::uint64_t nodes = 0;
    std::vector<std::size_t> chosen;
    detail::IncrementalBasis basis(f, m.rows());

    // Every proper prefix is independent: a smaller dependent set would have
    // been found by an earlier pass.
    auto search = [&](auto&& self, std::size_t size, std::size_t start) -> bool {
        for (std::size_t c = start; c + (size - chosen.size()) <= m.cols(); ++c) {
            if (++nodes > max_nodes) throw CapExceeded("column-subset search exceeded its node cap");
            std::vector<elem_t> v = cols[c];
            const bool zero = basis.reduces_to_zero(v);
            chosen.push_back(c);
            if (chosen.size() == size) {
                if (zero) return true;
            } else if (!zero) {
                basis.push_reduced(std::move(v));
                if (self(self, size, c + 1)) return true;
                basis.pop();
            }
            chosen.pop_back();
        }
        return false;
    };

    for (std::size_t size = 1; size <= limit; ++size) {
        chosen.clear();
        if (search(search, size, 0)) {
            const GfMatrix sub = m.select_columns(chosen);
            const GfMatrix kernel = null_space(sub);
            std::vector<elem_t> comb(kernel.row(0).begin(), kernel.row(0).end());
            return DependenceWitness{chosen, std::move(comb)};
        }
    }
    return std::nullopt;
}

}  // namespace lrc
