#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scop/field.hpp"

namespace scop {

/// Sparse matrix over an exact scalar, row-major storage.
/// Rows are kept sorted by column index with no explicit zeros.
template <class F>
class SparseMatrix {
  public:
    using Entry = std::pair<int, F>;  // (column, value)

    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, const F& v) {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("SparseMatrix::add: index out of range");
        if (field_traits<F>::is_zero(v)) return;
        auto& row = data_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, int col) { return e.first < col; });
        if (it != row.end() && it->first == c) {
            it->second += v;
            if (field_traits<F>::is_zero(it->second)) row.erase(it);
        } else {
            row.insert(it, Entry{c, v});
        }
    }

    const std::vector<Entry>& row(int r) const { return data_[r]; }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }

    std::vector<F> apply(const std::vector<F>& x) const {
        if (static_cast<int>(x.size()) != cols_)
            throw std::invalid_argument("SparseMatrix::apply: size mismatch");
        std::vector<F> y(rows_, field_traits<F>::zero());
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
        return y;
    }

    bool is_zero() const {
        for (const auto& r : data_)
            if (!r.empty()) return false;
        return true;
    }

    /// Exact rank by fraction-full Gaussian elimination with Markowitz
    /// pivoting (minimize fill-in estimate (nnz_row-1)*(nnz_col-1),
    /// preferring +-1 pivots to keep rational entries small).
    int rank() const { return SparseMatrix(*this).eliminate(); }

    /// Basis of the right null space {x : Ax = 0}, as dense columns.
    std::vector<std::vector<F>> kernel_basis() const {
        // dense Gauss-Jordan on a copy; fine at the sizes kernel extraction
        // is used for (filtration slices, unit checks)
        std::vector<std::vector<F>> m(rows_, std::vector<F>(cols_, field_traits<F>::zero()));
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r]) m[r][c] = v;

        std::vector<int> pivot_of_col(cols_, -1);
        int prow = 0;
        for (int c = 0; c < cols_ && prow < rows_; ++c) {
            int sel = -1;
            for (int r = prow; r < rows_; ++r)
                if (!field_traits<F>::is_zero(m[r][c])) { sel = r; break; }
            if (sel < 0) continue;
            std::swap(m[sel], m[prow]);
            F inv = field_traits<F>::one() / m[prow][c];
            for (int j = c; j < cols_; ++j) m[prow][j] = m[prow][j] * inv;
            for (int r = 0; r < rows_; ++r) {
                if (r == prow || field_traits<F>::is_zero(m[r][c])) continue;
                F f = m[r][c];
                for (int j = c; j < cols_; ++j) m[r][j] -= f * m[prow][j];
            }
            pivot_of_col[c] = prow++;
        }
        std::vector<std::vector<F>> basis;
        for (int c = 0; c < cols_; ++c) {
            if (pivot_of_col[c] >= 0) continue;
            std::vector<F> v(cols_, field_traits<F>::zero());
            v[c] = field_traits<F>::one();
            for (int j = 0; j < cols_; ++j)
                if (pivot_of_col[j] >= 0) v[j] = -m[pivot_of_col[j]][c];
            basis.push_back(std::move(v));
        }
        return basis;
    }

    int nullity() const { return cols_ - rank(); }

    /// One solution of Ax = b, if any.
    std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
        if (static_cast<int>(b.size()) != rows_)
            throw std::invalid_argument("SparseMatrix::solve: size mismatch");
        std::vector<std::vector<F>> m(rows_, std::vector<F>(cols_ + 1, field_traits<F>::zero()));
        for (int r = 0; r < rows_; ++r) {
            for (const auto& [c, v] : data_[r]) m[r][c] = v;
            m[r][cols_] = b[r];
        }
        std::vector<int> pivot_of_row(rows_, -1);
        int prow = 0;
        for (int c = 0; c < cols_ && prow < rows_; ++c) {
            int sel = -1;
            for (int r = prow; r < rows_; ++r)
                if (!field_traits<F>::is_zero(m[r][c])) { sel = r; break; }
            if (sel < 0) continue;
            std::swap(m[sel], m[prow]);
            F inv = field_traits<F>::one() / m[prow][c];
            for (int j = c; j <= cols_; ++j) m[prow][j] = m[prow][j] * inv;
            for (int r = 0; r < rows_; ++r) {
                if (r == prow || field_traits<F>::is_zero(m[r][c])) continue;
                F f = m[r][c];
                for (int j = c; j <= cols_; ++j) m[r][j] -= f * m[prow][j];
            }
            pivot_of_row[prow++] = c;
        }
        for (int r = prow; r < rows_; ++r)
            if (!field_traits<F>::is_zero(m[r][cols_])) return std::nullopt;
        std::vector<F> x(cols_, field_traits<F>::zero());
        for (int r = 0; r < prow; ++r) x[pivot_of_row[r]] = m[r][cols_];
        return x;
    }

  private:
    // destructive in-place elimination; returns the rank
    int eliminate() {
        std::vector<int> col_count(cols_, 0);
        std::vector<bool> row_done(rows_, false);
        for (const auto& r : data_)
            for (const auto& [c, v] : r) ++col_count[c];

        int rank = 0;
        for (;;) {
            // Markowitz pivot search
            long best = std::numeric_limits<long>::max();
            int pr = -1, pc = -1;
            bool best_unit = false;
            for (int r = 0; r < rows_; ++r) {
                if (row_done[r] || data_[r].empty()) continue;
                long rw = static_cast<long>(data_[r].size()) - 1;
                for (const auto& [c, v] : data_[r]) {
                    long cost = rw * (col_count[c] - 1);
                    bool unit = is_unit_entry(v);
                    if (cost < best || (cost == best && unit && !best_unit)) {
                        best = cost; pr = r; pc = c; best_unit = unit;
                        if (best == 0 && best_unit) goto found;
                    }
                }
            }
            if (pr < 0) break;
        found:
            ++rank;
            row_done[pr] = true;
            const F pv = get(pr, pc);
            std::vector<Entry> prow = data_[pr];
            for (const auto& [c, v] : prow) --col_count[c];
            for (int r = 0; r < rows_; ++r) {
                if (row_done[r]) continue;
                const F x = get(r, pc);
                if (field_traits<F>::is_zero(x)) continue;
                const F f = x / pv;
                axpy_row(r, prow, f, col_count);
            }
            data_[pr].clear();
        }
        return rank;
    }

    static bool is_unit_entry(const F& v) {
        if constexpr (std::is_same_v<F, Rational>) {
            return v == 1 || v == -1;
        } else {
            return true;
        }
    }

    F get(int r, int c) const {
        const auto& row = data_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, int col) { return e.first < col; });
        if (it != row.end() && it->first == c) return it->second;
        return field_traits<F>::zero();
    }

    // row r -= f * pivot_row, maintaining column counts
    void axpy_row(int r, const std::vector<Entry>& prow, const F& f, std::vector<int>& col_count) {
        std::vector<Entry> out;
        out.reserve(data_[r].size() + prow.size());
        auto a = data_[r].begin(), ae = data_[r].end();
        auto b = prow.begin(), be = prow.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                out.push_back(*a++);
            } else if (a == ae || b->first < a->first) {
                F v = -f * b->second;
                if (!field_traits<F>::is_zero(v)) {
                    out.push_back({b->first, std::move(v)});
                    ++col_count[b->first];
                }
                ++b;
            } else {
                F v = a->second - f * b->second;
                if (field_traits<F>::is_zero(v)) {
                    --col_count[a->first];
                } else {
                    out.push_back({a->first, std::move(v)});
                }
                ++a; ++b;
            }
        }
        data_[r] = std::move(out);
    }

    int rows_, cols_;
    std::vector<std::vector<Entry>> data_;
};

}  // namespace scop
