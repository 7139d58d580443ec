#pragma once

#include "effhom/coefficient.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace effhom {

/// Dense row-major matrix of exact integers.
class IntMatrix {
  public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
        : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("ragged matrix literal");
            for (long long v : r)
                entries_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k)
            m(k, k) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Coefficient& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Coefficient& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    bool isZero() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const Coefficient& x) { return x == 0; });
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product dimension mismatch");
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string toString() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ", [" : "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j)
                    s += ", ";
                s += (*this)(i, j).str();
            }
            s += "]";
        }
        return s + "]";
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Coefficient> entries_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SNFResult {
    IntMatrix U;
    IntMatrix V;
    IntMatrix D;
    std::vector<Coefficient> invariantFactors;

    std::size_t rank() const noexcept { return invariantFactors.size(); }
};

namespace snf_detail {

// Row and column operations applied to D and mirrored into U (rows) or V
// (columns), so U * A * V = D holds after every step.
struct Work {
    IntMatrix D, U, V;

    void swapRows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t j = 0; j < D.cols(); ++j)
            std::swap(D(a, j), D(b, j));
        for (std::size_t j = 0; j < U.cols(); ++j)
            std::swap(U(a, j), U(b, j));
    }
    void swapCols(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t i = 0; i < D.rows(); ++i)
            std::swap(D(i, a), D(i, b));
        for (std::size_t i = 0; i < V.rows(); ++i)
            std::swap(V(i, a), V(i, b));
    }
    // row[dst] += q * row[src]
    void addRow(std::size_t dst, std::size_t src, const Coefficient& q) {
        for (std::size_t j = 0; j < D.cols(); ++j)
            D(dst, j) += q * D(src, j);
        for (std::size_t j = 0; j < U.cols(); ++j)
            U(dst, j) += q * U(src, j);
    }
    // col[dst] += q * col[src]
    void addCol(std::size_t dst, std::size_t src, const Coefficient& q) {
        for (std::size_t i = 0; i < D.rows(); ++i)
            D(i, dst) += q * D(i, src);
        for (std::size_t i = 0; i < V.rows(); ++i)
            V(i, dst) += q * V(i, src);
    }
    void negateRow(std::size_t r) {
        for (std::size_t j = 0; j < D.cols(); ++j)
            D(r, j) = -D(r, j);
        for (std::size_t j = 0; j < U.cols(); ++j)
            U(r, j) = -U(r, j);
    }
};

// Truncating; the remainder is smaller than the pivot in magnitude.
inline Coefficient quotient(const Coefficient& a, const Coefficient& b) { return a / b; }

} // namespace snf_detail

/// Smith normal form by smallest-magnitude pivoting.
///
/// At step t the smallest nonzero entry of the trailing block becomes the
/// pivot; its row and column are cleared by division, restarting whenever a
/// smaller remainder appears. Once cleared, a pivot that fails to divide some
/// entry of the remaining block absorbs that entry's row and the step repeats,
/// which yields the divisibility chain directly.
inline SNFResult smithNormalForm(const IntMatrix& A) {
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    snf_detail::Work w{A, IntMatrix::identity(m), IntMatrix::identity(n)};
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        while (true) {
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (w.D(i, j) != 0 &&
                        (!best || abs(w.D(i, j)) < abs(w.D(best->first, best->second))))
                        best = {i, j};
            if (!best)
                break;
            w.swapRows(t, best->first);
            w.swapCols(t, best->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.D(i, t) == 0)
                    continue;
                w.addRow(i, t, -snf_detail::quotient(w.D(i, t), w.D(t, t)));
                if (w.D(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.D(t, j) == 0)
                    continue;
                w.addCol(j, t, -snf_detail::quotient(w.D(t, j), w.D(t, t)));
                if (w.D(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            std::optional<std::size_t> offender;
            for (std::size_t i = t + 1; i < m && !offender; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (w.D(i, j) % w.D(t, t) != 0) {
                        offender = i;
                        break;
                    }
            if (!offender)
                break;
            w.addRow(t, *offender, 1);
        }
        if (w.D(t, t) == 0)
            break;
        if (w.D(t, t) < 0)
            w.negateRow(t);
    }

    SNFResult out{std::move(w.U), std::move(w.V), std::move(w.D), {}};
    for (std::size_t k = 0; k < std::min(m, n); ++k) {
        if (out.D(k, k) == 0)
            break;
        out.invariantFactors.push_back(out.D(k, k));
    }
    return out;
}

} // namespace effhom
