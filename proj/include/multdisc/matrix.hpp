#pragma once

// Square and rectangular matrices over an exact ring, with fraction-free
// determinants, Ryser permanents, Hadamard products and the determinant of a
// stack of polynomials (dp).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "multdisc/errors.hpp"
#include "multdisc/poly.hpp"

namespace multdisc {

template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<R> row_major)
        : rows_(rows), cols_(cols), data_(std::move(row_major)) {
        if (data_.size() != rows_ * cols_) fail(Errc::dimension_mismatch, "entry count does not match shape");
    }
    Matrix(std::initializer_list<std::initializer_list<R>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        for (const auto& r : rows) {
            if (r.size() != cols_) fail(Errc::dimension_mismatch, "ragged rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const R> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<const R> entries() const { return data_; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail(Errc::dimension_mismatch, "matrix product shape");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::size_t nonzero_count() const {
        std::size_t c = 0;
        for (const auto& e : data_)
            if (!is_zero(e)) ++c;
        return c;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> data_;
};

enum class DetMethod { automatic, bareiss, minor_expansion };

/// Fraction-free Gaussian elimination; pivots on the first nonzero entry of the column.
template <class R>
R det_bareiss(Matrix<R> m) {
    if (!m.is_square()) fail(Errc::not_square, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return R(1);
    bool negate = false;
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(m(p, k))) ++p;
            if (p == n) return R(0);
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = exact_div(t, prev);
            }
            m(i, k) = R(0);
        }
        prev = m(k, k);
    }
    R d = m(n - 1, n - 1);
    return negate ? R(-d) : d;
}

/// Laplace expansion row by row, memoized on the set of columns already used.
/// Zero entries are skipped, which makes banded matrices cheap.
template <class R>
R det_minor_expansion(const Matrix<R>& m) {
    if (!m.is_square()) fail(Errc::not_square, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n > 62) fail(Errc::dimension_too_large, "minor expansion supports at most 62 columns");
    if (n == 0) return R(1);
    std::unordered_map<std::uint64_t, R> memo;
    auto rec = [&](auto&& self, std::uint64_t used) -> R {
        const auto row = static_cast<std::size_t>(std::popcount(used));
        if (row == n) return R(1);
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        R total(0);
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint64_t bit = std::uint64_t{1} << j;
            if ((used & bit) != 0 || is_zero(m(row, j))) continue;
            R sub = self(self, used | bit);
            if (is_zero(sub)) continue;
            // Inversions added by placing this row in column j.
            const int above = std::popcount(used >> (j + 1));
            if (above % 2 == 0)
                total += m(row, j) * sub;
            else
                total -= m(row, j) * sub;
        }
        memo.emplace(used, total);
        return total;
    };
    return rec(rec, 0);
}

template <class R>
R det(const Matrix<R>& m, DetMethod method = DetMethod::automatic) {
    if (!m.is_square()) fail(Errc::not_square, "determinant of a non-square matrix");
    if (method == DetMethod::automatic) {
        // Symbolic entries: expansion avoids multivariate division and exploits sparsity.
        const std::size_t n = m.rows();
        const bool symbolic = std::is_same_v<R, SymPoly>;
        const bool sparse = 5 * m.nonzero_count() <= 3 * n * n;
        method = symbolic && n <= 24 && (sparse || n <= 8) ? DetMethod::minor_expansion : DetMethod::bareiss;
    }
    return method == DetMethod::bareiss ? det_bareiss(m) : det_minor_expansion(m);
}

inline constexpr std::size_t kDefaultPermanentCap = 14;

/// Ryser's inclusion-exclusion formula with Gray-code subset updates.
template <class R>
R permanent(const Matrix<R>& m, std::size_t cap = kDefaultPermanentCap) {
    if (!m.is_square()) fail(Errc::not_square, "permanent of a non-square matrix");
    const std::size_t n = m.rows();
    if (n > cap || n > 30)
        fail(Errc::dimension_too_large, "permanent of size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (n == 0) return R(1);
    std::vector<R> row_sums(n, R(0));
    R total(0);
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
        const auto j = static_cast<std::size_t>(std::countr_zero(k));
        const std::uint64_t bit = std::uint64_t{1} << j;
        const bool adding = (gray & bit) == 0;
        gray ^= bit;
        for (std::size_t i = 0; i < n; ++i) {
            if (adding)
                row_sums[i] += m(i, j);
            else
                row_sums[i] -= m(i, j);
        }
        R prod = row_sums[0];
        for (std::size_t i = 1; i < n && !is_zero(prod); ++i) prod = prod * row_sums[i];
        // Sign (-1)^(n - |S|).
        if ((n - static_cast<std::size_t>(std::popcount(gray))) % 2 == 0)
            total += prod;
        else
            total -= prod;
    }
    return total;
}

template <class R>
Matrix<R> hadamard(const Matrix<R>& a, const Matrix<R>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail(Errc::dimension_mismatch, "Hadamard product shape");
    Matrix<R> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * b(i, j);
    return out;
}

/// Zero-based permutation: tau[i] is the image of i.
using Permutation = std::vector<std::size_t>;

Permutation inverse(const Permutation& tau);
bool is_permutation(const Permutation& tau);

/// P_tau * B: row tau[i] of the result is row i of B.
template <class R>
Matrix<R> row_permute(const Permutation& tau, const Matrix<R>& b) {
    if (tau.size() != b.rows() || !is_permutation(tau)) fail(Errc::dimension_mismatch, "permutation does not fit the rows");
    Matrix<R> out(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(tau[i], j) = b(i, j);
    return out;
}

/// Coefficient matrix of N polynomials of degree <= N-1; column j holds x^(N-1-j).
template <class R>
Matrix<R> dp_matrix(std::span<const Poly<R>> polys) {
    const std::size_t n = polys.size();
    Matrix<R> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = polys[i];
        if (p.is_zero()) continue;
        const std::size_t d = p.degree().value();
        if (d >= n)
            fail(Errc::degree_too_high, "row " + std::to_string(i) + " has degree " + std::to_string(d) +
                                            " but dp of " + std::to_string(n) + " rows allows at most " +
                                            std::to_string(n - 1));
        const std::size_t offset = n - 1 - d;
        for (std::size_t k = 0; k <= d; ++k) m(i, offset + k) = p.coeffs()[k];
    }
    return m;
}

/// Determinant of the polynomials: det of their stacked coefficient vectors.
template <class R>
R dp(std::span<const Poly<R>> polys, DetMethod method = DetMethod::automatic) {
    return det(dp_matrix(polys), method);
}

template <class R>
R dp(const std::vector<Poly<R>>& polys, DetMethod method = DetMethod::automatic) {
    return dp(std::span<const Poly<R>>(polys), method);
}

}  // namespace multdisc
