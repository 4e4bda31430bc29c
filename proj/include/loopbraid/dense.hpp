/**
 * @file
 * @brief Explicit exact matrices and the Kronecker calculus in the Ab convention.
 *
 * A basis word |i1 i2 ... iw> over 1..N has flat index sum_k (i_k - 1) N^(k-1), so earlier
 * letters vary fastest.
 */

#pragma once

#include "loopbraid/error.hpp"
#include "loopbraid/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace loopbraid {

/// Row-major exact matrix; rectangular shapes are allowed for Kronecker products of kets.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_{ rows }, cols_{ cols }, data_(rows * cols) {}
    explicit DenseMatrix(std::size_t side) : DenseMatrix(side, side) {}

    /// Builds from nested rows; all rows must have equal length.
    static DenseMatrix from_rows(const std::vector<std::vector<ExactComplex>> &rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        DenseMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) {
                throw Error(ErrorKind::SizeMismatch, "ragged rows");
            }
            for (std::size_t j = 0; j < c; ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t side() const noexcept { return rows_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    ExactComplex &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const ExactComplex &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const ExactComplex &x) { return x.is_zero(); });
    }

    friend bool operator==(const DenseMatrix &, const DenseMatrix &) = default;

  private:
    std::size_t rows_{ 0 };
    std::size_t cols_{ 0 };
    std::vector<ExactComplex> data_;
};

inline DenseMatrix identity(std::size_t side) {
    DenseMatrix m(side);
    for (std::size_t i = 0; i < side; ++i) {
        m(i, i) = 1;
    }
    return m;
}

inline std::size_t int_pow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t k = 0; k < exp; ++k) {
        r *= base;
    }
    return r;
}

/// Flat 0-based index of a word with 1-based letters.
inline std::size_t flat_index(const std::vector<int> &letters, int N) {
    std::size_t idx = 0;
    std::size_t stride = 1;
    for (const int l : letters) {
        if (l < 1 || l > N) {
            throw Error(ErrorKind::IndexOutOfRange, "letter " + std::to_string(l) + " outside 1.." + std::to_string(N));
        }
        idx += static_cast<std::size_t>(l - 1) * stride;
        stride *= static_cast<std::size_t>(N);
    }
    return idx;
}

/// Inverse of flat_index for words of the given width.
inline std::vector<int> word_of(std::size_t idx, int N, std::size_t width) {
    std::vector<int> w(width);
    for (std::size_t k = 0; k < width; ++k) {
        w[k] = static_cast<int>(idx % static_cast<std::size_t>(N)) + 1;
        idx /= static_cast<std::size_t>(N);
    }
    return w;
}

/// Column vector |i> of length N.
inline DenseMatrix ket(int i, int N) {
    DenseMatrix m(static_cast<std::size_t>(N), 1);
    m(flat_index({ i }, N), 0) = 1;
    return m;
}

/// Exact product; zero entries of the left factor are skipped.
inline DenseMatrix compose(const DenseMatrix &A, const DenseMatrix &B) {
    if (A.cols() != B.rows()) {
        throw Error(ErrorKind::SizeMismatch, "compose: " + std::to_string(A.cols()) + " vs " + std::to_string(B.rows()));
    }
    DenseMatrix out(A.rows(), B.cols());
    std::vector<std::vector<std::size_t>> nz_rows(B.rows());
    for (std::size_t k = 0; k < B.rows(); ++k) {
        for (std::size_t j = 0; j < B.cols(); ++j) {
            if (!B(k, j).is_zero()) {
                nz_rows[k].push_back(j);
            }
        }
    }
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const ExactComplex &a = A(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (const std::size_t j : nz_rows[k]) {
                out(i, j) += a * B(k, j);
            }
        }
    }
    return out;
}

inline DenseMatrix operator*(const DenseMatrix &A, const DenseMatrix &B) { return compose(A, B); }

inline DenseMatrix operator+(const DenseMatrix &A, const DenseMatrix &B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) {
        throw Error(ErrorKind::SizeMismatch, "matrix sum of different shapes");
    }
    DenseMatrix out = A;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            out(i, j) += B(i, j);
        }
    }
    return out;
}

inline DenseMatrix operator-(const DenseMatrix &A, const DenseMatrix &B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) {
        throw Error(ErrorKind::SizeMismatch, "matrix difference of different shapes");
    }
    DenseMatrix out = A;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            out(i, j) -= B(i, j);
        }
    }
    return out;
}

/**
 * @brief Kronecker product in the Ab convention.
 *
 * (A (x) B)[i + rA*k, j + cA*l] = A[i,j] * B[k,l], so that (A (x) B)|ij> = A|i> (x) B|j> under
 * the flat word ordering.
 */
inline DenseMatrix kron(const DenseMatrix &A, const DenseMatrix &B) {
    const std::size_t rA = A.rows();
    const std::size_t cA = A.cols();
    DenseMatrix out(rA * B.rows(), cA * B.cols());
    for (std::size_t k = 0; k < B.rows(); ++k) {
        for (std::size_t l = 0; l < B.cols(); ++l) {
            const ExactComplex &b = B(k, l);
            if (b.is_zero()) {
                continue;
            }
            for (std::size_t i = 0; i < rA; ++i) {
                for (std::size_t j = 0; j < cA; ++j) {
                    if (!A(i, j).is_zero()) {
                        out(i + rA * k, j + cA * l) = A(i, j) * b;
                    }
                }
            }
        }
    }
    return out;
}

/// The flip P|ij> = |ji> on N^2.
inline DenseMatrix perm_P(int N) {
    const auto n = static_cast<std::size_t>(N);
    DenseMatrix m(n * n);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            m(flat_index({ j, i }, N), flat_index({ i, j }, N)) = 1;
        }
    }
    return m;
}

/// Position 1 gives M (x) 1_N, position 2 gives 1_N (x) M.
inline DenseMatrix shift_embed(const DenseMatrix &M, int position, int N) {
    const auto n = static_cast<std::size_t>(N);
    if (!M.is_square() || M.rows() != n * n) {
        throw Error(ErrorKind::SizeMismatch, "shift_embed expects an N^2 x N^2 matrix");
    }
    if (position == 1) {
        return kron(M, identity(n));
    }
    if (position == 2) {
        return kron(identity(n), M);
    }
    throw Error(ErrorKind::IndexOutOfRange, "shift position must be 1 or 2");
}

/// True iff every nonzero entry <u|M|v> joins words u, v that are rearrangements of each other.
inline bool is_charge_conserving(const DenseMatrix &M, int N, std::size_t width) {
    const std::size_t side = int_pow(static_cast<std::size_t>(N), width);
    if (M.rows() != side || M.cols() != side) {
        throw Error(ErrorKind::SizeMismatch, "side is not N^w");
    }
    std::vector<std::vector<int>> sorted_words(side);
    for (std::size_t idx = 0; idx < side; ++idx) {
        sorted_words[idx] = word_of(idx, N, width);
        std::sort(sorted_words[idx].begin(), sorted_words[idx].end());
    }
    for (std::size_t u = 0; u < side; ++u) {
        for (std::size_t v = 0; v < side; ++v) {
            if (!M(u, v).is_zero() && sorted_words[u] != sorted_words[v]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace loopbraid
