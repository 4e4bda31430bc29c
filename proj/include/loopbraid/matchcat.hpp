/**
 * @file
 * @brief The alpha-form encoding of degree-2 charge-conserving matrices and the operations on it:
 *        dense expansion, restriction along injective maps, diagonal gauge transforms, and the
 *        monomial decomposition.
 *
 * Block basis convention: for an edge i < j the 2x2 block [[a, b], [c, d]] acts on the ordered
 * basis (|ji>, |ij>), that is
 *   a = <ji|M|ji>,  b = <ji|M|ij>,  c = <ij|M|ji>,  d = <ij|M|ij>.
 * Under the flat word ordering |ji> precedes |ij> whenever i < j. Reading an edge in reversed
 * order (x > y) returns the anti-diagonal transpose [[d, c], [b, a]] of the stored block.
 */

#pragma once

#include "loopbraid/dense.hpp"
#include "loopbraid/error.hpp"
#include "loopbraid/scalar.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace loopbraid {

struct Block2 {
    ExactComplex a, b, c, d;

    /// The block as read on the reversed edge.
    [[nodiscard]] Block2 reversed() const { return { d, c, b, a }; }
    [[nodiscard]] bool is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }
    [[nodiscard]] bool is_antidiagonal() const { return a.is_zero() && d.is_zero(); }
    [[nodiscard]] ExactComplex det() const { return a * d - b * c; }

    static Block2 scalar(const ExactComplex &x) { return { x, 0, 0, x }; }
    static Block2 swap() { return { 0, 1, 1, 0 }; }

    friend Block2 operator*(const Block2 &x, const Block2 &y) {
        return { x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d };
    }
    friend bool operator==(const Block2 &, const Block2 &) = default;
};

/// Edge index of (i, j), 1 <= i < j <= N, in the order (1,2), (1,3), ..., (1,N), (2,3), ...
inline std::size_t edge_index(int i, int j, int N) {
    const auto ii = static_cast<std::size_t>(i - 1);
    const auto jj = static_cast<std::size_t>(j - 1);
    const auto n = static_cast<std::size_t>(N);
    return ii * n - ii * (ii + 1) / 2 + (jj - ii - 1);
}

/// Rank-N degree-2 charge-conserving matrix in alpha-form.
class AlphaForm {
  public:
    AlphaForm() = default;

    /// Identity-valued form: vertices 1, blocks I.
    explicit AlphaForm(int N) : N_{ N } {
        if (N < 1) {
            throw Error(ErrorKind::InvalidRank, "rank must be >= 1");
        }
        vertex_.assign(static_cast<std::size_t>(N), ExactComplex{ 1 });
        blocks_.assign(static_cast<std::size_t>(N * (N - 1) / 2), Block2::scalar(1));
    }

    [[nodiscard]] int rank() const noexcept { return N_; }

    [[nodiscard]] const ExactComplex &vertex(int i) const { return vertex_.at(check(i)); }
    void set_vertex(int i, ExactComplex v) { vertex_.at(check(i)) = std::move(v); }

    /// Block on edge (x, y) for any x != y, reversed when x > y.
    [[nodiscard]] Block2 block(int x, int y) const {
        check(x);
        check(y);
        if (x == y) {
            throw Error(ErrorKind::IndexOutOfRange, "block on a loop (" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
        return x < y ? blocks_[edge_index(x, y, N_)] : blocks_[edge_index(y, x, N_)].reversed();
    }

    /// Sets the block read on (x, y); stored reversed when x > y.
    void set_block(int x, int y, const Block2 &blk) {
        check(x);
        check(y);
        if (x == y) {
            throw Error(ErrorKind::IndexOutOfRange, "block on a loop");
        }
        if (x < y) {
            blocks_[edge_index(x, y, N_)] = blk;
        } else {
            blocks_[edge_index(y, x, N_)] = blk.reversed();
        }
    }

    friend bool operator==(const AlphaForm &, const AlphaForm &) = default;

  private:
    std::size_t check(int i) const {
        if (i < 1 || i > N_) {
            throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(N_));
        }
        return static_cast<std::size_t>(i - 1);
    }

    int N_{ 0 };
    std::vector<ExactComplex> vertex_;
    std::vector<Block2> blocks_;
};

/// A candidate pair (S, R): S the image of the symmetric exchange, R of the braiding.
struct Pair {
    AlphaForm S;
    AlphaForm R;

    friend bool operator==(const Pair &, const Pair &) = default;
};

inline DenseMatrix alpha_to_dense(const AlphaForm &F) {
    const int N = F.rank();
    const auto n = static_cast<std::size_t>(N);
    DenseMatrix M(n * n);
    for (int i = 1; i <= N; ++i) {
        M(flat_index({ i, i }, N), flat_index({ i, i }, N)) = F.vertex(i);
        for (int j = i + 1; j <= N; ++j) {
            const std::size_t ji = flat_index({ j, i }, N);
            const std::size_t ij = flat_index({ i, j }, N);
            const Block2 blk = F.block(i, j);
            M(ji, ji) = blk.a;
            M(ji, ij) = blk.b;
            M(ij, ji) = blk.c;
            M(ij, ij) = blk.d;
        }
    }
    return M;
}

inline AlphaForm dense_to_alpha(const DenseMatrix &M, int N) {
    const auto n = static_cast<std::size_t>(N);
    if (!M.is_square() || M.rows() != n * n) {
        throw Error(ErrorKind::SizeMismatch, "dense_to_alpha expects an N^2 x N^2 matrix");
    }
    if (!is_charge_conserving(M, N, 2)) {
        throw Error(ErrorKind::NotChargeConserving, "matrix has entries joining non-rearranged words");
    }
    AlphaForm F(N);
    for (int i = 1; i <= N; ++i) {
        F.set_vertex(i, M(flat_index({ i, i }, N), flat_index({ i, i }, N)));
        for (int j = i + 1; j <= N; ++j) {
            const std::size_t ji = flat_index({ j, i }, N);
            const std::size_t ij = flat_index({ i, j }, N);
            F.set_block(i, j, { M(ji, ji), M(ji, ij), M(ij, ji), M(ij, ij) });
        }
    }
    return F;
}

/**
 * @brief Pulls a rank-N form back along an injective map psi: 1..M -> 1..N.
 *
 * Vertex v becomes a_{psi(v)}; the block on (v, w) is read on (psi(v), psi(w)), which is the
 * anti-diagonal transpose whenever psi reverses the pair.
 */
inline AlphaForm restrict(const AlphaForm &F, const std::vector<int> &psi) {
    const int M = static_cast<int>(psi.size());
    if (M < 1) {
        throw Error(ErrorKind::InvalidRank, "restriction to rank 0");
    }
    std::vector<char> hit(static_cast<std::size_t>(F.rank()) + 1, 0);
    for (const int x : psi) {
        if (x < 1 || x > F.rank()) {
            throw Error(ErrorKind::IndexOutOfRange, "map value " + std::to_string(x) + " outside 1.." + std::to_string(F.rank()));
        }
        if (hit[static_cast<std::size_t>(x)]++ != 0) {
            throw Error(ErrorKind::NotInjective, "map repeats value " + std::to_string(x));
        }
    }
    AlphaForm out(M);
    for (int v = 1; v <= M; ++v) {
        const int pv = psi[static_cast<std::size_t>(v - 1)];
        out.set_vertex(v, F.vertex(pv));
        for (int w = v + 1; w <= M; ++w) {
            out.set_block(v, w, F.block(pv, psi[static_cast<std::size_t>(w - 1)]));
        }
    }
    return out;
}

inline Pair restrict(const Pair &p, const std::vector<int> &psi) { return { restrict(p.S, psi), restrict(p.R, psi) }; }

/// Per-edge gauge factors keyed by (i, j) with i < j; absent edges carry factor 1.
using GaugeMap = std::map<std::pair<int, int>, ExactComplex>;

inline ExactComplex gauge_factor(const GaugeMap &m, int i, int j) {
    const auto it = m.find({ i, j });
    return it == m.end() ? ExactComplex{ 1 } : it->second;
}

/// b_ij -> m_ij b_ij and c_ij -> c_ij / m_ij on every edge; everything else unchanged.
inline AlphaForm gauge_transform(const AlphaForm &F, const GaugeMap &m) {
    const int N = F.rank();
    for (const auto &[edge, factor] : m) {
        if (edge.first < 1 || edge.second > N || edge.first >= edge.second) {
            throw Error(ErrorKind::IndexOutOfRange, "gauge edge (" + std::to_string(edge.first) + "," + std::to_string(edge.second) + ") is not i<j within 1.." + std::to_string(N));
        }
        if (factor.is_zero()) {
            throw Error(ErrorKind::ZeroGaugeFactor, "gauge factor on edge (" + std::to_string(edge.first) + "," + std::to_string(edge.second) + ") is zero");
        }
    }
    AlphaForm out = F;
    for (const auto &[edge, factor] : m) {
        Block2 blk = F.block(edge.first, edge.second);
        blk.b *= factor;
        blk.c /= factor;
        out.set_block(edge.first, edge.second, blk);
    }
    return out;
}

inline Pair gauge_transform(const Pair &p, const GaugeMap &m) { return { gauge_transform(p.S, m), gauge_transform(p.R, m) }; }

/// Diagonal X with X_|ij> = m_ij for i < j and 1 elsewhere; X^-1 M X realizes gauge_transform.
inline DenseMatrix gauge_diagonal(const GaugeMap &m, int N) {
    const auto n = static_cast<std::size_t>(N);
    DenseMatrix X = identity(n * n);
    for (const auto &[edge, factor] : m) {
        X(flat_index({ edge.first, edge.second }, N), flat_index({ edge.first, edge.second }, N)) = factor;
    }
    return X;
}

struct MonomialDecomposition {
    DenseMatrix delta;
    DenseMatrix D;
};

/// M = Delta + D P with both factors diagonal and Delta vanishing on the |ii> positions.
inline MonomialDecomposition monomial_decompose(const AlphaForm &F) {
    const int N = F.rank();
    const auto n = static_cast<std::size_t>(N);
    MonomialDecomposition out{ DenseMatrix(n * n), DenseMatrix(n * n) };
    for (int i = 1; i <= N; ++i) {
        const std::size_t ii = flat_index({ i, i }, N);
        out.D(ii, ii) = F.vertex(i);
        for (int j = i + 1; j <= N; ++j) {
            const std::size_t ji = flat_index({ j, i }, N);
            const std::size_t ij = flat_index({ i, j }, N);
            const Block2 blk = F.block(i, j);
            out.delta(ji, ji) = blk.a;
            out.delta(ij, ij) = blk.d;
            out.D(ji, ji) = blk.b;
            out.D(ij, ij) = blk.c;
        }
    }
    return out;
}

}  // namespace loopbraid
