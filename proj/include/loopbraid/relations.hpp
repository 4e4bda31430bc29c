/**
 * @file
 * @brief Verification of the loop-braid relations on a candidate pair (S, R).
 *
 * Every relation is an instance of the width-3 anomaly z1 Z2 zeta1 - zeta2 Z1 z2 with
 * z1 = z (x) 1 and z2 = 1 (x) z:
 *   RRR = (R, R, R), SSS = (S, S, S), RRS = (R, R, S), RSS = (R, S, S),
 * plus the reverse mixed relation (S, R, R), which is reported but not required. The symmetric
 * generator must also square to the identity.
 */

#pragma once

#include "loopbraid/dense.hpp"
#include "loopbraid/error.hpp"
#include "loopbraid/matchcat.hpp"
#include "loopbraid/scalar.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace loopbraid {

/// z1 Z2 zeta1 - zeta2 Z1 z2 at width 3.
inline DenseMatrix anomaly(const DenseMatrix &z, const DenseMatrix &Z, const DenseMatrix &zeta, int N) {
    const DenseMatrix z1 = shift_embed(z, 1, N);
    const DenseMatrix z2 = shift_embed(z, 2, N);
    const DenseMatrix Z1 = shift_embed(Z, 1, N);
    const DenseMatrix Z2 = shift_embed(Z, 2, N);
    const DenseMatrix zeta1 = shift_embed(zeta, 1, N);
    const DenseMatrix zeta2 = shift_embed(zeta, 2, N);
    return z1 * Z2 * zeta1 - zeta2 * Z1 * z2;
}

/**
 * @brief Name of the cubic equation sitting at anomaly entry <row|A|col>.
 *
 * Three distinct letters: the column is relabelled to 123 and the row pattern selects rel1..rel6
 * (rows 123, 213, 132, 231, 312, 321). Two distinct letters p (repeated) and q: columns ppq, pqp,
 * qpp give the families w112, w121 (rows numbered 1..3) and w121 (rows numbered 4..6) when p < q,
 * and their transposes w221, w212, w212 when p > q. A single repeated letter gives w111.
 */
inline std::string equation_name(const std::array<int, 3> &row, const std::array<int, 3> &col) {
    const std::set<int> letters(col.begin(), col.end());
    if (letters.size() == 3) {
        std::array<int, 3> pat{};
        for (std::size_t k = 0; k < 3; ++k) {
            for (std::size_t m = 0; m < 3; ++m) {
                if (row[k] == col[m]) {
                    pat[k] = static_cast<int>(m) + 1;
                }
            }
        }
        const int code = pat[0] * 100 + pat[1] * 10 + pat[2];
        switch (code) {
            case 123: return "rel1";
            case 213: return "rel2";
            case 132: return "rel3";
            case 231: return "rel4";
            case 312: return "rel5";
            default: return "rel6";
        }
    }
    if (letters.size() == 1) {
        return "w111";
    }
    const int p = col[0] == col[1] || col[0] == col[2] ? col[0] : col[1];
    const int q = *letters.begin() == p ? *letters.rbegin() : *letters.begin();
    const auto code_of = [&](const std::array<int, 3> &w) { return (w[0] == p ? 100 : 200) + (w[1] == p ? 10 : 20) + (w[2] == p ? 1 : 2); };
    const int cpat = code_of(col);
    const int rpat = code_of(row);
    const bool low = p < q;
    if (cpat == 112) {
        const int n = rpat == 112 ? 1 : rpat == 121 ? 2 : 3;
        return std::string(low ? "w112_" : "w221_") + std::to_string(n);
    }
    if (cpat == 121) {
        const int n = rpat == 121 ? 1 : rpat == 112 ? 2 : 3;
        return std::string(low ? "w121_" : "w212_") + std::to_string(n);
    }
    const int n = rpat == 211 ? 4 : rpat == 121 ? 5 : 6;
    return std::string(low ? "w121_" : "w212_") + std::to_string(n);
}

struct Residual {
    std::string equation;
    std::array<int, 3> row{};
    std::array<int, 3> col{};
    ExactComplex value;
};

struct TripleResiduals {
    std::array<int, 3> triple{};
    std::vector<Residual> residuals;

    [[nodiscard]] bool all_zero() const {
        for (const auto &r : residuals) {
            if (!r.value.is_zero()) {
                return false;
            }
        }
        return true;
    }
};

namespace detail {

/// Relabelled view of three alpha-forms: letter k in 1..3 stands for index map[k-1].
struct CubicView {
    const AlphaForm &z;
    const AlphaForm &Z;
    const AlphaForm &g;
    std::array<int, 3> map;

    [[nodiscard]] int at(int k) const { return map[static_cast<std::size_t>(k - 1)]; }
    [[nodiscard]] Block2 zb(int x, int y) const { return z.block(at(x), at(y)); }
    [[nodiscard]] Block2 Zb(int x, int y) const { return Z.block(at(x), at(y)); }
    [[nodiscard]] Block2 gb(int x, int y) const { return g.block(at(x), at(y)); }
    [[nodiscard]] const ExactComplex &zv(int x) const { return z.vertex(at(x)); }
    [[nodiscard]] const ExactComplex &Zv(int x) const { return Z.vertex(at(x)); }
    [[nodiscard]] const ExactComplex &gv(int x) const { return g.vertex(at(x)); }

    [[nodiscard]] std::array<int, 3> word(int x, int y, int w) const { return { at(x), at(y), at(w) }; }
};

/// The five non-trivial equations of the column |123>.
inline void distinct_letter_residuals(const CubicView &v, std::vector<Residual> &out) {
    const Block2 z12 = v.zb(1, 2), z13 = v.zb(1, 3), z23 = v.zb(2, 3);
    const Block2 Z12 = v.Zb(1, 2), Z13 = v.Zb(1, 3), Z23 = v.Zb(2, 3);
    const Block2 g12 = v.gb(1, 2), g13 = v.gb(1, 3), g23 = v.gb(2, 3);
    const auto col = v.word(1, 2, 3);
    const auto push = [&](std::array<int, 3> row, ExactComplex value) {
        out.push_back({ equation_name(row, col), row, col, std::move(value) });
    };
    push(v.word(1, 2, 3), g12.b * Z13.d * z12.c + g12.d * Z23.d * z12.d - z23.b * Z13.d * g23.c - z23.d * Z12.d * g23.d);
    push(v.word(2, 1, 3), g12.b * Z13.d * z12.a + g12.d * Z23.d * z12.b - z23.d * Z12.b * g13.d);
    push(v.word(1, 3, 2), g12.d * Z23.b * z13.d - z23.b * Z13.d * g23.a - z23.d * Z12.d * g23.b);
    push(v.word(2, 3, 1), g12.b * Z13.b * z23.d - z23.d * Z12.b * g13.b);
    push(v.word(3, 1, 2), g12.d * Z23.b * z13.b - z23.b * Z13.b * g12.d);
}

/// The non-trivial equations of the columns |112>, |121>, |211> for the ordered pair (1, 2).
inline void repeated_letter_residuals(const CubicView &v, std::vector<Residual> &out) {
    const Block2 z12 = v.zb(1, 2), Z12 = v.Zb(1, 2), g12 = v.gb(1, 2);
    const ExactComplex &a11 = v.zv(1), &A11 = v.Zv(1), &al11 = v.gv(1);
    const auto push = [&](std::array<int, 3> row, std::array<int, 3> col, ExactComplex value) {
        out.push_back({ equation_name(row, col), row, col, std::move(value) });
    };
    const auto c112 = v.word(1, 1, 2), c121 = v.word(1, 2, 1), c211 = v.word(2, 1, 1);
    push(c112, c112, al11 * Z12.d * a11 - z12.d * A11 * g12.d - z12.b * Z12.d * g12.c);
    push(c121, c112, al11 * Z12.b * z12.d - z12.d * A11 * g12.b - z12.b * Z12.d * g12.a);
    push(c121, c121, Z12.a * z12.d * g12.d - Z12.d * z12.a * g12.a);
    push(c112, c121, g12.d * Z12.c * a11 - z12.a * Z12.d * g12.c - z12.c * A11 * g12.d);
    push(c211, c121, g12.d * Z12.a * z12.b + g12.b * A11 * z12.a - z12.a * Z12.b * al11);
    push(c211, c211, g12.a * A11 * z12.a + g12.c * Z12.a * z12.b - a11 * al11 * Z12.a);
    push(c121, c211, g12.a * A11 * z12.c + g12.c * Z12.a * z12.d - a11 * Z12.c * g12.a);
}

}  // namespace detail

/**
 * @brief Cubic residuals of the anomaly (z, Z, zeta) on the letters (i, j, k).
 *
 * Contains the column |ijk> equations rel1..rel5, the two-letter families on the ordered pair
 * (i, j) and their transposes on (j, i). Each value equals the anomaly entry at (row, col).
 */
inline TripleResiduals cubic_residuals(const AlphaForm &z, const AlphaForm &Z, const AlphaForm &zeta, std::array<int, 3> triple) {
    const int N = z.rank();
    if (Z.rank() != N || zeta.rank() != N) {
        throw Error(ErrorKind::RankMismatch, "cubic_residuals on forms of different rank");
    }
    for (const int x : triple) {
        if (x < 1 || x > N) {
            throw Error(ErrorKind::IndexOutOfRange, "triple letter " + std::to_string(x) + " outside 1.." + std::to_string(N));
        }
    }
    if (triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2]) {
        throw Error(ErrorKind::IndexOutOfRange, "triple letters must be distinct");
    }
    TripleResiduals out;
    out.triple = triple;
    detail::distinct_letter_residuals({ z, Z, zeta, triple }, out.residuals);
    detail::repeated_letter_residuals({ z, Z, zeta, { triple[0], triple[1], triple[2] } }, out.residuals);
    detail::repeated_letter_residuals({ z, Z, zeta, { triple[1], triple[0], triple[2] } }, out.residuals);
    return out;
}

enum class Method { Dense, Subsets, Both };

struct Witness {
    std::string relation;
    std::string equation;
    std::vector<int> triple;
    std::vector<int> row;
    std::vector<int> col;
    ExactComplex residual;
};

struct RelationCheck {
    bool holds{ true };
    std::optional<Witness> witness;

    void fail(Witness w) {
        if (holds) {
            holds = false;
            witness = std::move(w);
        }
    }
};

struct RelationReport {
    RelationCheck rrr, sss, ss_unit, rrs, rss;
    bool reverse_srr_holds{ true };

    [[nodiscard]] bool all_hold() const { return rrr.holds && sss.holds && ss_unit.holds && rrs.holds && rss.holds; }

    [[nodiscard]] bool same_flags(const RelationReport &o) const {
        return rrr.holds == o.rrr.holds && sss.holds == o.sss.holds && ss_unit.holds == o.ss_unit.holds && rrs.holds == o.rrs.holds &&
               rss.holds == o.rss.holds && reverse_srr_holds == o.reverse_srr_holds;
    }
};

namespace detail {

struct Triplet {
    const AlphaForm *z;
    const AlphaForm *Z;
    const AlphaForm *g;
};

inline std::array<Triplet, 5> relation_triplets(const AlphaForm &S, const AlphaForm &R) {
    return { { { &R, &R, &R }, { &S, &S, &S }, { &R, &R, &S }, { &R, &S, &S }, { &S, &R, &R } } };
}

inline constexpr std::array<const char *, 5> relation_names{ "rrr", "sss", "rrs", "rss", "reverse_srr" };

inline RelationCheck &slot(RelationReport &rep, std::size_t k, RelationCheck &scratch) {
    switch (k) {
        case 0: return rep.rrr;
        case 1: return rep.sss;
        case 2: return rep.rrs;
        case 3: return rep.rss;
        default: return scratch;
    }
}

/// First nonzero entry of a width-3 anomaly, with letters mapped through map (identity if empty).
inline std::optional<Witness> first_nonzero(const DenseMatrix &A, int N, const std::vector<int> &map, const char *relation) {
    for (std::size_t u = 0; u < A.rows(); ++u) {
        for (std::size_t v = 0; v < A.cols(); ++v) {
            if (A(u, v).is_zero()) {
                continue;
            }
            auto row = word_of(u, N, 3);
            auto col = word_of(v, N, 3);
            if (!map.empty()) {
                for (auto &x : row) {
                    x = map[static_cast<std::size_t>(x - 1)];
                }
                for (auto &x : col) {
                    x = map[static_cast<std::size_t>(x - 1)];
                }
            }
            const std::array<int, 3> r{ row[0], row[1], row[2] };
            const std::array<int, 3> c{ col[0], col[1], col[2] };
            std::set<int> letters(col.begin(), col.end());
            return Witness{ relation, equation_name(r, c), { letters.begin(), letters.end() }, row, col, A(u, v) };
        }
    }
    return std::nullopt;
}

inline void check_ss_unit(const AlphaForm &S, RelationReport &rep) {
    const int N = S.rank();
    for (int i = 1; i <= N; ++i) {
        const ExactComplex sq = S.vertex(i) * S.vertex(i);
        if (!sq.is_one()) {
            rep.ss_unit.fail({ "ss_unit", "ss_vertex", { i }, { i, i }, { i, i }, sq - ExactComplex{ 1 } });
        }
        for (int j = i + 1; j <= N; ++j) {
            const Block2 sq2 = S.block(i, j) * S.block(i, j);
            if (!(sq2 == Block2::scalar(1))) {
                const ExactComplex dev = !(sq2.a - 1).is_zero() ? sq2.a - 1 : !sq2.b.is_zero() ? sq2.b : !sq2.c.is_zero() ? sq2.c : sq2.d - 1;
                rep.ss_unit.fail({ "ss_unit", "ss_block", { i, j }, { j, i }, { i, j }, dev });
            }
        }
    }
}

inline RelationReport verify_dense(const AlphaForm &S, const AlphaForm &R) {
    const int N = S.rank();
    RelationReport rep;
    const DenseMatrix Sd = alpha_to_dense(S);
    const DenseMatrix Rd = alpha_to_dense(R);
    const DenseMatrix sq = Sd * Sd;
    const DenseMatrix id = identity(Sd.rows());
    if (!(sq == id)) {
        const DenseMatrix diff = sq - id;
        for (std::size_t u = 0; u < diff.rows() && rep.ss_unit.holds; ++u) {
            for (std::size_t v = 0; v < diff.cols(); ++v) {
                if (!diff(u, v).is_zero()) {
                    const auto row = word_of(u, N, 2);
                    const auto col = word_of(v, N, 2);
                    std::set<int> letters(col.begin(), col.end());
                    rep.ss_unit.fail({ "ss_unit", letters.size() == 1 ? "ss_vertex" : "ss_block", { letters.begin(), letters.end() }, row, col, diff(u, v) });
                    break;
                }
            }
        }
    }
    const DenseMatrix S1 = shift_embed(Sd, 1, N), S2 = shift_embed(Sd, 2, N);
    const DenseMatrix R1 = shift_embed(Rd, 1, N), R2 = shift_embed(Rd, 2, N);
    const auto anom = [](const DenseMatrix &z1, const DenseMatrix &z2, const DenseMatrix &Z1, const DenseMatrix &Z2, const DenseMatrix &g1,
                         const DenseMatrix &g2) { return z1 * Z2 * g1 - g2 * Z1 * z2; };
    const std::array<DenseMatrix, 5> anomalies{ anom(R1, R2, R1, R2, R1, R2), anom(S1, S2, S1, S2, S1, S2), anom(R1, R2, R1, R2, S1, S2),
                                                anom(R1, R2, S1, S2, S1, S2), anom(S1, S2, R1, R2, R1, R2) };
    RelationCheck scratch;
    for (std::size_t k = 0; k < anomalies.size(); ++k) {
        if (auto w = first_nonzero(anomalies[k], N, {}, relation_names[k])) {
            slot(rep, k, scratch).fail(std::move(*w));
        }
    }
    rep.reverse_srr_holds = scratch.holds;
    return rep;
}

inline RelationReport verify_subsets(const AlphaForm &S, const AlphaForm &R) {
    const int N = S.rank();
    RelationReport rep;
    RelationCheck scratch;
    check_ss_unit(S, rep);
    if (N == 1) {
        // a single vertex: every relation reduces to products of commuting scalars
        return rep;
    }
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            const std::vector<int> psi{ i, j };
            const AlphaForm s2 = restrict(S, psi);
            const AlphaForm r2 = restrict(R, psi);
            const DenseMatrix Sd = alpha_to_dense(s2), Rd = alpha_to_dense(r2);
            const std::array<DenseMatrix, 5> anomalies{ anomaly(Rd, Rd, Rd, 2), anomaly(Sd, Sd, Sd, 2), anomaly(Rd, Rd, Sd, 2), anomaly(Rd, Sd, Sd, 2),
                                                        anomaly(Sd, Rd, Rd, 2) };
            for (std::size_t k = 0; k < anomalies.size(); ++k) {
                RelationCheck &dst = slot(rep, k, scratch);
                if (!dst.holds) {
                    continue;
                }
                if (auto w = first_nonzero(anomalies[k], 2, psi, relation_names[k])) {
                    dst.fail(std::move(*w));
                }
            }
        }
    }
    const auto triplets = relation_triplets(S, R);
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            for (int k = j + 1; k <= N; ++k) {
                const std::array<std::array<int, 3>, 6> orders{ { { i, j, k }, { i, k, j }, { j, i, k }, { j, k, i }, { k, i, j }, { k, j, i } } };
                for (std::size_t r = 0; r < triplets.size(); ++r) {
                    RelationCheck &dst = slot(rep, r, scratch);
                    if (!dst.holds) {
                        continue;
                    }
                    const auto &t = triplets[r];
                    for (const auto &ord : orders) {
                        std::vector<Residual> res;
                        distinct_letter_residuals({ *t.z, *t.Z, *t.g, ord }, res);
                        for (const auto &x : res) {
                            if (!x.value.is_zero()) {
                                dst.fail({ relation_names[r], x.equation, { i, j, k }, { x.row.begin(), x.row.end() }, { x.col.begin(), x.col.end() }, x.value });
                                break;
                            }
                        }
                        if (!dst.holds) {
                            break;
                        }
                    }
                }
            }
        }
    }
    rep.reverse_srr_holds = scratch.holds;
    return rep;
}

}  // namespace detail

/**
 * @brief Checks the defining relations on (S, R).
 *
 * Dense builds the width-3 anomalies outright. Subsets checks every pair of indices at rank 2
 * and every 3-subset through the cubic residuals of all six orderings. Both runs the two and
 * throws OracleMismatch if any flag differs.
 */
inline RelationReport verify_pair(const AlphaForm &S, const AlphaForm &R, Method method = Method::Subsets) {
    if (S.rank() != R.rank()) {
        throw Error(ErrorKind::RankMismatch, "S has rank " + std::to_string(S.rank()) + ", R has rank " + std::to_string(R.rank()));
    }
    switch (method) {
        case Method::Dense: return detail::verify_dense(S, R);
        case Method::Subsets: return detail::verify_subsets(S, R);
        case Method::Both: {
            RelationReport sub = detail::verify_subsets(S, R);
            const RelationReport dense = detail::verify_dense(S, R);
            if (!sub.same_flags(dense)) {
                throw Error(ErrorKind::OracleMismatch, "subset and dense verdicts differ");
            }
            return sub;
        }
    }
    return detail::verify_subsets(S, R);
}

inline RelationReport verify_pair(const Pair &p, Method method = Method::Subsets) { return verify_pair(p.S, p.R, method); }

}  // namespace loopbraid
