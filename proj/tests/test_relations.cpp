#include "support/fixtures.hpp"
#include "support/gen.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

using namespace loopbraid;
using namespace testsupport;

namespace {

// Width-3 product z1 Z2 zeta1 - zeta2 Z1 z2 evaluated entry by entry from the alpha-forms.
ExactComplex width2_entry(const AlphaForm &F, int r1, int r2, int c1, int c2) {
    if (r1 == r2 || c1 == c2) {
        return r1 == r2 && c1 == c2 && r1 == c1 ? F.vertex(r1) : ExactComplex{ 0 };
    }
    if (!((r1 == c1 && r2 == c2) || (r1 == c2 && r2 == c1))) {
        return 0;
    }
    // block basis (|ji>, |ij>) for i < j
    const int i = std::min(c1, c2);
    const int j = std::max(c1, c2);
    const Block2 b = F.block(i, j);
    const bool row_ji = r1 == j;
    const bool col_ji = c1 == j;
    return row_ji ? (col_ji ? b.a : b.b) : (col_ji ? b.c : b.d);
}

DenseMatrix embed_from_alpha(const AlphaForm &F, int pos) {
    const int N = F.rank();
    const std::size_t side = int_pow(static_cast<std::size_t>(N), 3);
    DenseMatrix out(side);
    for (std::size_t u = 0; u < side; ++u) {
        for (std::size_t v = 0; v < side; ++v) {
            const auto wu = word_of(u, N, 3);
            const auto wv = word_of(v, N, 3);
            if (pos == 1 && wu[2] == wv[2]) {
                out(u, v) = width2_entry(F, wu[0], wu[1], wv[0], wv[1]);
            } else if (pos == 2 && wu[0] == wv[0]) {
                out(u, v) = width2_entry(F, wu[1], wu[2], wv[1], wv[2]);
            }
        }
    }
    return out;
}

DenseMatrix anomaly_oracle(const AlphaForm &z, const AlphaForm &Z, const AlphaForm &g) {
    return embed_from_alpha(z, 1) * embed_from_alpha(Z, 2) * embed_from_alpha(g, 1) - embed_from_alpha(g, 2) * embed_from_alpha(Z, 1) * embed_from_alpha(z, 2);
}

AlphaForm scalar_form(int N, const ExactComplex &x) {
    AlphaForm F(N);
    for (int i = 1; i <= N; ++i) {
        F.set_vertex(i, x);
        for (int j = i + 1; j <= N; ++j) {
            F.set_block(i, j, Block2::scalar(x));
        }
    }
    return F;
}

Pair random_solution(Gen &g, int N) {
    const LabelledShape l = g.labelled_shape(N);
    return make_recipe(l, random_point(l, g.seed()));
}

}  // namespace

TEST(Anomaly, MatchesEntryOracle) {
    Gen g{ 31 };
    for (int t = 0; t < 5; ++t) {
        const int N = g.uniform(2, 3);
        const AlphaForm z = g.alpha(N), Z = g.alpha(N), y = g.alpha(N);
        EXPECT_EQ(anomaly(alpha_to_dense(z), alpha_to_dense(Z), alpha_to_dense(y), N), anomaly_oracle(z, Z, y));
    }
}

TEST(Anomaly, IdentityVanishes) {
    const auto I = identity(9);
    EXPECT_TRUE(anomaly(I, I, I, 3).is_zero());
    EXPECT_THROW((void)anomaly(I, identity(4), I, 3), Error);
}

TEST(Anomaly, SlashFamilyIsBraid) {
    Gen g{ 32 };
    for (int t = 0; t < 10; ++t) {
        const auto R = alpha_to_dense(n2_family({ N2Tag::Fslash, g.nonzero(), g.nonzero(), g.nonzero(), g.nonzero() }));
        EXPECT_TRUE(anomaly(R, R, R, 2).is_zero());
    }
}

TEST(Anomaly, OutputIsChargeConserving) {
    Gen g{ 33 };
    const AlphaForm z = g.alpha(3), Z = g.alpha(3), y = g.alpha(3);
    EXPECT_TRUE(is_charge_conserving(anomaly(alpha_to_dense(z), alpha_to_dense(Z), alpha_to_dense(y), 3), 3, 3));
}

TEST(Anomaly, MonomialBraidsPastAnything) {
    Gen g{ 34 };
    const auto P = perm_P(2);
    for (int t = 0; t < 40; ++t) {
        DenseMatrix D(4);
        for (std::size_t k = 0; k < 4; ++k) {
            D(k, k) = g.coin() ? ExactComplex{ 0 } : g.small_int(3);
        }
        const DenseMatrix mono = D * P;
        const DenseMatrix other = alpha_to_dense(g.alpha(2));
        EXPECT_TRUE(anomaly(mono, mono, other, 2).is_zero());
    }
}

TEST(Cubic, ResidualsEqualAnomalyEntriesAndCoverIt) {
    Gen g{ 35 };
    for (int t = 0; t < 8; ++t) {
        const int N = 3;
        const AlphaForm z = g.alpha(N), Z = g.alpha(N), y = g.alpha(N);
        const DenseMatrix A = anomaly_oracle(z, Z, y);
        std::map<std::pair<std::size_t, std::size_t>, ExactComplex> listed;
        std::array<int, 3> tri{ 1, 2, 3 };
        do {
            for (const auto &r : cubic_residuals(z, Z, y, tri).residuals) {
                const auto key = std::pair{ flat_index({ r.row[0], r.row[1], r.row[2] }, N), flat_index({ r.col[0], r.col[1], r.col[2] }, N) };
                EXPECT_EQ(r.value, A(key.first, key.second)) << r.equation;
                listed[key] = r.value;
            }
        } while (std::next_permutation(tri.begin(), tri.end()));
        for (std::size_t u = 0; u < A.rows(); ++u) {
            for (std::size_t v = 0; v < A.cols(); ++v) {
                if (listed.find({ u, v }) == listed.end()) {
                    EXPECT_TRUE(A(u, v).is_zero()) << u << "," << v;
                }
            }
        }
    }
}

TEST(Cubic, UnlistedEquationsAreIdenticallyZero) {
    Gen g{ 36 };
    for (int t = 0; t < 20; ++t) {
        const AlphaForm z = g.alpha(3), Z = g.alpha(3), y = g.alpha(3);
        const DenseMatrix A = anomaly_oracle(z, Z, y);
        const auto at = [&](std::vector<int> r, std::vector<int> c) { return A(flat_index(r, 3), flat_index(c, 3)); };
        EXPECT_TRUE(at({ 3, 2, 1 }, { 1, 2, 3 }).is_zero());
        EXPECT_TRUE(at({ 2, 1, 1 }, { 1, 1, 2 }).is_zero());
        EXPECT_TRUE(at({ 1, 1, 2 }, { 2, 1, 1 }).is_zero());
        EXPECT_TRUE(at({ 1, 1, 1 }, { 1, 1, 1 }).is_zero());
    }
}

TEST(Cubic, IdentityFormsGiveZero) {
    const AlphaForm I(4);
    EXPECT_TRUE(cubic_residuals(I, I, I, { 4, 1, 3 }).all_zero());
    EXPECT_THROW((void)cubic_residuals(I, I, I, { 1, 1, 3 }), Error);
    EXPECT_THROW((void)cubic_residuals(I, I, I, { 1, 2, 5 }), Error);
}

TEST(Cubic, WorkedSolutionVanishesNonSolutionDoesNot) {
    const ExactComplex a{ 3 }, b{ Rational(-2, 5) };
    const Pair good = example_123(a, b);
    EXPECT_TRUE(cubic_residuals(good.R, good.R, good.S, { 1, 2, 3 }).all_zero());
    const Pair bad = non_example(a, b, 1);
    bool any = false;
    std::array<int, 3> tri{ 1, 2, 3 };
    do {
        any = any || !cubic_residuals(bad.R, bad.S, bad.S, tri).all_zero();
    } while (std::next_permutation(tri.begin(), tri.end()));
    EXPECT_TRUE(any);
}

TEST(EquationName, Families) {
    EXPECT_EQ(equation_name({ 1, 2, 3 }, { 1, 2, 3 }), "rel1");
    EXPECT_EQ(equation_name({ 2, 1, 3 }, { 1, 2, 3 }), "rel2");
    EXPECT_EQ(equation_name({ 3, 1, 2 }, { 1, 2, 3 }), "rel5");
    EXPECT_EQ(equation_name({ 2, 1, 3 }, { 2, 3, 1 }), "rel3");
    EXPECT_EQ(equation_name({ 1, 3, 2 }, { 2, 3, 1 }), "rel6");
    EXPECT_EQ(equation_name({ 1, 1, 1 }, { 1, 1, 1 }), "w111");
    EXPECT_EQ(equation_name({ 1, 1, 2 }, { 1, 1, 2 }), "w112_1");
    EXPECT_EQ(equation_name({ 2, 2, 1 }, { 2, 2, 1 }), "w221_1");
}

TEST(Verify, WorkedExamples) {
    const ExactComplex a{ Rational(7, 2), Rational(1) }, b{ -2 };
    for (const Pair &p : { example_123(a, b), example_f23(a, b), example_minus(a, b) }) {
        const auto rep = verify_pair(p, Method::Both);
        EXPECT_TRUE(rep.all_hold());
        EXPECT_FALSE(rep.reverse_srr_holds);
    }
    const ExactComplex a2{ -1 }, mu{ 2 }, C{ Rational(1, 3), Rational(2) };
    for (const Pair &p : { example_f13(a, b, a2, mu, C), example_f13_moved(a, b, a2, mu, C), example_f13_swapped(a, b, a2, mu, C) }) {
        EXPECT_TRUE(verify_pair(p, Method::Both).all_hold());
    }
}

TEST(Verify, CautionaryFailsOnlyMixedBraid) {
    const auto rep = verify_pair(cautionary(5, Rational(1, 2)), Method::Both);
    EXPECT_TRUE(rep.rrr.holds);
    EXPECT_TRUE(rep.sss.holds);
    EXPECT_TRUE(rep.ss_unit.holds);
    EXPECT_TRUE(rep.rss.holds);
    EXPECT_FALSE(rep.rrs.holds);
    ASSERT_TRUE(rep.rrs.witness.has_value());
    EXPECT_FALSE(rep.rrs.witness->residual.is_zero());
}

TEST(Verify, FirstDraftRecipeFails) {
    for (const int sign : { 1, -1 }) {
        const auto rep = verify_pair(non_example(4, -3, sign), Method::Both);
        EXPECT_FALSE(rep.rss.holds);
        EXPECT_TRUE(rep.sss.holds);
        EXPECT_TRUE(rep.ss_unit.holds);
        // computed with exact arithmetic and an independent floating evaluation
        EXPECT_FALSE(rep.rrr.holds);
        EXPECT_FALSE(rep.rrs.holds);
    }
}

TEST(Verify, ScalarPairHolds) {
    const auto rep = verify_pair(AlphaForm(2), scalar_form(2, ExactComplex{ 3 }), Method::Both);
    EXPECT_TRUE(rep.all_hold());
    EXPECT_TRUE(rep.reverse_srr_holds);
}

TEST(Verify, UnitFailureIsReported) {
    AlphaForm S(2);
    S.set_vertex(1, 2);
    const auto rep = verify_pair(S, AlphaForm(2), Method::Both);
    EXPECT_FALSE(rep.ss_unit.holds);
    EXPECT_TRUE(rep.ss_unit.witness.has_value());
    EXPECT_THROW((void)verify_pair(AlphaForm(2), AlphaForm(3)), Error);
}

TEST(Verify, WitnessPresentIffFailing) {
    Gen g{ 37 };
    for (int t = 0; t < 30; ++t) {
        const Pair p = g.perturb(random_solution(g, g.uniform(2, 4)));
        const auto rep = verify_pair(p);
        for (const RelationCheck *c : { &rep.rrr, &rep.sss, &rep.ss_unit, &rep.rrs, &rep.rss }) {
            EXPECT_EQ(c->holds, !c->witness.has_value());
        }
    }
}

TEST(Verify, SubsetsAgreeWithDense) {
    Gen g{ 38 };
    for (int t = 0; t < 40; ++t) {
        const int N = g.uniform(2, 4);
        const Pair good = random_solution(g, N);
        const Pair bad = g.perturb(good);
        for (const Pair &p : { good, bad }) {
            const auto a = verify_pair(p, Method::Subsets);
            const auto b = verify_pair(p, Method::Dense);
            EXPECT_TRUE(a.same_flags(b));
        }
        EXPECT_TRUE(verify_pair(good).all_hold());
    }
}

TEST(Verify, GaugeStability) {
    Gen g{ 39 };
    for (int t = 0; t < 30; ++t) {
        const int N = g.uniform(2, 3);
        const Pair p = random_solution(g, N);
        const Pair q = gauge_transform(p, g.gauge(N));
        EXPECT_TRUE(verify_pair(q, Method::Both).all_hold());
        const auto md = anomaly(alpha_to_dense(q.R), alpha_to_dense(q.R), alpha_to_dense(q.S), N);
        EXPECT_TRUE(md.is_zero());
    }
}
