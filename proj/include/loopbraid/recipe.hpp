/**
 * @file
 * @brief Construction of solution pairs: the recipe on labelled shapes, the rank-2 braid families,
 *        the rank-2 loop-braid solutions, extension search, and parameter sampling.
 */

#pragma once

#include "loopbraid/combinatorics.hpp"
#include "loopbraid/error.hpp"
#include "loopbraid/matchcat.hpp"
#include "loopbraid/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace loopbraid {

/// Per-nation eigenvalue data; beta is present iff the nation has a bottom county.
struct NationParams {
    ExactComplex alpha;
    std::optional<ExactComplex> beta;

    friend bool operator==(const NationParams &, const NationParams &) = default;
};

struct PairParams {
    ExactComplex mu;
    ExactComplex C;

    friend bool operator==(const PairParams &, const PairParams &) = default;
};

/// The gauge-invariant form of a nation pair: p = mu*C, q = mu/C.
struct PairInvariants {
    ExactComplex p;
    ExactComplex q;

    friend bool operator==(const PairInvariants &, const PairInvariants &) = default;
};

/// A point of the parameter space; nations are 1-based in normalized order, pairs keyed (s, t), s < t.
struct ParamPoint {
    std::vector<NationParams> nations;
    std::map<std::pair<int, int>, PairParams> pairs;

    friend bool operator==(const ParamPoint &, const ParamPoint &) = default;
};

struct InvariantPoint {
    std::vector<NationParams> nations;
    std::map<std::pair<int, int>, PairInvariants> pairs;

    friend bool operator==(const InvariantPoint &, const InvariantPoint &) = default;
};

inline InvariantPoint to_invariants(const ParamPoint &x) {
    InvariantPoint out{ x.nations, {} };
    for (const auto &[st, pp] : x.pairs) {
        if (pp.C.is_zero()) {
            throw Error(ErrorKind::ConstraintViolated, "C_" + std::to_string(st.first) + std::to_string(st.second) + " is zero");
        }
        out.pairs[st] = { pp.mu * pp.C, pp.mu / pp.C };
    }
    return out;
}

namespace detail {

inline void check_nations(const LabelledShape &lambda, const std::vector<NationParams> &nations) {
    if (nations.size() != lambda.nation_count()) {
        throw Error(ErrorKind::ParamMismatch, "shape has " + std::to_string(lambda.nation_count()) + " nations, parameters give " + std::to_string(nations.size()));
    }
    for (std::size_t s = 0; s < nations.size(); ++s) {
        const std::string tag = std::to_string(s + 1);
        const bool two_counties = !lambda.nation(s).bottom.empty();
        if (nations[s].beta.has_value() != two_counties) {
            throw Error(ErrorKind::ParamMismatch, two_counties ? "beta_" + tag + " missing for a two-county nation" : "beta_" + tag + " given for a one-county nation");
        }
        if (nations[s].alpha.is_zero()) {
            throw Error(ErrorKind::ConstraintViolated, "alpha_" + tag + " is zero");
        }
        if (two_counties) {
            if (nations[s].beta->is_zero()) {
                throw Error(ErrorKind::ConstraintViolated, "beta_" + tag + " is zero");
            }
            if ((nations[s].alpha + *nations[s].beta).is_zero()) {
                throw Error(ErrorKind::ConstraintViolated, "alpha_" + tag + " + beta_" + tag + " is zero");
            }
        }
    }
}

template <typename Map>
void check_pair_keys(const LabelledShape &lambda, const Map &pairs) {
    const auto n = static_cast<int>(lambda.nation_count());
    if (pairs.size() != static_cast<std::size_t>(n * (n - 1) / 2)) {
        throw Error(ErrorKind::ParamMismatch, "expected " + std::to_string(n * (n - 1) / 2) + " nation pairs, got " + std::to_string(pairs.size()));
    }
    for (int s = 1; s <= n; ++s) {
        for (int t = s + 1; t <= n; ++t) {
            if (pairs.find({ s, t }) == pairs.end()) {
                throw Error(ErrorKind::ParamMismatch, "nation pair (" + std::to_string(s) + "," + std::to_string(t) + ") missing");
            }
        }
    }
}

struct Residence {
    int nation{ 0 };  // 1-based
    bool top{ true };
};

inline std::vector<Residence> residences(const LabelledShape &lambda) {
    std::vector<Residence> out(static_cast<std::size_t>(lambda.rank) + 1);
    for (std::size_t s = 0; s < lambda.nation_count(); ++s) {
        const Nation &n = lambda.nation(s);
        for (const int i : n.top) {
            out[static_cast<std::size_t>(i)] = { static_cast<int>(s) + 1, true };
        }
        for (const int i : n.bottom) {
            out[static_cast<std::size_t>(i)] = { static_cast<int>(s) + 1, false };
        }
    }
    return out;
}

}  // namespace detail

/**
 * @brief The recipe in invariant form.
 *
 * Vertices: R carries alpha_s on the top county and beta_s on the bottom; S carries the nation
 * sign on the top county and its negative on the bottom. For i < j in nations s, t:
 *   s != t: R block [[0, q], [p, 0]] read with (p, q) of the pair oriented from s to t, S swap;
 *   same nation, different counties: R block [[a+b, sgn a], [-sgn b, 0]] if i is top, otherwise
 *     [[0, -sgn b], [sgn a, a+b]], S swap;
 *   same county: R block alpha I (or beta I), S block equal to the county's S vertex times I.
 * Reading a pair against its nation order swaps p and q.
 */
inline Pair make_recipe(const LabelledShape &lambda, const InvariantPoint &x) {
    detail::check_nations(lambda, x.nations);
    detail::check_pair_keys(lambda, x.pairs);
    for (const auto &[st, pq] : x.pairs) {
        if (pq.p.is_zero() || pq.q.is_zero()) {
            throw Error(ErrorKind::ConstraintViolated, "pair invariant of (" + std::to_string(st.first) + "," + std::to_string(st.second) + ") is zero");
        }
    }
    const int N = lambda.rank;
    const auto res = detail::residences(lambda);
    Pair out{ AlphaForm(N), AlphaForm(N) };
    const auto sign_of = [&](int s) { return ExactComplex{ lambda.sign_of_nation(static_cast<std::size_t>(s - 1)) }; };
    for (int i = 1; i <= N; ++i) {
        const auto &ri = res[static_cast<std::size_t>(i)];
        const NationParams &np = x.nations[static_cast<std::size_t>(ri.nation - 1)];
        const ExactComplex sgn = sign_of(ri.nation);
        out.R.set_vertex(i, ri.top ? np.alpha : *np.beta);
        out.S.set_vertex(i, ri.top ? sgn : -sgn);
        for (int j = i + 1; j <= N; ++j) {
            const auto &rj = res[static_cast<std::size_t>(j)];
            if (ri.nation != rj.nation) {
                const bool forward = ri.nation < rj.nation;
                const PairInvariants &pq = x.pairs.at(forward ? std::pair{ ri.nation, rj.nation } : std::pair{ rj.nation, ri.nation });
                out.R.set_block(i, j, forward ? Block2{ 0, pq.q, pq.p, 0 } : Block2{ 0, pq.p, pq.q, 0 });
                out.S.set_block(i, j, Block2::swap());
            } else if (ri.top != rj.top) {
                const ExactComplex &a = np.alpha;
                const ExactComplex &b = *np.beta;
                out.R.set_block(i, j, ri.top ? Block2{ a + b, sgn * a, -sgn * b, 0 } : Block2{ 0, -sgn * b, sgn * a, a + b });
                out.S.set_block(i, j, Block2::swap());
            } else {
                out.R.set_block(i, j, Block2::scalar(ri.top ? np.alpha : *np.beta));
                out.S.set_block(i, j, Block2::scalar(ri.top ? sgn : -sgn));
            }
        }
    }
    return out;
}

inline Pair make_recipe(const LabelledShape &lambda, const ParamPoint &x) {
    detail::check_nations(lambda, x.nations);
    detail::check_pair_keys(lambda, x.pairs);
    for (const auto &[st, pp] : x.pairs) {
        if (pp.mu.is_zero() || pp.C.is_zero()) {
            throw Error(ErrorKind::ConstraintViolated, "mu or C of pair (" + std::to_string(st.first) + "," + std::to_string(st.second) + ") is zero");
        }
    }
    return make_recipe(lambda, to_invariants(x));
}

/// Deterministic sampler of small nonzero Gaussian integers (parts in -5..5).
class GaussianSampler {
  public:
    explicit GaussianSampler(std::uint64_t seed) : rng_{ seed } {}

    ExactComplex nonzero() {
        std::uniform_int_distribution<int> part(-5, 5);
        while (true) {
            const int re = part(rng_);
            const int im = part(rng_);
            if (re != 0 || im != 0) {
                return { Rational{ re }, Rational{ im } };
            }
        }
    }

  private:
    std::mt19937_64 rng_;
};

inline ParamPoint random_point(const LabelledShape &lambda, std::uint64_t seed) {
    GaussianSampler gen{ seed };
    ParamPoint x;
    for (std::size_t s = 0; s < lambda.nation_count(); ++s) {
        NationParams np{ gen.nonzero(), std::nullopt };
        if (!lambda.nation(s).bottom.empty()) {
            ExactComplex b = gen.nonzero();
            while ((np.alpha + b).is_zero()) {
                b = gen.nonzero();
            }
            np.beta = b;
        }
        x.nations.push_back(np);
    }
    const auto n = static_cast<int>(lambda.nation_count());
    for (int s = 1; s <= n; ++s) {
        for (int t = s + 1; t <= n; ++t) {
            ExactComplex mu = gen.nonzero();
            x.pairs[{ s, t }] = { mu, gen.nonzero() };
        }
    }
    return x;
}

/**
 * @brief Carries parameters along a relabelling.
 *
 * For psi the restriction map, the relabelled shape is perm_action(psi^-1, lambda). Parameters
 * stay with their nation; a pair whose nation order flips keeps mu and inverts C.
 */
inline std::pair<LabelledShape, ParamPoint> transport_params(const LabelledShape &lambda, const std::vector<int> &psi, const ParamPoint &x) {
    require_permutation(psi, lambda.rank);
    const std::vector<int> w = inverse_permutation(psi);
    const LabelledShape moved = perm_action(w, lambda);
    // new index of each old nation, located through its image top county
    std::vector<int> where(lambda.nation_count());
    for (std::size_t s = 0; s < lambda.nation_count(); ++s) {
        const int probe = w[static_cast<std::size_t>(lambda.nation(s).top.front() - 1)];
        for (std::size_t k = 0; k < moved.nation_count(); ++k) {
            const auto &top = moved.nation(k).top;
            if (moved.sign_of_nation(k) == lambda.sign_of_nation(s) && std::find(top.begin(), top.end(), probe) != top.end()) {
                where[s] = static_cast<int>(k) + 1;
            }
        }
    }
    ParamPoint out;
    out.nations.resize(x.nations.size());
    for (std::size_t s = 0; s < where.size(); ++s) {
        out.nations[static_cast<std::size_t>(where[s] - 1)] = x.nations.at(s);
    }
    for (const auto &[st, pp] : x.pairs) {
        const int a = where[static_cast<std::size_t>(st.first - 1)];
        const int b = where[static_cast<std::size_t>(st.second - 1)];
        if (a < b) {
            out.pairs[{ a, b }] = pp;
        } else {
            out.pairs[{ b, a }] = { pp.mu, pp.C.inv() };
        }
    }
    return { moved, out };
}

enum class N2Tag { F0, Fslash, Ff, Fa, Ffbar, Fabar };

inline std::string to_string(N2Tag t) {
    switch (t) {
        case N2Tag::F0: return "F0";
        case N2Tag::Fslash: return "Fslash";
        case N2Tag::Ff: return "Ff";
        case N2Tag::Fa: return "Fa";
        case N2Tag::Ffbar: return "Ffbar";
        case N2Tag::Fabar: return "Fabar";
    }
    return "?";
}

/// A member of one of the six rank-2 braid families; unused parameters are ignored.
struct N2Family {
    N2Tag tag{ N2Tag::F0 };
    ExactComplex alpha{ 1 };
    ExactComplex beta{ 1 };
    ExactComplex gamma{ 1 };
    ExactComplex chi{ 1 };
};

/// The braid matrix R of a rank-2 family member in alpha-form.
inline AlphaForm n2_family(const N2Family &f) {
    const auto require = [](bool ok, const std::string &what) {
        if (!ok) {
            throw Error(ErrorKind::ConstraintViolated, what);
        }
    };
    require(!f.alpha.is_zero(), "alpha is zero");
    AlphaForm R(2);
    if (f.tag == N2Tag::F0) {
        R.set_vertex(1, f.alpha);
        R.set_vertex(2, f.alpha);
        R.set_block(1, 2, Block2::scalar(f.alpha));
        return R;
    }
    require(!f.beta.is_zero(), "beta is zero");
    require(!f.chi.is_zero(), "chi is zero");
    if (f.tag == N2Tag::Fslash) {
        require(!f.gamma.is_zero(), "gamma is zero");
        R.set_vertex(1, f.alpha);
        R.set_vertex(2, f.beta);
        R.set_block(1, 2, { 0, f.gamma * f.chi, f.gamma / f.chi, 0 });
        return R;
    }
    require(!(f.alpha + f.beta).is_zero(), "alpha + beta is zero");
    const bool equal_vertices = f.tag == N2Tag::Ff || f.tag == N2Tag::Ffbar;
    if (equal_vertices) {
        require(f.alpha != f.beta, "alpha equals beta in an f-type family");
    }
    R.set_vertex(1, f.alpha);
    R.set_vertex(2, equal_vertices ? f.alpha : f.beta);
    const ExactComplex low = -(f.alpha * f.beta) / f.chi;
    const bool top_first = f.tag == N2Tag::Ff || f.tag == N2Tag::Fa;
    R.set_block(1, 2, top_first ? Block2{ f.alpha + f.beta, f.chi, low, 0 } : Block2{ 0, f.chi, low, f.alpha + f.beta });
    return R;
}

enum class AnofCase { I_a, I_abar, III, IV };

struct AnofParams {
    ExactComplex A1{ 1 };
    ExactComplex A2{ 1 };
    ExactComplex c{ 1 };
    ExactComplex mu{ 1 };
    ExactComplex C{ 1 };
    ExactComplex alpha{ 1 };
    int sign{ 1 };
};

/**
 * @brief Rank-2 loop-braid solutions (S, R).
 *
 * I_a:   S = sign diag(1, 1/c, c, -1) P,  R = (A1; [[A1+A2, A1/c], [-c A2, 0]]; A2).
 * I_abar: same S, R block [[0, A1/c], [-c A2, A1+A2]].
 * III:   S = sign I, R = alpha I.
 * IV:    S = diag(1, 1/c, c, sign) P,  R = (A1; [[0, mu/(C c)], [mu C c, 0]]; A2).
 */
inline Pair anof_solution(AnofCase which, const AnofParams &x) {
    const auto require = [](bool ok, const std::string &what) {
        if (!ok) {
            throw Error(ErrorKind::ConstraintViolated, what);
        }
    };
    require(x.sign == 1 || x.sign == -1, "sign must be +1 or -1");
    const ExactComplex eps{ x.sign };
    Pair out{ AlphaForm(2), AlphaForm(2) };
    switch (which) {
        case AnofCase::I_a:
        case AnofCase::I_abar: {
            require(!x.A1.is_zero() && !x.A2.is_zero(), "A1 and A2 must be nonzero");
            require(!(x.A1 + x.A2).is_zero(), "A1 + A2 is zero");
            require(!x.c.is_zero(), "c is zero");
            out.S.set_vertex(1, eps);
            out.S.set_vertex(2, -eps);
            out.S.set_block(1, 2, { 0, eps / x.c, eps * x.c, 0 });
            out.R.set_vertex(1, x.A1);
            out.R.set_vertex(2, x.A2);
            const ExactComplex sum = x.A1 + x.A2;
            out.R.set_block(1, 2, which == AnofCase::I_a ? Block2{ sum, x.A1 / x.c, -(x.c * x.A2), 0 } : Block2{ 0, x.A1 / x.c, -(x.c * x.A2), sum });
            return out;
        }
        case AnofCase::III: {
            require(!x.alpha.is_zero(), "alpha is zero");
            out.S.set_vertex(1, eps);
            out.S.set_vertex(2, eps);
            out.S.set_block(1, 2, Block2::scalar(eps));
            out.R.set_vertex(1, x.alpha);
            out.R.set_vertex(2, x.alpha);
            out.R.set_block(1, 2, Block2::scalar(x.alpha));
            return out;
        }
        case AnofCase::IV: {
            require(!x.A1.is_zero() && !x.A2.is_zero() && !x.C.is_zero() && !x.mu.is_zero() && !x.c.is_zero(), "A1, A2, C, mu, c must be nonzero");
            out.S.set_vertex(1, 1);
            out.S.set_vertex(2, eps);
            out.S.set_block(1, 2, { 0, x.c.inv(), x.c, 0 });
            out.R.set_vertex(1, x.A1);
            out.R.set_vertex(2, x.A2);
            out.R.set_block(1, 2, { 0, x.mu / (x.C * x.c), x.mu * x.C * x.c, 0 });
            return out;
        }
    }
    return out;
}

/// Result of searching for an S completing a rank-2 braid matrix R.
struct Extension {
    N2Tag family{ N2Tag::F0 };
    AnofCase anof_case{ AnofCase::III };
    /// Forced gauge parameter c (types a and abar); empty when c is free.
    std::optional<ExactComplex> locked_c;
    /// One completing S (c = 1 when free, overall sign +1).
    AlphaForm S;
};

/**
 * @brief Classifies a rank-2 R into the braid families and returns the completing S family.
 *
 * Returns none for the f and fbar families, which admit no completion. Throws
 * NotABraidSolution for matrices outside the six families.
 */
inline std::optional<Extension> search_extension(const AlphaForm &R) {
    if (R.rank() != 2) {
        throw Error(ErrorKind::InvalidRank, "search_extension expects rank 2");
    }
    const ExactComplex &a1 = R.vertex(1);
    const ExactComplex &a2 = R.vertex(2);
    const Block2 blk = R.block(1, 2);
    if (a1.is_zero() || a2.is_zero() || blk.det().is_zero()) {
        throw Error(ErrorKind::NotInvertible, "R is singular");
    }
    AlphaForm S(2);
    if (blk.is_scalar()) {
        if (a1 == a2 && blk.a == a1) {
            return Extension{ N2Tag::F0, AnofCase::III, std::nullopt, S };
        }
        throw Error(ErrorKind::NotABraidSolution, "scalar block with unequal vertex data");
    }
    if (blk.is_antidiagonal()) {
        S.set_block(1, 2, Block2::swap());
        return Extension{ N2Tag::Fslash, AnofCase::IV, std::nullopt, S };
    }
    const bool first = blk.d.is_zero() && !blk.a.is_zero();
    const bool second = blk.a.is_zero() && !blk.d.is_zero();
    if (first || second) {
        const ExactComplex &diag = first ? blk.a : blk.d;
        if (diag == a1 + a2 && blk.b * blk.c == -(a1 * a2)) {
            const ExactComplex c = a1 / blk.b;
            S.set_vertex(2, -1);
            S.set_block(1, 2, { 0, c.inv(), c, 0 });
            return Extension{ first ? N2Tag::Fa : N2Tag::Fabar, first ? AnofCase::I_a : AnofCase::I_abar, c, S };
        }
        if (a1 == a2 && blk.b * blk.c == -(a1 * (diag - a1))) {
            return std::nullopt;
        }
    }
    throw Error(ErrorKind::NotABraidSolution, "R lies in none of the six rank-2 braid families");
}

}  // namespace loopbraid
