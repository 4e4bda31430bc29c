/**
 * @file
 * @brief Reading a verified pair (S, R) back into its index: labelled shape, parameters and
 *        gauge; deciding gauge equivalence; and canonical forms under relabelling and gauge.
 */

#pragma once

#include "loopbraid/combinatorics.hpp"
#include "loopbraid/error.hpp"
#include "loopbraid/matchcat.hpp"
#include "loopbraid/recipe.hpp"
#include "loopbraid/relations.hpp"
#include "loopbraid/scalar.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace loopbraid {

enum class EdgeType { Zero, Slash, A_topFirst, A_topSecond };

inline std::string to_string(EdgeType t) {
    switch (t) {
        case EdgeType::Zero: return "Zero";
        case EdgeType::Slash: return "Slash";
        case EdgeType::A_topFirst: return "A_topFirst";
        case EdgeType::A_topSecond: return "A_topSecond";
    }
    return "?";
}

/// Type of a rank-2 pair, read from the R block and vertices and the shape of the S block.
inline EdgeType edge_type(const Pair &p) {
    if (p.S.rank() != 2 || p.R.rank() != 2) {
        throw Error(ErrorKind::InvalidRank, "edge_type expects a rank-2 pair");
    }
    const Block2 r = p.R.block(1, 2);
    const Block2 s = p.S.block(1, 2);
    const ExactComplex &v1 = p.R.vertex(1);
    const ExactComplex &v2 = p.R.vertex(2);
    if (r.is_scalar() && v1 == r.a && v2 == r.a && s.is_scalar() && (s.a == 1 || s.a == -1)) {
        return EdgeType::Zero;
    }
    const bool s_swaplike = s.is_antidiagonal() && (s.b * s.c).is_one();
    if (r.is_antidiagonal() && !r.b.is_zero() && !r.c.is_zero() && s_swaplike) {
        return EdgeType::Slash;
    }
    const bool first = r.d.is_zero() && !r.a.is_zero();
    const bool second = r.a.is_zero() && !r.d.is_zero();
    if (first || second) {
        const ExactComplex &diag = first ? r.a : r.d;
        if (diag == v1 + v2 && r.b * r.c == -(v1 * v2) && s_swaplike) {
            return first ? EdgeType::A_topFirst : EdgeType::A_topSecond;
        }
        if (v1 == v2 && r.b * r.c == -(v1 * (diag - v1))) {
            throw Error(ErrorKind::FTypeDetected, "block has the f-family form, which admits no loop-braid extension");
        }
    }
    throw Error(ErrorKind::Unclassifiable, "rank-2 restriction matches no loop-braid solution form");
}

/// Invariant data of a nation pair; mu and C are present when p*q has a square root in Q(i).
struct PairData {
    ExactComplex p;
    ExactComplex q;
    std::optional<ExactComplex> mu;
    std::optional<ExactComplex> C;
};

struct Classification {
    LabelledShape shape;
    std::vector<NationParams> nations;
    std::map<std::pair<int, int>, PairData> pairs;
    GaugeMap gauge;
    /// Restriction map onto the canonical labelling of shape_of(shape).
    std::vector<int> perm;

    [[nodiscard]] InvariantPoint invariants() const {
        InvariantPoint x{ nations, {} };
        for (const auto &[st, d] : pairs) {
            x.pairs[st] = { d.p, d.q };
        }
        return x;
    }

    /// The (mu, C) form, when every pair admits it.
    [[nodiscard]] std::optional<ParamPoint> param_point() const {
        ParamPoint x{ nations, {} };
        for (const auto &[st, d] : pairs) {
            if (!d.mu || !d.C) {
                return std::nullopt;
            }
            x.pairs[st] = { *d.mu, *d.C };
        }
        return x;
    }
};

namespace detail {

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n) + 1) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

  private:
    std::vector<int> parent_;
};

[[noreturn]] inline void inconsistent(const std::string &what) { throw Error(ErrorKind::InconsistentParameters, what); }

/// Permutation sending each individual of lambda to its label in the canonical labelling.
inline std::vector<int> to_canonical(const LabelledShape &lambda) {
    const LabelledShape canon = canonical_labelling(shape_of(lambda));
    std::vector<int> sigma(static_cast<std::size_t>(lambda.rank), 0);
    for (std::size_t s = 0; s < lambda.nation_count(); ++s) {
        const Nation &from = lambda.nation(s);
        const Nation &to = canon.nation(s);
        for (std::size_t e = 0; e < from.top.size(); ++e) {
            sigma[static_cast<std::size_t>(from.top[e] - 1)] = to.top[e];
        }
        for (std::size_t e = 0; e < from.bottom.size(); ++e) {
            sigma[static_cast<std::size_t>(from.bottom[e] - 1)] = to.bottom[e];
        }
    }
    if (perm_action(sigma, lambda) != canon) {
        inconsistent("relabelling does not reach the canonical labelling");
    }
    return sigma;
}

}  // namespace detail

/**
 * @brief Recovers (shape, parameters, gauge) of a verified pair.
 *
 * Nations are the components of the Zero and A edges; A edges split a nation into its two
 * counties, oriented by the tag. The gauge on every non-Zero edge is the upper off-diagonal of
 * the S block; de-gauged R blocks between nations give the pair invariants (p, q). The result
 * is checked by rebuilding the pair from the recovered data.
 */
inline Classification interrogate(const AlphaForm &S, const AlphaForm &R) {
    const RelationReport rep = verify_pair(S, R, Method::Subsets);
    if (!rep.all_hold()) {
        throw Error(ErrorKind::NotARepresentation, "pair fails the defining relations");
    }
    const int N = S.rank();
    std::map<std::pair<int, int>, EdgeType> types;
    detail::UnionFind uf(N);
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            const EdgeType t = edge_type(restrict(Pair{ S, R }, { i, j }));
            types[{ i, j }] = t;
            if (t != EdgeType::Slash) {
                uf.unite(i, j);
            }
        }
    }
    // two-colour each nation: Zero keeps the county, A switches it
    std::vector<int> colour(static_cast<std::size_t>(N) + 1, -1);
    std::map<int, int> top_colour;
    for (int i = 1; i <= N; ++i) {
        if (colour[static_cast<std::size_t>(i)] >= 0) {
            continue;
        }
        colour[static_cast<std::size_t>(i)] = 0;
        std::vector<int> stack{ i };
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y = 1; y <= N; ++y) {
                if (y == x) {
                    continue;
                }
                const EdgeType t = types.at({ std::min(x, y), std::max(x, y) });
                if (t == EdgeType::Slash) {
                    if (uf.find(x) == uf.find(y)) {
                        detail::inconsistent("Slash edge (" + std::to_string(std::min(x, y)) + "," + std::to_string(std::max(x, y)) + ") inside a nation");
                    }
                    continue;
                }
                const int want = t == EdgeType::Zero ? colour[static_cast<std::size_t>(x)] : 1 - colour[static_cast<std::size_t>(x)];
                if (colour[static_cast<std::size_t>(y)] < 0) {
                    colour[static_cast<std::size_t>(y)] = want;
                    stack.push_back(y);
                } else if (colour[static_cast<std::size_t>(y)] != want) {
                    detail::inconsistent("county assignment is not two-colourable at individual " + std::to_string(y));
                }
            }
        }
    }
    for (const auto &[e, t] : types) {
        if (t != EdgeType::A_topFirst && t != EdgeType::A_topSecond) {
            continue;
        }
        const int top = t == EdgeType::A_topFirst ? e.first : e.second;
        const int root = uf.find(top);
        const int c = colour[static_cast<std::size_t>(top)];
        const auto [it, fresh] = top_colour.emplace(root, c);
        if (!fresh && it->second != c) {
            detail::inconsistent("A edges disagree on the top county of a nation");
        }
    }
    // assemble nations keyed by root
    std::map<int, Nation> by_root;
    for (int i = 1; i <= N; ++i) {
        const int root = uf.find(i);
        const auto it = top_colour.find(root);
        const int tc = it == top_colour.end() ? colour[static_cast<std::size_t>(root)] : it->second;
        (colour[static_cast<std::size_t>(i)] == tc ? by_root[root].top : by_root[root].bottom).push_back(i);
    }
    LabelledShape shape;
    shape.rank = N;
    std::map<int, std::pair<int, NationParams>> nation_data;  // root -> (sign, params)
    for (auto &[root, nation] : by_root) {
        const int lead = nation.top.front();
        const ExactComplex &sv = S.vertex(lead);
        if (!(sv == 1 || sv == -1)) {
            detail::inconsistent("S vertex of individual " + std::to_string(lead) + " is not a sign");
        }
        const int sgn = sv == 1 ? 1 : -1;
        NationParams np{ R.vertex(lead), std::nullopt };
        for (const int i : nation.top) {
            if (S.vertex(i) != sv || R.vertex(i) != np.alpha) {
                detail::inconsistent("top county of individual " + std::to_string(lead) + " is not uniform at " + std::to_string(i));
            }
        }
        if (!nation.bottom.empty()) {
            np.beta = R.vertex(nation.bottom.front());
            for (const int i : nation.bottom) {
                if (S.vertex(i) != -sv || R.vertex(i) != *np.beta) {
                    detail::inconsistent("bottom county is not uniform at " + std::to_string(i));
                }
            }
        }
        nation_data[root] = { sgn, np };
        (sgn == 1 ? shape.plus : shape.minus).push_back(nation);
    }
    shape = normalize(std::move(shape));
    Classification out;
    out.shape = shape;
    std::vector<int> nation_of(static_cast<std::size_t>(N) + 1, 0);
    for (std::size_t s = 0; s < shape.nation_count(); ++s) {
        const Nation &n = shape.nation(s);
        out.nations.push_back(nation_data.at(uf.find(n.top.front())).second);
        for (const int i : n.top) {
            nation_of[static_cast<std::size_t>(i)] = static_cast<int>(s) + 1;
        }
        for (const int i : n.bottom) {
            nation_of[static_cast<std::size_t>(i)] = static_cast<int>(s) + 1;
        }
    }
    for (const auto &[e, t] : types) {
        if (t == EdgeType::Zero) {
            continue;
        }
        const ExactComplex m = S.block(e.first, e.second).b;
        out.gauge[e] = m;
        if (t != EdgeType::Slash) {
            continue;
        }
        const Block2 r = R.block(e.first, e.second);
        const ExactComplex upper = r.b / m;
        const ExactComplex lower = r.c * m;
        const int s = nation_of[static_cast<std::size_t>(e.first)];
        const int u = nation_of[static_cast<std::size_t>(e.second)];
        const std::pair<int, int> key{ std::min(s, u), std::max(s, u) };
        const PairData d = s < u ? PairData{ lower, upper, {}, {} } : PairData{ upper, lower, {}, {} };
        const auto [it, fresh] = out.pairs.emplace(key, d);
        if (!fresh && (it->second.p != d.p || it->second.q != d.q)) {
            detail::inconsistent("nation pair (" + std::to_string(key.first) + "," + std::to_string(key.second) + ") has edge-dependent invariants");
        }
    }
    for (auto &[key, d] : out.pairs) {
        if (const auto root = exact_sqrt(d.p * d.q)) {
            d.mu = *root;
            d.C = d.p / *root;
        }
    }
    if (!(gauge_transform(make_recipe(out.shape, out.invariants()), out.gauge) == Pair{ S, R })) {
        detail::inconsistent("recovered data does not rebuild the input pair");
    }
    out.perm = inverse_permutation(detail::to_canonical(out.shape));
    return out;
}

inline Classification interrogate(const Pair &p) { return interrogate(p.S, p.R); }

/**
 * @brief Finds m with gauge_transform(A, m) = B on both members, if one exists.
 *
 * The candidate factor on each edge comes from the first nonzero off-diagonal entry; the final
 * comparison is exact, so a returned map is always a certificate.
 */
inline std::optional<GaugeMap> x_equivalent(const Pair &A, const Pair &B) {
    const int N = A.S.rank();
    if (A.R.rank() != N || B.S.rank() != N || B.R.rank() != N) {
        throw Error(ErrorKind::RankMismatch, "x_equivalent on pairs of different rank");
    }
    GaugeMap m;
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            std::optional<ExactComplex> factor;
            for (const auto &[a, b] : { std::pair{ A.S.block(i, j), B.S.block(i, j) }, std::pair{ A.R.block(i, j), B.R.block(i, j) } }) {
                if (factor) {
                    break;
                }
                if (!a.b.is_zero()) {
                    factor = b.b / a.b;
                } else if (!a.c.is_zero() && !b.c.is_zero()) {
                    factor = a.c / b.c;
                }
            }
            if (factor && factor->is_zero()) {
                return std::nullopt;
            }
            m[{ i, j }] = factor.value_or(ExactComplex{ 1 });
        }
    }
    if (!(gauge_transform(A, m) == B)) {
        return std::nullopt;
    }
    return m;
}

struct Canonical {
    SignedShape shape;
    LabelledShape labelled;
    /// Restriction map taking the input onto the canonical labelling.
    std::vector<int> perm;
    /// Gauge taking the restricted input onto the recipe output.
    GaugeMap gauge;
    Classification classification;
};

/**
 * @brief Canonical form under relabelling and gauge.
 *
 * gauge_transform(restrict(input, perm), gauge) equals make_recipe(labelled, params), with the
 * parameters of the classification carried over index by index.
 */
inline Canonical canonicalize(const AlphaForm &S, const AlphaForm &R) {
    Classification cls = interrogate(S, R);
    Canonical out;
    out.shape = shape_of(cls.shape);
    out.labelled = canonical_labelling(out.shape);
    out.perm = cls.perm;
    const Pair target = make_recipe(out.labelled, cls.invariants());
    const auto m = x_equivalent(restrict(Pair{ S, R }, out.perm), target);
    if (!m) {
        detail::inconsistent("relabelled input is not gauge equivalent to the canonical recipe");
    }
    out.gauge = *m;
    out.classification = std::move(cls);
    return out;
}

inline Canonical canonicalize(const Pair &p) { return canonicalize(p.S, p.R); }

}  // namespace loopbraid
