/**
 * @file
 * @brief Index sets for solution varieties: two-part compositions, signed multisets,
 *        labelled shapes, canonical labelling, the symmetric-group action, and counting.
 */

#pragma once

#include "loopbraid/error.hpp"
#include "loopbraid/scalar.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace loopbraid {

/// A two-part composition (top, bottom) with top >= 1.
struct Composition2 {
    int top{ 1 };
    int bottom{ 0 };

    [[nodiscard]] int total() const noexcept { return top + bottom; }

    /// Total order: ascending total, then ascending bottom.
    friend std::strong_ordering operator<=>(const Composition2 &a, const Composition2 &b) noexcept {
        if (const auto c = a.total() <=> b.total(); c != 0) {
            return c;
        }
        return a.bottom <=> b.bottom;
    }
    friend bool operator==(const Composition2 &, const Composition2 &) noexcept = default;
};

/// Sorted (composition, multiplicity) list with positive multiplicities.
using Multiset = std::vector<std::pair<Composition2, int>>;

inline int degree(const Multiset &m) {
    int d = 0;
    for (const auto &[c, k] : m) {
        d += c.total() * k;
    }
    return d;
}

/// Builds a canonical multiset from a list of parts in any order.
inline Multiset make_multiset(std::vector<Composition2> parts) {
    std::sort(parts.begin(), parts.end());
    Multiset out;
    for (const auto &p : parts) {
        if (p.top < 1 || p.bottom < 0) {
            throw Error(ErrorKind::InvalidRank, "composition needs top >= 1 and bottom >= 0");
        }
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.emplace_back(p, 1);
        }
    }
    return out;
}

/// Expands a multiset into its parts in ascending order.
inline std::vector<Composition2> parts_of(const Multiset &m) {
    std::vector<Composition2> out;
    for (const auto &[c, k] : m) {
        out.insert(out.end(), static_cast<std::size_t>(k), c);
    }
    return out;
}

struct SignedShape {
    Multiset plus;
    Multiset minus;

    [[nodiscard]] int rank() const { return degree(plus) + degree(minus); }

    friend auto operator<=>(const SignedShape &, const SignedShape &) = default;
    friend bool operator==(const SignedShape &, const SignedShape &) = default;
};

/// A nation: a non-empty top county and a possibly empty bottom county of individuals.
struct Nation {
    std::vector<int> top;
    std::vector<int> bottom;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(top.size() + bottom.size()); }
    [[nodiscard]] int min_resident() const {
        int m = top.empty() ? 0 : *std::min_element(top.begin(), top.end());
        for (const int b : bottom) {
            m = std::min(m, b);
        }
        return m;
    }

    friend auto operator<=>(const Nation &, const Nation &) = default;
    friend bool operator==(const Nation &, const Nation &) = default;
};

/**
 * @brief Element of the labelled index set: signed collection of nations partitioning 1..N.
 *
 * Stored normalized: every county sorted ascending, and within each sign the nations sorted by
 * (size, bottom size, lowest resident).
 */
struct LabelledShape {
    std::vector<Nation> plus;
    std::vector<Nation> minus;
    int rank{ 0 };

    [[nodiscard]] std::size_t nation_count() const noexcept { return plus.size() + minus.size(); }

    /// Nation by 0-based index in normalized order: plus nations first, then minus.
    [[nodiscard]] const Nation &nation(std::size_t s) const { return s < plus.size() ? plus[s] : minus[s - plus.size()]; }
    [[nodiscard]] int sign_of_nation(std::size_t s) const noexcept { return s < plus.size() ? 1 : -1; }

    friend auto operator<=>(const LabelledShape &, const LabelledShape &) = default;
    friend bool operator==(const LabelledShape &, const LabelledShape &) = default;
};

namespace detail {

inline bool nation_less(const Nation &a, const Nation &b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    if (a.bottom.size() != b.bottom.size()) {
        return a.bottom.size() < b.bottom.size();
    }
    return a.min_resident() < b.min_resident();
}

inline void normalize_nations(std::vector<Nation> &nations) {
    for (auto &n : nations) {
        std::sort(n.top.begin(), n.top.end());
        std::sort(n.bottom.begin(), n.bottom.end());
    }
    std::sort(nations.begin(), nations.end(), nation_less);
}

}  // namespace detail

/// Sorts counties and nations and validates that the counties partition 1..rank.
inline LabelledShape normalize(LabelledShape shape) {
    detail::normalize_nations(shape.plus);
    detail::normalize_nations(shape.minus);
    std::vector<int> seen(static_cast<std::size_t>(std::max(shape.rank, 0)) + 1, 0);
    const auto mark = [&](const std::vector<Nation> &nations) {
        for (const auto &n : nations) {
            if (n.top.empty()) {
                throw Error(ErrorKind::SizeMismatch, "nation with empty top county");
            }
            for (const auto *county : { &n.top, &n.bottom }) {
                for (const int i : *county) {
                    if (i < 1 || i > shape.rank) {
                        throw Error(ErrorKind::IndexOutOfRange, "individual " + std::to_string(i) + " outside 1.." + std::to_string(shape.rank));
                    }
                    if (seen[static_cast<std::size_t>(i)]++ != 0) {
                        throw Error(ErrorKind::SizeMismatch, "individual " + std::to_string(i) + " appears twice");
                    }
                }
            }
        }
    };
    mark(shape.plus);
    mark(shape.minus);
    for (int i = 1; i <= shape.rank; ++i) {
        if (seen[static_cast<std::size_t>(i)] == 0) {
            throw Error(ErrorKind::SizeMismatch, "individual " + std::to_string(i) + " missing");
        }
    }
    return shape;
}

/// Compositions of total k, ascending in bottom: (k,0), (k-1,1), ..., (1,k-1).
inline std::vector<Composition2> enum_compositions2(int k) {
    if (k < 1) {
        throw Error(ErrorKind::InvalidRank, "composition total must be >= 1");
    }
    std::vector<Composition2> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int b = 0; b < k; ++b) {
        out.push_back({ k - b, b });
    }
    return out;
}

/// All multisets of degree N, in lexicographic order of their ascending part sequences.
inline std::vector<Multiset> enum_multisets(int N) {
    std::vector<Multiset> out;
    if (N < 0) {
        return out;
    }
    std::vector<Composition2> all;
    for (int k = 1; k <= N; ++k) {
        for (const auto &c : enum_compositions2(k)) {
            all.push_back(c);
        }
    }
    std::vector<Composition2> current;
    const auto dfs = [&](auto &&self, std::size_t first, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(make_multiset(current));
            return;
        }
        for (std::size_t idx = first; idx < all.size(); ++idx) {
            if (all[idx].total() > remaining) {
                break;
            }
            current.push_back(all[idx]);
            self(self, idx, remaining - all[idx].total());
            current.pop_back();
        }
    };
    dfs(dfs, 0, N);
    return out;
}

/// All signed shapes of degree N: plus degree from N down to 0, then plus outer, minus inner.
inline std::vector<SignedShape> enum_signed(int N) {
    std::vector<SignedShape> out;
    for (int p = N; p >= 0; --p) {
        const auto plus = enum_multisets(p);
        const auto minus = enum_multisets(N - p);
        for (const auto &f : plus) {
            for (const auto &g : minus) {
                out.push_back({ f, g });
            }
        }
    }
    return out;
}

struct CountSeries {
    std::vector<BigInt> unsigned_counts;
    std::vector<BigInt> signed_counts;
};

/// Coefficients of prod_k (1 - x^k)^(-k) and of its square, up to x^maxN.
inline CountSeries count_series(int maxN) {
    if (maxN < 0) {
        throw Error(ErrorKind::InvalidRank, "maxN must be >= 0");
    }
    const auto n = static_cast<std::size_t>(maxN);
    std::vector<BigInt> f(n + 1, 0);
    f[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // multiply by 1/(1 - x^k), k times
        for (std::size_t rep = 0; rep < k; ++rep) {
            for (std::size_t d = k; d <= n; ++d) {
                f[d] += f[d - k];
            }
        }
    }
    std::vector<BigInt> g(n + 1, 0);
    for (std::size_t a = 0; a <= n; ++a) {
        for (std::size_t b = 0; a + b <= n; ++b) {
            g[a + b] += f[a] * f[b];
        }
    }
    return { std::move(f), std::move(g) };
}

/// Fills 1..N nation by nation (plus first), top county then bottom county.
inline LabelledShape canonical_labelling(const SignedShape &shape) {
    LabelledShape out;
    int next = 1;
    const auto fill = [&](const Multiset &m, std::vector<Nation> &dst) {
        for (const auto &c : parts_of(m)) {
            Nation n;
            for (int k = 0; k < c.top; ++k) {
                n.top.push_back(next++);
            }
            for (int k = 0; k < c.bottom; ++k) {
                n.bottom.push_back(next++);
            }
            dst.push_back(std::move(n));
        }
    };
    fill(shape.plus, out.plus);
    fill(shape.minus, out.minus);
    out.rank = next - 1;
    return normalize(std::move(out));
}

inline SignedShape shape_of(const LabelledShape &lambda) {
    const auto collect = [](const std::vector<Nation> &nations) {
        std::vector<Composition2> parts;
        for (const auto &n : nations) {
            parts.push_back({ static_cast<int>(n.top.size()), static_cast<int>(n.bottom.size()) });
        }
        return make_multiset(parts);
    };
    return { collect(lambda.plus), collect(lambda.minus) };
}

/// Checks that w (1-based images, w[i-1] = w(i)) is a permutation of 1..N.
inline void require_permutation(const std::vector<int> &w, int N) {
    if (static_cast<int>(w.size()) != N) {
        throw Error(ErrorKind::SizeMismatch, "permutation length " + std::to_string(w.size()) + " but rank " + std::to_string(N));
    }
    std::vector<char> hit(static_cast<std::size_t>(N) + 1, 0);
    for (const int x : w) {
        if (x < 1 || x > N || hit[static_cast<std::size_t>(x)] != 0) {
            throw Error(ErrorKind::SizeMismatch, "not a permutation of 1.." + std::to_string(N));
        }
        hit[static_cast<std::size_t>(x)] = 1;
    }
}

inline std::vector<int> inverse_permutation(const std::vector<int> &w) {
    std::vector<int> inv(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        inv[static_cast<std::size_t>(w[i] - 1)] = static_cast<int>(i) + 1;
    }
    return inv;
}

/// (v o w)(i) = v(w(i)).
inline std::vector<int> compose_permutations(const std::vector<int> &v, const std::vector<int> &w) {
    std::vector<int> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        out[i] = v[static_cast<std::size_t>(w[i] - 1)];
    }
    return out;
}

/// Replaces every individual i by w(i).
inline LabelledShape perm_action(const std::vector<int> &w, const LabelledShape &lambda) {
    require_permutation(w, lambda.rank);
    LabelledShape out = lambda;
    for (auto *nations : { &out.plus, &out.minus }) {
        for (auto &n : *nations) {
            for (auto &i : n.top) {
                i = w[static_cast<std::size_t>(i - 1)];
            }
            for (auto &i : n.bottom) {
                i = w[static_cast<std::size_t>(i - 1)];
            }
        }
    }
    return normalize(std::move(out));
}

/// The full labelled index set for rank N, sorted and deduplicated.
inline std::vector<LabelledShape> enum_labelled(int N) {
    if (N < 1) {
        throw Error(ErrorKind::InvalidRank, "rank must be >= 1");
    }
    std::vector<LabelledShape> out;
    std::vector<std::vector<int>> blocks;
    const auto emit_blocks = [&]() {
        // each block: choose a top county (non-empty subset) and a sign
        const std::size_t nb = blocks.size();
        std::vector<Nation> chosen(nb);
        const auto choose = [&](auto &&self, std::size_t b) -> void {
            if (b == nb) {
                for (std::size_t signs = 0; signs < (std::size_t{ 1 } << nb); ++signs) {
                    LabelledShape shape;
                    shape.rank = N;
                    for (std::size_t k = 0; k < nb; ++k) {
                        ((signs >> k) & 1U) == 0 ? shape.plus.push_back(chosen[k]) : shape.minus.push_back(chosen[k]);
                    }
                    out.push_back(normalize(std::move(shape)));
                }
                return;
            }
            const auto &blk = blocks[b];
            const std::size_t sz = blk.size();
            for (std::size_t mask = 1; mask < (std::size_t{ 1 } << sz); ++mask) {
                Nation n;
                for (std::size_t e = 0; e < sz; ++e) {
                    ((mask >> e) & 1U) != 0 ? n.top.push_back(blk[e]) : n.bottom.push_back(blk[e]);
                }
                chosen[b] = std::move(n);
                self(self, b + 1);
            }
        };
        choose(choose, 0);
    };
    const auto partitions = [&](auto &&self, int i) -> void {
        if (i > N) {
            emit_blocks();
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(i);
            self(self, i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({ i });
        self(self, i + 1);
        blocks.pop_back();
    };
    partitions(partitions, 1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Compact text form, e.g. "(<1 2/3>, <4>)"; counties separated by '/', signs by ','.
inline std::string to_string(const LabelledShape &lambda) {
    const auto nations = [](const std::vector<Nation> &ns) {
        std::string s;
        for (std::size_t k = 0; k < ns.size(); ++k) {
            if (k != 0) {
                s += ' ';
            }
            s += '<';
            for (std::size_t e = 0; e < ns[k].top.size(); ++e) {
                s += (e != 0 ? " " : "") + std::to_string(ns[k].top[e]);
            }
            if (!ns[k].bottom.empty()) {
                s += '/';
                for (std::size_t e = 0; e < ns[k].bottom.size(); ++e) {
                    s += (e != 0 ? " " : "") + std::to_string(ns[k].bottom[e]);
                }
            }
            s += '>';
        }
        return s;
    };
    return "(" + nations(lambda.plus) + "," + nations(lambda.minus) + ")";
}

/// Compact text form, e.g. "((1,0)^2 (1,1)^1,(3,0)^1)".
inline std::string to_string(const SignedShape &shape) {
    const auto ms = [](const Multiset &m) {
        std::string s;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (k != 0) {
                s += ' ';
            }
            s += "(" + std::to_string(m[k].first.top) + "," + std::to_string(m[k].first.bottom) + ")^" + std::to_string(m[k].second);
        }
        return s;
    };
    return "(" + ms(shape.plus) + "," + ms(shape.minus) + ")";
}

}  // namespace loopbraid
