// Hand-rolled random generators for property tests.
#pragma once

#include "loopbraid/loopbraid.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace testsupport {

using namespace loopbraid;

class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_{ seed } {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }
    std::uint64_t seed() { return rng_(); }

    Rational rational(int bound = 6) {
        const int den = uniform(1, bound);
        Rational q{ uniform(-bound, bound), den };
        q.canonicalize();
        return q;
    }

    ExactComplex scalar(int bound = 6) { return { rational(bound), rational(bound) }; }

    ExactComplex nonzero(int bound = 6) {
        while (true) {
            ExactComplex x = scalar(bound);
            if (!x.is_zero()) {
                return x;
            }
        }
    }

    ExactComplex small_int(int bound = 3) { return { Rational{ uniform(-bound, bound) }, Rational{ uniform(-bound, bound) } }; }

    /// Arbitrary alpha-form with small Gaussian-integer entries, zeros allowed.
    AlphaForm alpha(int N, int bound = 3) {
        AlphaForm F(N);
        for (int i = 1; i <= N; ++i) {
            F.set_vertex(i, small_int(bound));
            for (int j = i + 1; j <= N; ++j) {
                F.set_block(i, j, { small_int(bound), small_int(bound), small_int(bound), small_int(bound) });
            }
        }
        return F;
    }

    std::vector<int> permutation(int N) {
        std::vector<int> w(static_cast<std::size_t>(N));
        std::iota(w.begin(), w.end(), 1);
        std::shuffle(w.begin(), w.end(), rng_);
        return w;
    }

    std::vector<int> transposition(int N) {
        std::vector<int> w(static_cast<std::size_t>(N));
        std::iota(w.begin(), w.end(), 1);
        if (N >= 2) {
            const int a = uniform(0, N - 1);
            int b = uniform(0, N - 2);
            if (b >= a) {
                ++b;
            }
            std::swap(w[static_cast<std::size_t>(a)], w[static_cast<std::size_t>(b)]);
        }
        return w;
    }

    GaugeMap gauge(int N) {
        GaugeMap m;
        for (int i = 1; i <= N; ++i) {
            for (int j = i + 1; j <= N; ++j) {
                m[{ i, j }] = nonzero(4);
            }
        }
        return m;
    }

    SignedShape signed_shape(int N) {
        const auto all = enum_signed(N);
        return all[static_cast<std::size_t>(uniform(0, static_cast<int>(all.size()) - 1))];
    }

    /// A random labelled shape of rank N: canonical labelling of a random signed shape, then relabelled.
    LabelledShape labelled_shape(int N) { return perm_action(permutation(N), canonical_labelling(signed_shape(N))); }

    /// Adds 1 to one randomly chosen block entry of R or S.
    Pair perturb(Pair p) {
        const int N = p.R.rank();
        if (N < 2) {
            p.R.set_vertex(1, p.R.vertex(1) + 1);
            return p;
        }
        const int i = uniform(1, N - 1);
        const int j = uniform(i + 1, N);
        AlphaForm &F = coin() ? p.R : p.S;
        Block2 b = F.block(i, j);
        switch (uniform(0, 3)) {
            case 0: b.a += 1; break;
            case 1: b.b += 1; break;
            case 2: b.c += 1; break;
            default: b.d += 1; break;
        }
        F.set_block(i, j, b);
        return p;
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace testsupport
