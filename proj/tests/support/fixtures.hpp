// Worked-example fixtures transcribed from the displayed alpha-forms.
#pragma once

#include "loopbraid/loopbraid.hpp"

#include <array>
#include <vector>

namespace testsupport {

using namespace loopbraid;

inline Block2 typo(const ExactComplex &a) { return Block2::scalar(a); }
inline Block2 typa(const ExactComplex &a, const ExactComplex &b) { return { a + b, a, -b, 0 }; }
inline Block2 typax(const ExactComplex &a, const ExactComplex &b) { return { 0, -b, a, a + b }; }
inline Block2 typay(const ExactComplex &a, const ExactComplex &b) { return { a + b, -a, b, 0 }; }
inline Block2 typs(const ExactComplex &mu, const ExactComplex &C) { return { 0, mu / C, mu * C, 0 }; }
inline Block2 swp() { return Block2::swap(); }
inline Block2 eye(const ExactComplex &s = 1) { return Block2::scalar(s); }

/// Rank-3 alpha-form from vertex list and blocks on (1,2), (1,3), (2,3).
inline AlphaForm alpha3(std::array<ExactComplex, 3> v, std::array<Block2, 3> b) {
    AlphaForm F(3);
    for (int i = 0; i < 3; ++i) {
        F.set_vertex(i + 1, v[static_cast<std::size_t>(i)]);
    }
    F.set_block(1, 2, b[0]);
    F.set_block(1, 3, b[1]);
    F.set_block(2, 3, b[2]);
    return F;
}

inline Nation nat(std::vector<int> top, std::vector<int> bottom = {}) { return { std::move(top), std::move(bottom) }; }

inline LabelledShape lshape(std::vector<Nation> plus, std::vector<Nation> minus) {
    LabelledShape l{ std::move(plus), std::move(minus), 0 };
    for (const auto *ns : { &l.plus, &l.minus }) {
        for (const auto &n : *ns) {
            l.rank += n.size();
        }
    }
    return normalize(l);
}

/// The single two-county example (<1 2/3>,) with generic alpha, beta.
inline Pair example_123(const ExactComplex &a, const ExactComplex &b) {
    return { alpha3({ 1, 1, -1 }, { eye(), swp(), swp() }), alpha3({ a, a, b }, { typo(a), typa(a, b), typa(a, b) }) };
}

/// The same shape relabelled by (2 3).
inline Pair example_f23(const ExactComplex &a, const ExactComplex &b) {
    return { alpha3({ 1, -1, 1 }, { swp(), eye(), swp() }), alpha3({ a, b, a }, { typa(a, b), typo(a), typax(a, b) }) };
}

/// The first-draft non-solution on <1 3/2>; sign selects the S block on (2,3).
inline Pair non_example(const ExactComplex &a, const ExactComplex &b, int sign) {
    return { alpha3({ 1, -1, 1 }, { swp(), eye(), { 0, sign, sign, 0 } }), alpha3({ a, b, a }, { typa(a, b), typo(a), typa(a, b) }) };
}

/// The minus-sign example (, <1 2/3>).
inline Pair example_minus(const ExactComplex &a, const ExactComplex &b) {
    return { alpha3({ -1, -1, 1 }, { eye(-1), swp(), swp() }), alpha3({ a, a, b }, { typo(a), typay(a, b), typay(a, b) }) };
}

/// The cautionary non-solution: minus signs on S with the plus-sign R blocks.
inline Pair cautionary(const ExactComplex &a, const ExactComplex &b) {
    return { alpha3({ -1, -1, 1 }, { eye(-1), swp(), swp() }), alpha3({ a, a, b }, { typo(a), typa(a, b), typa(a, b) }) };
}

/// (<1/2>, <3>) with nation parameters (a1, b1), (a2) and pair (mu, C).
inline Pair example_f13(const ExactComplex &a1, const ExactComplex &b1, const ExactComplex &a2, const ExactComplex &mu, const ExactComplex &C) {
    return { alpha3({ 1, -1, -1 }, { swp(), swp(), swp() }), alpha3({ a1, b1, a2 }, { typa(a1, b1), typs(mu, C), typs(mu, C) }) };
}

/// (<3/2>, <1>); the pair read against nation order uses C_21 = 1/C_12.
inline Pair example_f13_moved(const ExactComplex &a1, const ExactComplex &b1, const ExactComplex &a2, const ExactComplex &mu, const ExactComplex &C) {
    return { alpha3({ -1, -1, 1 }, { swp(), swp(), swp() }), alpha3({ a2, b1, a1 }, { typs(mu, C.inv()), typs(mu, C.inv()), typax(a1, b1) }) };
}

/// (<1/3>, <2>) with the vertex list the rules produce.
inline Pair example_f13_swapped(const ExactComplex &a1, const ExactComplex &b1, const ExactComplex &a2, const ExactComplex &mu, const ExactComplex &C) {
    return { alpha3({ 1, -1, -1 }, { swp(), swp(), swp() }), alpha3({ a1, a2, b1 }, { typs(mu, C), typa(a1, b1), typs(mu, C.inv()) }) };
}

}  // namespace testsupport
