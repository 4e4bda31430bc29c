/**
 * @file
 * @brief JSON encoding of every library value. Parsing is strict: unknown keys, wrong types and
 *        malformed scalars raise ParseError.
 */

#pragma once

#include "loopbraid/classifier.hpp"
#include "loopbraid/combinatorics.hpp"
#include "loopbraid/dense.hpp"
#include "loopbraid/error.hpp"
#include "loopbraid/matchcat.hpp"
#include "loopbraid/recipe.hpp"
#include "loopbraid/relations.hpp"
#include "loopbraid/scalar.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace loopbraid::io {

using Json = nlohmann::json;

/// Parses text as JSON, mapping syntax errors to ParseError.
inline Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

namespace detail {

[[noreturn]] inline void bad(const std::string &what) { throw Error(ErrorKind::ParseError, what); }

inline void require_object(const Json &j, const std::string &what, std::initializer_list<const char *> required, std::initializer_list<const char *> optional = {}) {
    if (!j.is_object()) {
        bad(what + " must be an object");
    }
    std::set<std::string> allowed;
    for (const char *k : required) {
        allowed.insert(k);
        if (!j.contains(k)) {
            bad(what + " lacks key '" + k + "'");
        }
    }
    for (const char *k : optional) {
        allowed.insert(k);
    }
    for (const auto &[key, value] : j.items()) {
        if (allowed.count(key) == 0) {
            bad(what + " has unknown key '" + key + "'");
        }
    }
}

inline const Json &require_array(const Json &j, const std::string &what) {
    if (!j.is_array()) {
        bad(what + " must be an array");
    }
    return j;
}

inline int as_int(const Json &j, const std::string &what) {
    if (!j.is_number_integer()) {
        bad(what + " must be an integer");
    }
    return j.get<int>();
}

inline std::vector<int> as_ints(const Json &j, const std::string &what) {
    std::vector<int> out;
    for (const auto &x : require_array(j, what)) {
        out.push_back(as_int(x, what + " entry"));
    }
    return out;
}

}  // namespace detail

/// Scalar decoding: {"re": "p/q", "im": "p/q"}, or a bare integer or "p/q" string for a real value.
/// Float import also accepts JSON numbers and rounds them.
struct ScalarReader {
    bool float_import{ false };
    double eps{ 1e-9 };
    long max_den{ 1000000 };

    [[nodiscard]] Rational part(const Json &j, const std::string &what) const {
        if (j.is_string()) {
            return parse_rational(j.get<std::string>());
        }
        if (j.is_number_integer()) {
            return Rational{ j.get<long>() };
        }
        if (float_import && j.is_number()) {
            const double x = j.get<double>();
            Rational r = nearest_rational(x, max_den);
            if (std::fabs(r.get_d() - x) > eps) {
                detail::bad(what + " value " + std::to_string(x) + " is farther than eps from any rational with denominator <= " + std::to_string(max_den));
            }
            return r;
        }
        detail::bad(what + " must be a rational string \"p/q\"");
    }

    [[nodiscard]] ExactComplex scalar(const Json &j, const std::string &what) const {
        if (j.is_string() || j.is_number_integer() || (float_import && j.is_number())) {
            return { part(j, what), Rational{ 0 } };
        }
        detail::require_object(j, what, { "re" }, { "im" });
        return { part(j.at("re"), what + ".re"), j.contains("im") ? part(j.at("im"), what + ".im") : Rational{ 0 } };
    }
};

inline Json to_json(const ExactComplex &x) { return Json{ { "re", render_rational(x.re()) }, { "im", render_rational(x.im()) } }; }

inline ExactComplex scalar_from_json(const Json &j, const ScalarReader &rd = {}) { return rd.scalar(j, "scalar"); }

inline Json to_json(const AlphaForm &F) {
    Json vertex = Json::array();
    for (int i = 1; i <= F.rank(); ++i) {
        vertex.push_back(to_json(F.vertex(i)));
    }
    Json edges = Json::array();
    for (int i = 1; i <= F.rank(); ++i) {
        for (int j = i + 1; j <= F.rank(); ++j) {
            const Block2 b = F.block(i, j);
            edges.push_back(Json{ { "i", i }, { "j", j }, { "block", Json::array({ Json::array({ to_json(b.a), to_json(b.b) }), Json::array({ to_json(b.c), to_json(b.d) }) }) } });
        }
    }
    return Json{ { "N", F.rank() }, { "vertex", vertex }, { "edges", edges } };
}

inline AlphaForm alpha_from_json(const Json &j, const ScalarReader &rd = {}) {
    detail::require_object(j, "alpha-form", { "N", "vertex", "edges" });
    const int N = detail::as_int(j.at("N"), "N");
    if (N < 1) {
        detail::bad("N must be >= 1");
    }
    AlphaForm F(N);
    const Json &vertex = detail::require_array(j.at("vertex"), "vertex");
    if (vertex.size() != static_cast<std::size_t>(N)) {
        detail::bad("vertex list has " + std::to_string(vertex.size()) + " entries for N = " + std::to_string(N));
    }
    for (int i = 1; i <= N; ++i) {
        F.set_vertex(i, rd.scalar(vertex[static_cast<std::size_t>(i - 1)], "vertex[" + std::to_string(i) + "]"));
    }
    std::set<std::pair<int, int>> seen;
    for (const auto &e : detail::require_array(j.at("edges"), "edges")) {
        detail::require_object(e, "edge", { "i", "j", "block" });
        const int a = detail::as_int(e.at("i"), "edge i");
        const int b = detail::as_int(e.at("j"), "edge j");
        if (a < 1 || b > N || a >= b) {
            detail::bad("edge (" + std::to_string(a) + "," + std::to_string(b) + ") must satisfy 1 <= i < j <= N");
        }
        if (!seen.insert({ a, b }).second) {
            detail::bad("edge (" + std::to_string(a) + "," + std::to_string(b) + ") listed twice");
        }
        const Json &blk = e.at("block");
        if (!blk.is_array() || blk.size() != 2 || !blk[0].is_array() || blk[0].size() != 2 || !blk[1].is_array() || blk[1].size() != 2) {
            detail::bad("block must be a 2x2 array");
        }
        const std::string where = "block(" + std::to_string(a) + "," + std::to_string(b) + ")";
        F.set_block(a, b, { rd.scalar(blk[0][0], where), rd.scalar(blk[0][1], where), rd.scalar(blk[1][0], where), rd.scalar(blk[1][1], where) });
    }
    if (seen.size() != static_cast<std::size_t>(N * (N - 1) / 2)) {
        detail::bad("every edge i<j needs exactly one block");
    }
    return F;
}

inline Json to_json(const DenseMatrix &M) {
    Json triplets = Json::array();
    for (std::size_t r = 0; r < M.rows(); ++r) {
        for (std::size_t c = 0; c < M.cols(); ++c) {
            if (!M(r, c).is_zero()) {
                triplets.push_back(Json::array({ r, c, to_json(M(r, c)) }));
            }
        }
    }
    return Json{ { "side", M.rows() }, { "triplets", triplets } };
}

inline Json to_json(const Multiset &m) {
    Json out = Json::array();
    for (const auto &c : parts_of(m)) {
        out.push_back(Json::array({ c.top, c.bottom }));
    }
    return out;
}

inline Json to_json(const SignedShape &s) { return Json{ { "plus", to_json(s.plus) }, { "minus", to_json(s.minus) } }; }

inline Json to_json(const LabelledShape &l) {
    const auto nations = [](const std::vector<Nation> &ns) {
        Json out = Json::array();
        for (const auto &n : ns) {
            out.push_back(Json{ { "top", n.top }, { "bottom", n.bottom } });
        }
        return out;
    };
    return Json{ { "plus", nations(l.plus) }, { "minus", nations(l.minus) } };
}

inline SignedShape signed_shape_from_json(const Json &j) {
    detail::require_object(j, "signed shape", {}, { "plus", "minus" });
    const auto parts = [](const Json &arr, const std::string &what) {
        std::vector<Composition2> out;
        for (const auto &c : detail::require_array(arr, what)) {
            if (!c.is_array() || c.size() != 2) {
                detail::bad(what + " entries must be [top, bottom]");
            }
            const Composition2 comp{ detail::as_int(c[0], "top"), detail::as_int(c[1], "bottom") };
            if (comp.top < 1 || comp.bottom < 0) {
                detail::bad(what + " entry needs top >= 1 and bottom >= 0");
            }
            out.push_back(comp);
        }
        return make_multiset(out);
    };
    return { j.contains("plus") ? parts(j.at("plus"), "plus") : Multiset{}, j.contains("minus") ? parts(j.at("minus"), "minus") : Multiset{} };
}

inline LabelledShape labelled_shape_from_json(const Json &j) {
    detail::require_object(j, "labelled shape", {}, { "plus", "minus" });
    LabelledShape out;
    const auto nations = [&](const char *key, std::vector<Nation> &dst) {
        if (!j.contains(key)) {
            return;
        }
        for (const auto &n : detail::require_array(j.at(key), key)) {
            detail::require_object(n, "nation", { "top" }, { "bottom" });
            Nation nat{ detail::as_ints(n.at("top"), "top"), n.contains("bottom") ? detail::as_ints(n.at("bottom"), "bottom") : std::vector<int>{} };
            if (nat.top.empty()) {
                detail::bad("nation with empty top county");
            }
            out.rank += nat.size();
            dst.push_back(std::move(nat));
        }
    };
    nations("plus", out.plus);
    nations("minus", out.minus);
    try {
        return normalize(std::move(out));
    } catch (const Error &e) {
        detail::bad(std::string{ "labelled shape: " } + e.what());
    }
}

/// Accepts either shape encoding; a signed shape is given its canonical labelling.
inline LabelledShape any_shape_from_json(const Json &j) {
    detail::require_object(j, "shape", {}, { "plus", "minus" });
    for (const char *key : { "plus", "minus" }) {
        if (j.contains(key) && j.at(key).is_array() && !j.at(key).empty()) {
            return j.at(key).front().is_object() ? labelled_shape_from_json(j) : canonical_labelling(signed_shape_from_json(j));
        }
    }
    detail::bad("shape has no nations");
}

inline Json nations_to_json(const std::vector<NationParams> &nations) {
    Json out = Json::array();
    for (const auto &n : nations) {
        out.push_back(Json{ { "alpha", to_json(n.alpha) }, { "beta", n.beta ? to_json(*n.beta) : Json(nullptr) } });
    }
    return out;
}

inline Json to_json(const ParamPoint &x) {
    Json pairs = Json::array();
    for (const auto &[st, pp] : x.pairs) {
        pairs.push_back(Json{ { "s", st.first }, { "t", st.second }, { "mu", to_json(pp.mu) }, { "C", to_json(pp.C) } });
    }
    return Json{ { "nations", nations_to_json(x.nations) }, { "pairs", pairs } };
}

inline Json to_json(const InvariantPoint &x) {
    Json pairs = Json::array();
    for (const auto &[st, pq] : x.pairs) {
        pairs.push_back(Json{ { "s", st.first }, { "t", st.second }, { "p", to_json(pq.p) }, { "q", to_json(pq.q) } });
    }
    return Json{ { "nations", nations_to_json(x.nations) }, { "pairs", pairs } };
}

/// Parses parameters given with (mu, C) or (p, q) per pair; the result is always in (p, q) form.
inline InvariantPoint params_from_json(const Json &j) {
    detail::require_object(j, "params", { "nations" }, { "pairs" });
    const ScalarReader rd;
    InvariantPoint x;
    for (const auto &n : detail::require_array(j.at("nations"), "nations")) {
        detail::require_object(n, "nation params", { "alpha" }, { "beta" });
        NationParams np{ rd.scalar(n.at("alpha"), "alpha"), std::nullopt };
        if (n.contains("beta") && !n.at("beta").is_null()) {
            np.beta = rd.scalar(n.at("beta"), "beta");
        }
        x.nations.push_back(np);
    }
    if (j.contains("pairs")) {
        for (const auto &p : detail::require_array(j.at("pairs"), "pairs")) {
            detail::require_object(p, "pair params", { "s", "t" }, { "mu", "C", "p", "q" });
            const std::pair<int, int> key{ detail::as_int(p.at("s"), "s"), detail::as_int(p.at("t"), "t") };
            if (key.first >= key.second) {
                detail::bad("pair needs s < t");
            }
            if (x.pairs.count(key) != 0) {
                detail::bad("pair listed twice");
            }
            const bool muc = p.contains("mu") && p.contains("C");
            const bool pq = p.contains("p") && p.contains("q");
            if (muc == pq) {
                detail::bad("pair needs exactly one of (mu, C) or (p, q)");
            }
            if (muc) {
                const ExactComplex mu = rd.scalar(p.at("mu"), "mu");
                const ExactComplex C = rd.scalar(p.at("C"), "C");
                if (C.is_zero()) {
                    throw Error(ErrorKind::ConstraintViolated, "C is zero");
                }
                x.pairs[key] = { mu * C, mu / C };
            } else {
                x.pairs[key] = { rd.scalar(p.at("p"), "p"), rd.scalar(p.at("q"), "q") };
            }
        }
    }
    return x;
}

inline Json to_json(const GaugeMap &m) {
    Json out = Json::array();
    for (const auto &[e, f] : m) {
        out.push_back(Json{ { "i", e.first }, { "j", e.second }, { "m", to_json(f) } });
    }
    return out;
}

inline GaugeMap gauge_from_json(const Json &j) {
    GaugeMap m;
    const ScalarReader rd;
    for (const auto &e : detail::require_array(j, "gauge")) {
        detail::require_object(e, "gauge entry", { "i", "j", "m" });
        const std::pair<int, int> key{ detail::as_int(e.at("i"), "i"), detail::as_int(e.at("j"), "j") };
        if (!m.emplace(key, rd.scalar(e.at("m"), "m")).second) {
            detail::bad("gauge edge listed twice");
        }
    }
    return m;
}

inline Json to_json(const Witness &w) {
    return Json{ { "relation", w.relation }, { "equation", w.equation }, { "triple", w.triple }, { "row", w.row }, { "col", w.col }, { "residual", to_json(w.residual) } };
}

inline Json to_json(const RelationReport &r) {
    Json failures = Json::array();
    for (const RelationCheck *c : { &r.rrr, &r.sss, &r.ss_unit, &r.rrs, &r.rss }) {
        if (c->witness) {
            failures.push_back(to_json(*c->witness));
        }
    }
    return Json{ { "rrr", r.rrr.holds }, { "sss", r.sss.holds }, { "ss_unit", r.ss_unit.holds }, { "rrs", r.rrs.holds }, { "rss", r.rss.holds },
                 { "reverse_srr", r.reverse_srr_holds }, { "failures", failures } };
}

inline Json to_json(const Classification &c) {
    Json pairs = Json::array();
    for (const auto &[st, d] : c.pairs) {
        pairs.push_back(Json{ { "s", st.first }, { "t", st.second }, { "p", to_json(d.p) }, { "q", to_json(d.q) }, { "mu", d.mu ? to_json(*d.mu) : Json(nullptr) },
                              { "C", d.C ? to_json(*d.C) : Json(nullptr) } });
    }
    Json signs = Json::array();
    for (std::size_t s = 0; s < c.shape.nation_count(); ++s) {
        signs.push_back(c.shape.sign_of_nation(s));
    }
    return Json{ { "shape", to_json(shape_of(c.shape)) }, { "labelled", to_json(c.shape) }, { "sign", signs },
                 { "params", Json{ { "nations", nations_to_json(c.nations) }, { "pairs", pairs } } }, { "gauge", to_json(c.gauge) }, { "perm", c.perm } };
}

/// Pair file: {"S": alpha-form, "R": alpha-form, "metadata": {...}} with optional metadata.
struct PairFile {
    Pair pair;
    Json metadata;
};

inline Json to_json(const PairFile &f) {
    Json out{ { "S", to_json(f.pair.S) }, { "R", to_json(f.pair.R) } };
    if (!f.metadata.is_null()) {
        out["metadata"] = f.metadata;
    }
    return out;
}

inline PairFile pair_file_from_json(const Json &j, const ScalarReader &rd = {}) {
    detail::require_object(j, "pair file", { "S", "R" }, { "metadata" });
    PairFile f{ { alpha_from_json(j.at("S"), rd), alpha_from_json(j.at("R"), rd) }, nullptr };
    if (f.pair.S.rank() != f.pair.R.rank()) {
        throw Error(ErrorKind::RankMismatch, "S and R have different ranks");
    }
    if (j.contains("metadata")) {
        const Json &meta = j.at("metadata");
        detail::require_object(meta, "metadata", {}, { "shape", "params", "seed" });
        f.metadata = meta;
    }
    return f;
}

}  // namespace loopbraid::io
