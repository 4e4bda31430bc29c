/**
 * @file
 * @brief Exact Gaussian-rational scalars.
 *
 * Every matrix entry and every recipe parameter is an element of Q(i), stored as a pair of
 * canonical GMP rationals. Equality is structural, so every identity in the library is checked
 * without tolerance.
 */

#pragma once

#include "loopbraid/error.hpp"

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace loopbraid {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or "p" into a canonical rational; rejects zero denominators and stray characters.
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&] { return Error(ErrorKind::ParseError, "bad rational '" + std::string{ text } + "'"); };
    if (text.empty()) {
        throw bad();
    }
    const auto slash = text.find('/');
    const auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (const char ch : s) {
            if (ch < '0' || ch > '9') {
                return false;
            }
        }
        return true;
    };
    std::string_view num = text.substr(0, slash);
    if (!digits_ok(num, true)) {
        throw bad();
    }
    if (!num.empty() && num.front() == '+') {
        num.remove_prefix(1);
    }
    Rational out;
    out.get_num() = BigInt{ std::string{ num } };
    if (slash == std::string_view::npos) {
        out.get_den() = 1;
    } else {
        const std::string_view den = text.substr(slash + 1);
        if (!digits_ok(den, false)) {
            throw bad();
        }
        out.get_den() = BigInt{ std::string{ den } };
        if (out.get_den() == 0) {
            throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string{ text } + "'");
        }
    }
    out.canonicalize();
    return out;
}

/// Renders as "p/q", or "p" when the denominator is one.
inline std::string render_rational(const Rational &q) { return q.get_str(); }

/// Element re + im*i of the Gaussian rationals.
class ExactComplex {
  public:
    ExactComplex() = default;
    ExactComplex(long re) : re_{ re } {}  // NOLINT(google-explicit-constructor)
    ExactComplex(Rational re) : re_{ std::move(re) } { re_.canonicalize(); }  // NOLINT(google-explicit-constructor)
    ExactComplex(Rational re, Rational im) : re_{ std::move(re) }, im_{ std::move(im) } {
        re_.canonicalize();
        im_.canonicalize();
    }

    static ExactComplex i() { return { Rational{ 0 }, Rational{ 1 } }; }

    [[nodiscard]] const Rational &re() const noexcept { return re_; }
    [[nodiscard]] const Rational &im() const noexcept { return im_; }

    [[nodiscard]] bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    [[nodiscard]] bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }

    [[nodiscard]] ExactComplex conj() const { return { re_, -im_ }; }
    [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }

    /// Multiplicative inverse; throws DivisionByZero on zero.
    [[nodiscard]] ExactComplex inv() const {
        if (is_zero()) {
            throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        }
        const Rational n = norm();
        return { re_ / n, -im_ / n };
    }

    ExactComplex operator-() const { return { -re_, -im_ }; }

    ExactComplex &operator+=(const ExactComplex &o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ExactComplex &operator-=(const ExactComplex &o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ExactComplex &operator*=(const ExactComplex &o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    ExactComplex &operator/=(const ExactComplex &o) { return *this *= o.inv(); }

    friend ExactComplex operator+(ExactComplex a, const ExactComplex &b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex &b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex &b) { return a *= b; }
    friend ExactComplex operator/(ExactComplex a, const ExactComplex &b) { return a /= b; }

    friend bool operator==(const ExactComplex &a, const ExactComplex &b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// Lexicographic on (re, im); used only for canonical ordering, not as a field order.
    friend std::strong_ordering operator<=>(const ExactComplex &a, const ExactComplex &b) {
        const int c1 = cmp(a.re_, b.re_);
        if (c1 != 0) {
            return c1 < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        const int c2 = cmp(a.im_, b.im_);
        if (c2 != 0) {
            return c2 < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

  private:
    Rational re_{ 0 };
    Rational im_{ 0 };
};

inline ExactComplex inv(const ExactComplex &x) { return x.inv(); }

inline std::ostream &operator<<(std::ostream &os, const ExactComplex &x) {
    os << render_rational(x.re());
    if (sgn(x.im()) != 0) {
        os << (sgn(x.im()) > 0 ? "+" : "") << render_rational(x.im()) << "i";
    }
    return os;
}

/// Square root of a non-negative rational, if it is rational.
inline std::optional<Rational> exact_sqrt(const Rational &q) {
    if (sgn(q) < 0) {
        return std::nullopt;
    }
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
        return std::nullopt;
    }
    Rational r;
    mpz_sqrt(r.get_num_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(r.get_den_mpz_t(), q.get_den_mpz_t());
    r.canonicalize();
    return r;
}

/// Square root inside Q(i) when one exists; the root with re > 0 (or re == 0, im >= 0) is returned.
inline std::optional<ExactComplex> exact_sqrt(const ExactComplex &z) {
    // (a + bi)^2 = z  <=>  a^2 = (x + |z|)/2, b^2 = (|z| - x)/2, 2ab = y
    const auto modulus = exact_sqrt(z.norm());
    if (!modulus) {
        return std::nullopt;
    }
    const auto a = exact_sqrt(Rational{ (z.re() + *modulus) / 2 });
    const auto b = exact_sqrt(Rational{ (*modulus - z.re()) / 2 });
    if (!a || !b) {
        return std::nullopt;
    }
    Rational im = *b;
    if (sgn(z.im()) < 0) {
        im = -im;
    }
    ExactComplex root{ *a, im };
    if (sgn(root.re()) < 0 || (sgn(root.re()) == 0 && sgn(root.im()) < 0)) {
        root = -root;
    }
    if (root * root != z) {
        return std::nullopt;
    }
    return root;
}

/// Best rational approximation with denominator at most max_den (continued fractions).
inline Rational nearest_rational(double x, long max_den) {
    if (!std::isfinite(x)) {
        throw Error(ErrorKind::ParseError, "non-finite float");
    }
    Rational exact{ x };
    if (exact.get_den() <= max_den) {
        return exact;
    }
    // convergents h/k of the continued fraction of the exact binary value
    BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    Rational rest = exact;
    while (true) {
        BigInt a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
        BigInt h2 = a * h1 + h0;
        BigInt k2 = a * k1 + k0;
        if (k2 > max_den) {
            // semiconvergent candidate with the largest admissible multiplier
            BigInt t = (BigInt{ max_den } - k0) / k1;
            Rational semi{ t * h1 + h0, t * k1 + k0 };
            Rational conv{ h1, k1 };
            semi.canonicalize();
            conv.canonicalize();
            Rational ds = abs(semi - exact);
            Rational dc = abs(conv - exact);
            return ds < dc ? semi : conv;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        Rational frac = rest - Rational{ a };
        if (sgn(frac) == 0) {
            Rational out{ h1, k1 };
            out.canonicalize();
            return out;
        }
        rest = 1 / frac;
    }
}

}  // namespace loopbraid

template <>
struct std::hash<loopbraid::ExactComplex> {
    std::size_t operator()(const loopbraid::ExactComplex &x) const noexcept {
        const std::hash<std::string> h;
        return h(x.re().get_str()) ^ (h(x.im().get_str()) * 1000003U);
    }
};
