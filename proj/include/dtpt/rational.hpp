#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dtpt {

// Exact arithmetic throughout: arbitrary-precision rationals (GMP) and
// integers. mpq_class values are kept canonical (reduced, denominator > 0);
// every entry point that builds a rational from raw parts canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" with optional sign, arbitrary precision.
Rational rat_parse(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Largest integer n with n <= q.
Integer rat_floor(const Rational& q);
// Smallest integer n with n >= q.
Integer rat_ceil(const Rational& q);

// Element of the ordered field Q(eps) truncated to degree one: a + b*eps,
// where eps is a positive infinitesimal. Comparison is lexicographic in
// (a, b). Products of two infinitesimal parts never arise: the linear
// solvers only scale by plain rationals, so degree one is closed under
// every operation we perform.
struct EpsRational {
    Rational a;  // standard part
    Rational b;  // coefficient of eps

    EpsRational() : a(0), b(0) {}
    EpsRational(const Rational& std_part) : a(std_part), b(0) {}  // NOLINT(google-explicit-constructor)
    EpsRational(Rational std_part, Rational eps_part) : a(std::move(std_part)), b(std::move(eps_part)) {}

    static EpsRational eps() { return EpsRational(Rational(0), Rational(1)); }

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }

    EpsRational operator-() const { return EpsRational(-a, -b); }
    EpsRational& operator+=(const EpsRational& o) { a += o.a; b += o.b; return *this; }
    EpsRational& operator-=(const EpsRational& o) { a -= o.a; b -= o.b; return *this; }
    EpsRational& operator*=(const Rational& c) { a *= c; b *= c; return *this; }
    EpsRational& operator/=(const Rational& c) {
        if (c == 0) throw std::invalid_argument("division by zero");
        a /= c; b /= c; return *this;
    }

    friend EpsRational operator+(EpsRational l, const EpsRational& r) { return l += r; }
    friend EpsRational operator-(EpsRational l, const EpsRational& r) { return l -= r; }
    friend EpsRational operator*(EpsRational l, const Rational& c) { return l *= c; }
    friend EpsRational operator*(const Rational& c, EpsRational r) { return r *= c; }
    friend EpsRational operator/(EpsRational l, const Rational& c) { return l /= c; }

    friend bool operator==(const EpsRational& l, const EpsRational& r) { return l.a == r.a && l.b == r.b; }
    friend bool operator!=(const EpsRational& l, const EpsRational& r) { return !(l == r); }
    friend bool operator<(const EpsRational& l, const EpsRational& r) {
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    }
    friend bool operator>(const EpsRational& l, const EpsRational& r) { return r < l; }
    friend bool operator<=(const EpsRational& l, const EpsRational& r) { return !(r < l); }
    friend bool operator>=(const EpsRational& l, const EpsRational& r) { return !(l < r); }

    // Substitute a concrete positive value for eps.
    Rational at(const Rational& eps0) const { return a + b * eps0; }

    std::string str() const;
};

}  // namespace dtpt
