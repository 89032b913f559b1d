#pragma once

/**
 * Exact arbitrary-precision arithmetic: the scalar layer everything else
 * builds on.  Integer and Rational are thin aliases over GMP's C++ classes,
 * which already give us canonical reduced fractions (denominator > 0,
 * gcd(num, den) = 1, maintained through arithmetic).  On top we add the
 * exactness predicates the rest of the library needs: integer square root,
 * perfect-square testing and exact rational square roots.
 */

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace rrn {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a reduced Rational from numerator and denominator.
inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(long num, long den = 1) {
    return rat(Integer(num), Integer(den));
}

inline const Integer& num(const Rational& q) { return q.get_num(); }
inline const Integer& den(const Rational& q) { return q.get_den(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// Floor of the square root of a nonnegative Integer.
inline Integer isqrt(const Integer& n) {
    if (n < 0)
        throw std::domain_error("isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Nonnegative root when n is a perfect square, nullopt otherwise.
/// Negative inputs are never squares.
inline std::optional<Integer> is_perfect_square(const Integer& n) {
    if (n < 0)
        return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t()))
        return std::nullopt;
    return isqrt(n);
}

/// Exact square root of a Rational: exists iff both the reduced numerator
/// and denominator are perfect squares.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    auto rn = is_perfect_square(num(q));
    if (!rn)
        return std::nullopt;
    auto rd = is_perfect_square(den(q));
    if (!rd)
        return std::nullopt;
    return rat(*rn, *rd);
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// "num/den" for non-integral values, plain digits otherwise.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

/// Parses "123" or "-4/9"; the result is reduced.
inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("unparseable rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace rrn
