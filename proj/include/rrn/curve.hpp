#pragma once

/**
 * Elliptic curves of the shape  v^2 = u^3 + a2*u^2 + a4*u  over the
 * rationals: point validity, the chord-tangent group law, scalar
 * multiplication, the discriminant, and the classification of affine points
 * into the two real components (the bounded "egg" and the unbounded branch)
 * when the cubic has three real roots.
 *
 * All arithmetic is exact; component classification compares rationals
 * against quadratic surds without ever rounding.
 */

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

#include "rrn/rational.hpp"

namespace rrn {

struct singular_curve_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct not_on_curve_error : std::domain_error {
    using std::domain_error::domain_error;
};

enum class CurveFamily { RatioN, NearEquilateral, Raw };

enum class ComponentLabel { EGG, INFINITE };

class CurvePoint {
public:
    static CurvePoint infinity() { return CurvePoint(); }
    CurvePoint(Rational u, Rational v)
        : inf_(false), u_(std::move(u)), v_(std::move(v)) {}

    bool is_infinity() const { return inf_; }
    const Rational& u() const { return coord(u_); }
    const Rational& v() const { return coord(v_); }

    bool operator==(const CurvePoint& o) const {
        if (inf_ || o.inf_)
            return inf_ == o.inf_;
        return u_ == o.u_ && v_ == o.v_;
    }
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }

private:
    CurvePoint() : inf_(true), u_(0), v_(0) {}
    const Rational& coord(const Rational& c) const {
        if (inf_)
            throw std::logic_error("coordinate of point at infinity");
        return c;
    }
    bool inf_;
    Rational u_, v_;
};

class Curve {
public:
    Curve(Rational a2, Rational a4,
          CurveFamily family = CurveFamily::Raw, Integer parameter = 0)
        : a2_(std::move(a2)), a4_(std::move(a4)),
          family_(family), parameter_(std::move(parameter)) {
        if (discriminant() == 0)
            throw singular_curve_error("singular curve: discriminant is zero");
    }

    const Rational& a2() const { return a2_; }
    const Rational& a4() const { return a4_; }
    CurveFamily family() const { return family_; }
    const Integer& parameter() const { return parameter_; }

    /// 16 * a4^2 * (a2^2 - 4*a4), the discriminant of v^2 = u^3+a2 u^2+a4 u.
    Rational discriminant() const {
        return 16 * a4_ * a4_ * (a2_ * a2_ - 4 * a4_);
    }

    /// Right-hand side u^3 + a2 u^2 + a4 u.
    Rational rhs(const Rational& u) const {
        return ((u + a2_) * u + a4_) * u;
    }

    bool is_on_curve(const CurvePoint& p) const {
        if (p.is_infinity())
            return true;
        return p.v() * p.v() == rhs(p.u());
    }

    bool operator==(const Curve& o) const { return a2_ == o.a2_ && a4_ == o.a4_; }

private:
    Rational a2_, a4_;
    CurveFamily family_;
    Integer parameter_;
};

namespace detail {

// Group sum without on-curve validation; callers guarantee membership.
inline CurvePoint add_unchecked(const Curve& c, const CurvePoint& p,
                                const CurvePoint& q) {
    if (p.is_infinity())
        return q;
    if (q.is_infinity())
        return p;
    const Rational &u1 = p.u(), &v1 = p.v(), &u2 = q.u(), &v2 = q.v();
    Rational lambda;
    if (u1 == u2) {
        if (v1 == -v2)
            return CurvePoint::infinity();  // vertical chord / 2-torsion tangent
        // doubling; v1 != 0 here
        lambda = (3 * u1 * u1 + 2 * c.a2() * u1 + c.a4()) / (2 * v1);
    } else {
        lambda = (v2 - v1) / (u2 - u1);
    }
    Rational u3 = lambda * lambda - c.a2() - u1 - u2;
    Rational v3 = lambda * (u1 - u3) - v1;
    return CurvePoint(std::move(u3), std::move(v3));
}

}  // namespace detail

inline void require_on_curve(const Curve& c, const CurvePoint& p) {
    if (!c.is_on_curve(p))
        throw not_on_curve_error("point does not satisfy the curve equation");
}

inline CurvePoint add(const Curve& c, const CurvePoint& p, const CurvePoint& q) {
    require_on_curve(c, p);
    require_on_curve(c, q);
    return detail::add_unchecked(c, p, q);
}

inline CurvePoint negate(const Curve& c, const CurvePoint& p) {
    require_on_curve(c, p);
    if (p.is_infinity())
        return p;
    return CurvePoint(p.u(), -p.v());
}

/// k-fold group sum by double-and-add; k may be negative or zero.
inline CurvePoint multiply(const Curve& c, const Integer& k, const CurvePoint& p) {
    require_on_curve(c, p);
    Integer n = abs(k);
    CurvePoint acc = CurvePoint::infinity();
    CurvePoint base = p;
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (size_t i = 0; n != 0 && i < bits; ++i) {
        if (mpz_tstbit(n.get_mpz_t(), i))
            acc = detail::add_unchecked(c, acc, base);
        if (i + 1 < bits)
            base = detail::add_unchecked(c, base, base);
    }
    if (k < 0 && !acc.is_infinity())
        acc = CurvePoint(acc.u(), -acc.v());
    return acc;
}

inline CurvePoint multiply(const Curve& c, long k, const CurvePoint& p) {
    return multiply(c, Integer(k), p);
}

/**
 * The real roots of u^3 + a2 u^2 + a4 u = 0: always u = 0, plus the roots of
 * the quadratic u^2 + a2 u + a4, kept symbolic as (-a2 ± sqrt(disc))/2 with a
 * rational fast-path when the discriminant is a perfect square.
 */
struct RealRoots {
    Rational quad_disc;    // a2^2 - 4*a4
    bool egg_exists;       // quad_disc > 0: three real roots, two components
    bool quad_roots_rational;
    // present iff quad_roots_rational; ascending
    std::optional<std::pair<Rational, Rational>> quad_roots;

    double quad_root_approx(int sign) const {
        double d = quad_disc.get_d();
        double s = d > 0 ? std::sqrt(d) : 0.0;
        return (center.get_d() * 2 + sign * s) / 2;
    }
    Rational center;  // -a2/2
};

inline RealRoots real_roots(const Curve& c) {
    RealRoots rr;
    rr.quad_disc = c.a2() * c.a2() - 4 * c.a4();
    rr.egg_exists = rr.quad_disc > 0;
    rr.center = -c.a2() / 2;
    auto s = rational_sqrt(rr.quad_disc);
    rr.quad_roots_rational = s.has_value();
    if (s)
        rr.quad_roots = std::make_pair((-c.a2() - *s) / 2, (-c.a2() + *s) / 2);
    return rr;
}

namespace detail {

// sign of (x - (-a2 + sign*sqrt(D))/2) for D >= 0, computed exactly
inline int cmp_with_quad_root(const Rational& x, const Rational& a2,
                              const Rational& disc, int sign) {
    Rational t = 2 * x + a2;  // compare t with sign*sqrt(D)
    Rational t2 = t * t;
    if (sign > 0) {
        if (t < 0)
            return -1;
        return t2 < disc ? -1 : (t2 == disc ? 0 : 1);
    }
    if (t > 0)
        return 1;
    return t2 < disc ? 1 : (t2 == disc ? 0 : -1);
}

}  // namespace detail

/**
 * EGG iff the point lies on the bounded component, i.e. strictly below the
 * largest real root of the cubic (for the ratio curves that root is 0, so the
 * test reduces to u < 0).  Infinity compactifies the unbounded branch and is
 * INFINITE by convention; on a one-component curve everything is INFINITE.
 */
inline ComponentLabel component_of(const Curve& c, const CurvePoint& p) {
    require_on_curve(c, p);
    if (p.is_infinity())
        return ComponentLabel::INFINITE;
    RealRoots rr = real_roots(c);
    if (!rr.egg_exists)
        return ComponentLabel::INFINITE;
    // largest root is max(0, (-a2+sqrt(D))/2)
    int vs_plus = detail::cmp_with_quad_root(p.u(), c.a2(), rr.quad_disc, +1);
    bool below_plus = vs_plus < 0;
    bool below_zero = p.u() < 0;
    Rational zero(0);
    int plus_vs_zero = detail::cmp_with_quad_root(zero, c.a2(), rr.quad_disc, +1);
    bool largest_is_zero = plus_vs_zero >= 0;  // 0 >= r_plus
    if (largest_is_zero ? below_zero : below_plus)
        return ComponentLabel::EGG;
    return ComponentLabel::INFINITE;
}

inline const char* to_string(ComponentLabel l) {
    return l == ComponentLabel::EGG ? "egg" : "infinite";
}

}  // namespace rrn
