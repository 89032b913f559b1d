#pragma once

/**
 * The pipeline between ratio targets and curves: build the curve encoding
 * R/r = N (or 2 + 1/M), map curve points to the side ratio g/s, recover the
 * remaining two sides as the roots of a quadratic, classify the result as a
 * genuine triangle or a signed representation, and invert the point-to-ratio
 * map by intersecting a line with the curve.
 *
 * One code path serves both families: the near-equilateral curve is the
 * integral model of the general-rho curve under (u,v) -> (u/M^2, v/M^3), so
 * the side-recovery quadratic only ever sees rho as a free rational.
 */

#include <string>
#include <utility>
#include <vector>

#include "rrn/curve.hpp"
#include "rrn/factor.hpp"
#include "rrn/triangle.hpp"

namespace rrn {

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct torsion_point_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// The target value of R/r: an integer N >= 3, or 2 + 1/M for M >= 1.
class RatioTarget {
public:
    enum class Kind { IntegerN, NearEquilateral };

    static RatioTarget integer_n(Integer n) {
        if (n == 2)
            throw singular_curve_error(
                "N = 2 is the equilateral case; its curve is singular");
        if (n < 3)
            throw std::domain_error("integer targets require N >= 3");
        return RatioTarget(Kind::IntegerN, std::move(n));
    }

    static RatioTarget near_equilateral(Integer m) {
        if (m < 1)
            throw std::domain_error("near-equilateral targets require M >= 1");
        return RatioTarget(Kind::NearEquilateral, std::move(m));
    }

    Kind kind() const { return kind_; }
    const Integer& value() const { return value_; }

    /// The target ratio as a rational: N, or (2M+1)/M.
    Rational rho() const {
        if (kind_ == Kind::IntegerN)
            return Rational(value_);
        return rat(2 * value_ + 1, value_);
    }

    bool operator==(const RatioTarget&) const = default;

private:
    RatioTarget(Kind k, Integer v) : kind_(k), value_(std::move(v)) {}
    Kind kind_;
    Integer value_;
};

inline Curve curve_for(const RatioTarget& t) {
    const Integer& n = t.value();
    if (t.kind() == RatioTarget::Kind::IntegerN)
        return Curve(Rational(2 * (2 * n * n - 2 * n - 1)), Rational(4 * n + 1),
                     CurveFamily::RatioN, n);
    return Curve(Rational(6 * n * n + 12 * n + 4),
                 Rational(9 * n * n * n * n + 4 * n * n * n),
                 CurveFamily::NearEquilateral, n);
}

/// u-coordinate at which the g/s map has its pole (an order-3 torsion point).
inline Rational pole_u(const RatioTarget& t) {
    if (t.kind() == RatioTarget::Kind::IntegerN)
        return Rational(1);
    return Rational(t.value() * t.value());
}

/// g/s of an affine point under the birational map to the side ratio.
inline Rational point_to_g_over_s(const RatioTarget& t, const CurvePoint& p) {
    if (p.is_infinity())
        throw pole_error("g/s is undefined at infinity");
    require_on_curve(curve_for(t), p);
    if (p.u() == pole_u(t))
        throw pole_error("g/s has a pole at this order-3 torsion point");
    const Integer& n = t.value();
    if (t.kind() == RatioTarget::Kind::IntegerN) {
        Rational q(4 * n + 1);
        return (p.v() - (q - (2 * n + 1) * p.u())) / ((p.u() - 1) * q);
    }
    Rational t9(9 * n + 4);
    Rational c3(9 * n * n * n + 4 * n * n);
    return (p.v() - (c3 - (5 * n + 2) * p.u())) / ((p.u() - n * n) * t9);
}

/// A f^2 + B f + C = 0 whose roots are the two remaining sides.
struct QuadraticInF {
    Rational A, B, C;
    Rational g, s;
};

inline QuadraticInF build_f_quadratic(const RatioTarget& t, const Rational& g,
                                      const Rational& s) {
    Rational rho = t.rho();
    QuadraticInF q;
    q.A = 2 * (4 * rho * s - g * (4 * rho + 1));
    q.B = -2 * (g * g * (4 * rho + 1) - 2 * g * s * (6 * rho + 1) +
                8 * rho * s * s);
    q.C = 8 * rho * s * (g - s) * (g - s);
    q.g = g;
    q.s = s;
    return q;
}

/// Both roots (ascending) when the discriminant is a perfect rational square,
/// nullopt otherwise.  A degenerate linear equation yields its root twice.
inline std::optional<std::pair<Rational, Rational>> solve_f_quadratic(
    const QuadraticInF& q) {
    if (q.A == 0) {
        if (q.B == 0)
            throw std::domain_error("quadratic with A = B = 0");
        Rational r = -q.C / q.B;
        return std::make_pair(r, r);
    }
    Rational disc = q.B * q.B - 4 * q.A * q.C;
    auto s = rational_sqrt(disc);
    if (!s)
        return std::nullopt;
    Rational r1 = (-q.B - *s) / (2 * q.A);
    Rational r2 = (-q.B + *s) / (2 * q.A);
    if (r1 > r2)
        std::swap(r1, r2);
    return std::make_pair(r1, r2);
}

/// Open interval of g/s values compatible with a positive triangle:
/// (0, 4*rho/(4*rho+1)).
inline std::pair<Rational, Rational> positivity_window(const RatioTarget& t) {
    Rational rho = t.rho();
    return {Rational(0), 4 * rho / (4 * rho + 1)};
}

struct SolutionOutcome {
    enum class Kind { TriangleFound, SignedRepresentation, NoSolution };
    Kind kind;
    std::optional<Triangle> triangle;
    std::optional<Triple> representation;
    std::string reason;
};

namespace detail {

// Scales rational sides to a primitive integer triple, keeping signs.
inline Triple scaled_triple(const Rational& f, const Rational& g,
                            const Rational& h) {
    Integer l = lcm(lcm(den(f), den(g)), den(h));
    Integer fi = num(f) * (l / den(f));
    Integer gi = num(g) * (l / den(g));
    Integer hi = num(h) * (l / den(h));
    Integer d = gcd(gcd(abs(fi), abs(gi)), abs(hi));
    if (d > 1) {
        fi /= d;
        gi /= d;
        hi /= d;
    }
    return {fi, gi, hi};
}

}  // namespace detail

/**
 * Maps an affine non-torsion point to its triangle (when it exists) or to the
 * signed representation it encodes.  Normalization: s is the reduced
 * denominator of g/s and g its numerator; any positive scaling yields the
 * same primitive result.
 */
inline SolutionOutcome point_to_solution(const RatioTarget& t,
                                         const CurvePoint& p) {
    Rational c;
    try {
        c = point_to_g_over_s(t, p);
    } catch (const pole_error&) {
        throw torsion_point_error("order-3 torsion point carries no triangle");
    }
    if (c == 0 || c == 1)
        throw torsion_point_error(
            "torsion image g/s in {0, 1} carries no triangle");

    Rational g(num(c)), s(den(c));
    QuadraticInF q = build_f_quadratic(t, g, s);
    SolutionOutcome out;
    if (q.A == 0) {
        out.kind = SolutionOutcome::Kind::NoSolution;
        out.reason = "g/s on the positivity-window boundary";
        return out;
    }
    auto roots = solve_f_quadratic(q);
    if (!roots) {
        out.kind = SolutionOutcome::Kind::NoSolution;
        out.reason = "side quadratic has no rational roots";
        return out;
    }
    const auto& [f, h] = *roots;
    if (f > 0 && g > 0 && h > 0 && f + g > h && f + h > g && g + h > f) {
        Triangle tri = to_primitive(f, g, h);
        if (ratio(tri.triple()) != t.rho())
            throw std::logic_error("recovered triangle fails the exact ratio check");
        out.kind = SolutionOutcome::Kind::TriangleFound;
        out.triangle = tri;
        return out;
    }
    out.kind = SolutionOutcome::Kind::SignedRepresentation;
    out.representation = detail::scaled_triple(f, g, h);
    return out;
}

namespace detail {

// Rational roots of the monic cubic u^3 + p u^2 + q u + r, exactly.
inline std::vector<Rational> monic_cubic_rational_roots(const Rational& p,
                                                        const Rational& q,
                                                        const Rational& r) {
    // scale u = w/t so w^3 + (pt) w^2 + (q t^2) w + (r t^3) is integral and
    // monic; its rational roots are then integers dividing the constant term
    Integer t = lcm(lcm(den(p), den(q)), den(r));
    Integer P = num(p) * (t / den(p));
    Integer Q = num(q) * t * (t / den(q));
    Integer R = num(r) * t * t * (t / den(r));

    std::vector<Integer> wroots;
    auto push = [&](const Integer& w) {
        if (((w + P) * w + Q) * w + R != 0)
            return;
        for (const Integer& seen : wroots)
            if (seen == w)
                return;
        wroots.push_back(w);
    };
    if (R == 0) {
        push(0);
        // remaining quadratic w^2 + P w + Q
        if (auto sq = is_perfect_square(P * P - 4 * Q)) {
            if ((-P - *sq) % 2 == 0) {
                push((-P - *sq) / 2);
                push((-P + *sq) / 2);
            }
        }
    } else {
        for (const Integer& d : divisors(R)) {
            push(d);
            push(-d);
        }
    }
    std::vector<Rational> out;
    for (const Integer& w : wroots)
        out.push_back(rat(w, t));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

/**
 * All curve points with the given g/s value: intersects the inverse-image
 * line of the birational map with the curve and extracts the rational roots
 * of the resulting cubic.  Up to three points; the order-3 pole points can
 * appear among them and are returned as found.
 */
inline std::vector<CurvePoint> g_over_s_to_points(const RatioTarget& t,
                                                  const Rational& c) {
    Curve curve = curve_for(t);
    const Integer& n = t.value();
    Rational beta, gamma;
    if (t.kind() == RatioTarget::Kind::IntegerN) {
        Rational q(4 * n + 1);
        beta = c * q - (2 * n + 1);
        gamma = q * (1 - c);
    } else {
        Rational t9(9 * n + 4);
        beta = c * t9 - (5 * n + 2);
        gamma = Rational(9 * n * n * n + 4 * n * n) - c * n * n * t9;
    }
    // substitute v = beta*u + gamma into the curve equation
    Rational p = curve.a2() - beta * beta;
    Rational q2 = curve.a4() - 2 * beta * gamma;
    Rational r = -gamma * gamma;
    std::vector<CurvePoint> pts;
    for (const Rational& u : detail::monic_cubic_rational_roots(p, q2, r)) {
        CurvePoint pt{u, beta * u + gamma};
        if (curve.is_on_curve(pt))
            pts.push_back(pt);
    }
    return pts;
}

}  // namespace rrn
