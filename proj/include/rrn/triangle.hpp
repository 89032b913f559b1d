#pragma once

/**
 * Exact triangle geometry around the circumradius/inradius ratio
 *
 *   R/r = 2*f*g*h / ((f+g-h)(f+h-g)(g+h-f)),
 *
 * equivalently f*g*h*s / (4*A^2) with s the semi-perimeter and A the area.
 * Everything works on A^2 = s(s-f)(s-g)(s-h), which is rational even when A
 * is not.  Signed side triples are first-class: they satisfy the ratio
 * equation without being real triangles, and validity is a separate
 * predicate.  Angle computation is the single floating-point code path and
 * lives here only.
 */

#include <array>
#include <cmath>
#include <stdexcept>

#include "rrn/rational.hpp"

namespace rrn {

struct degenerate_representation_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A signed integer side representation; not necessarily a triangle.
struct Triple {
    Integer f, g, h;
    bool operator==(const Triple&) const = default;
};

inline bool is_valid_triangle(const Triple& t) {
    return t.f > 0 && t.g > 0 && t.h > 0 &&
           t.f + t.g > t.h && t.f + t.h > t.g && t.g + t.h > t.f;
}

/// A genuine triangle: positive sides, strict triangle inequality, gcd 1.
class Triangle {
public:
    Triangle(Integer f, Integer g, Integer h) : f_(f), g_(g), h_(h) {
        if (!is_valid_triangle({f_, g_, h_}))
            throw std::domain_error("sides do not form a triangle");
        Integer d = gcd(gcd(f_, g_), h_);
        f_ /= d;
        g_ /= d;
        h_ /= d;
    }

    const Integer& f() const { return f_; }
    const Integer& g() const { return g_; }
    const Integer& h() const { return h_; }
    Triple triple() const { return {f_, g_, h_}; }

    /// Sides sorted ascending; the canonical key of a similarity class.
    std::array<Integer, 3> sorted_sides() const {
        std::array<Integer, 3> s{f_, g_, h_};
        if (s[0] > s[1]) std::swap(s[0], s[1]);
        if (s[1] > s[2]) std::swap(s[1], s[2]);
        if (s[0] > s[1]) std::swap(s[0], s[1]);
        return s;
    }

    /// Triangles compare as congruence classes: same sides in any order.
    bool operator==(const Triangle& o) const {
        return sorted_sides() == o.sorted_sides();
    }

private:
    Integer f_, g_, h_;
};

/// R/r of a (possibly signed) representation, straight from the product form.
inline Rational ratio(const Triple& t) {
    Integer d1 = t.f + t.g - t.h;
    Integer d2 = t.f + t.h - t.g;
    Integer d3 = t.g + t.h - t.f;
    if (d1 == 0 || d2 == 0 || d3 == 0)
        throw degenerate_representation_error("zero factor in ratio denominator");
    return rat(2 * t.f * t.g * t.h, d1 * d2 * d3);
}

/// R/r via R = fgh/4A, r = A/s: f*g*h*s / (4*A^2) with Heron's A^2.
/// An independent route; must agree with ratio() on every valid triangle.
inline Rational ratio_via_radii(const Triangle& t) {
    Rational s = rat(t.f() + t.g() + t.h(), 2);
    Rational area_sq = s * (s - t.f()) * (s - t.g()) * (s - t.h());
    return t.f() * t.g() * t.h() * s / (4 * area_sq);
}

/// Scales rational sides to the primitive integer triangle; the ratio is
/// unchanged by scaling.
inline Triangle to_primitive(const Rational& f, const Rational& g,
                             const Rational& h) {
    if (f <= 0 || g <= 0 || h <= 0)
        throw std::domain_error("to_primitive requires positive sides");
    Integer l = lcm(lcm(den(f), den(g)), den(h));
    return Triangle(num(f) * (l / den(f)), num(g) * (l / den(g)),
                    num(h) * (l / den(h)));
}

/// Squared incenter-circumcenter distance R(R-2r); nonnegative, zero exactly
/// for the equilateral triangle.
inline Rational euler_distance_sq(const Triangle& t) {
    Rational s = rat(t.f() + t.g() + t.h(), 2);
    Rational area_sq = s * (s - t.f()) * (s - t.g()) * (s - t.h());
    Rational fgh = Rational(t.f() * t.g() * t.h());
    Rational r_sq = area_sq / (s * s);
    Rational big_r_sq = fgh * fgh / (16 * area_sq);
    // R*r = fgh/(4s) is rational even though R and r separately are not
    Rational big_r_times_r = fgh / (4 * s);
    return big_r_sq - 2 * big_r_times_r;
}

/// Law-of-cosines angles opposite f, g, h, in degrees.
inline std::array<double, 3> angles_degrees(const Triangle& t) {
    double f = Rational(t.f()).get_d();
    double g = Rational(t.g()).get_d();
    double h = Rational(t.h()).get_d();
    auto ang = [](double a, double b, double c) {
        // angle opposite a
        return std::acos((b * b + c * c - a * a) / (2 * b * c)) * 180.0 /
               3.14159265358979323846;
    };
    return {ang(f, g, h), ang(g, f, h), ang(h, f, g)};
}

}  // namespace rrn
