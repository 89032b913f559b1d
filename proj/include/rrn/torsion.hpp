#pragma once

/**
 * Torsion subgroup enumeration by the Nagell-Lutz bound: on an integral model
 * every torsion point has integer coordinates with v = 0 or v^2 dividing the
 * discriminant.  Candidates are confirmed by checking k*P = infinity for some
 * k <= 12, the Mazur cap, so the search is exhaustive.
 */

#include <algorithm>
#include <utility>
#include <vector>

#include "rrn/curve.hpp"
#include "rrn/factor.hpp"

namespace rrn {

/// Order of p when finite (smallest k <= 12 with k*p = infinity); nullopt
/// means infinite order.
inline std::optional<int> order_of(const Curve& c, const CurvePoint& p) {
    require_on_curve(c, p);
    CurvePoint acc = p;
    for (int k = 1; k <= 12; ++k) {
        if (acc.is_infinity())
            return k;
        acc = detail::add_unchecked(c, acc, p);
    }
    return std::nullopt;
}

enum class TorsionStructure { Cyclic, TwoByTwoM, Other };

struct TorsionReport {
    // (point, order), sorted by order then by coordinates
    std::vector<std::pair<CurvePoint, int>> points;
    TorsionStructure structure;
    int order_two_count;

    size_t size() const { return points.size(); }
    bool contains(const CurvePoint& p) const {
        for (const auto& [q, o] : points)
            if (q == p)
                return true;
        return false;
    }
};

inline TorsionReport torsion_subgroup(const Curve& c) {
    if (!is_integral(c.a2()) || !is_integral(c.a4()))
        throw std::domain_error(
            "torsion enumeration requires integer curve coefficients");
    const Integer a2 = num(c.a2());
    const Integer a4 = num(c.a4());

    std::vector<std::pair<CurvePoint, int>> pts;
    pts.emplace_back(CurvePoint::infinity(), 1);

    auto consider = [&](const Integer& u, const Integer& v) {
        CurvePoint p{Rational(u), Rational(v)};
        if (!c.is_on_curve(p))
            return;
        for (const auto& [q, o] : pts)
            if (q == p)
                return;
        if (auto k = order_of(c, p))
            pts.emplace_back(p, *k);
    };

    // v = 0: u = 0 always works; the quadratic factor contributes only when
    // its discriminant is a perfect square with integral roots
    consider(0, 0);
    if (auto s = is_perfect_square(a2 * a2 - 4 * a4)) {
        if ((-a2 - *s) % 2 == 0) {
            consider((-a2 - *s) / 2, 0);
            consider((-a2 + *s) / 2, 0);
        }
    }

    // v != 0: v^2 | discriminant, u | v^2
    Factorization disc_f = factorize(num(c.discriminant()));
    for (const Integer& v : square_divisor_roots(disc_f)) {
        Factorization vf = factorize(v);
        for (auto& [p, e] : vf)
            e *= 2;
        for (const Integer& d : divisors(vf)) {
            for (int sign : {1, -1}) {
                Integer u = sign * d;
                Integer rhs = ((u + a2) * u + a4) * u;
                if (rhs == v * v) {
                    consider(u, v);
                    consider(u, -v);
                }
            }
        }
    }

    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second < b.second;
        if (a.first.is_infinity() || b.first.is_infinity())
            return b.first.is_infinity() < a.first.is_infinity();
        if (a.first.u() != b.first.u())
            return a.first.u() < b.first.u();
        return a.first.v() < b.first.v();
    });

    TorsionReport rep;
    rep.points = std::move(pts);
    rep.order_two_count = 0;
    for (const auto& [p, o] : rep.points)
        if (o == 2)
            ++rep.order_two_count;
    if (rep.order_two_count <= 1)
        rep.structure = TorsionStructure::Cyclic;
    else if (rep.order_two_count == 3 && rep.points.size() % 4 == 0)
        rep.structure = TorsionStructure::TwoByTwoM;
    else
        rep.structure = TorsionStructure::Other;
    return rep;
}

/// The closed-form six-element torsion set of the N-ratio curve:
/// infinity, (0,0), (1,±2N), (4N+1,±2N(4N+1)).
inline std::vector<std::pair<CurvePoint, int>> expected_ratio_torsion(
    const Integer& n) {
    Integer q = 4 * n + 1;
    return {
        {CurvePoint::infinity(), 1},
        {{Rational(0), Rational(0)}, 2},
        {{Rational(1), Rational(-2 * n)}, 3},
        {{Rational(1), Rational(2 * n)}, 3},
        {{Rational(q), Rational(-2 * n * q)}, 6},
        {{Rational(q), Rational(2 * n * q)}, 6},
    };
}

/// Closed-form torsion of the near-equilateral curve: infinity, (0,0),
/// (M^2,±2M^2(2M+1)), (9M^2+4M,±2M(2M+1)(9M+4)).
inline std::vector<std::pair<CurvePoint, int>> expected_near_eq_torsion(
    const Integer& m) {
    Integer m2 = m * m;
    Integer w = 2 * m + 1;
    Integer t = 9 * m + 4;
    return {
        {CurvePoint::infinity(), 1},
        {{Rational(0), Rational(0)}, 2},
        {{Rational(m2), Rational(-2 * m2 * w)}, 3},
        {{Rational(m2), Rational(2 * m2 * w)}, 3},
        {{Rational(m * t), Rational(-m * w * t * 2)}, 6},
        {{Rational(m * t), Rational(m * w * t * 2)}, 6},
    };
}

}  // namespace rrn
