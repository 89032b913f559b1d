#include <catch2/catch_amalgamated.hpp>

#include "rrn/transform.hpp"

using namespace rrn;

TEST_CASE("curve construction from targets") {
    Curve e7 = curve_for(RatioTarget::integer_n(7));
    CHECK(e7.a2() == 166);
    CHECK(e7.a4() == 29);
    CHECK(e7.family() == CurveFamily::RatioN);
    CHECK(e7.parameter() == 7);

    Curve f1 = curve_for(RatioTarget::near_equilateral(1));
    CHECK(f1.a2() == 22);
    CHECK(f1.a4() == 13);

    CHECK_THROWS_AS(RatioTarget::integer_n(2), singular_curve_error);
    CHECK_THROWS_AS(RatioTarget::integer_n(1), std::domain_error);
    CHECK_THROWS_AS(RatioTarget::near_equilateral(0), std::domain_error);
}

TEST_CASE("forward map to g/s") {
    RatioTarget t7 = RatioTarget::integer_n(7);
    CHECK(point_to_g_over_s(t7, {rat(29, 169), rat(6902, 2197)}) ==
          rat(63, 65));

    // torsion images: order-6 point with negative v maps to 0, (0,0) to 1
    for (long n : {3L, 7L, 26L}) {
        RatioTarget t = RatioTarget::integer_n(n);
        Rational q(4 * n + 1);
        CHECK(point_to_g_over_s(t, {q, Rational(-2 * n) * q}) == 0);
        CHECK(point_to_g_over_s(t, {Rational(0), Rational(0)}) == 1);
        CHECK_THROWS_AS(point_to_g_over_s(t, {Rational(1), Rational(2 * n)}),
                        pole_error);
    }
    CHECK_THROWS_AS(point_to_g_over_s(t7, CurvePoint::infinity()), pole_error);

    // near-equilateral pole sits at u = M^2
    RatioTarget t4 = RatioTarget::near_equilateral(4);
    CHECK_THROWS_AS(
        point_to_g_over_s(t4, {Rational(16), Rational(2 * 16 * 9)}),
        pole_error);
    CHECK(point_to_g_over_s(t4, {Rational(-20), Rational(0)}) == rat(3, 4));
}

TEST_CASE("side quadratic") {
    RatioTarget t7 = RatioTarget::integer_n(7);
    QuadraticInF q = build_f_quadratic(t7, Rational(63), Rational(65));
    CHECK(q.A == -14);
    CHECK(q.B == 938);
    CHECK(q.C == 14560);
    auto roots = solve_f_quadratic(q);
    REQUIRE(roots);
    CHECK(roots->first == -13);
    CHECK(roots->second == 80);

    RatioTarget t26 = RatioTarget::integer_n(26);
    QuadraticInF q26 = build_f_quadratic(t26, Rational(26), Rational(33));
    CHECK(q26.A == 2 * (4 * 26 * 33 - 26 * 105));
    CHECK(q26.A == 1404);
    auto r26 = solve_f_quadratic(q26);
    REQUIRE(r26);
    CHECK(r26->first == rat(22, 3));
    CHECK(r26->second == rat(98, 3));
    // root sum is 2s - g
    CHECK(r26->first + r26->second == 2 * 33 - 26);

    RatioTarget t4 = RatioTarget::near_equilateral(4);
    auto r4 = solve_f_quadratic(build_f_quadratic(t4, Rational(3), Rational(4)));
    REQUIRE(r4);
    CHECK(r4->first == 2);
    CHECK(r4->second == 3);

    // non-square discriminant: no rational roots
    auto none = solve_f_quadratic(build_f_quadratic(t7, Rational(1), Rational(2)));
    CHECK_FALSE(none);
}

TEST_CASE("positivity window") {
    CHECK(positivity_window(RatioTarget::integer_n(7)).second == rat(28, 29));
    auto w26 = positivity_window(RatioTarget::integer_n(26));
    CHECK(w26.second == rat(104, 105));
    CHECK(rat(26, 33) > w26.first);
    CHECK(rat(26, 33) < w26.second);
    CHECK(positivity_window(RatioTarget::near_equilateral(4)).second ==
          rat(9, 10));
}

TEST_CASE("point to solution") {
    RatioTarget t7 = RatioTarget::integer_n(7);
    SolutionOutcome s = point_to_solution(t7, {rat(29, 169), rat(6902, 2197)});
    REQUIRE(s.kind == SolutionOutcome::Kind::SignedRepresentation);
    REQUIRE(s.representation);
    CHECK(s.representation->f == -13);
    CHECK(s.representation->g == 63);
    CHECK(s.representation->h == 80);

    RatioTarget t26 = RatioTarget::integer_n(26);
    SolutionOutcome e = point_to_solution(t26, {rat(-35, 121), rat(18200, 1331)});
    REQUIRE(e.kind == SolutionOutcome::Kind::TriangleFound);
    CHECK(*e.triangle == Triangle(11, 39, 49));

    CHECK_THROWS_AS(point_to_solution(t7, {Rational(0), Rational(0)}),
                    torsion_point_error);
    CHECK_THROWS_AS(point_to_solution(t7, {Rational(1), Rational(14)}),
                    torsion_point_error);
}

TEST_CASE("inverse map recovers points") {
    RatioTarget t7 = RatioTarget::integer_n(7);
    auto pts = g_over_s_to_points(t7, rat(63, 65));
    bool found = false;
    for (const auto& p : pts)
        if (p == CurvePoint{rat(29, 169), rat(6902, 2197)})
            found = true;
    CHECK(found);

    // c = 0 recovers the order-6 torsion point with negative v
    for (long n : {3L, 7L, 26L}) {
        RatioTarget t = RatioTarget::integer_n(n);
        auto zs = g_over_s_to_points(t, Rational(0));
        bool has_t6 = false;
        for (const auto& p : zs)
            if (p == CurvePoint{Rational(4 * n + 1),
                                Rational(-2 * n * (4 * n + 1))})
                has_t6 = true;
        CHECK(has_t6);
    }

    // c = 26/33 contains an egg point of E_26
    RatioTarget t26 = RatioTarget::integer_n(26);
    Curve e26 = curve_for(t26);
    bool has_egg = false;
    for (const auto& p : g_over_s_to_points(t26, rat(26, 33))) {
        CHECK(e26.is_on_curve(p));
        if (p.u() != pole_u(t26)) {
            CHECK(point_to_g_over_s(t26, p) == rat(26, 33));
            if (component_of(e26, p) == ComponentLabel::EGG)
                has_egg = true;
        }
    }
    CHECK(has_egg);
}

TEST_CASE("discriminant squareness for on-curve points") {
    // Eq.(7)/(8) correspondence: for any on-curve non-pole point the side
    // quadratic built from its g/s has a perfect-square discriminant
    RatioTarget t7 = RatioTarget::integer_n(7);
    Curve e7 = curve_for(t7);
    CurvePoint g{rat(29, 169), rat(6902, 2197)};
    std::vector<CurvePoint> pts{g, multiply(e7, 2, g), multiply(e7, 3, g),
                                add(e7, g, {Rational(0), Rational(0)}),
                                negate(e7, g)};
    for (const auto& p : pts) {
        Rational c = point_to_g_over_s(t7, p);
        if (c == 0 || c == 1)
            continue;
        QuadraticInF q =
            build_f_quadratic(t7, Rational(num(c)), Rational(den(c)));
        if (q.A == 0)
            continue;
        CHECK(rational_sqrt(q.B * q.B - 4 * q.A * q.C));
    }
}
