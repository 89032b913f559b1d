#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rrn/factor.hpp"
#include "rrn/rational.hpp"

using namespace rrn;

TEST_CASE("perfect square detection") {
    auto r = is_perfect_square(Integer(0));
    REQUIRE(r);
    CHECK(*r == 0);

    r = is_perfect_square(Integer(144));
    REQUIRE(r);
    CHECK(*r == 12);

    CHECK_FALSE(is_perfect_square(Integer(-4)));
    CHECK_FALSE(is_perfect_square(Integer(2)));
    CHECK_FALSE(is_perfect_square(Integer(143)));
}

TEST_CASE("perfect squares of random integers round-trip") {
    std::mt19937_64 rng(20260823);
    for (int i = 0; i < 200; ++i) {
        Integer a(static_cast<long>(rng() % 1000000));
        if (rng() & 1)
            a = -a;
        auto r = is_perfect_square(a * a);
        REQUIRE(r);
        CHECK(*r == abs(a));
    }
}

TEST_CASE("rational square root") {
    auto r = rational_sqrt(rat(9, 4));
    REQUIRE(r);
    CHECK(*r == rat(3, 2));

    CHECK_FALSE(rational_sqrt(rat(2, 1)));

    r = rational_sqrt(rat(0, 1));
    REQUIRE(r);
    CHECK(*r == 0);
}

TEST_CASE("rationals are canonical") {
    Rational q = rat(6, -4);
    CHECK(num(q) == -3);
    CHECK(den(q) == 2);
    CHECK(q == rat(-3, 2));
    CHECK_THROWS_AS(rat(1, 0), std::domain_error);
}

TEST_CASE("field axioms on sampled triples") {
    std::mt19937_64 rng(7);
    auto sample = [&] {
        long n = static_cast<long>(rng() % 2001) - 1000;
        long d = static_cast<long>(rng() % 999) + 1;
        return rat(n, d);
    };
    for (int i = 0; i < 300; ++i) {
        Rational a = sample(), b = sample(), c = sample();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (a != 0)
            CHECK(a * (1 / a) == 1);
    }
}

TEST_CASE("string round-trip") {
    CHECK(to_string(rat(-13, 7)) == "-13/7");
    CHECK(rational_from_string("-13/7") == rat(-13, 7));
    CHECK(rational_from_string("42") == 42);
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("factorization and divisors") {
    Factorization f = factorize(Integer(256) * 27 * 169);
    CHECK(f[Integer(2)] == 8);
    CHECK(f[Integer(3)] == 3);
    CHECK(f[Integer(13)] == 2);

    auto ds = divisors(Integer(12));
    CHECK(ds == std::vector<Integer>{1, 2, 3, 4, 6, 12});

    // square divisor roots of 144 = 2^4 3^2: v in {1,2,3,4,6,12}
    auto roots = square_divisor_roots(factorize(Integer(144)));
    CHECK(roots == std::vector<Integer>{1, 2, 3, 4, 6, 12});

    // large semiprime exercises the rho fallback
    Integer p("1000003"), q("1000033");
    Factorization big = factorize(p * q);
    CHECK(big[p] == 1);
    CHECK(big[q] == 1);
}
