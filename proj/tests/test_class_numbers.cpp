#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <thread>
#include <vector>

#include "jacobidim/arith.hpp"
#include "jacobidim/class_numbers.hpp"
#include "support/oracles.hpp"

using namespace jacobidim;

TEST_CASE("hurwitz_h1 pinned values") {
    CHECK(hurwitz_h1(0) == Rational(-1, 12));
    CHECK(hurwitz_h1(-3) == Rational(1, 3));
    CHECK(hurwitz_h1(-4) == Rational(1, 2));
    CHECK(hurwitz_h1(-7) == Rational(1));
    CHECK(hurwitz_h1(-8) == Rational(1));
    CHECK(hurwitz_h1(-11) == Rational(1));
    CHECK(hurwitz_h1(-12) == Rational(4, 3));
    CHECK(hurwitz_h1(-15) == Rational(2));
    CHECK(hurwitz_h1(-16) == Rational(3, 2));
    CHECK(hurwitz_h1(-20) == Rational(2));
    CHECK(hurwitz_h1(-23) == Rational(3));
    CHECK(hurwitz_h1(-1) == Rational(0));
    CHECK(hurwitz_h1(-2) == Rational(0));
    CHECK_THROWS_AS(hurwitz_h1(5), std::domain_error);
}

TEST_CASE("enumerate_reduced_forms examples") {
    CHECK(enumerate_reduced_forms(-4) == std::vector<ReducedForm>{{1, 0, 1}});
    CHECK(enumerate_reduced_forms(-3) == std::vector<ReducedForm>{{1, 1, 1}});
    CHECK(enumerate_reduced_forms(-20) == std::vector<ReducedForm>{{1, 0, 5}, {2, 2, 3}});
    CHECK(enumerate_reduced_forms(-23) ==
          std::vector<ReducedForm>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}});
    CHECK_THROWS_AS(enumerate_reduced_forms(0), std::domain_error);
    CHECK_THROWS_AS(enumerate_reduced_forms(4), std::domain_error);
    CHECK_THROWS_AS(enumerate_reduced_forms(-6), std::domain_error);  // = 2 mod 4
}

TEST_CASE("reduced form invariants and discriminants") {
    for (std::int64_t delta = -120; delta < 0; ++delta) {
        std::int64_t r = ((delta % 4) + 4) % 4;
        if (r == 2 || r == 3) continue;
        for (const ReducedForm& f : enumerate_reduced_forms(delta)) {
            CHECK(f.b * f.b - 4 * f.a * f.c == delta);
            CHECK(f.a >= 1);
            CHECK(f.c >= f.a);
            CHECK(f.a >= (f.b < 0 ? -f.b : f.b));
            if (-f.b == f.a || f.a == f.c) CHECK(f.b >= 0);
        }
    }
}

TEST_CASE("hurwitz_h1 against SL2 orbit walk") {
    for (std::int64_t delta = -40; delta < 0; ++delta) {
        std::int64_t r = ((delta % 4) + 4) % 4;
        Rational expected = (r == 2 || r == 3) ? Rational(0) : oracles::orbit_class_number(delta);
        CHECK(hurwitz_h1(delta) == expected);
    }
}

TEST_CASE("hurwitz_h1 structural invariants") {
    for (std::int64_t delta = -200; delta < 0; ++delta) {
        Rational h = hurwitz_h1(delta);
        std::int64_t r = ((delta % 4) + 4) % 4;
        if (r == 2 || r == 3)
            CHECK(h == Rational(0));
        else
            CHECK(h > Rational(0));
        CHECK(6 % h.den() == 0);
        CHECK((Rational(12) * h).is_integer());
    }
    CHECK((Rational(12) * hurwitz_h1(0)).is_integer());
}

TEST_CASE("hurwitz_hn examples") {
    for (std::int64_t delta = -30; delta <= 0; ++delta)
        CHECK(hurwitz_hn(1, delta) == hurwitz_h1(delta));
    for (std::int64_t n = 1; n <= 20; ++n)
        CHECK(hurwitz_hn(n, 0) == Rational(-n, 12));
    CHECK(hurwitz_hn(3, -4) == Rational(-1, 2));
    CHECK(hurwitz_hn(2, -4) == Rational(0));
    CHECK_THROWS_AS(hurwitz_hn(0, -4), std::domain_error);
    CHECK_THROWS_AS(hurwitz_hn(3, 4), std::domain_error);
}

TEST_CASE("hurwitz_hn reduces to a twist for coprime arguments") {
    for (std::int64_t n = 1; n <= 30; ++n)
        for (std::int64_t delta = -60; delta <= 0; ++delta) {
            std::int64_t g = delta == 0 ? n : gcd(n, delta);
            if (g != 1) continue;
            CHECK(hurwitz_hn(n, delta) == Rational(kronecker_symbol(delta, n)) * hurwitz_h1(delta));
        }
}

TEST_CASE("hurwitz_h1 memo is safe under concurrent use") {
    std::vector<std::vector<Rational>> results(4);
    std::vector<std::thread> pool;
    for (int w = 0; w < 4; ++w)
        pool.emplace_back([&results, w] {
            for (std::int64_t delta = -300; delta <= 0; ++delta)
                results[static_cast<std::size_t>(w)].push_back(hurwitz_h1(delta));
        });
    for (auto& t : pool) t.join();
    for (int w = 1; w < 4; ++w) CHECK(results[0] == results[static_cast<std::size_t>(w)]);
}
