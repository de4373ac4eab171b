#include "knotinv/exactnum.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace knotinv;

TEST_CASE("rational normalization") {
    CHECK(BigRational(6, 4) == BigRational(3, 2));
    CHECK(BigRational(-3, -6) == BigRational(1, 2));
    CHECK(BigRational(0, 7).num() == 0);
    CHECK(BigRational(0, 7).den() == 1);
    CHECK(BigRational(-4, 6).str() == "-2/3");
    CHECK(BigRational(5, 1).str() == "5");
    CHECK_THROWS_AS(BigRational(1, 0), input_error);
}

TEST_CASE("rational scaling invariance") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> d(-50, 50);
    for (int iter = 0; iter < 200; ++iter) {
        long long a = d(rng), b = d(rng), k = d(rng);
        if (b == 0 || k == 0) continue;
        CHECK(BigRational(a, b) == BigRational(k * a, k * b));
    }
}

TEST_CASE("rational arithmetic keeps canonical form") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<long long> d(-40, 40);
    for (int iter = 0; iter < 200; ++iter) {
        long long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (b == 0 || e == 0) continue;
        BigRational x(a, b), y(c, e);
        for (const BigRational& r : {x + y, x - y, x * y}) {
            CHECK(r.den() >= 1);
            if (!r.is_zero()) CHECK(big_gcd(big_abs(r.num()), r.den()) == 1);
        }
        if (!y.is_zero()) {
            BigRational q = x / y;
            CHECK(q * y == x);
        }
    }
}

TEST_CASE("p-adic valuation examples") {
    CHECK(padic_valuation(BigRational(18, 5), 3) == Valuation::of(2));
    CHECK(padic_valuation(BigRational(1, 12), 2) == Valuation::of(-2));
    CHECK(padic_valuation(BigRational(0), 3) == Valuation::infinity());
    CHECK(padic_valuation(BigRational(7, 8), 2) == Valuation::of(-3));
    CHECK_THROWS_AS(padic_valuation(BigRational(1), 6), input_error);
    CHECK_THROWS_AS(padic_valuation(BigRational(1), 1), input_error);
}

TEST_CASE("valuation is additive under multiplication") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long long> d(-200, 200);
    for (long long p : {2LL, 3LL, 5LL}) {
        for (int iter = 0; iter < 200; ++iter) {
            long long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
            if (a == 0 || b == 0 || c == 0 || e == 0) continue;
            BigRational x(a, b), y(c, e);
            Valuation vx = padic_valuation(x, p), vy = padic_valuation(y, p);
            CHECK(padic_valuation(x * y, p) == Valuation::of(vx.v + vy.v));
        }
    }
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(12) == 479001600);
    CHECK(factorial(12) / 18 == 26611200);  // the order-12 normalization factor
    BigInt f35 = factorial(35);
    CHECK(f35.str().size() == 41);
    CHECK(f35 % 12 == 0);
    CHECK_THROWS_AS(factorial(-1), input_error);
}

TEST_CASE("gcd_set and lcm_set") {
    CHECK(gcd_set({BigInt(-174), BigInt(30)}) == 6);
    CHECK(lcm_set({BigInt(4), BigInt(6)}) == 12);
    CHECK(gcd_set({BigInt(0), BigInt(5)}) == 5);
    CHECK(gcd_set({BigInt(0), BigInt(-5), BigInt(0)}) == 5);
    CHECK_THROWS_AS(gcd_set({BigInt(0), BigInt(0)}), degenerate_input_error);
    CHECK_THROWS_AS(lcm_set({BigInt(4), BigInt(0)}), input_error);
    CHECK_THROWS_AS(lcm_set({}), input_error);
}

TEST_CASE("lcm times gcd equals product magnitude for pairs") {
    std::mt19937 rng(14);
    std::uniform_int_distribution<long long> d(1, 500);
    for (int iter = 0; iter < 300; ++iter) {
        BigInt x = d(rng), y = d(rng);
        CHECK(lcm_set({x, y}) * gcd_set({x, y}) == x * y);
    }
}
