#include "knotinv/laurent.hpp"

#include "knot_fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace knotinv;
using fixtures::jones_3_1;
using fixtures::jones_4_1;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<long long> exp_d(-6, 6), coef_d(-5, 5), len_d(0, 6);
    LaurentPoly p;
    long long len = len_d(rng);
    for (long long i = 0; i < len; ++i) p.add_term(exp_d(rng), BigInt(coef_d(rng)));
    return p;
}

}  // namespace

TEST_CASE("ring operations") {
    LaurentPoly t_plus_1 = LaurentPoly::from_terms({{1, 1}, {0, 1}});
    LaurentPoly t_minus_1 = LaurentPoly::from_terms({{1, 1}, {0, -1}});
    CHECK(t_plus_1 * t_minus_1 == LaurentPoly::from_terms({{2, 1}, {0, -1}}));

    CHECK(jones_3_1() * LaurentPoly::constant(1) == jones_3_1());

    LaurentPoly prod = jones_3_1() * jones_4_1();
    CHECK(prod.min_exp() == -6);
    CHECK(prod.max_exp() == 1);
    CHECK(prod.eval_int(1) == BigRational(1));
}

TEST_CASE("evaluation at integer points") {
    CHECK(jones_3_1().eval_int(1) == BigRational(1));
    CHECK(jones_3_1().eval_int(-1) == BigRational(-3));
    CHECK(jones_4_1().eval_int(-1) == BigRational(5));
    CHECK(LaurentPoly().eval_int(5) == BigRational(0));
    CHECK(jones_3_1().eval_int(2) == BigRational(-1 + 2 + 8, 16));
    CHECK_THROWS_AS(jones_3_1().eval_int(0), input_error);
    CHECK(LaurentPoly::from_terms({{2, 3}, {0, 7}}).eval_int(0) == BigRational(7));
}

TEST_CASE("evaluation at t = i") {
    CHECK(jones_4_1().eval_at_i() == GaussianInt{-1, 0});
    CHECK(LaurentPoly::constant(1).eval_at_i() == GaussianInt{1, 0});
    CHECK(jones_3_1().eval_at_i() == GaussianInt{-1, 0});
    // i^-1 = -i
    CHECK(LaurentPoly::from_terms({{-1, 1}}).eval_at_i() == GaussianInt{0, -1});
}

TEST_CASE("evaluation at t = e^{2 pi i/3}") {
    CHECK(jones_3_1().eval_at_omega() == EisensteinInt{1, 0});
    CHECK(jones_4_1().eval_at_omega() == EisensteinInt{1, 0});
    CHECK(LaurentPoly::constant(1).eval_at_omega() == EisensteinInt{1, 0});
    CHECK(LaurentPoly::from_terms({{2, 1}, {1, 1}, {0, 1}}).eval_at_omega() ==
          EisensteinInt{0, 0});
    // w^-1 = w^2 = -1 - w
    CHECK(LaurentPoly::from_terms({{-1, 1}}).eval_at_omega() == EisensteinInt{-1, -1});
}

TEST_CASE("residue-class coefficient sums") {
    CHECK(jones_3_1().residue_signed_sum(ResidueSum::multiples_of_three) == 1);
    CHECK(jones_4_1().residue_signed_sum(ResidueSum::non_multiples_of_three) == 0);
    CHECK(jones_3_1().residue_signed_sum(ResidueSum::odd_alternating) == 0);
    CHECK(jones_3_1().residue_signed_sum(ResidueSum::odd_coeffs) == 2);
    CHECK(jones_4_1().residue_signed_sum(ResidueSum::non_multiples_of_three_signed) == 0);
    CHECK(parse_residue_sum("mult3") == ResidueSum::multiples_of_three);
    CHECK_THROWS_AS(parse_residue_sum("nope"), input_error);
}

TEST_CASE("variable inversion") {
    CHECK(jones_3_1().invert_variable() ==
          LaurentPoly::from_terms({{4, -1}, {3, 1}, {1, 1}}));
    CHECK(jones_4_1().invert_variable() == jones_4_1());
    CHECK(LaurentPoly::constant(1).invert_variable() == LaurentPoly::constant(1));

    std::mt19937 rng(21);
    for (int iter = 0; iter < 100; ++iter) {
        LaurentPoly p = random_poly(rng);
        CHECK(p.invert_variable().invert_variable() == p);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(22);
    for (int iter = 0; iter < 100; ++iter) {
        LaurentPoly p = random_poly(rng), q = random_poly(rng);
        for (long long t0 : {1LL, -1LL, 2LL}) {
            CHECK((p * q).eval_int(t0) == p.eval_int(t0) * q.eval_int(t0));
            CHECK((p + q).eval_int(t0) == p.eval_int(t0) + q.eval_int(t0));
        }
    }
}

TEST_CASE("cyclotomic evaluations match the residue sums") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 200; ++iter) {
        LaurentPoly p = random_poly(rng);
        // imaginary part of p(i) is the alternating odd-index sum
        CHECK(p.eval_at_i().im == p.residue_signed_sum(ResidueSum::odd_alternating));
        // p(w) = a + b*w: b is the signed non-multiples-of-3 sum, and
        // 2a - b recovers twice the 3|i sum minus the 3∤i sum
        EisensteinInt w = p.eval_at_omega();
        CHECK(w.b == p.residue_signed_sum(ResidueSum::non_multiples_of_three_signed));
        CHECK(2 * w.a - w.b == 2 * p.residue_signed_sum(ResidueSum::multiples_of_three) -
                                   p.residue_signed_sum(ResidueSum::non_multiples_of_three));
    }
}

TEST_CASE("text form") {
    CHECK(jones_3_1().str() == "-t^-4+t^-3+t^-1");
    CHECK(jones_4_1().str() == "t^-2-t^-1+1-t+t^2");
    CHECK(LaurentPoly().str() == "0");
    CHECK(LaurentPoly::constant(1).str() == "1");
    CHECK(LaurentPoly::constant(-2).str() == "-2");
    CHECK(LaurentPoly::from_terms({{1, 3}}).str() == "3t");

    CHECK(LaurentPoly::parse("-t^-4+t^-3+t^-1") == jones_3_1());
    CHECK(LaurentPoly::parse("t^-2-t^-1+1-t+t^2") == jones_4_1());
    CHECK(LaurentPoly::parse("0") == LaurentPoly());
    CHECK(LaurentPoly::parse(" 1 ") == LaurentPoly::constant(1));
    CHECK_THROWS_AS(LaurentPoly::parse(""), input_error);
    CHECK_THROWS_AS(LaurentPoly::parse("t^"), input_error);
    CHECK_THROWS_AS(LaurentPoly::parse("q+1"), input_error);

    std::mt19937 rng(24);
    for (int iter = 0; iter < 100; ++iter) {
        LaurentPoly p = random_poly(rng);
        CHECK(LaurentPoly::parse(p.str()) == p);
    }
}

TEST_CASE("JSON form") {
    nlohmann::json j = jones_3_1().to_json();
    CHECK(j["var"] == "t");
    CHECK(j["terms"].size() == 3);
    CHECK(j["terms"][0]["exp"] == -4);
    CHECK(j["terms"][0]["coef"] == "-1");
    CHECK(LaurentPoly::from_json(j) == jones_3_1());
}
