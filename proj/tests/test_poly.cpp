#include <random>

#include <doctest.h>

#include "oracle.hpp"
#include "padyn/errors.hpp"
#include "padyn/poly.hpp"

using namespace padyn;

namespace {

RationalPoly poly(std::initializer_list<Rational> c) { return RationalPoly(std::vector<Rational>(c)); }

} // namespace

TEST_CASE("arithmetic and trimming") {
    RationalPoly f = poly({1, 2, 0, 0});
    CHECK(f.degree() == 1);
    CHECK((f - f).is_zero());
    CHECK((f - f).degree() == -1);
    CHECK(f * f == poly({1, 4, 4}));
    CHECK(f / Rational(2) == poly({Rational(1, 2), 1}));
    CHECK_THROWS_AS(f /= Rational(0), InputError);
    CHECK(f(Rational(3, 2)) == 4);
}

TEST_CASE("binomial polynomials") {
    RationalPoly b2 = binom_poly(2);
    CHECK(b2 == poly({0, Rational(-1, 2), Rational(1, 2)}));
    CHECK(binom_poly(0) == RationalPoly::constant(1));
    for (unsigned n : {3u, 5u, 9u, 15u}) {
        RationalPoly b = binom_poly(n);
        CHECK(b == RationalPoly(oracle::binomial(n)));
        for (unsigned long x = 0; x < 20; ++x) {
            Integer want;
            mpz_bin_uiui(want.get_mpz_t(), x, n);
            CHECK(poly_eval_exact(b, Integer(x)) == Rational(want));
        }
    }
}

TEST_CASE("compose, pow and derivative") {
    RationalPoly x = RationalPoly::identity();
    RationalPoly f = poly({1, 1});
    CHECK(compose(x * x, f) == poly({1, 2, 1}));
    CHECK(pow(f, 3) == poly({1, 3, 3, 1}));
    CHECK(derivative(pow(f, 3)) == poly({3, 6, 3}));
    CHECK(derivative(RationalPoly::constant(5)).is_zero());
}

TEST_CASE("taylor shift agrees with evaluation") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> small(-20, 20);
    RationalPoly f = poly({Rational(1, 3), -2, Rational(5, 6), 0, Rational(-1, 9)});
    for (int trial = 0; trial < 50; ++trial) {
        long a = small(rng), b = small(rng);
        auto c = taylor_shift(f, Integer(a));
        Rational z = b - a, sum = 0, power = 1;
        for (const auto &cj : c) {
            sum += cj * power;
            power *= z;
        }
        CHECK(sum == poly_eval_exact(f, Integer(b)));
    }
}

TEST_CASE("taylor shift of x^3 - x at 1") {
    auto c = taylor_shift(poly({0, -1, 0, 1}), Integer(1));
    REQUIRE(c.size() == 4);
    CHECK(c[0] == 0);
    CHECK(c[1] == 2);
    CHECK(c[2] == 3);
    CHECK(c[3] == 1);
}

TEST_CASE("p-adic evaluation precision contract") {
    Prime p(2);
    RationalPoly f = binom_poly(2);
    PadicEvaluator eval(f, p);
    CHECK(eval.precision_loss() == 1);
    PadicInt y = eval(PadicInt(p, 10, Integer(3)));
    CHECK(y.precision() == 9);
    CHECK(y.residue() == 3);
    CHECK_THROWS_AS(eval(PadicInt(p, 1, Integer(1))), InsufficientPrecision);

    // Lifts of x agree with f(x) on exactly the certified digits.
    Prime q(3);
    RationalPoly g = poly({0, Rational(-1, 3), 0, Rational(1, 3)});
    PadicEvaluator eg(g, q);
    for (unsigned long x = 0; x < 27; ++x) {
        PadicInt fx = eg(PadicInt(q, 3, Integer(x)));
        REQUIRE(fx.precision() == 2);
        for (unsigned long t = 0; t < 5; ++t) {
            Integer lift = Integer(x + 27 * t);
            CHECK(reduce(poly_eval_exact(g, lift), q, 2).residue() == fx.residue());
        }
    }
}

TEST_CASE("p-adic evaluation rejects non-integral values") {
    Prime p(2);
    PadicEvaluator eval(poly({0, Rational(1, 2)}), p);
    CHECK_THROWS_AS(eval.residue_at(Integer(1), 4), NotIntegral);
    CHECK(eval.residue_at(Integer(6), 4) == 3);
}

TEST_CASE("evaluator residues match exact evaluation") {
    Prime p(5);
    RationalPoly f = binom_poly(15);
    PadicEvaluator eval(f, p);
    for (unsigned long x = 0; x < 200; x += 7)
        CHECK(eval.residue_at(Integer(x), 4) ==
              oracle::residue(oracle::eval(oracle::binomial(15), oracle::Z(x)), 5, 4));
}
