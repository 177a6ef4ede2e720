#include <doctest.h>

#include "padyn/arith.hpp"
#include "padyn/errors.hpp"

using namespace padyn;

TEST_CASE("primes") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_THROWS_AS(Prime(4), InputError);
    CHECK(Prime(7).value() == 7);
}

TEST_CASE("powers") {
    CHECK(power(Prime(3), 4) == 81);
    CHECK(power_u64(Prime(2), 63) == (std::uint64_t{1} << 63));
    CHECK_THROWS_AS(power_u64(Prime(2), 64), StateLimitExceeded);
    CHECK_THROWS_AS(power_u64(Prime(13), 40), StateLimitExceeded);
}

TEST_CASE("valuations of integers and rationals") {
    Prime p(5);
    CHECK(vp(Integer(0), p).is_infinite());
    CHECK(vp(Integer(75), p) == Valuation(2));
    CHECK(vp(Integer(-250), p) == Valuation(3));
    CHECK(vp(Rational(3, 25), p) == Valuation(-2));
    CHECK(vp(Rational(50, 7), p) == Valuation(2));
    CHECK(norm(Rational(3, 25), p) == 25);
    CHECK(norm(Rational(50), p) == Rational(1, 25));
    CHECK(norm(Rational(0), p) == 0);
}

TEST_CASE("valuation order puts infinity last") {
    CHECK(Valuation(3) < Valuation::infinity());
    CHECK(Valuation(-1) < Valuation(0));
    CHECK(Valuation::infinity() == Valuation::infinity());
    CHECK((Valuation(2) + Valuation::infinity()).is_infinite());
    CHECK(Valuation(2) + Valuation(-5) == Valuation(-3));
}

TEST_CASE("rational text round trip") {
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("12") == 12);
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    for (const char *s : {"0/1", "7/9", "-1/1024"})
        CHECK(to_string(parse_rational(s)) == s);
}

TEST_CASE("p-adic integers at finite precision") {
    Prime p(3);
    PadicInt x(p, 4, Integer(-1));
    CHECK(x.residue() == 80);
    CHECK(x.truncated(2).residue() == 8);
    CHECK_THROWS_AS(x.truncated(5), InsufficientPrecision);
    CHECK(PadicInt(p, 2, Integer(10)) == PadicInt(p, 2, Integer(1)));
}

TEST_CASE("reduce rationals mod p^N") {
    Prime p(5);
    // 1/2 = 3 mod 5, 13 mod 25
    CHECK(reduce(Rational(1, 2), p, 1).residue() == 3);
    CHECK(reduce(Rational(1, 2), p, 2).residue() == 13);
    CHECK(reduce(Rational(7, 3), p, 0).residue() == 0);
    CHECK_THROWS_AS(reduce(Rational(1, 5), p, 3), NotIntegral);
}

TEST_CASE("coset measure") {
    CHECK(coset_measure(Prime(2), 0) == 1);
    CHECK(coset_measure(Prime(3), 2) == Rational(1, 9));
    CosetIndex a{2, 4}, b{2, 5};
    CHECK(a < b);
    CHECK(a == CosetIndex{2, 4});
}
