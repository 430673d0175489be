#include <doctest.h>

#include "ramacf/bigreal.hpp"
#include "ramacf/precision.hpp"
#include "ramacf/rational.hpp"
#include "test_util.hpp"

using namespace ramacf;
using ramacf::testing::dec;

TEST_CASE("BigReal carries its precision and rounds on request") {
  BigReal x = BigReal::of(1L, 256) / 3;
  CHECK(x.bits() == 256);
  BigReal y = x.rounded(64);
  CHECK(y.bits() == 64);
  CHECK(abs(x - y) < BigReal::two_pow(-60, 256));
  // binary operations widen to the larger operand precision
  CHECK((x + y).bits() == 256);
}

TEST_CASE("decimal rendering") {
  CHECK(BigReal(64).decimal(10) == "0");
  CHECK(BigReal::of(-3L, 64).decimal(10) == "-3");  // trailing zeros stripped
  CHECK(dec("0.125", 64).decimal(5) == "1.25e-1");
  CHECK(BigReal::parse("1e40", 128).decimal(4).find("e40") != std::string::npos);
}

TEST_CASE("parse accepts decimals and rejects garbage") {
  CHECK(BigReal::parse("-2.5e-3", 128).to_double() == doctest::Approx(-0.0025));
  CHECK_THROWS_AS(BigReal::parse("12x", 128), DomainError);
  CHECK_THROWS_AS(BigReal::parse("", 128), DomainError);
}

TEST_CASE("two_pow and to_integer") {
  CHECK(BigReal::two_pow(10, 64).to_long() == 1024);
  CHECK(BigReal::two_pow(-1, 64).to_double() == 0.5);
  CHECK(dec("2.5", 64).to_integer() == 2);  // round to even
  CHECK(dec("3.5", 64).to_integer() == 4);
  CHECK(dec("-7.2", 64).to_integer() == -7);
}

TEST_CASE("comparisons and within") {
  BigReal a = dec("1.5", 128), b = dec("1.5000001", 128);
  CHECK(a < b);
  CHECK(b > a);
  CHECK(a <= a);
  CHECK(a == a);
  CHECK(within(a, b, dec("1e-6", 64)));
  CHECK_FALSE(within(a, b, dec("1e-8", 64)));
}

TEST_CASE("elementary functions round-trip") {
  BigReal x = dec("0.73", 320);
  CHECK(abs(exp(log(x)) - x) < BigReal::two_pow(-310, 64));
  CHECK(abs(sqrt(x) * sqrt(x) - x) < BigReal::two_pow(-310, 64));
  CHECK(abs(pow(x, 7L) - pow(x, BigReal::of(7L, 320))) < BigReal::two_pow(-300, 64));
  CHECK(abs(root(pow(x, 5L), 5) - x) < BigReal::two_pow(-310, 64));
  CHECK(abs(cosh(x) * cosh(x) - sinh(x) * sinh(x) - 1) < BigReal::two_pow(-300, 64));
}

TEST_CASE("PrecisionContext invariants") {
  PrecisionContext ctx(128, 32);
  CHECK(ctx.internal_bits() == 160);
  CHECK(ctx.tolerance() == BigReal::two_pow(-128, 64));
  CHECK(ctx.raised().working_bits == 160);
  CHECK(ctx.doubled().working_bits == 256);
  CHECK_THROWS_AS(PrecisionContext(32), DomainError);
  CHECK_THROWS_AS(PrecisionContext(128, -1), DomainError);
}

TEST_CASE("Rational normalization and arithmetic") {
  Rational r(6, -4);
  CHECK(r.num == -3);
  CHECK(r.den == 2);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(3, 2) == Rational(1, 3));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(5).is_integer());
  CHECK(Rational(1, 5).str() == "1/5");
  CHECK(Rational(-7).str() == "-7");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DomainError);
  CHECK(abs(Rational(2, 5).to_real(128) - dec("0.4", 128)) < BigReal::two_pow(-120, 64));
}
