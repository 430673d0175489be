#include <doctest.h>

#include "ramacf/numerics.hpp"
#include "ramacf/qseries.hpp"
#include "test_util.hpp"

using namespace ramacf;
using ramacf::testing::check_close;
using ramacf::testing::dec;

TEST_CASE("character values mod 5 and mod 3") {
  CHECK(character(7, 5) == -1);
  CHECK(character(0, 5) == 0);
  CHECK(character(5, 3) == -1);
  CHECK(character(1, 5) == 1);
  CHECK(character(4, 5) == 1);
  CHECK(character(3, 5) == -1);
  CHECK(character(10, 3) == 1);
  CHECK(character(9, 3) == 0);
  CHECK_THROWS_AS(character(1, 7), DomainError);
  CHECK_THROWS_AS(character(-1, 5), DomainError);
}

TEST_CASE("divisor_sum_chi small frozen values") {
  CHECK(divisor_sum_chi(1, 5) == 1);
  CHECK(divisor_sum_chi(6, 5) == 2);   // 1 - 2 - 3 + 6
  CHECK(divisor_sum_chi(9, 3) == 1);   // 1 + 0 + 0
  CHECK_THROWS_AS(divisor_sum_chi(0, 5), DomainError);
}

namespace {

// Independent oracle: plain trial division over every d in [1, n].
long long brute_divisor_sum(long n, int modulus) {
  long long s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) s += static_cast<long long>(character(d, modulus)) * d;
  }
  return s;
}

}  // namespace

TEST_CASE("divisor_sum_chi equals brute force up to 1000 for both moduli") {
  for (long n = 1; n <= 1000; ++n) {
    REQUIRE(divisor_sum_chi(n, 5) == brute_divisor_sum(n, 5));
    REQUIRE(divisor_sum_chi(n, 3) == brute_divisor_sum(n, 3));
  }
}

TEST_CASE("num_derivative on identity and square") {
  PrecisionContext ctx(192);
  BigReal one = num_derivative(
      [](const BigReal& x, const PrecisionContext&) { return x; }, BigReal::of(1L, 256), ctx);
  check_close(one, BigReal::of(1L, 256), BigReal::two_pow(-90, 256), "d/dx x");

  BigReal six = num_derivative(
      [](const BigReal& x, const PrecisionContext&) { return x * x; }, BigReal::of(3L, 256),
      ctx);
  check_close(six, BigReal::of(6L, 256), BigReal::two_pow(-90, 256), "d/dx x^2 at 3");
}

TEST_CASE("num_derivative reaches two thirds of working precision on exp") {
  PrecisionContext ctx(240);
  BigReal x = dec("0.5", 400);
  BigReal d = num_derivative(
      [](const BigReal& u, const PrecisionContext& c) {
        return exp(u.rounded(c.internal_bits()));
      },
      x, ctx);
  check_close(d, exp(dec("0.5", 400)), BigReal::two_pow(-150, 400), "d/dx e^x");
}

TEST_CASE("tanh-sinh integrates polynomials exactly to tolerance") {
  PrecisionContext ctx(128);
  // x^k over [0,1] -> 1/(k+1) for k <= 10
  for (long k = 0; k <= 10; ++k) {
    BigReal val = integrate(
        [k](const BigReal& x, const PrecisionContext&) { return pow(x, k); }, BigReal(200),
        BigReal::of(1L, 200), ctx);
    check_close(val, BigReal::of(1L, 200) / (k + 1), ldexp(ctx.tolerance(), 4), "poly");
  }
}

TEST_CASE("tanh-sinh handles the endpoint singularity x^{-1/2}") {
  PrecisionContext ctx(160);
  BigReal val = integrate(
      [](const BigReal& x, const PrecisionContext&) {
        return 1 / sqrt(x);
      },
      BigReal(256), BigReal::of(1L, 256), ctx);
  check_close(val, BigReal::of(2L, 256), ldexp(ctx.tolerance(), 4), "x^-1/2");
}

TEST_CASE("tanh-sinh on a shifted interval") {
  PrecisionContext ctx(128);
  // log x over [1, 2] = 2 log 2 - 1
  BigReal val = integrate(
      [](const BigReal& x, const PrecisionContext&) { return log(x); }, BigReal::of(1L, 200),
      BigReal::of(2L, 200), ctx);
  BigReal expected = ldexp(log(BigReal::of(2L, 200)), 1) - 1;
  check_close(val, expected, ldexp(ctx.tolerance(), 4), "log");
}

TEST_CASE("integrate rejects an empty interval") {
  PrecisionContext ctx(128);
  CHECK_THROWS_AS(integrate([](const BigReal& x, const PrecisionContext&) { return x; },
                            BigReal::of(1L, 128), BigReal::of(1L, 128), ctx),
                  DomainError);
}

TEST_CASE("integrate reports non-convergence within the level cap") {
  PrecisionContext ctx(192);
  QuadratureOptions opts;
  opts.max_level_doublings = 1;
  CHECK_THROWS_AS(integrate(
                      [](const BigReal& x, const PrecisionContext&) {
                        return 1 / sqrt(x);
                      },
                      BigReal(256), BigReal::of(1L, 256), ctx, opts),
                  ConvergenceError);
}
