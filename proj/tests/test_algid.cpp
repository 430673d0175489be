#include <doctest.h>

#include "ramacf/algid.hpp"
#include "ramacf/qseries.hpp"
#include "test_util.hpp"

using namespace ramacf;
using ramacf::testing::check_close;
using ramacf::testing::dec;

namespace {

const PrecisionContext kCtx(256);

std::vector<mpz_class> zv(std::initializer_list<long> v) {
  return std::vector<mpz_class>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("eval_poly basics") {
  check_close(eval_poly(zv({-1, 0, 1}), BigReal::of(1L, 256), kCtx), BigReal(64),
              kCtx.tolerance(), "x^2-1 at 1");
  check_close(eval_poly(zv({1}), dec("123.456"), kCtx), BigReal::of(1L, 64), kCtx.tolerance(),
              "constant");
  check_close(eval_poly(zv({2, -3, 1}), dec("0.5", 400), kCtx), dec("0.75", 400),
              kCtx.tolerance(), "quadratic");
}

TEST_CASE("poly_string rendering") {
  CHECK(poly_string(zv({-1, -1, 1})) == "x^2 - x - 1");
  CHECK(poly_string(zv({16, 0, -240})) == "-240 x^2 + 16");
  CHECK(poly_string(zv({})) == "0");
}

TEST_CASE("lll_reduce finds the short vector in a planted knapsack lattice") {
  // rows span {e_i | round(2^60 x^i)} for x = sqrt(2): x^2 - 2 = 0 is planted.
  const long s = 60;
  BigReal x = sqrt(BigReal::of(2L, 256));
  std::vector<std::vector<mpz_class>> rows(3, std::vector<mpz_class>(4));
  BigReal xi = BigReal::of(1L, 256);
  for (int i = 0; i < 3; ++i) {
    rows[i][i] = 1;
    rows[i][3] = ldexp(xi, s).to_integer();
    xi *= x;
  }
  lll_reduce(rows);
  // some reduced row must be +-(-2, 0, 1, tiny)
  bool found = false;
  for (const auto& row : rows) {
    if ((row[0] == -2 && row[1] == 0 && row[2] == 1) ||
        (row[0] == 2 && row[1] == 0 && row[2] == -1)) {
      found = abs(row[3]) < 4;
    }
    if (found) break;
  }
  CHECK(found);
  auto reduce_dependent_rows = [] {
    std::vector<std::vector<mpz_class>> dep = {{1, 2}, {2, 4}};
    lll_reduce(dep);
  };
  CHECK_THROWS_AS(reduce_dependent_rows(), DomainError);
}

TEST_CASE("min_poly recovers the golden ratio polynomial exactly") {
  const long p = 640;
  BigReal phi = ldexp(sqrt(BigReal::of(5L, p)) + 1, -1);
  AlgebraicCandidate cand = min_poly(phi, 2, kCtx);
  REQUIRE(cand.found());
  CHECK(cand.confirmed);
  CHECK(cand.degree == 2);
  CHECK(cand.coefficients == zv({-1, -1, 1}));
  CHECK(cand.height == 1);
}

TEST_CASE("min_poly recovers the degree-4 polynomial of R(e^{-2pi})") {
  // oracle polynomial derived by radical elimination: x^4 + 2x^3 - 6x^2 - 2x + 1
  AlgebraicCandidate cand = min_poly(
      [](const PrecisionContext& c) {
        BigReal q = exp(-ldexp(BigReal::pi(c.internal_bits()), 1));
        return product_form(rr_product_spec(), q, c);
      },
      4, kCtx);
  REQUIRE(cand.found());
  CHECK(cand.confirmed);
  CHECK(cand.coefficients == zv({1, -2, -6, 2, 1}));
  // the closed radical form is a root
  const long p = 640;
  BigReal s5 = sqrt(BigReal::of(5L, p));
  BigReal closed = sqrt(ldexp(s5 + 5, -1)) - ldexp(s5 + 1, -1);
  check_close(eval_poly(cand.coefficients, closed, kCtx), BigReal(64),
              BigReal::two_pow(-600, 64), "closed root");
}

TEST_CASE("min_poly recovers the planted polynomial of the pentagonal theta value") {
  // derived by squaring out the nested radicals:
  // 531441 V^4 - 1102248 V^3 - 3901608 V^2 - 2328480 V + 16 = 0
  const long p = 700;
  BigReal s3 = sqrt(BigReal::of(3L, p));
  BigReal a = BigReal::of(14L, p) / 27 + BigReal::of(8L, p) / (s3 * 3);
  BigReal inner = BigReal::of(2048L, p) / 243 + BigReal::of(3584L, p) / (s3 * 243);
  BigReal value = a + ldexp(sqrt(inner), -1);
  AlgebraicCandidate cand = min_poly(value, 4, kCtx);
  REQUIRE(cand.found());
  CHECK(cand.confirmed);
  CHECK(cand.coefficients == zv({16, -2328480, -3901608, -1102248, 531441}));
}

TEST_CASE("min_poly rejects pi at moderate degree and height bounds") {
  BigReal pi = BigReal::pi(700);
  AlgebraicCandidate cand = min_poly(pi, 8, kCtx);
  CHECK_FALSE(cand.found());
}

TEST_CASE("min_poly output is stable under raising the working precision") {
  auto value = [](const PrecisionContext& c) {
    BigReal q = exp(-BigReal::pi(c.internal_bits()));
    return product_form(rr_product_spec(), q, c);
  };
  AlgebraicCandidate low = min_poly(value, 8, PrecisionContext(256));
  AlgebraicCandidate high = min_poly(value, 8, PrecisionContext(384));
  REQUIRE(low.found());
  REQUIRE(high.found());
  CHECK(low.coefficients == high.coefficients);
}

TEST_CASE("min_poly enforces the precision floor") {
  BigReal x = sqrt(BigReal::of(2L, 128));
  CHECK_THROWS_AS(min_poly(x, 2, kCtx), PreconditionError);
  CHECK_THROWS_AS(min_poly(sqrt(BigReal::of(2L, 640)), 0, kCtx), DomainError);
}
