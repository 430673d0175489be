#include <doctest.h>

#include "ramacf/cfrac.hpp"
#include "ramacf/qseries.hpp"
#include "test_util.hpp"

using namespace ramacf;
using ramacf::testing::check_close;
using ramacf::testing::dec;

namespace {

const PrecisionContext kCtx(256);

}  // namespace

TEST_CASE("all-ones continued fraction gives the golden ratio") {
  const long p = 400;
  BigReal closed = ldexp(sqrt(BigReal::of(5L, p)) + 1, -1);
  check_close(golden_ratio_cf(kCtx), closed, kCtx.tolerance(), "golden");
}

TEST_CASE("a zero partial numerator truncates the fraction exactly there") {
  const long p = kCtx.internal_bits();
  BigReal x = dec("0.37", p);
  // 1 + x/1 with a_2 = 0: value must be exactly 1 + x
  CFSpec spec{"finite", BigReal::of(1L, p),
              [x, p](long n) -> CFTerm {
                BigReal one = BigReal::of(1L, p);
                if (n == 1) return {x, one};
                return {BigReal(p), one};
              }};
  CFResult res = eval_cf(spec, kCtx);
  CHECK(res.finite_truncation);
  CHECK(res.depth == 1);
  check_close(res.value, BigReal::of(1L, p) + x, kCtx.tolerance(), "1 + x");
}

TEST_CASE("engine stabilization postcondition: doubling the depth again is a no-op") {
  BigReal q = dec("0.3", kCtx.internal_bits());
  CatalogCF entry = rr_cf(q, kCtx);
  CFResult res = eval_cf(entry.spec, kCtx);
  // re-evaluate through a fresh spec with the doubled start depth baked in
  CFResult res2 = eval_cf(entry.spec, PrecisionContext(kCtx.working_bits + 32));
  check_close(res.value, res2.value.rounded(kCtx.working_bits), ldexp(kCtx.tolerance(), 1),
              "depth-stable");
}

TEST_CASE("RR continued fraction at e^{-2pi} hits the closed radical form") {
  const long p = 400;
  BigReal q = exp(-ldexp(BigReal::pi(p), 1));
  BigReal s5 = sqrt(BigReal::of(5L, p));
  BigReal closed = sqrt(ldexp(s5 + 5, -1)) - ldexp(s5 + 1, -1);
  check_close(rr_value_cf(q, kCtx), closed, kCtx.tolerance(), "R(e^-2pi) via CF");
}

TEST_CASE("CF equals product on the q grid") {
  for (const char* qs : {"0.05", "0.1", "0.3"}) {
    BigReal q = dec(qs, 400);
    check_close(eval_catalog(rr_cf(q, kCtx), kCtx), product_form(rr_product_spec(), q, kCtx),
                kCtx.tolerance(), "rr");
    check_close(eval_catalog(cubic_cf(q, kCtx), kCtx),
                product_form(cubic_product_spec(), q, kCtx), kCtx.tolerance(), "cubic");
    check_close(eval_catalog(octic_cf(q, kCtx), kCtx),
                product_form(octic_product_spec(), q, kCtx), kCtx.tolerance(), "octic");
  }
  BigReal q = exp(-BigReal::pi(400));
  check_close(eval_catalog(rr_cf(q, kCtx), kCtx), product_form(rr_product_spec(), q, kCtx),
              kCtx.tolerance(), "rr e^-pi");
}

TEST_CASE("H(pi/2) matches its closed radical form") {
  const long p = 400;
  BigReal h = h_function(ldexp(BigReal::pi(p), -1), kCtx);
  BigReal s2 = sqrt(BigReal::of(2L, p));
  BigReal closed = sqrt(1 + ldexp(s2, 1) - ldexp(sqrt(s2 + 2), 1));
  check_close(h, closed, kCtx.tolerance(), "H(pi/2)");
  // coarse decimal anchor
  check_close(h, dec("0.36457", 64), dec("1e-5", 64), "decimal anchor");
}

TEST_CASE("functional equation (1+sqrt2+H(a))(1+sqrt2+H(b)) = 2(2+sqrt2)") {
  const long p = kCtx.internal_bits();
  BigReal pi = BigReal::pi(p);
  BigReal s2 = sqrt(BigReal::of(2L, p));
  for (auto [a, b] : {std::pair<BigReal, BigReal>{pi, pi},
                      {ldexp(pi, -1), ldexp(pi, 1)},
                      {pi / 3, pi * 3}}) {
    BigReal lhs = (1 + s2 + h_function(a, kCtx)) * (1 + s2 + h_function(b, kCtx));
    check_close(lhs, ldexp(s2 + 2, 1), ldexp(kCtx.tolerance(), 4), "h pair product");
  }
}

TEST_CASE("m_cf_plus and m_cf_alt match their series on the grid") {
  for (const char* cs : {"0.5", "1", "2"}) {
    for (const char* qs : {"0.1", "0.3", "0.5"}) {
      BigReal c = dec(cs, 400), q = dec(qs, 400);
      check_close(eval_catalog(m_cf_plus(c, q, kCtx), kCtx), m_series(-c, q, kCtx),
                  ldexp(kCtx.tolerance(), 2), "plus");
      check_close(eval_catalog(m_cf_alt(c, q, kCtx), kCtx), m_series(c, q, kCtx),
                  ldexp(kCtx.tolerance(), 2), "alt");
    }
  }
}

TEST_CASE("odd-a fraction equals 1/2 - partial theta + theta3/2") {
  for (long a : {1L, 3L, 5L}) {
    for (const char* qs : {"0.2", "0.4"}) {
      const long p = 400;
      BigReal q = dec(qs, p);
      BigReal partial(p);
      for (long k = 0; k <= (a - 1) / 2; ++k) partial += pow(q, k * k);
      BigReal rhs = ldexp(BigReal::of(1L, p), -1) - partial + ldexp(theta3(q, kCtx), -1);
      check_close(eval_catalog(odd_a_cf(a, q, kCtx), kCtx), rhs, ldexp(kCtx.tolerance(), 2),
                  "odd-a");
    }
  }
  // worked instance: a = 1, q = 0.3 -> theta3(0.3)/2 - 1/2
  BigReal q = dec("0.3", 400);
  BigReal rhs = ldexp(theta3(q, kCtx), -1) - ldexp(BigReal::of(1L, 400), -1);
  check_close(eval_catalog(odd_a_cf(1, q, kCtx), kCtx), rhs, kCtx.tolerance(), "a=1 q=0.3");
}

TEST_CASE("ratio8 CF agrees with its product; vi literal reading does not") {
  BigReal q = exp(-BigReal::pi(400));
  check_close(eval_catalog(ratio8_cf(q, kCtx), kCtx),
              product_form(ratio8_product_spec(), q, kCtx), kCtx.tolerance(), "ratio8");
  BigReal cf = eval_catalog(psi_square_cf(q, kCtx), kCtx);
  BigReal prod = product_form(psi_square_product_spec(), q, kCtx);
  CHECK(abs(cf - prod) > dec("1e-6", 64));  // the documented disagreement
}

TEST_CASE("vanishing backward denominator is nudged one ulp and flagged") {
  const long p = kCtx.internal_bits();
  // all-ones fraction with a single zero denominator at n = 32, the first
  // evaluation depth: only the depth-32 tail lands on it
  CFSpec spec{"zero-at-32", BigReal::of(1L, p),
              [p](long n) -> CFTerm {
                BigReal one = BigReal::of(1L, p);
                return {one, n == 32 ? BigReal(p) : one};
              }};
  CFResult res = eval_cf(spec, kCtx);
  CHECK(res.perturbed);
  CHECK(res.value.is_finite());
  CHECK(res.depth >= 64);
}

TEST_CASE("a divergent fraction exhausts the depth cap with a convergence error") {
  // 1/(1 - 1/(1 - 1/(1 - ...))): the classic period-three oscillation
  PrecisionContext small(64);
  const long p = small.internal_bits();
  CFSpec spec{"period-three", BigReal(p),
              [p](long) -> CFTerm {
                return {BigReal::of(-1L, p), BigReal::of(1L, p)};
              }};
  CHECK_THROWS_AS(eval_cf(spec, small), ConvergenceError);
}

TEST_CASE("catalog constructors validate their parameters") {
  CHECK_THROWS_AS(rr_cf(dec("1.0"), kCtx), DomainError);
  CHECK_THROWS_AS(rr_cf(BigReal(64), kCtx), DomainError);
  CHECK_THROWS_AS(odd_a_cf(2, dec("0.3"), kCtx), DomainError);
  CHECK_THROWS_AS(odd_a_cf(-1, dec("0.3"), kCtx), DomainError);
  CHECK_THROWS_AS(h_function(BigReal(64), kCtx), DomainError);
}
