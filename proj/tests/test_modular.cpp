#include <doctest.h>

#include "ramacf/algid.hpp"
#include "ramacf/cfrac.hpp"
#include "ramacf/modular.hpp"
#include "ramacf/numerics.hpp"
#include "test_util.hpp"

using namespace ramacf;
using ramacf::testing::check_close;
using ramacf::testing::dec;
using ramacf::testing::tol10;

namespace {

const PrecisionContext kCtx(256);

}  // namespace

TEST_CASE("modular point at r = 1: K closed form and k = k' = 1/sqrt2") {
  const long p = 400;
  ModularPoint mp = modular_point(1, kCtx);
  BigReal pi = BigReal::pi(p);
  BigReal closedK = pow(gamma(BigReal::of(1L, p) / 4), 2L) / ldexp(sqrt(pi), 2);
  check_close(mp.K, closedK, ldexp(kCtx.tolerance(), 2), "K(k_1)");
  BigReal inv_sqrt2 = 1 / sqrt(BigReal::of(2L, p));
  check_close(mp.k, inv_sqrt2, kCtx.tolerance(), "k_1");
  check_close(mp.k_prime, inv_sqrt2, kCtx.tolerance(), "k_1'");
}

TEST_CASE("k^2 + k'^2 = 1 for r in {1,2,3,4}") {
  for (int r : {1, 2, 3, 4}) {
    ModularPoint mp = modular_point(r, kCtx);
    check_close(mp.k * mp.k + mp.k_prime * mp.k_prime, BigReal::of(1L, 64),
                ldexp(kCtx.tolerance(), 2), "pythagorean");
  }
  CHECK_THROWS_AS(modular_point(Rational(-1), kCtx), DomainError);
}

TEST_CASE("four independent routes agree: theta, eta, product, CF") {
  const long p = kCtx.internal_bits();
  BigReal pi = BigReal::pi(p);
  for (BigReal x : {BigReal::of(1L, p), pi, ldexp(pi, 1)}) {
    BigReal ref = product_form(rr_product_spec(), exp(-x), kCtx);
    check_close(rr_theta_quotient(x, kCtx), ref, kCtx.tolerance(), "theta route");
    check_close(rr_eta_quotient(x / ldexp(pi, 1), kCtx), ref, kCtx.tolerance(), "eta route");
    check_close(rr_value_cf(exp(-x), kCtx), ref, kCtx.tolerance(), "cf route");
  }
}

TEST_CASE("theta quotient asymptotics: large x behaves like e^{-x/5}") {
  BigReal x = BigReal::of(60L, kCtx.internal_bits());
  check_close(rr_theta_quotient(x, kCtx), exp(-x / 5), tol10(30), "leading asymptotic");
  CHECK_THROWS_AS(rr_theta_quotient(BigReal(64), kCtx), DomainError);
}

TEST_CASE("eta quotient: large tau sends x1 to infinity and R to 0+") {
  BigReal r = rr_eta_quotient(dec("3", kCtx.internal_bits()), kCtx);
  CHECK(r.sign() > 0);
  CHECK(r < dec("0.05", 64));  // ~ e^{-6 pi / 5}
  CHECK_THROWS_AS(rr_eta_quotient(BigReal(64), kCtx), DomainError);
}

TEST_CASE("analytic product derivative against the central-difference oracle") {
  for (const char* qs : {"0.1"}) {
    BigReal q = dec(qs, kCtx.internal_bits());
    BigReal analytic = product_log_derivative(rr_product_spec(), q, kCtx);
    BigReal numeric = num_derivative(
        [](const BigReal& x, const PrecisionContext& c) {
          return product_form(rr_product_spec(), x, c);
        },
        q, kCtx);
    check_close(analytic, numeric, BigReal::two_pow(-kCtx.working_bits / 2, 64), qs);
  }
  BigReal q = exp(-BigReal::pi(kCtx.internal_bits()));
  BigReal analytic = product_log_derivative(rr_product_spec(), q, kCtx);
  BigReal numeric = num_derivative(
      [](const BigReal& x, const PrecisionContext& c) {
        return product_form(rr_product_spec(), x, c);
      },
      q, kCtx);
  check_close(analytic, numeric, BigReal::two_pow(-kCtx.working_bits / 2, 64), "e^-pi");
}

TEST_CASE("derivative of a negated-factor product against the oracle") {
  ProductSpec spec{Rational(1, 3), {{1, 2, 2, true}, {2, 2, -1}}};
  BigReal q = dec("0.2", kCtx.internal_bits());
  BigReal analytic = product_log_derivative(spec, q, kCtx);
  BigReal numeric = num_derivative(
      [spec](const BigReal& x, const PrecisionContext& c) { return product_form(spec, x, c); },
      q, kCtx);
  check_close(analytic, numeric, BigReal::two_pow(-kCtx.working_bits / 2, 64), "negated");
}

TEST_CASE("R'(q) formula route equals the analytic product derivative") {
  for (int r : {1, 4}) {
    PrecisionContext inner = kCtx.raised();
    BigReal q = exp(-BigReal::pi(inner.internal_bits()) * sqrt(BigReal::of(static_cast<long>(r), 64L)));
    BigReal product_route = product_log_derivative(rr_product_spec(), q, inner)
                                .rounded(kCtx.working_bits);
    BigReal formula_route = rr_derivative_formula(r, kCtx);
    check_close(formula_route, product_route,
                ldexp(kCtx.tolerance(), 6), "r = " + std::to_string(r));
  }
}

TEST_CASE("the linear and quintic f-quotient identities hold across the q grid") {
  PrecisionContext inner = kCtx.raised();
  const long p = inner.internal_bits();
  auto check_q = [&](const BigReal& q, const char* tag) {
    BigReal R = product_form(rr_product_spec(), q, inner);
    BigReal lhs2 = 1 / R - 1 - R;
    BigReal q15 = exp(Rational(1, 5).to_real(p) * log(q));
    BigReal rhs2 = euler_f(q15, inner) / (q15 * euler_f(pow(q, 5L), inner));
    check_close(lhs2, rhs2, ldexp(kCtx.tolerance(), 6), tag);

    BigReal r5 = pow(R, 5L);
    BigReal lhs3 = 1 / r5 - 11 - r5;
    BigReal rhs3 = pow(euler_f(q, inner), 6L) / (q * pow(euler_f(pow(q, 5L), inner), 6L));
    check_close(lhs3, rhs3, ldexp(kCtx.tolerance(), 6) * (abs(rhs3) + 1), tag);
  };
  check_q(dec("0.05", p), "q=0.05");
  check_q(dec("0.1", p), "q=0.1");
  check_q(exp(-BigReal::pi(p)), "q=e^-pi");
  check_q(exp(-ldexp(BigReal::pi(p), 1)), "q=e^-2pi");
}

TEST_CASE("normalized derivative 5 pi^2 q R' / (2 2^{1/3} K^2 R (...)^{1/6}) is algebraic") {
  // The formula factor k^{1/3} k'^{4/3} at r = 1 is 2^{-5/6}: root of 32x^6 - 1.
  PrecisionContext ctx(320);
  AlgebraicCandidate cand = min_poly(
      [](const PrecisionContext& c) {
        PrecisionContext inner = c.raised();
        const long p = inner.internal_bits();
        ModularPoint mp = modular_point(1, inner);
        BigReal q = mp.q.rounded(p);
        BigReal rprime = product_log_derivative(rr_product_spec(), q, inner);
        BigReal R = product_form(rr_product_spec(), q, inner);
        BigReal r5 = pow(R, 5L);
        BigReal pi = BigReal::pi(p);
        BigReal u = pi * pi * q * rprime * 5 /
                    (ldexp(root(BigReal::of(2L, p), 3), 1) * mp.K * mp.K * R *
                     root(1 / r5 - 11 - r5, 6));
        return u.rounded(c.working_bits);
      },
      8, ctx);
  REQUIRE(cand.found());
  CHECK(cand.confirmed);
  std::vector<mpz_class> expected = {-1, 0, 0, 0, 0, 0, 32};
  CHECK(cand.coefficients == expected);
}

TEST_CASE("x1 log-derivative identity: both sides agree at tau = 1 and 1/2") {
  for (const char* taus : {"1", "0.5"}) {
    auto [lhs, rhs] = x1_logderiv_sides(dec(taus, kCtx.internal_bits()), kCtx);
    check_close(lhs, rhs, BigReal::two_pow(-kCtx.working_bits / 2, 64), taus);
  }
  // w = 2R substitution sanity: F(2R) denominator equals (1/R^5 - 11 - R^5)^{1/6}
  PrecisionContext inner = kCtx.raised();
  const long p = inner.internal_bits();
  BigReal q = exp(-ldexp(BigReal::pi(p), 1));
  BigReal R = product_form(rr_product_spec(), q, inner);
  BigReal w = ldexp(R, 1);
  BigReal w5 = pow(w, 5L);
  BigReal lhs = 32 / w5 - 11 - w5 / 32;
  BigReal r5 = pow(R, 5L);
  check_close(lhs, 1 / r5 - 11 - r5, ldexp(kCtx.tolerance(), 4) * (abs(lhs) + 1), "w = 2R");
}
