#include "ramacf/modular.hpp"

#include "ramacf/numerics.hpp"

namespace ramacf {

ModularPoint modular_point(const Rational& r, const PrecisionContext& ctx) {
  if (!r.is_positive()) throw DomainError("modular_point: r must be positive");
  PrecisionContext inner = ctx.raised();
  const long p = inner.internal_bits();
  BigReal q = exp(-BigReal::pi(p) * sqrt(r.to_real(p)));
  BigReal t2 = theta2(q, inner);
  BigReal t3 = theta3(q, inner);
  BigReal t4 = theta4(q, inner);
  BigReal t3sq = t3 * t3;
  ModularPoint mp;
  mp.r = r;
  mp.q = q.rounded(ctx.working_bits);
  mp.k = ((t2 * t2) / t3sq).rounded(ctx.working_bits);
  mp.k_prime = ((t4 * t4) / t3sq).rounded(ctx.working_bits);
  mp.K = (ldexp(BigReal::pi(p), -1) * t3sq).rounded(ctx.working_bits);
  return mp;
}

BigReal rr_theta_quotient(const BigReal& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("rr_theta_quotient: x must be positive");
  PrecisionContext inner = ctx.raised();
  const long p = inner.internal_bits();
  BigReal xx = x.rounded(p);
  BigReal q = exp(-ldexp(xx, 1) * 5 / 4);  // e^{-5x/2}
  BigReal num = theta4_shift(xx * 3 / 4, q, inner);
  BigReal den = theta4_shift(xx / 4, q, inner);
  BigReal pre = exp(-xx / 5);
  return (pre * num / den).rounded(ctx.working_bits);
}

BigReal x1_eta_quotient(const BigReal& tau, const PrecisionContext& ctx) {
  if (tau.sign() <= 0) throw DomainError("x1_eta_quotient: tau must be positive");
  PrecisionContext inner = ctx.raised();
  const long p = inner.internal_bits();
  BigReal t = tau.rounded(p);
  return (dedekind_eta(t / 5, inner) / dedekind_eta(t * 5, inner)).rounded(ctx.working_bits);
}

BigReal rr_eta_quotient(const BigReal& tau, const PrecisionContext& ctx) {
  PrecisionContext inner = ctx.raised();
  BigReal x = x1_eta_quotient(tau, inner);
  BigReal root_term = sqrt(x * x + ldexp(x, 1) + 5);
  return ldexp(root_term - x - 1, -1).rounded(ctx.working_bits);
}

BigReal product_log_derivative(const ProductSpec& spec, const BigReal& q,
                               const PrecisionContext& ctx) {
  if (q.sign() <= 0 || q >= 1) throw DomainError("product_log_derivative: q must lie in (0,1)");
  PrecisionContext inner = ctx.raised();
  const long p = inner.internal_bits();
  const BigReal eps = BigReal::two_pow(-(p + 8), p);
  const BigReal qq = q.rounded(p);
  const BigReal lq = log(qq);
  BigReal value = product_form(spec, qq, inner);

  // d/dq log of the full product: alpha/q plus, per factor 1 -+ q^m with
  // m = p_j + k a_j, the term -+ m q^{m-1} / (1 -+ q^m).
  BigReal logderiv = spec.prefactor_exponent.is_zero()
                         ? BigReal(p)
                         : spec.prefactor_exponent.to_real(p) / qq;
  for (const ProductTerm& term : spec.terms) {
    if (!term.offset.is_positive() || !term.modulus.is_positive())
      throw DomainError("product_log_derivative: offsets and moduli must be positive");
    BigReal qa = exp(term.modulus.to_real(p) * lq);
    BigReal m = term.offset.to_real(p);
    const BigReal a = term.modulus.to_real(p);
    BigReal qm = exp(m * lq);  // q^m, advanced by *= qa
    BigReal series(p);
    while (true) {
      BigReal piece = m * qm / (qq * (term.negated ? 1 + qm : 1 - qm));
      series += piece;
      if (abs(piece) < eps) break;
      m += a;
      qm *= qa;
    }
    if (term.negated) series = -series;
    logderiv -= series * term.exponent;
  }
  return (value * logderiv).rounded(ctx.working_bits);
}

BigReal rr_derivative_formula(const Rational& r, const PrecisionContext& ctx) {
  PrecisionContext inner = ctx.raised();
  const long p = inner.internal_bits();
  ModularPoint mp = modular_point(r, inner);
  BigReal q = mp.q.rounded(p);
  BigReal R = product_form(rr_product_spec(), q, inner);
  BigReal r5 = pow(R, 5L);
  BigReal bracket = 1 / r5 - 11 - r5;
  BigReal pi = BigReal::pi(p);
  BigReal lead = ldexp(root(BigReal::of(2L, p), 3), 1) * root(mp.k, 3) *
                 pow(root(mp.k_prime, 3), 4L) * mp.K * mp.K / (pi * pi * q * 5);
  return (lead * R * root(bracket, 6)).rounded(ctx.working_bits);
}

std::pair<BigReal, BigReal> x1_logderiv_sides(const BigReal& tau, const PrecisionContext& ctx) {
  if (tau.sign() <= 0) throw DomainError("x1_logderiv_sides: tau must be positive");
  PrecisionContext inner = ctx.raised();
  const long p = inner.internal_bits();
  BigReal t = tau.rounded(p);

  BigReal lhs = num_derivative(
                    [](const BigReal& u, const PrecisionContext& c) {
                      return log(x1_eta_quotient(u, c));
                    },
                    t, inner) /
                BigReal::pi(p);

  BigReal x1 = x1_eta_quotient(t, inner);
  BigReal disc = sqrt(x1 * x1 + ldexp(x1, 1) + 5);
  BigReal w = disc - x1 - 1;
  BigReal w5 = pow(w, 5L);
  BigReal f_w = 10 / root(32 / w5 - 11 - w5 / 32, 6);
  BigReal eta4 = pow(dedekind_eta(t, inner), 4L);
  BigReal rhs = ldexp(eta4, 2) * disc / (x1 * f_w);
  return {lhs.rounded(ctx.working_bits), rhs.rounded(ctx.working_bits)};
}

}  // namespace ramacf
