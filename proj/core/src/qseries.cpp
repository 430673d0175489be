#include "ramacf/qseries.hpp"

#include <cmath>

#include "ramacf/numerics.hpp"

namespace ramacf {

namespace {

void check_nome(const BigReal& q, const char* who, bool allow_zero = false) {
  if (q.sign() < 0 || (!allow_zero && q.is_zero()) || q >= 1)
    throw DomainError(std::string(who) + ": nome must lie in (0,1)");
}

// q^e at p bits without rounding to the context's working precision.
BigReal pow_rational(const BigReal& q, const Rational& e, long p) {
  if (e.is_zero()) return BigReal::of(1L, p);
  return exp(e.to_real(p) * log(q.rounded(p)));
}

// (a; q)_inf at p bits. Factors 1 - a q^k stay in (0,1) for 0 < a < 1, so a
// partial product that falls below the underflow threshold bounds the value
// and may be returned as is.
BigReal pochhammer_inf_raw(const BigReal& a, const BigReal& q, long p) {
  const BigReal eps = BigReal::two_pow(-(p + 8), p) * (1 - q);
  const BigReal underflow = BigReal::two_pow(-(p + 64), p);
  const bool shrinking = a.sign() > 0 && a < 1;
  BigReal acc = BigReal::of(1L, p);
  BigReal t = a.rounded(p);
  for (long k = 0; k < 20'000'000; ++k) {
    if (abs(t) < eps) return acc;
    BigReal factor = 1 - t;
    if (factor.is_zero()) throw DomainError("pochhammer: vanishing factor a q^k = 1");
    acc *= factor;
    if (shrinking && acc < underflow) return acc;
    t *= q;
  }
  throw ConvergenceError("pochhammer: truncation bound not reached");
}

BigReal product_form_raw(const ProductSpec& spec, const BigReal& q, long p) {
  check_nome(q, "product_form");
  const BigReal lq = log(q.rounded(p));
  BigReal value = spec.prefactor_exponent.is_zero() ? BigReal::of(1L, p)
                                                    : exp(spec.prefactor_exponent.to_real(p) * lq);
  for (const ProductTerm& term : spec.terms) {
    if (!term.offset.is_positive() || !term.modulus.is_positive())
      throw DomainError("product_form: offsets and moduli must be positive");
    BigReal qp = exp(term.offset.to_real(p) * lq);
    BigReal qa = exp(term.modulus.to_real(p) * lq);
    BigReal factor = pochhammer_inf_raw(term.negated ? -qp : qp, qa, p);
    value *= pow(factor, static_cast<long>(term.exponent));
  }
  return value;
}

}  // namespace

ProductSpec rr_product_spec() {
  return {Rational(1, 5),
          {{1, 5, 1}, {4, 5, 1}, {2, 5, -1}, {3, 5, -1}}};
}

ProductSpec rr_star_product_spec() {
  return {Rational(0),
          {{1, 5, 1}, {4, 5, 1}, {2, 5, -1}, {3, 5, -1}}};
}

ProductSpec cubic_product_spec() {
  return {Rational(1, 3),
          {{1, 6, 1}, {5, 6, 1}, {3, 6, -2}}};
}

ProductSpec cubic_product_spec_alt() {
  return {Rational(1, 3),
          {{1, 2, 1}, {3, 6, -3}}};
}

ProductSpec octic_product_spec() {
  return {Rational(1, 2),
          {{1, 8, 1}, {7, 8, 1}, {3, 8, -1}, {5, 8, -1}}};
}

ProductSpec psi_square_product_spec() {
  return {Rational(1, 2),
          {{4, 4, 2}, {2, 4, -2}}};
}

ProductSpec ratio8_product_spec() {
  return {Rational(0),
          {{2, 2, 1, true}, {1, 2, -1, true}}};
}

BigReal pochhammer(const BigReal& a, const BigReal& q, long n, const PrecisionContext& ctx) {
  if (q.sign() < 0 || q >= 1) throw DomainError("pochhammer: q must lie in [0,1)");
  if (n < 0) throw DomainError("pochhammer: n must be >= 0");
  const long p = ctx.internal_bits();
  BigReal acc = BigReal::of(1L, p);
  BigReal t = a.rounded(p);
  for (long k = 0; k < n; ++k) {
    BigReal factor = 1 - t;
    if (factor.is_zero()) throw DomainError("pochhammer: vanishing factor a q^k = 1");
    acc *= factor;
    t *= q;
  }
  return acc.rounded(ctx.working_bits);
}

BigReal pochhammer_inf(const BigReal& a, const BigReal& q, const PrecisionContext& ctx) {
  if (q.sign() < 0 || q >= 1) throw DomainError("pochhammer: q must lie in [0,1)");
  return pochhammer_inf_raw(a, q, ctx.internal_bits()).rounded(ctx.working_bits);
}

BigReal euler_f(const BigReal& q, const PrecisionContext& ctx) {
  check_nome(q, "euler_f");
  return pochhammer_inf_raw(q, q, ctx.internal_bits()).rounded(ctx.working_bits);
}

BigReal product_form(const ProductSpec& spec, const BigReal& q, const PrecisionContext& ctx) {
  return product_form_raw(spec, q, ctx.internal_bits()).rounded(ctx.working_bits);
}

BigReal q_power(const BigReal& q, const Rational& e, const PrecisionContext& ctx) {
  if (q.sign() <= 0) throw DomainError("q_power: base must be positive");
  return pow_rational(q, e, ctx.internal_bits()).rounded(ctx.working_bits);
}

BigReal theta3(const BigReal& q, const PrecisionContext& ctx) {
  check_nome(q, "theta3", /*allow_zero=*/true);
  const long p = ctx.internal_bits();
  const BigReal eps = BigReal::two_pow(-(p + 8), p);
  BigReal sum = BigReal::of(1L, p);
  BigReal qq = q.rounded(p);
  BigReal cur = qq;            // q^{k^2} at k = 1
  BigReal inc = qq * qq * qq;  // q^{2k+1} at k = 1
  const BigReal step = qq * qq;
  while (!(cur < eps)) {
    sum += ldexp(cur, 1);
    cur *= inc;
    inc *= step;
  }
  return sum.rounded(ctx.working_bits);
}

BigReal theta4(const BigReal& q, const PrecisionContext& ctx) {
  check_nome(q, "theta4", /*allow_zero=*/true);
  const long p = ctx.internal_bits();
  const BigReal eps = BigReal::two_pow(-(p + 8), p);
  BigReal sum = BigReal::of(1L, p);
  BigReal qq = q.rounded(p);
  BigReal cur = qq;
  BigReal inc = qq * qq * qq;
  const BigReal step = qq * qq;
  int sign = -1;
  while (!(cur < eps)) {
    sum += sign > 0 ? ldexp(cur, 1) : -ldexp(cur, 1);
    cur *= inc;
    inc *= step;
    sign = -sign;
  }
  return sum.rounded(ctx.working_bits);
}

BigReal theta2(const BigReal& q, const PrecisionContext& ctx) {
  check_nome(q, "theta2");
  const long p = ctx.internal_bits();
  const BigReal eps = BigReal::two_pow(-(p + 8), p);
  BigReal qq = q.rounded(p);
  BigReal sum = BigReal::of(1L, p);  // k = 0 term of sum q^{k^2+k}
  BigReal cur = qq * qq;             // q^{k^2+k} at k = 1
  BigReal inc = qq * qq * qq * qq;   // q^{2k+2} at k = 1
  const BigReal step = qq * qq;
  while (!(cur < eps)) {
    sum += cur;
    cur *= inc;
    inc *= step;
  }
  return (ldexp(sum, 1) * pow_rational(qq, Rational(1, 4), p)).rounded(ctx.working_bits);
}

BigReal theta_sum(const Rational& a, const Rational& b, const Rational& c, const BigReal& q,
                  const PrecisionContext& ctx) {
  if (!a.is_positive()) throw DomainError("theta_sum: quadratic coefficient must be positive");
  check_nome(q, "theta_sum");
  const long p = ctx.internal_bits();
  const BigReal eps = BigReal::two_pow(-(p + 8), p);
  BigReal sum(p);
  for (int dir : {+1, -1}) {
    for (long v = (dir > 0 ? 0 : -1);; v += dir) {
      Rational e = a * Rational(v) * Rational(v) + b * Rational(v) + c;
      BigReal term = pow_rational(q, e, p);
      sum += term;
      // Quadratic dominance: once the exponent increments are positive and
      // the term is below threshold, the tail is a sub-geometric series.
      Rational de = a * Rational(dir * (2 * v + dir)) + (dir > 0 ? b : -b);
      if (term < eps && de.is_positive()) break;
      if (v > 1'000'000 || v < -1'000'000)
        throw ConvergenceError("theta_sum: truncation bound not reached");
    }
  }
  return sum.rounded(ctx.working_bits);
}

BigReal theta4_shift(const BigReal& y, const BigReal& q, const PrecisionContext& ctx) {
  check_nome(q, "theta4_shift", /*allow_zero=*/true);
  const long p = ctx.internal_bits();
  const BigReal eps = BigReal::two_pow(-(p + 8), p);
  const BigReal yy = abs(y).rounded(p);
  BigReal qq = q.rounded(p);
  // Terms decrease once n exceeds y / log(1/q).
  double n_star = qq.is_zero() ? 0.0
                               : yy.to_double() / std::log(1.0 / qq.to_double());
  BigReal sum = BigReal::of(1L, p);
  BigReal prev_mag(p);
  BigReal cur = qq;            // q^{n^2}
  BigReal inc = qq * qq * qq;  // q^{2n+1}
  const BigReal step = qq * qq;
  int sign = -1;
  for (long n = 1; !cur.is_zero(); ++n) {
    BigReal mag = cur * cosh(ldexp(yy * static_cast<long>(n), 1));
    if (n > static_cast<long>(n_star) + 4 && prev_mag.sign() > 0 && mag > prev_mag)
      throw DomainError("theta4_shift: series terms fail to decrease");
    sum += sign > 0 ? ldexp(mag, 1) : -ldexp(mag, 1);
    if (mag < eps && n > static_cast<long>(n_star)) break;
    prev_mag = mag;
    cur *= inc;
    inc *= step;
    sign = -sign;
  }
  return sum.rounded(ctx.working_bits);
}

BigReal dedekind_eta(const BigReal& t, const PrecisionContext& ctx) {
  if (t.sign() <= 0) throw DomainError("dedekind_eta: argument must be positive");
  const long p = ctx.internal_bits();
  const BigReal pi = BigReal::pi(p);
  const BigReal tt = t.rounded(p);
  // eta(it) <= t^{-1/2} e^{-pi/(12 t)} for small t; below the representable
  // range the value is returned as zero.
  BigReal log2_bound = (-pi / (tt * 12) - ldexp(log(tt), -1)) / log(BigReal::of(2L, p));
  if (log2_bound < -(p + 32)) return BigReal(ctx.working_bits);
  BigReal q2 = exp(-ldexp(pi * tt, 1));
  if (q2 >= 1) throw DomainError("dedekind_eta: nome rounds to 1 at this precision");
  BigReal value = exp(-pi * tt / 12) * pochhammer_inf_raw(q2, q2, p);
  return value.rounded(ctx.working_bits);
}

BigReal log_rstar_series(const BigReal& x, const PrecisionContext& ctx) {
  check_nome(x, "log_rstar_series", /*allow_zero=*/true);
  const long p = ctx.internal_bits();
  const BigReal eps = BigReal::two_pow(-(p + 8), p) * (1 - x);
  BigReal sum(p);
  BigReal xn = x.rounded(p);
  const BigReal xx = x.rounded(p);
  for (long n = 1; n < 2'000'000; ++n) {
    // |sum_{d|n} X2(d) d| <= sigma(n) <= n (1 + ln n)
    if (xn * (2.0 + std::log(static_cast<double>(n))) < eps) {
      return sum.rounded(ctx.working_bits);
    }
    long long coeff = divisor_sum_chi(n, 5);
    if (coeff != 0) sum -= xn * BigReal::of(static_cast<long>(coeff), p) / n;
    xn *= xx;
  }
  throw ConvergenceError("log_rstar_series: truncation bound not reached");
}

namespace {

BigReal y2_character_series_raw(const BigReal& q, long p) {
  const BigReal eps = BigReal::two_pow(-(p + 8), p) * (1 - q);
  BigReal sum(p);
  BigReal qn = q;
  for (long n = 1; n < 2'000'000; ++n) {
    if (qn * (2.0 + std::log(static_cast<double>(n))) < eps) return exp(-sum);
    long long coeff = divisor_sum_chi(n, 3);
    if (coeff != 0) sum += qn * BigReal::of(static_cast<long>(coeff), p) / n;
    qn *= q;
  }
  throw ConvergenceError("y2_log_series: truncation bound not reached");
}

}  // namespace

BigReal y2_log_series(const BigReal& x_step, const PrecisionContext& ctx) {
  if (x_step.sign() <= 0) throw DomainError("y2_log_series: step must be positive");
  const long p = ctx.internal_bits();
  return y2_character_series_raw(exp(-x_step.rounded(p)), p).rounded(ctx.working_bits);
}

BigReal y2_product(const BigReal& x_step, const PrecisionContext& ctx) {
  if (x_step.sign() <= 0) throw DomainError("y2_product: step must be positive");
  const long p = ctx.internal_bits();
  ProductSpec spec{Rational(0), {{1, 3, 1}, {2, 3, -1}}};
  return product_form_raw(spec, exp(-x_step.rounded(p)), p).rounded(ctx.working_bits);
}

BigReal y2_fraction_series(const BigReal& x_step, const PrecisionContext& ctx) {
  if (x_step.sign() <= 0) throw DomainError("y2_fraction_series: step must be positive");
  const long p = ctx.internal_bits();
  const BigReal q = exp(-x_step.rounded(p));
  const BigReal eps = BigReal::two_pow(-(p + 8), p) * (1 - q);
  // Summing the Y2 geometric blocks gives exp(-sum (1/n) (u - u^2)/(1 - u^3))
  // with u = e^{-nx}, i.e. exp(-sum u / (n (1 + u + u^2))). The same display
  // with positive exponents e^{nx} flips the sign of every term and yields
  // the reciprocal, not this value.
  BigReal sum(p);
  BigReal u = q;
  for (long n = 1; !(u < eps); ++n) {
    sum += u / ((1 + u + u * u) * n);
    u *= q;
  }
  return exp(-sum).rounded(ctx.working_bits);
}

BigReal m_series(const BigReal& c, const BigReal& q, const PrecisionContext& ctx) {
  check_nome(q, "m_series");
  const long p = ctx.internal_bits();
  const BigReal eps = BigReal::two_pow(-(p + 8), p);
  BigReal sum(p);
  BigReal term = BigReal::of(1L, p);  // c^k q^{k(k+1)/2}
  BigReal ratio = c.rounded(p) * q;   // c q^{k+1} at k = 0
  const BigReal qq = q.rounded(p);
  for (long k = 0; k < 2'000'000; ++k) {
    sum += term;
    term *= ratio;
    ratio *= qq;
    if (abs(term) < eps && ldexp(abs(ratio), 1) < 1) return sum.rounded(ctx.working_bits);
  }
  throw ConvergenceError("m_series: truncation bound not reached");
}

BigReal bilateral_theta(const BigReal& c, const BigReal& q, const PrecisionContext& ctx) {
  check_nome(q, "bilateral_theta");
  if (c.is_zero()) throw DomainError("bilateral_theta: c must be nonzero");
  const long p = ctx.internal_bits();
  const BigReal eps = BigReal::two_pow(-(p + 8), p);
  const BigReal qq = q.rounded(p);
  // Either tail: term(i+1) = term(i) * ratio(i) with ratio(i+1) = ratio(i)*q,
  // so once |ratio| < 1/2 and the term is below threshold the rest is bounded
  // by a geometric series under eps.
  auto one_sided = [&](BigReal term, BigReal ratio) -> BigReal {
    BigReal sum(p);
    for (long i = 0; i < 2'000'000; ++i) {
      sum += term;
      term *= ratio;
      ratio *= qq;
      if (abs(term) < eps && ldexp(abs(ratio), 1) < 1) return sum + term;
    }
    throw ConvergenceError("bilateral_theta: truncation bound not reached");
  };
  const BigReal cc = c.rounded(p);
  BigReal forward = one_sided(BigReal::of(1L, p), cc * qq);  // k = 0, 1, 2, ...
  BigReal backward = one_sided(1 / cc, qq / cc);             // k = -1, -2, ...
  return (forward + backward).rounded(ctx.working_bits);
}

}  // namespace ramacf
