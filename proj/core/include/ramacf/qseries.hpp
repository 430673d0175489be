#pragma once

#include <vector>

#include "ramacf/bigreal.hpp"
#include "ramacf/precision.hpp"
#include "ramacf/rational.hpp"

namespace ramacf {

// One factor (q^p; q^a)_inf^e of a weighted q-product; negated means the
// argument is -q^p, i.e. factors 1 + q^{p+ka}.
struct ProductTerm {
  Rational offset;   // p > 0
  Rational modulus;  // a > 0
  int exponent = 1;  // e
  bool negated = false;
};

// q^alpha * prod_j (q^{p_j}; q^{a_j})_inf^{e_j}
struct ProductSpec {
  Rational prefactor_exponent;  // alpha
  std::vector<ProductTerm> terms;
};

// ---- named product shapes ----------------------------------------------

/// q^{1/5} (q;q^5)(q^4;q^5) / ((q^2;q^5)(q^3;q^5)) — the Rogers-Ramanujan product.
ProductSpec rr_product_spec();
/// Same without the q^{1/5} prefactor (the R* form).
ProductSpec rr_star_product_spec();
/// q^{1/3} (q;q^6)(q^5;q^6) / (q^3;q^6)^2 — the cubic continued fraction product.
ProductSpec cubic_product_spec();
/// q^{1/3} (q;q^2) / (q^3;q^6)^3 — the equivalent alternative form.
ProductSpec cubic_product_spec_alt();
/// q^{1/2} (q;q^8)(q^7;q^8) / ((q^3;q^8)(q^5;q^8)) — the octic product.
ProductSpec octic_product_spec();
/// q^{1/2} (q^4;q^4)^2 / (q^2;q^4)^2.
ProductSpec psi_square_product_spec();
/// (-q^2;q^2) / (-q;q^2), no prefactor.
ProductSpec ratio8_product_spec();

// ---- operations ----------------------------------------------------------

/// (a; q)_n, exact finite product.
BigReal pochhammer(const BigReal& a, const BigReal& q, long n, const PrecisionContext& ctx);

/// (a; q)_inf, truncated once |a| q^K is below the internal epsilon; the
/// geometric tail bound 2|a| q^K / (1-q) is folded into the guard budget.
BigReal pochhammer_inf(const BigReal& a, const BigReal& q, const PrecisionContext& ctx);

/// f(-q) = (q; q)_inf.
BigReal euler_f(const BigReal& q, const PrecisionContext& ctx);

BigReal product_form(const ProductSpec& spec, const BigReal& q, const PrecisionContext& ctx);

/// q^e as exp(e log q); uniform handling of fractional prefactors.
BigReal q_power(const BigReal& q, const Rational& e, const PrecisionContext& ctx);

BigReal theta2(const BigReal& q, const PrecisionContext& ctx);
BigReal theta3(const BigReal& q, const PrecisionContext& ctx);
BigReal theta4(const BigReal& q, const PrecisionContext& ctx);

/// sum over v in Z of q^{a v^2 + b v + c}; requires a > 0.
BigReal theta_sum(const Rational& a, const Rational& b, const Rational& c, const BigReal& q,
                  const PrecisionContext& ctx);

/// theta4 with purely imaginary first argument iy, as a real cosh sum:
/// 1 + 2 sum (-1)^n q^{n^2} cosh(2 n y).
BigReal theta4_shift(const BigReal& y, const BigReal& q, const PrecisionContext& ctx);

/// eta(it) = e^{-pi t/12} (e^{-2 pi t}; e^{-2 pi t})_inf, t > 0.
BigReal dedekind_eta(const BigReal& t, const PrecisionContext& ctx);

/// log R*(x) = -sum_{n>=1} (x^n/n) sum_{d|n} X2(d) d.
BigReal log_rstar_series(const BigReal& x, const PrecisionContext& ctx);

/// The mod-3 analogue, three equivalent forms (q = e^{-x}):
/// character series exp(-sum e^{-nx}/n * sum_{d|n} Y2(d) d), ...
BigReal y2_log_series(const BigReal& x_step, const PrecisionContext& ctx);
/// ... the product prod (1 - e^{-nx})^{Y2(n)}, ...
BigReal y2_product(const BigReal& x_step, const PrecisionContext& ctx);
/// ... and the rational-fraction series exp(-sum (1/n)(e^{nx}-e^{2nx})/(e^{3nx}-1)).
BigReal y2_fraction_series(const BigReal& x_step, const PrecisionContext& ctx);

/// M(c, q) = sum_{k>=0} c^k q^{k(k+1)/2}.
BigReal m_series(const BigReal& c, const BigReal& q, const PrecisionContext& ctx);

/// sum over k in Z of c^k q^{k(k+1)/2}; c must be nonzero.
BigReal bilateral_theta(const BigReal& c, const BigReal& q, const PrecisionContext& ctx);

}  // namespace ramacf
