#pragma once

#include <utility>

#include "ramacf/bigreal.hpp"
#include "ramacf/precision.hpp"
#include "ramacf/qseries.hpp"
#include "ramacf/rational.hpp"

namespace ramacf {

// Elliptic-modular data at q = e^{-pi sqrt r}, all derived from theta null
// values: k = theta2^2/theta3^2, k' = theta4^2/theta3^2, K = (pi/2) theta3^2.
struct ModularPoint {
  Rational r;
  BigReal q;
  BigReal k;
  BigReal k_prime;
  BigReal K;
};

ModularPoint modular_point(const Rational& r, const PrecisionContext& ctx);

/// R(e^{-x}) = e^{-x/5} theta4(3ix/4, e^{-5x/2}) / theta4(ix/4, e^{-5x/2}), x > 0.
BigReal rr_theta_quotient(const BigReal& x, const PrecisionContext& ctx);

/// eta(i tau/5) / eta(5 i tau).
BigReal x1_eta_quotient(const BigReal& tau, const PrecisionContext& ctx);

/// R(e^{-2 pi tau}) = (sqrt(x^2 + 2x + 5) - x - 1)/2 with x = x1(tau).
BigReal rr_eta_quotient(const BigReal& tau, const PrecisionContext& ctx);

/// d/dq of product_form(spec, q) by logarithmic differentiation:
/// value * [alpha/q + sum_j e_j sum_k d/dq log(1 -+ q^{p_j + k a_j})].
BigReal product_log_derivative(const ProductSpec& spec, const BigReal& q,
                               const PrecisionContext& ctx);

/// R'(q) = 2 * 2^{1/3} k^{1/3} k'^{4/3} K^2 / (5 pi^2 q) * R(q)
///         * (1/R^5 - 11 - R^5)^{1/6}, at q = e^{-pi sqrt r}.
/// The caller supplies r; q -> r is never inverted here.
BigReal rr_derivative_formula(const Rational& r, const PrecisionContext& ctx);

/// Both sides of the x1 logarithmic-derivative identity:
/// (1/pi) d/dtau log x1(tau)  vs  4 eta(i tau)^4 sqrt(x1^2+2x1+5) /
/// (x1 * F(sqrt(x1^2+2x1+5) - x1 - 1)), F(w) = 10/(-11 + 32/w^5 - w^5/32)^{1/6}.
std::pair<BigReal, BigReal> x1_logderiv_sides(const BigReal& tau, const PrecisionContext& ctx);

}  // namespace ramacf
