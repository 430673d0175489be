#pragma once

#include <functional>

#include "ramacf/bigreal.hpp"
#include "ramacf/precision.hpp"

namespace ramacf {

/// Quadratic residue character mod 3 or mod 5: X2(n) for modulus 5
/// (1 for n = 1,4; -1 for n = 2,3; 0 for n = 0 mod 5), Y2(n) for modulus 3
/// (1 for n = 1; -1 for n = 2; 0 for n = 0 mod 3).
int character(long n, int modulus);

/// sum over d | n of character(d, modulus) * d, by divisor enumeration.
long long divisor_sum_chi(long n, int modulus);

using RealFunction = std::function<BigReal(const BigReal&, const PrecisionContext&)>;

/// Central difference (f(x+h) - f(x-h)) / 2h with h = 2^(-working_bits/3),
/// evaluated at tripled internal precision. Accurate to roughly two thirds
/// of working_bits.
BigReal num_derivative(const RealFunction& f, const BigReal& x, const PrecisionContext& ctx);

struct QuadratureOptions {
  int max_level_doublings = 12;
};

/// Double-exponential (tanh-sinh) quadrature over [a, b]. Levels are doubled
/// until two successive results agree within the context tolerance.
/// Endpoint algebraic singularities (q^{-5/6} and the like) are admissible;
/// the integrand is never evaluated at a or b themselves.
BigReal integrate(const RealFunction& f, const BigReal& a, const BigReal& b,
                  const PrecisionContext& ctx, const QuadratureOptions& opts = {});

}  // namespace ramacf
