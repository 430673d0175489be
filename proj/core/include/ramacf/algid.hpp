#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

#include "ramacf/bigreal.hpp"
#include "ramacf/precision.hpp"
#include "ramacf/report.hpp"

namespace ramacf {

// Integer polynomial annihilating a numeric constant, as recovered by
// lattice reduction. Coefficients are ascending, content 1, leading
// coefficient positive.
struct AlgebraicCandidate {
  std::vector<mpz_class> coefficients;
  int degree = -1;
  mpz_class height;
  BigReal residual;
  bool confirmed = false;

  bool found() const { return degree >= 0; }
};

using Evaluator = std::function<BigReal(const PrecisionContext&)>;

/// Lovasz-condition (delta = 3/4) LLL on integer row vectors, exact integer
/// arithmetic throughout. Rows are reduced in place.
void lll_reduce(std::vector<std::vector<mpz_class>>& basis);

/// Minimal-polynomial search on the lattice [I | round(2^s x^i)], degree
/// swept upward through 1, 2, 4, 8, 16 (capped at max_degree). A candidate
/// is accepted when |P(x)| < 2^(-0.6 working_bits) and the residual at
/// doubled precision stays below the doubled-precision threshold. The value
/// form confirms against x itself, so x must carry at least twice the
/// working precision; the evaluator form recomputes x for confirmation.
AlgebraicCandidate min_poly(const BigReal& x, int max_degree, const PrecisionContext& ctx);
AlgebraicCandidate min_poly(const Evaluator& f, int max_degree, const PrecisionContext& ctx);

/// Horner evaluation at full precision.
BigReal eval_poly(const std::vector<mpz_class>& coefficients, const BigReal& x,
                  const PrecisionContext& ctx);

/// "x^4 + 2x^3 - 6x^2 - 2x + 1" rendering for reports.
std::string poly_string(const std::vector<mpz_class>& coefficients);

/// The algebraicity instances claimed in the source material: weighted
/// Pochhammer eighth powers, normalized theta sums, the continued-fraction
/// values, and the bilateral a=0 normalization. Each report carries the
/// recovered polynomial or the computed value when nothing is found.
std::vector<Report> algebraicity_suite(const PrecisionContext& ctx);

}  // namespace ramacf
