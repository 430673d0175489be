#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ramacf/bigreal.hpp"
#include "ramacf/precision.hpp"
#include "ramacf/rational.hpp"

namespace ramacf {

struct CFTerm {
  BigReal a;  // partial numerator
  BigReal b;  // partial denominator
};

// b0 + a1/(b1 + a2/(b2 + ...)). The term rule must be stateless in n so that
// evaluation is re-entrant. A generated a_n == 0 truncates the fraction
// exactly at depth n-1.
struct CFSpec {
  std::string name;
  BigReal b0;
  std::function<CFTerm(long)> term;  // n >= 1
};

struct CFResult {
  BigReal value;
  long depth = 0;
  bool finite_truncation = false;  // a zero partial numerator was generated
  bool perturbed = false;          // a vanishing backward denominator was nudged one ulp
};

/// Backward recurrence with zero tail, doubling the depth from 32 until two
/// successive evaluations agree within the context tolerance.
CFResult eval_cf(const CFSpec& spec, const PrecisionContext& ctx);

// A catalog entry: value = q^{prefactor_exponent} * eval_cf(spec). Prefactors
// stay outside the recurrence so the CFSpec is purely rational in q.
struct CatalogCF {
  Rational prefactor_exponent;
  BigReal q;
  CFSpec spec;
};

CatalogCF rr_cf(const BigReal& q, const PrecisionContext& ctx);
CatalogCF cubic_cf(const BigReal& q, const PrecisionContext& ctx);
CatalogCF octic_cf(const BigReal& q, const PrecisionContext& ctx);
CatalogCF m_cf_plus(const BigReal& c, const BigReal& q, const PrecisionContext& ctx);
CatalogCF m_cf_alt(const BigReal& c, const BigReal& q, const PrecisionContext& ctx);
CatalogCF odd_a_cf(long a, const BigReal& q, const PrecisionContext& ctx);
CatalogCF psi_square_cf(const BigReal& q, const PrecisionContext& ctx);
CatalogCF ratio8_cf(const BigReal& q, const PrecisionContext& ctx);

BigReal eval_catalog(const CatalogCF& entry, const PrecisionContext& ctx);

/// 1 + 1/(1 + 1/(1 + ...)) = (sqrt 5 + 1)/2, the engine sanity case.
BigReal golden_ratio_cf(const PrecisionContext& ctx);

/// R(q) through the continued fraction route.
BigReal rr_value_cf(const BigReal& q, const PrecisionContext& ctx);

/// H(x) = octic continued fraction at q = e^{-x}.
BigReal h_function(const BigReal& x, const PrecisionContext& ctx);

}  // namespace ramacf
