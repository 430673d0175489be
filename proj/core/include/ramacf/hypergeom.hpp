#pragma once

#include <vector>

#include "ramacf/bigreal.hpp"
#include "ramacf/precision.hpp"
#include "ramacf/rational.hpp"
#include "ramacf/report.hpp"

namespace ramacf {

/// Gauss 2F1(a, b; c; z) by its Taylor series; |z| < 1 and c not a
/// non-positive integer.
BigReal gauss_2f1(const Rational& a, const Rational& b, const Rational& c, const BigReal& z,
                  const PrecisionContext& ctx);

/// Appell F1(a; b1, b2; c; x, y) double series on the unit polydisk.
BigReal appell_f1(const Rational& a, const Rational& b1, const Rational& b2, const Rational& c,
                  const BigReal& x, const BigReal& y, const PrecisionContext& ctx);

/// -6 R^{5/6} F1(1/6, 1/6, 1/6, 7/6, (11-5 sqrt5)/2 R^5, (11+5 sqrt5)/2 R^5)
/// with R = R(e^{-2 pi y}); an antiderivative of 2 pi eta(i tau)^4 in y.
BigReal eta4_antiderivative(const BigReal& y, const PrecisionContext& ctx);

/// The two integral identities with 2F1 right sides, the eta-quartic
/// normalization, and the 2F1 transformation, each verified against the
/// quadrature oracle. The omitted third 2F1 parameter is recovered by
/// scanning {1/2, 5/6, 1, 7/6, 3/2, 11/6} for a >= 20-digit match.
std::vector<Report> glasser_suite(const PrecisionContext& ctx);

/// z0 = (-123 + 55 sqrt5)/2, the common 2F1 argument.
BigReal glasser_argument(long bits);

}  // namespace ramacf
