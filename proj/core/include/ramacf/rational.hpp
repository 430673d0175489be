#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "ramacf/precision.hpp"

namespace ramacf {

// Exact rational used for product offsets, moduli and fractional prefactor
// exponents (q^{1/5}, q^{a/12 - p/2 + p^2/(2a)}, ...). Always normalized:
// den > 0, gcd(|num|, den) = 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d);

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  bool is_positive() const { return num > 0; }

  Rational operator-() const { return Rational(-num, den); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  BigReal to_real(long bits) const;
  std::string str() const;
};

}  // namespace ramacf
