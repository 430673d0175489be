#include "ramacf/bigreal.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "ramacf/precision.hpp"
#include "ramacf/rational.hpp"

namespace ramacf {

BigReal BigReal::of(long value, long bits) {
  BigReal r(bits);
  mpfr_set_si(r.v_, value, MPFR_RNDN);
  return r;
}

BigReal BigReal::of(double value, long bits) {
  BigReal r(bits);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

BigReal BigReal::of(const mpz_class& value, long bits) {
  BigReal r(bits);
  mpfr_set_z(r.v_, value.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigReal BigReal::parse(const std::string& decimal, long bits) {
  BigReal r(bits);
  if (decimal.empty() || mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("BigReal::parse: not a decimal number: '" + decimal + "'");
  return r;
}

BigReal BigReal::pi(long bits) {
  BigReal r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::two_pow(long exponent, long bits) {
  BigReal r(bits);
  mpfr_set_si(r.v_, 1, MPFR_RNDN);
  mpfr_mul_2si(r.v_, r.v_, exponent, MPFR_RNDN);
  return r;
}

BigReal BigReal::rounded(long bits) const {
  BigReal r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

mpz_class BigReal::to_integer() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

std::string BigReal::decimal(int digits) const {
  if (digits < 2) digits = 2;
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  if (is_zero()) return "0";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  std::string sign_part;
  if (!mant.empty() && mant[0] == '-') {
    sign_part = "-";
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  // mant is "dddd" with value 0.dddd * 10^e
  std::string out = sign_part + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  long ndec = static_cast<long>(e) - 1;
  if (ndec != 0) out += "e" + std::to_string(ndec);
  return out;
}

BigReal BigReal::operator-() const {
  BigReal r(bits());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, long b) {
  BigReal r(a.bits());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, long b) {
  BigReal r(a.bits());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, long b) {
  BigReal r(a.bits());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, long b) {
  BigReal r(a.bits());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.bits());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.bits());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& base, long e) {
  BigReal r(base.bits());
  mpfr_pow_si(r.v_, base.raw(), e, MPFR_RNDN);
  return r;
}

BigReal root(const BigReal& x, unsigned long k) {
  BigReal r(x.bits());
#if MPFR_VERSION_MAJOR >= 4
  mpfr_rootn_ui(r.raw(), x.raw(), k, MPFR_RNDN);
#else
  mpfr_root(r.raw(), x.raw(), k, MPFR_RNDN);
#endif
  return r;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal r(x.bits());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

bool within(const BigReal& a, const BigReal& b, const BigReal& tol) {
  return abs(a - b) < tol;
}

BigReal PrecisionContext::tolerance() const {
  return BigReal::two_pow(-working_bits, internal_bits());
}

BigReal PrecisionContext::internal_epsilon() const {
  return BigReal::two_pow(-internal_bits(), internal_bits());
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num * b.num, a.den * b.den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num == 0) throw DomainError("Rational: division by zero");
  return Rational(a.num * b.den, a.den * b.num);
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num * b.den < b.num * a.den;
}

BigReal Rational::to_real(long bits) const {
  return BigReal::of(static_cast<long>(num), bits) / static_cast<long>(den);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace ramacf
