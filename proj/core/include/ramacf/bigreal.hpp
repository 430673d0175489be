#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

namespace ramacf {

// Arbitrary-precision real backed by MPFR, with value semantics. Every value
// carries the binary precision it was computed at; binary operations produce
// results at the larger of the two operand precisions, rounded to nearest.
//
// Module code never compares BigReal values for exact equality when deciding
// mathematical agreement; agreement checks go through an explicit tolerance.
class BigReal {
 public:
  BigReal() { mpfr_init2(v_, 64), mpfr_set_zero(v_, 1); }
  explicit BigReal(long bits) { mpfr_init2(v_, clamp(bits)), mpfr_set_zero(v_, 1); }
  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
  }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  static BigReal of(long value, long bits);
  static BigReal of(double value, long bits);
  static BigReal of(const mpz_class& value, long bits);
  static BigReal parse(const std::string& decimal, long bits);
  static BigReal pi(long bits);
  static BigReal two_pow(long exponent, long bits);

  long bits() const { return mpfr_get_prec(v_); }
  BigReal rounded(long bits) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer_value() const { return mpfr_integer_p(v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  mpz_class to_integer() const;  // round to nearest integer
  std::string decimal(int digits) const;

  BigReal operator-() const;
  friend BigReal operator+(const BigReal& a, const BigReal& b) { return bin(mpfr_add, a, b); }
  friend BigReal operator-(const BigReal& a, const BigReal& b) { return bin(mpfr_sub, a, b); }
  friend BigReal operator*(const BigReal& a, const BigReal& b) { return bin(mpfr_mul, a, b); }
  friend BigReal operator/(const BigReal& a, const BigReal& b) { return bin(mpfr_div, a, b); }
  friend BigReal operator+(const BigReal& a, long b);
  friend BigReal operator-(const BigReal& a, long b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator/(const BigReal& a, long b);
  friend BigReal operator+(long a, const BigReal& b) { return b + a; }
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator/(long a, const BigReal& b);
  BigReal& operator+=(const BigReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigReal& operator-=(const BigReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigReal& operator*=(const BigReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigReal& operator/=(const BigReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return !mpfr_equal_p(a.v_, b.v_); }
  friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

  friend BigReal abs(const BigReal& x) { return un(mpfr_abs, x); }
  friend BigReal sqrt(const BigReal& x) { return un(mpfr_sqrt, x); }
  friend BigReal exp(const BigReal& x) { return un(mpfr_exp, x); }
  friend BigReal log(const BigReal& x) { return un(mpfr_log, x); }
  friend BigReal cosh(const BigReal& x) { return un(mpfr_cosh, x); }
  friend BigReal sinh(const BigReal& x) { return un(mpfr_sinh, x); }
  friend BigReal tanh(const BigReal& x) { return un(mpfr_tanh, x); }
  friend BigReal gamma(const BigReal& x) { return un(mpfr_gamma, x); }
  friend BigReal pow(const BigReal& base, const BigReal& e) { return bin(mpfr_pow, base, e); }
  friend BigReal pow(const BigReal& base, long e);
  friend BigReal root(const BigReal& x, unsigned long k);
  friend BigReal ldexp(const BigReal& x, long e);

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  static long clamp(long bits) { return bits < 2 ? 2 : bits; }
  template <typename F>
  static BigReal bin(F op, const BigReal& a, const BigReal& b) {
    BigReal r(std::max(a.bits(), b.bits()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  template <typename F>
  static BigReal un(F op, const BigReal& a) {
    BigReal r(a.bits());
    op(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

/// |a - b| < tol
bool within(const BigReal& a, const BigReal& b, const BigReal& tol);

}  // namespace ramacf
