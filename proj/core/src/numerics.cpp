#include "ramacf/numerics.hpp"

#include <vector>

namespace ramacf {

int character(long n, int modulus) {
  if (n < 0) throw DomainError("character: n must be >= 0");
  if (modulus == 5) {
    switch (n % 5) {
      case 1:
      case 4:
        return 1;
      case 2:
      case 3:
        return -1;
      default:
        return 0;
    }
  }
  if (modulus == 3) {
    switch (n % 3) {
      case 1:
        return 1;
      case 2:
        return -1;
      default:
        return 0;
    }
  }
  throw DomainError("character: modulus must be 3 or 5");
}

long long divisor_sum_chi(long n, int modulus) {
  if (n < 1) throw DomainError("divisor_sum_chi: n must be >= 1");
  long long sum = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    long e = n / d;
    sum += static_cast<long long>(character(d, modulus)) * d;
    if (e != d) sum += static_cast<long long>(character(e, modulus)) * e;
  }
  return sum;
}

BigReal num_derivative(const RealFunction& f, const BigReal& x, const PrecisionContext& ctx) {
  PrecisionContext inner(3 * ctx.internal_bits(), ctx.guard_bits);
  const long p = inner.internal_bits();
  BigReal h = BigReal::two_pow(-(ctx.working_bits / 3), p);
  BigReal xe = x.rounded(p);
  BigReal fp = f(xe + h, inner);
  BigReal fm = f(xe - h, inner);
  return ((fp - fm) / ldexp(h, 1)).rounded(ctx.working_bits);
}

namespace {

struct DEPoint {
  BigReal weight;  // s * (pi/2) cosh(t) sech^2(u)
  BigReal delta;   // s * (1 - tanh(u)), distance from the nearer endpoint
};

// Abscissa/weight of the tanh-sinh map x = c + s tanh((pi/2) sinh t),
// written through e^{-2u} so points near the endpoints keep full relative
// accuracy.
DEPoint de_point(const BigReal& t, const BigReal& s, const BigReal& half_pi) {
  const long p = t.bits();
  BigReal sh(p), ch(p);
  mpfr_sinh_cosh(sh.raw(), ch.raw(), t.raw(), MPFR_RNDN);
  BigReal u = half_pi * sh;
  BigReal e2u = exp(ldexp(-u, 1));
  BigReal denom = e2u + 1;
  DEPoint pt;
  pt.delta = s * ldexp(e2u, 1) / denom;
  pt.weight = s * half_pi * ch * ldexp(e2u, 2) / (denom * denom);
  return pt;
}

// One integration endpoint. A side goes inactive once its terms are
// negligible, or once the abscissa can no longer be distinguished from the
// endpoint at the working precision (only possible for nonzero endpoints;
// the level-agreement criterion still governs overall convergence).
struct Side {
  BigReal endpoint;
  bool lower = false;
  bool active = true;
  int quiet = 0;
  BigReal absorption;  // 0 when endpoint == 0

  BigReal abscissa(const BigReal& delta) const {
    return lower ? endpoint + delta : endpoint - delta;
  }
};

}  // namespace

BigReal integrate(const RealFunction& f, const BigReal& a, const BigReal& b,
                  const PrecisionContext& ctx, const QuadratureOptions& opts) {
  if (!(a < b)) throw DomainError("integrate: require a < b");
  const long p = ctx.internal_bits() + 48;
  PrecisionContext fctx(p, ctx.guard_bits);
  const BigReal half_pi = ldexp(BigReal::pi(p), -1);
  const BigReal s = ldexp((b - a).rounded(p), -1);
  const BigReal c = ldexp((a + b).rounded(p), -1);
  const BigReal term_eps = BigReal::two_pow(-(ctx.internal_bits() + 16), p);

  auto make_side = [&](const BigReal& endpoint, bool lower) {
    Side side;
    side.endpoint = endpoint.rounded(p);
    side.lower = lower;
    side.absorption = endpoint.is_zero() ? BigReal(p)
                                         : abs(endpoint) * BigReal::two_pow(-(p - 4), p);
    return side;
  };

  auto level_sum = [&](const BigReal& h, long k_start, long k_step, long k_cap) -> BigReal {
    Side lo = make_side(a, true);
    Side hi = make_side(b, false);
    BigReal sum(p);
    for (long k = k_start; (lo.active || hi.active) && k <= k_cap; k += k_step) {
      BigReal t = BigReal::of(k, p) * h;
      DEPoint pt = de_point(t, s, half_pi);
      bool past_hump = t > 3;
      for (Side* side : {&lo, &hi}) {
        if (!side->active) continue;
        if (!side->absorption.is_zero() && pt.delta < side->absorption) {
          side->active = false;
          continue;
        }
        BigReal g = pt.weight * f(side->abscissa(pt.delta), fctx);
        sum += g;
        side->quiet = (past_hump && abs(g) < term_eps) ? side->quiet + 1 : 0;
        if (side->quiet >= 2) side->active = false;
      }
    }
    return sum;
  };

  // Level 0 holds the midpoint plus both tails at h = 1; each later level
  // adds the odd multiples of the halved step.
  BigReal h = BigReal::of(1L, p);
  BigReal integral = f(c, fctx) * s * half_pi + level_sum(h, 1, 1, 16);

  for (int level = 1; level <= opts.max_level_doublings; ++level) {
    h = ldexp(h, -1);
    BigReal refined = ldexp(integral, -1) + h * level_sum(h, 1, 2, 16L << level);
    if (level >= 2 && abs(refined - integral) < ctx.tolerance()) {
      return refined.rounded(ctx.working_bits);
    }
    integral = refined;
  }
  throw ConvergenceError("integrate: tanh-sinh levels exhausted without stabilizing");
}

}  // namespace ramacf
