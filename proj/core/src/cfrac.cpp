#include "ramacf/cfrac.hpp"

#include <algorithm>

#include "ramacf/qseries.hpp"

namespace ramacf {

namespace {

constexpr long kInitialDepth = 32;
constexpr long kDepthCap = 1L << 20;

void check_nome_cf(const BigReal& q, const char* who) {
  if (q.sign() <= 0 || q >= 1) throw DomainError(std::string(who) + ": q must lie in (0,1)");
}

}  // namespace

CFResult eval_cf(const CFSpec& spec, const PrecisionContext& ctx) {
  const long p = ctx.internal_bits();
  const BigReal ulp = BigReal::two_pow(-p, p);

  // Terms are cached up to a memory bound; the rule is stateless in n, so
  // deeper positions are regenerated on demand.
  constexpr long kCacheCap = 1L << 16;
  std::vector<CFTerm> terms;  // terms[n-1] = (a_n, b_n)
  bool finite = false;
  long finite_depth = 0;
  auto extend = [&](long n) {
    while (!finite && static_cast<long>(terms.size()) < std::min(n, kCacheCap)) {
      CFTerm t = spec.term(static_cast<long>(terms.size()) + 1);
      if (t.a.is_zero()) {
        finite = true;
        finite_depth = static_cast<long>(terms.size());
        break;
      }
      terms.push_back({t.a.rounded(p), t.b.rounded(p)});
    }
  };
  auto term_at = [&](long n) -> CFTerm {
    if (n <= static_cast<long>(terms.size())) return terms[n - 1];
    CFTerm t = spec.term(n);
    return {t.a.rounded(p), t.b.rounded(p)};
  };

  bool perturbed = false;
  auto backward = [&](long depth) -> BigReal {
    // tail-zero: t = b_N, then t = b_n + a_{n+1}/t downward
    BigReal t = term_at(depth).b;
    BigReal a_below = term_at(depth).a;
    for (long n = depth - 1; n >= 1; --n) {
      if (t.is_zero()) {
        t = ulp;
        perturbed = true;
      }
      CFTerm here = term_at(n);
      t = here.b + a_below / t;
      a_below = here.a;
    }
    if (t.is_zero()) {
      t = ulp;
      perturbed = true;
    }
    return spec.b0 + a_below / t;
  };

  extend(kInitialDepth);
  if (finite) {
    if (finite_depth == 0) return {spec.b0.rounded(ctx.working_bits), 0, true, false};
    BigReal v = backward(finite_depth);
    return {v.rounded(ctx.working_bits), finite_depth, true, perturbed};
  }

  long depth = kInitialDepth;
  BigReal prev = backward(depth);
  while (depth < kDepthCap) {
    depth *= 2;
    extend(depth);
    if (finite) {
      BigReal v = finite_depth == 0 ? spec.b0 : backward(finite_depth);
      return {v.rounded(ctx.working_bits), finite_depth, true, perturbed};
    }
    BigReal cur = backward(depth);
    if (abs(cur - prev) < ctx.tolerance()) {
      return {cur.rounded(ctx.working_bits), depth, false, perturbed};
    }
    prev = cur;
  }
  throw ConvergenceError("eval_cf: no stabilization by depth 2^20 for '" + spec.name + "'");
}

// ---- catalog --------------------------------------------------------------

namespace {

// q is captured at the evaluation precision; term rules use integer powers of
// it so the recurrence stays purely rational in q.
BigReal qp(const BigReal& q, long e) { return pow(q, e); }

}  // namespace

CatalogCF rr_cf(const BigReal& q, const PrecisionContext& ctx) {
  check_nome_cf(q, "rr_cf");
  BigReal qq = q.rounded(ctx.internal_bits());
  CFSpec spec{"rr", BigReal(qq.bits()),
              [qq](long n) -> CFTerm {
                BigReal one = BigReal::of(1L, qq.bits());
                if (n == 1) return {one, one};
                return {qp(qq, n - 1), one};
              }};
  return {Rational(1, 5), qq, std::move(spec)};
}

CatalogCF cubic_cf(const BigReal& q, const PrecisionContext& ctx) {
  check_nome_cf(q, "cubic_cf");
  BigReal qq = q.rounded(ctx.internal_bits());
  CFSpec spec{"cubic", BigReal(qq.bits()),
              [qq](long n) -> CFTerm {
                BigReal one = BigReal::of(1L, qq.bits());
                if (n == 1) return {one, one};
                return {qp(qq, n - 1) + qp(qq, 2 * (n - 1)), one};
              }};
  return {Rational(1, 3), qq, std::move(spec)};
}

CatalogCF octic_cf(const BigReal& q, const PrecisionContext& ctx) {
  check_nome_cf(q, "octic_cf");
  BigReal qq = q.rounded(ctx.internal_bits());
  CFSpec spec{"octic", BigReal(qq.bits()),
              [qq](long n) -> CFTerm {
                BigReal one = BigReal::of(1L, qq.bits());
                BigReal b = one + qp(qq, 2 * n - 1);
                if (n == 1) return {one, b};
                return {qp(qq, 2 * (n - 1)), b};
              }};
  return {Rational(1, 2), qq, std::move(spec)};
}

CatalogCF m_cf_plus(const BigReal& c, const BigReal& q, const PrecisionContext& ctx) {
  check_nome_cf(q, "m_cf_plus");
  const long p = ctx.internal_bits();
  BigReal qq = q.rounded(p);
  BigReal cc = c.rounded(p);
  // numerators cq, c(q^2-q), cq^3, c(q^4-q^2), ... after the leading 1.
  CFSpec spec{"m_cf_plus", BigReal(p),
              [qq, cc, p](long n) -> CFTerm {
                BigReal one = BigReal::of(1L, p);
                if (n == 1) return {one, one};
                long m = n - 1;
                BigReal a = (m % 2 == 1) ? cc * qp(qq, m)
                                         : cc * (qp(qq, m) - qp(qq, m / 2));
                return {a, one};
              }};
  return {Rational(0), qq, std::move(spec)};
}

CatalogCF m_cf_alt(const BigReal& c, const BigReal& q, const PrecisionContext& ctx) {
  check_nome_cf(q, "m_cf_alt");
  const long p = ctx.internal_bits();
  BigReal qq = q.rounded(p);
  BigReal cc = c.rounded(p);
  // 1- cq/1+ c(q-q^2)/1- cq^3/1+ c(q^2-q^4)/1- ...; the alternating
  // denominator signs are folded into the partial numerators.
  CFSpec spec{"m_cf_alt", BigReal(p),
              [qq, cc, p](long n) -> CFTerm {
                BigReal one = BigReal::of(1L, p);
                if (n == 1) return {one, one};
                long m = n - 1;
                BigReal a = (m % 2 == 1) ? -(cc * qp(qq, m))
                                         : cc * (qp(qq, m / 2) - qp(qq, m));
                return {a, one};
              }};
  return {Rational(0), qq, std::move(spec)};
}

CatalogCF odd_a_cf(long a, const BigReal& q, const PrecisionContext& ctx) {
  if (a < 1 || a % 2 == 0) throw DomainError("odd_a_cf: a must be a positive odd integer");
  check_nome_cf(q, "odd_a_cf");
  const long p = ctx.internal_bits();
  BigReal qq = q.rounded(p);
  // all-minus fraction 1- q^{a+2}/1- q^a(q^4-q^2)/1- q^{a+6}/1- q^a(q^8-q^4)/1- ...
  CFSpec spec{"odd_a_cf", BigReal(p),
              [qq, a, p](long n) -> CFTerm {
                BigReal one = BigReal::of(1L, p);
                if (n == 1) return {one, one};
                long m = n - 1;
                BigReal x = (m % 2 == 1)
                                ? qp(qq, a + 4 * ((m + 1) / 2) - 2)
                                : qp(qq, a) * (qp(qq, 2 * m) - qp(qq, m));
                return {-x, one};
              }};
  return {Rational((a + 1) * (a + 1), 4), qq, std::move(spec)};
}

CatalogCF psi_square_cf(const BigReal& q, const PrecisionContext& ctx) {
  check_nome_cf(q, "psi_square_cf");
  const long p = ctx.internal_bits();
  BigReal qq = q.rounded(p);
  // Literal reading of the ambiguous display: numerators q^2, q^4, ... over
  // denominators 1-q, (1-q)(q^2+1), (1-q)(q^4+1), ...; the product form is
  // the normative value and the harness records agree/disagree.
  CFSpec spec{"psi_square_cf", BigReal(p),
              [qq, p](long n) -> CFTerm {
                BigReal one = BigReal::of(1L, p);
                if (n == 1) return {one, one - qq};
                return {qp(qq, 2 * (n - 1)), (one - qq) * (qp(qq, 2 * (n - 1)) + 1)};
              }};
  return {Rational(1, 2), qq, std::move(spec)};
}

CatalogCF ratio8_cf(const BigReal& q, const PrecisionContext& ctx) {
  check_nome_cf(q, "ratio8_cf");
  const long p = ctx.internal_bits();
  BigReal qq = q.rounded(p);
  // numerators q, q^2+q, q^3, q^4+q^2, q^5, ...; beyond the leading terms
  // the pattern is extrapolated as a_{2k+1} = q^{2k+1}, a_{2k} = q^{2k} + q^k
  // (flagged in the harness, not asserted).
  CFSpec spec{"ratio8", BigReal(p),
              [qq, p](long n) -> CFTerm {
                BigReal one = BigReal::of(1L, p);
                if (n == 1) return {one, one};
                long m = n - 1;
                BigReal a = (m % 2 == 1) ? qp(qq, m) : qp(qq, m) + qp(qq, m / 2);
                return {a, one};
              }};
  return {Rational(0), qq, std::move(spec)};
}

BigReal eval_catalog(const CatalogCF& entry, const PrecisionContext& ctx) {
  PrecisionContext inner = ctx.raised();
  BigReal cf = eval_cf(entry.spec, inner).value;
  BigReal pre = entry.prefactor_exponent.is_zero()
                    ? BigReal::of(1L, inner.working_bits)
                    : q_power(entry.q, entry.prefactor_exponent, inner);
  return (pre * cf).rounded(ctx.working_bits);
}

BigReal golden_ratio_cf(const PrecisionContext& ctx) {
  const long p = ctx.internal_bits();
  CFSpec spec{"golden", BigReal::of(1L, p),
              [p](long) -> CFTerm {
                BigReal one = BigReal::of(1L, p);
                return {one, one};
              }};
  return eval_cf(spec, ctx).value;
}

BigReal rr_value_cf(const BigReal& q, const PrecisionContext& ctx) {
  return eval_catalog(rr_cf(q, ctx), ctx);
}

BigReal h_function(const BigReal& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("h_function: x must be positive");
  PrecisionContext inner = ctx.raised();
  BigReal q = exp(-x.rounded(inner.internal_bits()));
  return eval_catalog(octic_cf(q, inner), inner).rounded(ctx.working_bits);
}

}  // namespace ramacf
