#include "ramacf/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "ramacf/algid.hpp"
#include "ramacf/cfrac.hpp"
#include "ramacf/hypergeom.hpp"
#include "ramacf/modular.hpp"
#include "ramacf/qseries.hpp"

namespace ramacf {

// ---- parameter parsing -----------------------------------------------------

BigReal parse_real_expr(const std::string& text, long bits) {
  auto strip = [](std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
  };
  const std::string t = strip(text);
  const BigReal pi = BigReal::pi(bits);
  if (t == "pi") return pi;
  if (t == "2*pi" || t == "2pi") return ldexp(pi, 1);
  if (t == "pi/2") return ldexp(pi, -1);
  if (t == "pi/3") return pi / 3;
  if (t == "pi*sqrt(2)/2" || t == "pi/sqrt(2)") return pi / sqrt(BigReal::of(2L, bits));
  if (t == "exp(-pi)" || t == "e^-pi") return exp(-pi);
  if (t == "exp(-2*pi)" || t == "e^-2pi") return exp(-ldexp(pi, 1));
  if (t.size() > 5 && t.substr(0, 5) == "exp(-" && t.back() == ')')
    return exp(-parse_real_expr(t.substr(5, t.size() - 6), bits));
  auto slash = t.find('/');
  if (slash != std::string::npos && t.find('/', slash + 1) == std::string::npos &&
      t.find_first_not_of("-0123456789/") == std::string::npos) {
    Rational r = parse_rational(t);
    return r.to_real(bits);
  }
  return BigReal::parse(t, bits);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw DomainError("not a rational: '" + text + "'");
  }
}

namespace {

BigReal param_real(const ParamMap& params, const std::string& key,
                   const std::string& default_expr, long bits) {
  auto it = params.find(key);
  return parse_real_expr(it == params.end() ? default_expr : it->second, bits);
}

Rational param_rat(const ParamMap& params, const std::string& key,
                   const std::string& default_expr) {
  auto it = params.find(key);
  return parse_rational(it == params.end() ? default_expr : it->second);
}

// ---- closed forms ----------------------------------------------------------

BigReal rr_closed_2pi(long p) {
  BigReal s5 = sqrt(BigReal::of(5L, p));
  return sqrt(ldexp(s5 + 5, -1)) - ldexp(s5 + 1, -1);
}

BigReal h_pi2_closed(long p) {
  BigReal s2 = sqrt(BigReal::of(2L, p));
  return sqrt(1 + ldexp(s2, 1) - ldexp(sqrt(s2 + 2), 1));
}

BigReal h_pisqrt22_closed(long p) {
  BigReal s2 = sqrt(BigReal::of(2L, p));
  return sqrt(3 + ldexp(s2, 1) - ldexp(sqrt(s2 * 3 + 4), 1));
}

BigReal gamma_quarter_pow4(long p) {
  return pow(gamma(BigReal::of(1L, p) / 4), 4L);
}

BigReal rprime_closed_2pi(long p) {
  BigReal s5 = sqrt(BigReal::of(5L, p));
  BigReal pi = BigReal::pi(p);
  BigReal inner = 9 + s5 * 5 - ldexp(sqrt(s5 * 22 + 50), 1);
  BigReal gamma54 = pow(gamma(BigReal::of(5L, p) / 4), 4L);
  return ldexp(sqrt(inner * 2 / 5), 3) * exp(ldexp(pi, 1)) * gamma54 / pow(pi, 3L);
}

BigReal k1_closed(long p) {
  BigReal pi = BigReal::pi(p);
  return pow(gamma(BigReal::of(1L, p) / 4), 2L) / (ldexp(sqrt(pi), 2));
}

BigReal pentagonal_theta_closed(long p) {
  BigReal s3 = sqrt(BigReal::of(3L, p));
  BigReal a = BigReal::of(14L, p) / 27 + BigReal::of(8L, p) / (s3 * 3);
  BigReal inner = BigReal::of(2048L, p) / 243 + BigReal::of(3584L, p) / (s3 * 243);
  return a + ldexp(sqrt(inner), -1);
}

BigReal q18_closed(long p) {
  BigReal pi = BigReal::pi(p);
  BigReal two58 = exp(Rational(5, 8).to_real(p) * log(BigReal::of(2L, p)));
  return exp(pi) * gamma_quarter_pow4(p) / (two58 * pow(pi, 3L) * 64);
}

BigReal qm124_closed(long p) {
  BigReal pi = BigReal::pi(p);
  BigReal two78 = exp(Rational(7, 8).to_real(p) * log(BigReal::of(2L, p)));
  return -(exp(pi) * gamma_quarter_pow4(p) / (two78 * pow(pi, 3L) * 32));
}

// ---- route evaluators ------------------------------------------------------

BigReal rr_logseries_route(const BigReal& q, const PrecisionContext& ctx) {
  PrecisionContext inner = ctx.raised();
  return (exp(log_rstar_series(q, inner)) * q_power(q, {1, 5}, inner))
      .rounded(ctx.working_bits);
}

// sum_{k in Z} (-1)^k q^{k(3k-1)/2}, the bilateral pentagonal series.
BigReal pentagonal_sum(const BigReal& q, const PrecisionContext& ctx) {
  const long p = ctx.internal_bits();
  const BigReal eps = BigReal::two_pow(-(p + 8), p);
  BigReal qq = q.rounded(p);
  BigReal sum = BigReal::of(1L, p);
  for (long k = 1;; ++k) {
    BigReal term = pow(qq, k * (3 * k - 1) / 2) + pow(qq, k * (3 * k + 1) / 2);
    sum += (k % 2 == 0) ? term : -term;
    if (term < eps) break;
  }
  return sum.rounded(ctx.working_bits);
}

BigReal fquotient_linear_lhs(const BigReal& q, const PrecisionContext& ctx) {
  BigReal R = product_form(rr_product_spec(), q, ctx.raised());
  return (1 / R - 1 - R).rounded(ctx.working_bits);
}

BigReal fquotient_linear_rhs(const BigReal& q, const PrecisionContext& ctx) {
  PrecisionContext inner = ctx.raised();
  const long p = inner.internal_bits();
  BigReal q15 = exp(Rational(1, 5).to_real(p) * log(q.rounded(p)));
  return (euler_f(q15, inner) / (q15 * euler_f(pow(q.rounded(p), 5L), inner)))
      .rounded(ctx.working_bits);
}

BigReal fquotient_quintic_lhs(const BigReal& q, const PrecisionContext& ctx) {
  BigReal r5 = pow(product_form(rr_product_spec(), q, ctx.raised()), 5L);
  return (1 / r5 - 11 - r5).rounded(ctx.working_bits);
}

BigReal fquotient_quintic_rhs(const BigReal& q, const PrecisionContext& ctx) {
  PrecisionContext inner = ctx.raised();
  const long p = inner.internal_bits();
  BigReal qq = q.rounded(p);
  BigReal f1 = euler_f(qq, inner);
  BigReal f5 = euler_f(pow(qq, 5L), inner);
  return (pow(f1, 6L) / (qq * pow(f5, 6L))).rounded(ctx.working_bits);
}

ProductSpec q18_spec() { return {Rational(1, 8), {{3, 4, 1}, {1, 4, 1}, {2, 4, -2}}}; }
ProductSpec qm124_spec() { return {Rational(-1, 24), {{3, 4, 1}, {1, 4, 1}}}; }

BigReal rho_value(const PrecisionContext& ctx) {
  PrecisionContext inner = ctx.raised();
  const long p = inner.internal_bits();
  BigReal pi = BigReal::pi(p);
  BigReal q = exp(-pi);
  BigReal d = product_log_derivative(rr_product_spec(), q, inner);
  return (d * pow(pi, 3L) * 16 * q / gamma_quarter_pow4(p)).rounded(ctx.working_bits);
}

std::vector<mpz_class> rho_reference_poly() {
  return {16, 0, -240, 800, -2900, -6000, -6500, 17500, 625};
}

// The value the a-odd fraction evaluates to: 1/2 - sum_{k=0}^{(a-1)/2} q^{k^2}
// + theta3(q)/2.
BigReal odd_a_closed(long a, const BigReal& q, const PrecisionContext& ctx) {
  PrecisionContext inner = ctx.raised();
  const long p = inner.internal_bits();
  BigReal qq = q.rounded(p);
  BigReal partial(p);
  for (long k = 0; k <= (a - 1) / 2; ++k) partial += pow(qq, k * k);
  BigReal half = ldexp(BigReal::of(1L, p), -1);
  return (half - partial + ldexp(theta3(qq, inner), -1)).rounded(ctx.working_bits);
}

// ---- report helpers --------------------------------------------------------

Report route_report(const std::string& name, const std::string& category, const BigReal& lhs,
                    const BigReal& rhs, const PrecisionContext& ctx, std::string notes = "",
                    int tol_shift = 0) {
  BigReal tol = tol_shift == 0 ? ctx.tolerance()
                               : BigReal::two_pow(-(ctx.working_bits - tol_shift),
                                                  ctx.internal_bits());
  // For values above 1 in magnitude the pass criterion is relative: two
  // correctly rounded p-bit numbers of size M may differ by M * 2^-p.
  BigReal scale = abs(lhs) > abs(rhs) ? abs(lhs) : abs(rhs);
  if (scale > 1) {
    tol *= ldexp(scale, 1);
    notes = notes.empty() ? "relative tolerance (magnitude > 1)"
                          : notes + "; relative tolerance (magnitude > 1)";
  }
  return compare_report(name, category, lhs, rhs, tol, ctx.working_bits, std::move(notes));
}

constexpr int kQuadShift = 16;  // quadrature-limited comparisons

}  // namespace

// ---- quantity registry -------------------------------------------------------

const std::vector<Quantity>& quantity_registry() {
  static const std::vector<Quantity> registry = [] {
    std::vector<Quantity> qs;
    auto add = [&qs](std::string name, std::string desc, std::string params,
                     std::function<BigReal(const ParamMap&, const PrecisionContext&)> f) {
      qs.push_back({std::move(name), std::move(desc), std::move(params), std::move(f)});
    };

    add("golden-ratio", "all-ones continued fraction (sqrt5+1)/2", "",
        [](const ParamMap&, const PrecisionContext& ctx) { return golden_ratio_cf(ctx); });
    add("rr", "R(e^-x) via the Rogers-Ramanujan product", "x (default 2*pi)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          BigReal x = param_real(ps, "x", "2*pi", ctx.internal_bits());
          return product_form(rr_product_spec(), exp(-x), ctx);
        });
    add("rr-cf", "R(e^-x) via the continued fraction", "x (default 2*pi)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          BigReal x = param_real(ps, "x", "2*pi", ctx.internal_bits());
          return rr_value_cf(exp(-x), ctx);
        });
    add("rr-theta", "R(e^-x) via the theta quotient", "x (default 2*pi)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return rr_theta_quotient(param_real(ps, "x", "2*pi", ctx.internal_bits()), ctx);
        });
    add("rr-eta", "R(e^-2 pi tau) via the eta quotient", "tau (default 1)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return rr_eta_quotient(param_real(ps, "tau", "1", ctx.internal_bits()), ctx);
        });
    add("rr-logseries", "R(e^-x) via the divisor-sum log series", "x (default 2*pi)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          BigReal x = param_real(ps, "x", "2*pi", ctx.internal_bits());
          return rr_logseries_route(exp(-x), ctx);
        });
    add("h", "octic continued fraction H(x)", "x (default pi)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return h_function(param_real(ps, "x", "pi", ctx.internal_bits()), ctx);
        });
    add("cubic", "cubic CF product q^{1/3}(q;q^6)(q^5;q^6)/(q^3;q^6)^2", "q (default exp(-pi))",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return product_form(cubic_product_spec(),
                              param_real(ps, "q", "exp(-pi)", ctx.internal_bits()), ctx);
        });
    add("cubic-cf", "cubic continued fraction", "q (default exp(-pi))",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return eval_catalog(
              cubic_cf(param_real(ps, "q", "exp(-pi)", ctx.internal_bits()), ctx), ctx);
        });
    add("octic", "octic CF product q^{1/2}(q;q^8)(q^7;q^8)/((q^3;q^8)(q^5;q^8))",
        "q (default exp(-pi))",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return product_form(octic_product_spec(),
                              param_real(ps, "q", "exp(-pi)", ctx.internal_bits()), ctx);
        });
    add("octic-cf", "octic continued fraction", "q (default exp(-pi))",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return eval_catalog(
              octic_cf(param_real(ps, "q", "exp(-pi)", ctx.internal_bits()), ctx), ctx);
        });
    add("euler-f", "f(-q) = (q;q)_inf", "q (default exp(-pi))",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return euler_f(param_real(ps, "q", "exp(-pi)", ctx.internal_bits()), ctx);
        });
    add("eta", "Dedekind eta(it)", "t (default 1)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return dedekind_eta(param_real(ps, "t", "1", ctx.internal_bits()), ctx);
        });
    add("theta2", "theta2(q)", "q (default exp(-pi))",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return theta2(param_real(ps, "q", "exp(-pi)", ctx.internal_bits()), ctx);
        });
    add("theta3", "theta3(q)", "q (default exp(-pi))",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return theta3(param_real(ps, "q", "exp(-pi)", ctx.internal_bits()), ctx);
        });
    add("theta4", "theta4(q)", "q (default exp(-pi))",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return theta4(param_real(ps, "q", "exp(-pi)", ctx.internal_bits()), ctx);
        });
    add("theta-sum", "sum_v q^{a v^2 + b v + c}", "a, b, c rationals; q (default exp(-pi))",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return theta_sum(param_rat(ps, "a", "1"), param_rat(ps, "b", "0"),
                           param_rat(ps, "c", "0"),
                           param_real(ps, "q", "exp(-pi)", ctx.internal_bits()), ctx);
        });
    add("K", "complete elliptic integral at q = e^{-pi sqrt r}", "r rational (default 1)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return modular_point(param_rat(ps, "r", "1"), ctx).K;
        });
    add("k", "singular modulus k_r", "r rational (default 1)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return modular_point(param_rat(ps, "r", "1"), ctx).k;
        });
    add("kprime", "complementary modulus k'_r", "r rational (default 1)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return modular_point(param_rat(ps, "r", "1"), ctx).k_prime;
        });
    add("rr-deriv", "R'(q) by product log-differentiation at q = e^{-pi sqrt r}",
        "r rational (default 1)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          PrecisionContext inner = ctx.raised();
          const long p = inner.internal_bits();
          BigReal q = exp(-BigReal::pi(p) * sqrt(param_rat(ps, "r", "1").to_real(p)));
          return product_log_derivative(rr_product_spec(), q, inner)
              .rounded(ctx.working_bits);
        });
    add("rr-deriv-formula", "R'(q) by the k, k', K formula", "r rational (default 1)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return rr_derivative_formula(param_rat(ps, "r", "1"), ctx);
        });
    add("rho", "normalized RR product derivative at e^{-pi}", "",
        [](const ParamMap&, const PrecisionContext& ctx) { return rho_value(ctx); });
    add("q18-deriv", "d/dQ Q^{1/8}(Q^3;Q^4)(Q;Q^4)/(Q^2;Q^4)^2 at e^{-pi}", "",
        [](const ParamMap&, const PrecisionContext& ctx) {
          PrecisionContext inner = ctx.raised();
          BigReal q = exp(-BigReal::pi(inner.internal_bits()));
          return product_log_derivative(q18_spec(), q, inner).rounded(ctx.working_bits);
        });
    add("qm124-deriv", "d/dQ Q^{-1/24}(Q^3;Q^4)(Q;Q^4) at e^{-pi}", "",
        [](const ParamMap&, const PrecisionContext& ctx) {
          PrecisionContext inner = ctx.raised();
          BigReal q = exp(-BigReal::pi(inner.internal_bits()));
          return product_log_derivative(qm124_spec(), q, inner).rounded(ctx.working_bits);
        });
    add("m-series", "M(c,q) = sum c^k q^{k(k+1)/2}", "c (default 1); q (default 0.3)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return m_series(param_real(ps, "c", "1", ctx.internal_bits()),
                          param_real(ps, "q", "0.3", ctx.internal_bits()), ctx);
        });
    add("bilateral-theta", "sum over Z of c^k q^{k(k+1)/2}", "c (default 1); q (default 0.3)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return bilateral_theta(param_real(ps, "c", "1", ctx.internal_bits()),
                                 param_real(ps, "q", "0.3", ctx.internal_bits()), ctx);
        });
    add("m-cf-plus", "CF for sum (-c)^k q^{k(k+1)/2}", "c (default 1); q (default 0.3)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return eval_catalog(m_cf_plus(param_real(ps, "c", "1", ctx.internal_bits()),
                                        param_real(ps, "q", "0.3", ctx.internal_bits()), ctx),
                              ctx);
        });
    add("m-cf-alt", "alternating-sign CF for M(c,q)", "c (default 1); q (default 0.3)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return eval_catalog(m_cf_alt(param_real(ps, "c", "1", ctx.internal_bits()),
                                       param_real(ps, "q", "0.3", ctx.internal_bits()), ctx),
                              ctx);
        });
    add("odd-a-cf", "exact M evaluation fraction, a odd", "a odd integer (default 1); q (default 0.3)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          long a = param_rat(ps, "a", "1").num;
          return eval_catalog(
              odd_a_cf(a, param_real(ps, "q", "0.3", ctx.internal_bits()), ctx), ctx);
        });
    add("psi-square-product", "q^{1/2}(q^4;q^4)^2/(q^2;q^4)^2", "q (default exp(-pi))",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return product_form(psi_square_product_spec(),
                              param_real(ps, "q", "exp(-pi)", ctx.internal_bits()), ctx);
        });
    add("psi-square-cf", "literal reading of the psi-square fraction", "q (default exp(-pi))",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return eval_catalog(psi_square_cf(param_real(ps, "q", "exp(-pi)", ctx.internal_bits()), ctx),
                              ctx);
        });
    add("ratio8-product", "(-q^2;q^2)/(-q;q^2)", "q (default exp(-pi))",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return product_form(ratio8_product_spec(),
                              param_real(ps, "q", "exp(-pi)", ctx.internal_bits()), ctx);
        });
    add("ratio8-cf", "CF route for (-q^2;q^2)/(-q;q^2)", "q (default exp(-pi))",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return eval_catalog(
              ratio8_cf(param_real(ps, "q", "exp(-pi)", ctx.internal_bits()), ctx), ctx);
        });
    add("ratio8-value", "q ((-q^2;q^2)/(-q;q^2))^8", "q (default exp(-pi))",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          PrecisionContext inner = ctx.raised();
          BigReal q = param_real(ps, "q", "exp(-pi)", inner.internal_bits());
          return (q * pow(product_form(ratio8_product_spec(), q, inner), 8L))
              .rounded(ctx.working_bits);
        });
    add("pentagonal-theta-eighth", "normalized pentagonal theta sum, 8th power, at r = 1", "",
        [](const ParamMap&, const PrecisionContext& ctx) {
          PrecisionContext inner = ctx.raised();
          const long p = inner.internal_bits();
          BigReal q = exp(-BigReal::pi(p));
          ModularPoint mp = modular_point(1, inner);
          BigReal v = q_power(q, {1, 24}, inner) * sqrt(BigReal::pi(p) / mp.K) *
                      theta_sum({3, 2}, {-1, 2}, 0, q, inner);
          return pow(v, 8L).rounded(ctx.working_bits);
        });
    add("bilateral-a0", "q^{1/8} sqrt(pi/K) sum_Z q^{k(k+1)/2} at e^{-pi}", "",
        [](const ParamMap&, const PrecisionContext& ctx) {
          PrecisionContext inner = ctx.raised();
          const long p = inner.internal_bits();
          BigReal q = exp(-BigReal::pi(p));
          ModularPoint mp = modular_point(1, inner);
          return (bilateral_theta(BigReal::of(1L, p), q, inner) * q_power(q, {1, 8}, inner) *
                  sqrt(BigReal::pi(p) / mp.K))
              .rounded(ctx.working_bits);
        });
    add("y2-series", "mod-3 character series value at step x", "x (default 1)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return y2_log_series(param_real(ps, "x", "1", ctx.internal_bits()), ctx);
        });
    add("y2-product", "mod-3 product form", "x (default 1)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return y2_product(param_real(ps, "x", "1", ctx.internal_bits()), ctx);
        });
    add("y2-fraction", "mod-3 rational-fraction series form", "x (default 1)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return y2_fraction_series(param_real(ps, "x", "1", ctx.internal_bits()), ctx);
        });
    add("log-rstar", "log R*(x) divisor-sum series", "x (default 0.1)",
        [](const ParamMap& ps, const PrecisionContext& ctx) {
          return log_rstar_series(param_real(ps, "x", "0.1", ctx.internal_bits()), ctx);
        });
    return qs;
  }();
  return registry;
}

const std::vector<Integrand>& integrand_registry() {
  static const std::vector<Integrand> registry = {
      {"eta4", "eta(ix)^4",
       [](const BigReal& x, const PrecisionContext& c) {
         return pow(dedekind_eta(x, c), 4L);
       }},
      {"glasser8", "f(-q)^4 q^{-5/6}",
       [](const BigReal& q, const PrecisionContext& c) {
         return pow(euler_f(q, c), 4L) * exp(Rational(-5, 6).to_real(q.bits()) * log(q));
       }},
      {"glasser9", "f(-q^5)^4 q^{-1/6}",
       [](const BigReal& q, const PrecisionContext& c) {
         return pow(euler_f(pow(q, 5L), c), 4L) *
                exp(Rational(-1, 6).to_real(q.bits()) * log(q));
       }},
  };
  return registry;
}

BigReal eval_quantity(const std::string& name, const ParamMap& params,
                      const PrecisionContext& ctx) {
  for (const Quantity& q : quantity_registry()) {
    if (q.name == name) return q.eval(params, ctx);
  }
  throw DomainError("unknown quantity '" + name + "'");
}

const Integrand& find_integrand(const std::string& name) {
  for (const Integrand& i : integrand_registry()) {
    if (i.name == name) return i;
  }
  throw DomainError("unknown integrand '" + name + "'");
}

// ---- identity catalog --------------------------------------------------------

namespace {

std::string grid_tag(const std::string& expr) {
  std::string t;
  for (char c : expr) {
    if (c == '*' || c == '(' || c == ')' || c == ' ') continue;
    t += (c == '/') ? ':' : c;
  }
  return t;
}

void add_rr_route_cases(std::vector<IdentityCase>& cases) {
  // Five independent routes against the closed form at x = 2 pi.
  struct Route {
    const char* suffix;
    BigReal (*eval)(const PrecisionContext&);
  };
  static const Route routes[] = {
      {"", [](const PrecisionContext& ctx) {
         return product_form(rr_product_spec(), exp(-ldexp(BigReal::pi(ctx.internal_bits()), 1)),
                             ctx);
       }},
      {"-cf", [](const PrecisionContext& ctx) {
         return rr_value_cf(exp(-ldexp(BigReal::pi(ctx.internal_bits()), 1)), ctx);
       }},
      {"-logseries", [](const PrecisionContext& ctx) {
         return rr_logseries_route(exp(-ldexp(BigReal::pi(ctx.internal_bits()), 1)), ctx);
       }},
      {"-theta", [](const PrecisionContext& ctx) {
         return rr_theta_quotient(ldexp(BigReal::pi(ctx.internal_bits()), 1), ctx);
       }},
      {"-eta", [](const PrecisionContext& ctx) {
         return rr_eta_quotient(BigReal::of(1L, ctx.internal_bits()), ctx);
       }},
  };
  for (const Route& route : routes) {
    cases.push_back(
        {std::string("rr-closed-form-2pi") + route.suffix, "closed-form",
         [eval = route.eval](const ParamMap&, const PrecisionContext& ctx) {
           return route_report("", "closed-form", eval(ctx), rr_closed_2pi(ctx.internal_bits()),
                               ctx);
         }});
  }
  // Route agreement at two more arguments: theta, eta, cf vs the product.
  for (const char* x_expr : {"1", "pi"}) {
    cases.push_back({std::string("rr-routes-x") + grid_tag(x_expr), "closed-form",
                     [x_expr](const ParamMap&, const PrecisionContext& ctx) {
                       const long p = ctx.internal_bits();
                       BigReal x = parse_real_expr(x_expr, p);
                       BigReal ref = product_form(rr_product_spec(), exp(-x), ctx);
                       BigReal th = rr_theta_quotient(x, ctx);
                       BigReal et = rr_eta_quotient(x / ldexp(BigReal::pi(p), 1), ctx);
                       BigReal cf = rr_value_cf(exp(-x), ctx);
                       BigReal worst = abs(th - ref);
                       if (abs(et - ref) > worst) worst = abs(et - ref);
                       if (abs(cf - ref) > worst) worst = abs(cf - ref);
                       return route_report("", "closed-form", ref + worst, ref, ctx,
                                           "worst of theta/eta/cf routes vs product");
                     }});
  }
}

void add_fquotient_cases(std::vector<IdentityCase>& cases) {
  for (const char* q_expr : {"0.05", "0.1", "exp(-pi)", "exp(-2*pi)"}) {
    cases.push_back({std::string("rr-fquotient-linear-q") + grid_tag(q_expr), "functional-equation",
                     [q_expr](const ParamMap&, const PrecisionContext& ctx) {
                       BigReal q = parse_real_expr(q_expr, ctx.internal_bits());
                       return route_report("", "functional-equation", fquotient_linear_lhs(q, ctx),
                                           fquotient_linear_rhs(q, ctx), ctx);
                     }});
    cases.push_back({std::string("rr-fquotient-quintic-q") + grid_tag(q_expr), "functional-equation",
                     [q_expr](const ParamMap&, const PrecisionContext& ctx) {
                       BigReal q = parse_real_expr(q_expr, ctx.internal_bits());
                       return route_report("", "functional-equation", fquotient_quintic_lhs(q, ctx),
                                           fquotient_quintic_rhs(q, ctx), ctx);
                     }});
  }
}

void add_h_cases(std::vector<IdentityCase>& cases) {
  cases.push_back({"h-pi2-closed-form", "closed-form",
                   [](const ParamMap&, const PrecisionContext& ctx) {
                     BigReal h = h_function(ldexp(BigReal::pi(ctx.internal_bits()), -1), ctx);
                     return route_report("", "closed-form", h,
                                         h_pi2_closed(ctx.internal_bits()), ctx);
                   }});
  cases.push_back({"h-pisqrt2over2-closed-form", "closed-form",
                   [](const ParamMap&, const PrecisionContext& ctx) {
                     const long p = ctx.internal_bits();
                     BigReal x = BigReal::pi(p) / sqrt(BigReal::of(2L, p));
                     return route_report("", "closed-form", h_function(x, ctx),
                                         h_pisqrt22_closed(p), ctx);
                   }});
  // (1 + sqrt2 + H(a))(1 + sqrt2 + H(b)) = 2(2 + sqrt2) whenever ab = pi^2.
  auto h_pair_product = [](const BigReal& a, const PrecisionContext& ctx) {
    const long p = ctx.internal_bits();
    BigReal pi = BigReal::pi(p);
    BigReal b = pi * pi / a;
    BigReal s2 = sqrt(BigReal::of(2L, p));
    BigReal lhs = (1 + s2 + h_function(a, ctx.raised())) *
                  (1 + s2 + h_function(b, ctx.raised()));
    return route_report("", "functional-equation", lhs, ldexp(s2 + 2, 1), ctx);
  };
  cases.push_back({"h-functional", "functional-equation",
                   [h_pair_product](const ParamMap& ps, const PrecisionContext& ctx) {
                     return h_pair_product(param_real(ps, "a", "pi", ctx.internal_bits()), ctx);
                   }});
  for (const char* a_expr : {"pi/2", "pi/3"}) {
    cases.push_back({std::string("h-functional-a-") + grid_tag(a_expr), "functional-equation",
                     [h_pair_product, a_expr](const ParamMap&, const PrecisionContext& ctx) {
                       return h_pair_product(parse_real_expr(a_expr, ctx.internal_bits()), ctx);
                     }});
  }
}

void add_cf_product_cases(std::vector<IdentityCase>& cases, const Config& config) {
  struct Pair {
    const char* prefix;
    CatalogCF (*cf)(const BigReal&, const PrecisionContext&);
    ProductSpec (*spec)();
  };
  static const Pair pairs[] = {
      {"rr-cf-product-q", rr_cf, rr_product_spec},
      {"cubic-cf-product-q", cubic_cf, cubic_product_spec},
      {"octic-cf-product-q", octic_cf, octic_product_spec},
  };
  for (const Pair& pair : pairs) {
    for (const std::string& q_expr : config.cf_q_grid) {
      cases.push_back({pair.prefix + grid_tag(q_expr), "cf-product",
                       [pair, q_expr](const ParamMap&, const PrecisionContext& ctx) {
                         BigReal q = parse_real_expr(q_expr, ctx.internal_bits());
                         BigReal lhs = eval_catalog(pair.cf(q, ctx), ctx);
                         BigReal rhs = product_form(pair.spec(), q, ctx);
                         return route_report("", "cf-product", lhs, rhs, ctx);
                       }});
    }
  }
  for (const char* q_expr : {"0.1", "exp(-pi)"}) {
    cases.push_back({std::string("cubic-alt-product-q") + grid_tag(q_expr), "cf-product",
                     [q_expr](const ParamMap&, const PrecisionContext& ctx) {
                       BigReal q = parse_real_expr(q_expr, ctx.internal_bits());
                       return route_report("", "cf-product",
                                           product_form(cubic_product_spec(), q, ctx),
                                           product_form(cubic_product_spec_alt(), q, ctx), ctx,
                                           "sextic-modulus product vs its (q;q^2) rewrite");
                     }});
  }
  cases.push_back({"golden-ratio-cf", "cf-product",
                   [](const ParamMap&, const PrecisionContext& ctx) {
                     const long p = ctx.internal_bits();
                     BigReal closed = ldexp(sqrt(BigReal::of(5L, p)) + 1, -1);
                     return route_report("", "cf-product", golden_ratio_cf(ctx), closed, ctx);
                   }});
  // vi) and ratio8: literal CF readings against the normative products;
  // disagreement is recorded, not asserted.
  cases.push_back({"psi-square-cf-vs-product", "cf-product",
                   [](const ParamMap& ps, const PrecisionContext& ctx) {
                     BigReal q = param_real(ps, "q", "exp(-pi)", ctx.internal_bits());
                     BigReal lhs = eval_catalog(psi_square_cf(q, ctx), ctx);
                     BigReal rhs = product_form(psi_square_product_spec(), q, ctx);
                     Report rep = route_report("", "cf-product", lhs, rhs, ctx,
                                               "literal CF reading; product form is normative");
                     if (!rep.passed()) rep.status = "flagged";
                     return rep;
                   }});
  cases.push_back({"ratio8-cf-vs-product", "cf-product",
                   [](const ParamMap& ps, const PrecisionContext& ctx) {
                     BigReal q = param_real(ps, "q", "exp(-pi)", ctx.internal_bits());
                     BigReal lhs = eval_catalog(ratio8_cf(q, ctx), ctx);
                     BigReal rhs = product_form(ratio8_product_spec(), q, ctx);
                     Report rep = route_report("", "cf-product", lhs, rhs, ctx,
                                               "extrapolated numerator pattern; product form is "
                                               "normative");
                     if (!rep.passed()) rep.status = "flagged";
                     return rep;
                   }});
}

void add_m_family_cases(std::vector<IdentityCase>& cases, const Config& config) {
  for (const std::string& c_expr : config.m_c_grid) {
    for (const std::string& q_expr : config.m_q_grid) {
      std::string tag = "-c" + grid_tag(c_expr) + "-q" + grid_tag(q_expr);
      cases.push_back({"m-plus" + tag, "cf-product",
                       [c_expr, q_expr](const ParamMap&, const PrecisionContext& ctx) {
                         const long p = ctx.internal_bits();
                         BigReal c = parse_real_expr(c_expr, p);
                         BigReal q = parse_real_expr(q_expr, p);
                         BigReal lhs = eval_catalog(m_cf_plus(c, q, ctx), ctx);
                         BigReal rhs = m_series(-c, q, ctx);  // sum (-c)^k q^{k(k+1)/2}
                         return route_report("", "cf-product", lhs, rhs, ctx);
                       }});
      cases.push_back({"m-alt" + tag, "cf-product",
                       [c_expr, q_expr](const ParamMap&, const PrecisionContext& ctx) {
                         const long p = ctx.internal_bits();
                         BigReal c = parse_real_expr(c_expr, p);
                         BigReal q = parse_real_expr(q_expr, p);
                         BigReal lhs = eval_catalog(m_cf_alt(c, q, ctx), ctx);
                         return route_report("", "cf-product", lhs, m_series(c, q, ctx), ctx);
                       }});
      cases.push_back({"m-bilateral" + tag, "functional-equation",
                       [c_expr, q_expr](const ParamMap&, const PrecisionContext& ctx) {
                         PrecisionContext inner = ctx.raised();
                         const long p = inner.internal_bits();
                         BigReal c = parse_real_expr(c_expr, p);
                         BigReal q = parse_real_expr(q_expr, p);
                         BigReal lhs = m_series(c, q, inner) +
                                       m_series(1 / c, q, inner) / c;
                         BigReal rhs = bilateral_theta(c, q, inner);
                         return route_report("", "functional-equation",
                                             lhs.rounded(ctx.working_bits),
                                             rhs.rounded(ctx.working_bits), ctx);
                       }});
    }
  }
  for (long a : {1L, 3L, 5L}) {
    for (const char* q_expr : {"0.2", "0.4"}) {
      cases.push_back({"odd-a-cf-a" + std::to_string(a) + "-q" + grid_tag(q_expr), "cf-product",
                       [a, q_expr](const ParamMap&, const PrecisionContext& ctx) {
                         BigReal q = parse_real_expr(q_expr, ctx.internal_bits());
                         BigReal lhs = eval_catalog(odd_a_cf(a, q, ctx), ctx);
                         return route_report("", "cf-product", lhs, odd_a_closed(a, q, ctx),
                                             ctx);
                       }});
    }
  }
}

void add_series_property_cases(std::vector<IdentityCase>& cases) {
  for (const char* q_expr : {"0.1", "0.5", "exp(-pi)"}) {
    cases.push_back({std::string("pentagonal-euler-q") + grid_tag(q_expr),
                     "functional-equation",
                     [q_expr](const ParamMap&, const PrecisionContext& ctx) {
                       BigReal q = parse_real_expr(q_expr, ctx.internal_bits());
                       return route_report("", "functional-equation", euler_f(q, ctx),
                                           pentagonal_sum(q, ctx), ctx);
                     }});
  }
  for (const char* x_expr : {"0.05", "0.2", "exp(-pi)"}) {
    cases.push_back({std::string("logseries-product-x") + grid_tag(x_expr),
                     "functional-equation",
                     [x_expr](const ParamMap&, const PrecisionContext& ctx) {
                       BigReal x = parse_real_expr(x_expr, ctx.internal_bits());
                       return route_report("", "functional-equation",
                                           rr_logseries_route(x, ctx),
                                           product_form(rr_product_spec(), x, ctx), ctx);
                     }});
  }
  for (const char* t_expr : {"1/2", "2", "5"}) {
    cases.push_back({std::string("eta-functional-t") + grid_tag(t_expr), "functional-equation",
                     [t_expr](const ParamMap&, const PrecisionContext& ctx) {
                       PrecisionContext inner = ctx.raised();
                       const long p = inner.internal_bits();
                       BigReal t = parse_real_expr(t_expr, p);
                       BigReal lhs = dedekind_eta(1 / t, inner);
                       BigReal rhs = sqrt(t) * dedekind_eta(t, inner);
                       return route_report("", "functional-equation",
                                           lhs.rounded(ctx.working_bits),
                                           rhs.rounded(ctx.working_bits), ctx);
                     }});
  }
  cases.push_back({"jacobi-quartic-q0.3", "functional-equation",
                   [](const ParamMap&, const PrecisionContext& ctx) {
                     PrecisionContext inner = ctx.raised();
                     BigReal q = BigReal::parse("0.3", inner.internal_bits());
                     BigReal lhs = pow(theta3(q, inner), 4L);
                     BigReal rhs = pow(theta2(q, inner), 4L) + pow(theta4(q, inner), 4L);
                     return route_report("", "functional-equation",
                                         lhs.rounded(ctx.working_bits),
                                         rhs.rounded(ctx.working_bits), ctx);
                   }});
  for (const char* x_expr : {"1", "1/2"}) {
    cases.push_back({std::string("y2-forms-x") + grid_tag(x_expr), "functional-equation",
                     [x_expr](const ParamMap&, const PrecisionContext& ctx) {
                       BigReal x = parse_real_expr(x_expr, ctx.internal_bits());
                       BigReal series = y2_log_series(x, ctx);
                       BigReal prod = y2_product(x, ctx);
                       BigReal frac = y2_fraction_series(x, ctx);
                       BigReal worst = abs(series - prod);
                       if (abs(series - frac) > worst) worst = abs(series - frac);
                       return route_report("", "functional-equation", series + worst, series,
                                           ctx, "worst of product/fraction forms vs series");
                     }});
  }
  cases.push_back({"k1-gamma-closed-form", "closed-form",
                   [](const ParamMap&, const PrecisionContext& ctx) {
                     ModularPoint mp = modular_point(1, ctx);
                     return route_report("", "closed-form", mp.K,
                                         k1_closed(ctx.internal_bits()).rounded(ctx.working_bits),
                                         ctx);
                   }});
  cases.push_back({"pentagonal-theta-closed-form", "closed-form",
                   [](const ParamMap&, const PrecisionContext& ctx) {
                     BigReal lhs = eval_quantity("pentagonal-theta-eighth", {}, ctx);
                     return route_report("", "closed-form", lhs,
                                         pentagonal_theta_closed(ctx.internal_bits()), ctx);
                   }});
}

void add_derivative_cases(std::vector<IdentityCase>& cases) {
  cases.push_back({"rprime-2pi-product", "derivative",
                   [](const ParamMap&, const PrecisionContext& ctx) {
                     PrecisionContext inner = ctx.raised();
                     const long p = inner.internal_bits();
                     BigReal q = exp(-ldexp(BigReal::pi(p), 1));
                     BigReal lhs = product_log_derivative(rr_product_spec(), q, inner)
                                       .rounded(ctx.working_bits);
                     return route_report("", "derivative", lhs, rprime_closed_2pi(p), ctx);
                   }});
  cases.push_back({"rprime-2pi-formula", "derivative",
                   [](const ParamMap&, const PrecisionContext& ctx) {
                     return route_report("", "derivative", rr_derivative_formula(4, ctx),
                                         rprime_closed_2pi(ctx.internal_bits()), ctx);
                   }});
  cases.push_back({"deriv-q18-closed-form", "derivative",
                   [](const ParamMap&, const PrecisionContext& ctx) {
                     PrecisionContext inner = ctx.raised();
                     const long p = inner.internal_bits();
                     BigReal lhs = product_log_derivative(q18_spec(), exp(-BigReal::pi(p)), inner)
                                       .rounded(ctx.working_bits);
                     return route_report("", "derivative", lhs, q18_closed(p), ctx);
                   }});
  cases.push_back({"deriv-qm124-closed-form", "derivative",
                   [](const ParamMap&, const PrecisionContext& ctx) {
                     PrecisionContext inner = ctx.raised();
                     const long p = inner.internal_bits();
                     BigReal lhs =
                         product_log_derivative(qm124_spec(), exp(-BigReal::pi(p)), inner)
                             .rounded(ctx.working_bits);
                     return route_report("", "derivative", lhs, qm124_closed(p), ctx);
                   }});
  cases.push_back({"rho-polynomial", "derivative",
                   [](const ParamMap&, const PrecisionContext& ctx) {
                     BigReal rho = rho_value(ctx);
                     BigReal residual = abs(eval_poly(rho_reference_poly(), rho, ctx));
                     Report rep;
                     rep.case_name = "rho-polynomial";
                     rep.category = "derivative";
                     rep.lhs = rho.decimal(50);
                     rep.rhs = "root of " + poly_string(rho_reference_poly());
                     rep.abs_error = residual.decimal(12);
                     rep.rel_error = rep.abs_error;
                     rep.precision_bits = ctx.working_bits;
                     if (residual < BigReal::parse("1e-30", ctx.internal_bits())) {
                       rep.status = "pass";
                       rep.notes = "reference degree-8 polynomial annihilates rho";
                     } else {
                       rep.status = "flagged";
                       AlgebraicCandidate cand = min_poly(
                           [](const PrecisionContext& c) { return rho_value(c); }, 16, ctx);
                       rep.notes = cand.found() && cand.confirmed
                                       ? "reference polynomial fails; recovered " +
                                             poly_string(cand.coefficients)
                                       : "reference polynomial fails; no replacement found";
                     }
                     return rep;
                   }});
  for (const char* q_expr : {"0.1", "exp(-pi)"}) {
    cases.push_back(
        {std::string("logderiv-numderiv-q") + grid_tag(q_expr), "derivative",
         [q_expr](const ParamMap&, const PrecisionContext& ctx) {
           const long p = ctx.internal_bits();
           BigReal q = parse_real_expr(q_expr, p);
           BigReal analytic = product_log_derivative(rr_product_spec(), q, ctx);
           BigReal numeric = num_derivative(
               [](const BigReal& x, const PrecisionContext& c) {
                 return product_form(rr_product_spec(), x, c);
               },
               q, ctx);
           return route_report("", "derivative", analytic, numeric, ctx,
                               "numeric central difference cross-check at half precision",
                               ctx.working_bits / 2);
         }});
  }
  for (const char* tau_expr : {"1", "1/2"}) {
    cases.push_back({std::string("x1-logderiv-tau") + grid_tag(tau_expr), "derivative",
                     [tau_expr](const ParamMap&, const PrecisionContext& ctx) {
                       BigReal tau = parse_real_expr(tau_expr, ctx.internal_bits());
                       auto [lhs, rhs] = x1_logderiv_sides(tau, ctx);
                       return route_report("", "derivative", lhs, rhs, ctx,
                                           "derivative side via central difference",
                                           ctx.working_bits / 2);
                     }});
  }
  for (const char* y_expr : {"0.7", "1"}) {
    cases.push_back(
        {std::string("eta4-ftc-y") + grid_tag(y_expr), "derivative",
         [y_expr](const ParamMap&, const PrecisionContext& ctx) {
           const long p = ctx.internal_bits();
           BigReal y = parse_real_expr(y_expr, p);
           BigReal lhs = num_derivative(
               [](const BigReal& u, const PrecisionContext& c) {
                 return eta4_antiderivative(u, c);
               },
               y, ctx);
           BigReal rhs = ldexp(BigReal::pi(p), 1) * pow(dedekind_eta(y, ctx.raised()), 4L);
           return route_report("", "derivative", lhs, rhs.rounded(ctx.working_bits), ctx,
                               "fundamental theorem check at half precision",
                               ctx.working_bits / 2);
         }});
  }
}

// The two report-list suites are memoized per precision so that running one
// catalog pass does not recompute every quadrature and lattice reduction per
// picked-out case.
const std::vector<Report>& cached_suite(const char* which, const PrecisionContext& ctx) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, long, long>, std::vector<Report>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(std::string(which), ctx.working_bits, ctx.guard_bits);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<Report> reports = std::string(which) == "glasser" ? glasser_suite(ctx)
                                                                  : algebraicity_suite(ctx);
    it = cache.emplace(key, std::move(reports)).first;
  }
  return it->second;
}

Report pick_report(const std::vector<Report>& reports, const std::string& name) {
  for (const Report& rep : reports) {
    if (rep.case_name == name) return rep;
  }
  throw DomainError("suite did not produce case '" + name + "'");
}

void add_integral_cases(std::vector<IdentityCase>& cases) {
  // antiderivative bracket over [a, b] against 2 pi * quadrature of eta^4
  for (auto [a_expr, b_expr] : {std::pair<const char*, const char*>{"1/2", "1"}, {"1", "2"}}) {
    cases.push_back(
        {std::string("eta4-bracket-") + grid_tag(a_expr) + "-" + grid_tag(b_expr), "integral",
         [a_expr, b_expr](const ParamMap&, const PrecisionContext& ctx) {
           PrecisionContext inner = ctx.raised();
           const long p = inner.internal_bits();
           BigReal a = parse_real_expr(a_expr, p);
           BigReal b = parse_real_expr(b_expr, p);
           BigReal lhs = eta4_antiderivative(b, inner) - eta4_antiderivative(a, inner);
           BigReal rhs = ldexp(BigReal::pi(p), 1) *
                         integrate(
                             [](const BigReal& x, const PrecisionContext& c) {
                               return pow(dedekind_eta(x, c), 4L);
                             },
                             a, b, inner);
           return route_report("", "integral", lhs.rounded(ctx.working_bits),
                               rhs.rounded(ctx.working_bits), ctx,
                               "nome e^{-2 pi y} (the convergent reading)", kQuadShift);
         }});
  }
  for (const char* name : {"glasser-f-quartic", "glasser-f-quintic-arg", "glasser-eta-quartic",
                           "glasser-substitution", "glasser-2f1-transformation"}) {
    cases.push_back({name, "integral",
                     [name](const ParamMap&, const PrecisionContext& ctx) {
                       return pick_report(cached_suite("glasser", ctx), name);
                     }});
  }
}

void add_algebraicity_cases(std::vector<IdentityCase>& cases) {
  static const char* names[] = {
      "poch8-a5-p1-r1",      "poch8-a5-p2-r1",   "poch8-a6-p1-r2",
      "theta-sum-pentagonal-r1", "theta-sum-theta3-r1", "theta-sum-halfshift-r2",
      "rr-value-r1",        "rr-value-r2",    "cubic-value-r1",
      "octic-value-r1",     "neg-even-eighth-r1", "neg-odd-eighth-r1",
      "ratio8-value-r1",    "psi-square-normalized-k-over-pi", "psi-square-normalized-sqrt-k-over-pi",
      "bilateral-a0-normalized-r1"};
  for (const char* name : names) {
    cases.push_back({name, "algebraicity",
                     [name](const ParamMap&, const PrecisionContext& ctx) {
                       return pick_report(cached_suite("algebraicity", ctx), name);
                     }});
  }
}

}  // namespace

std::vector<IdentityCase> identity_cases(const Config& config) {
  std::vector<IdentityCase> cases;
  add_rr_route_cases(cases);
  add_fquotient_cases(cases);
  add_h_cases(cases);
  add_cf_product_cases(cases, config);
  add_m_family_cases(cases, config);
  add_series_property_cases(cases);
  add_derivative_cases(cases);
  add_integral_cases(cases);
  add_algebraicity_cases(cases);
  std::sort(cases.begin(), cases.end(),
            [](const IdentityCase& a, const IdentityCase& b) { return a.name < b.name; });
  return cases;
}

Report run_identity(const std::string& name, const ParamMap& overrides,
                    const PrecisionContext& ctx, const Config& config) {
  for (const IdentityCase& c : identity_cases(config)) {
    if (c.name != name) continue;
    Report rep = c.run(overrides, ctx);
    rep.case_name = name;
    rep.category = c.category;
    return rep;
  }
  throw DomainError("unknown identity case '" + name + "'");
}

std::vector<Report> run_suite(const std::string& filter, const PrecisionContext& ctx,
                              const Config& config) {
  std::vector<IdentityCase> selected;
  for (IdentityCase& c : identity_cases(config)) {
    if (filter == "all" || c.category == filter) selected.push_back(std::move(c));
  }
  // Cases are pure, so they run concurrently; the name sort at the end keeps
  // the report order deterministic regardless of scheduling.
  std::vector<Report> reports(selected.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < selected.size(); i = next.fetch_add(1)) {
      Report rep;
      try {
        rep = selected[i].run({}, ctx);
      } catch (const std::exception& e) {
        rep.status = "fail";
        rep.precision_bits = ctx.working_bits;
        rep.notes = std::string("exception: ") + e.what();
      }
      rep.case_name = selected[i].name;
      rep.category = selected[i].category;
      reports[i] = std::move(rep);
    }
  };
  unsigned n_threads = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          static_cast<unsigned>(selected.size()));
  if (n_threads > 1) {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  } else {
    worker();
  }
  std::sort(reports.begin(), reports.end(),
            [](const Report& a, const Report& b) { return a.case_name < b.case_name; });
  return reports;
}

std::string reports_to_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Report& r : reports) {
    arr.push_back({{"case", r.case_name},
                   {"category", r.category},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"abs_error", r.abs_error},
                   {"rel_error", r.rel_error},
                   {"precision_bits", r.precision_bits},
                   {"status", r.status},
                   {"notes", r.notes}});
  }
  return arr.dump(2);
}

void print_report_table(std::ostream& os, const std::vector<Report>& reports) {
  size_t width = 12;
  for (const Report& r : reports) width = std::max(width, r.case_name.size());
  for (const Report& r : reports) {
    os << r.case_name << std::string(width + 2 - r.case_name.size(), ' ') << r.status;
    if (r.status.size() < 10) os << std::string(10 - r.status.size(), ' ');
    os << "abs_err=" << (r.abs_error.empty() ? "-" : r.abs_error);
    if (!r.notes.empty()) os << "  [" << r.notes << "]";
    os << "\n";
  }
}

Config Config::load(const std::string& explicit_path) {
  std::string path = explicit_path;
  if (path.empty()) {
    const char* env = std::getenv("RAMACF_CONFIG");
    if (env != nullptr) path = env;
  }
  Config cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw DomainError("config file not readable: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw DomainError("config parse error: " + std::string(e.what()));
  }
  cfg.precision_bits = j.value("precision_bits", cfg.precision_bits);
  cfg.guard_bits = j.value("guard_bits", cfg.guard_bits);
  cfg.algid_max_degree = j.value("algid_max_degree", cfg.algid_max_degree);
  if (j.contains("cf_q_grid")) cfg.cf_q_grid = j["cf_q_grid"].get<std::vector<std::string>>();
  if (j.contains("m_c_grid")) cfg.m_c_grid = j["m_c_grid"].get<std::vector<std::string>>();
  if (j.contains("m_q_grid")) cfg.m_q_grid = j["m_q_grid"].get<std::vector<std::string>>();
  return cfg;
}

}  // namespace ramacf
