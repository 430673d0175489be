#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ramacf/harness.hpp"
#include "ramacf/qseries.hpp"
#include "test_util.hpp"

using namespace ramacf;
using ramacf::testing::check_close;
using ramacf::testing::dec;

TEST_CASE("parse_real_expr tokens") {
  const long p = 256;
  check_close(parse_real_expr("pi", p), BigReal::pi(p), BigReal::two_pow(-250, p), "pi");
  check_close(parse_real_expr("2*pi", p), ldexp(BigReal::pi(p), 1), BigReal::two_pow(-250, p),
              "2pi");
  check_close(parse_real_expr("exp(-pi)", p), exp(-BigReal::pi(p)), BigReal::two_pow(-250, p),
              "e^-pi");
  check_close(parse_real_expr("exp(-2*pi)", p), exp(-ldexp(BigReal::pi(p), 1)),
              BigReal::two_pow(-250, p), "e^-2pi");
  check_close(parse_real_expr("1/2", p), dec("0.5", p), BigReal::two_pow(-250, p), "1/2");
  check_close(parse_real_expr("-0.25", p), dec("-0.25", p), BigReal::two_pow(-250, p), "-0.25");
  CHECK_THROWS_AS(parse_real_expr("nonsense", p), DomainError);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("x/y"), DomainError);
}

TEST_CASE("quantity registry: known names evaluate and unknown names throw") {
  PrecisionContext ctx(192);
  BigReal via_registry = eval_quantity("rr", {{"x", "2*pi"}}, ctx);
  BigReal direct = product_form(rr_product_spec(), exp(-ldexp(BigReal::pi(ctx.internal_bits()), 1)),
                                ctx);
  check_close(via_registry, direct, ctx.tolerance(), "registry rr");
  CHECK_THROWS_AS(eval_quantity("no-such-thing", {}, ctx), DomainError);
  CHECK_THROWS_AS(find_integrand("no-such-integrand"), DomainError);
  CHECK(find_integrand("eta4").name == "eta4");
}

TEST_CASE("run_identity: named case, override support, unknown name") {
  PrecisionContext ctx(256);
  Report rep = run_identity("rr-closed-form-2pi", {}, ctx);
  CHECK(rep.passed());
  CHECK(rep.precision_bits == 256);

  Report h_override = run_identity("h-functional", {{"a", "pi/2"}}, ctx);
  CHECK(h_override.passed());

  CHECK_THROWS_AS(run_identity("bogus-case", {}, ctx), DomainError);
}

TEST_CASE("status encodes mismatch instead of throwing") {
  PrecisionContext ctx(192);
  Report rep = run_identity("psi-square-cf-vs-product", {}, ctx);
  CHECK(rep.status == "flagged");  // documented disagreement, not an exception
}

TEST_CASE("suite reports are deterministic, ordered, and JSON-serializable") {
  PrecisionContext ctx(128);
  std::vector<Report> a = run_suite("closed-form", ctx);
  std::vector<Report> b = run_suite("closed-form", ctx);
  REQUIRE(!a.empty());
  CHECK(reports_to_json(a) == reports_to_json(b));
  for (size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].case_name < a[i].case_name);

  std::string json = reports_to_json(a);
  for (const char* key :
       {"\"case\"", "\"category\"", "\"lhs\"", "\"rhs\"", "\"abs_error\"", "\"rel_error\"",
        "\"precision_bits\"", "\"status\"", "\"notes\""}) {
    CHECK(json.find(key) != std::string::npos);
  }
}

TEST_CASE("raising precision keeps true identities green (monotonicity smoke)") {
  for (long bits : {128L, 256L, 512L}) {
    PrecisionContext ctx(bits);
    for (const char* name : {"rr-closed-form-2pi", "h-pi2-closed-form", "rr-fquotient-linear-q0.1",
                             "pentagonal-euler-q0.1"}) {
      Report rep = run_identity(name, {}, ctx);
      INFO(name, " at ", bits, " bits: ", rep.abs_error);
      CHECK(rep.passed());
    }
  }
}

TEST_CASE("config defaults and file loading") {
  Config def = Config::load("");
  CHECK(def.precision_bits == 256);
  CHECK(def.guard_bits == 64);
  CHECK(def.algid_max_degree == 16);
  CHECK(def.cf_q_grid.size() == 4);

  const char* path = "ramacf_test_config.json";
  {
    std::ofstream out(path);
    out << R"({"precision_bits": 320, "guard_bits": 96, "algid_max_degree": 8,
               "cf_q_grid": ["0.2"], "m_c_grid": ["1"], "m_q_grid": ["0.1", "0.2"]})";
  }
  Config cfg = Config::load(path);
  CHECK(cfg.precision_bits == 320);
  CHECK(cfg.guard_bits == 96);
  CHECK(cfg.algid_max_degree == 8);
  CHECK(cfg.cf_q_grid == std::vector<std::string>{"0.2"});
  CHECK(cfg.m_q_grid.size() == 2);
  std::remove(path);

  CHECK_THROWS_AS(Config::load("/no/such/config.json"), DomainError);

  // grids drive the generated catalog
  size_t count = 0;
  for (const IdentityCase& c : identity_cases(cfg)) {
    if (c.name.rfind("rr-cf-product-", 0) == 0) ++count;
  }
  CHECK(count == 1);
}

TEST_CASE("catalog names are unique") {
  std::vector<IdentityCase> cases = identity_cases();
  for (size_t i = 1; i < cases.size(); ++i) {
    INFO(cases[i].name);
    CHECK(cases[i - 1].name != cases[i].name);
  }
}
