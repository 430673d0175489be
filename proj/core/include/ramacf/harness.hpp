#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ramacf/bigreal.hpp"
#include "ramacf/numerics.hpp"
#include "ramacf/precision.hpp"
#include "ramacf/rational.hpp"
#include "ramacf/report.hpp"

namespace ramacf {

// Raw string parameters from the CLI / JSON layer; each quantity parses what
// it needs (reals, rationals) and applies its documented defaults.
using ParamMap = std::map<std::string, std::string>;

/// Decimal literals plus the handful of exact tokens the catalog needs:
/// "pi", "2*pi", "pi/2", "pi/3", "exp(-pi)", "exp(-2*pi)", "e^-x" forms.
BigReal parse_real_expr(const std::string& text, long bits);
Rational parse_rational(const std::string& text);

struct Quantity {
  std::string name;
  std::string description;
  std::string params_help;
  std::function<BigReal(const ParamMap&, const PrecisionContext&)> eval;
};

struct Integrand {
  std::string name;
  std::string description;
  RealFunction f;
};

struct IdentityCase {
  std::string name;
  std::string category;  // cf-product | functional-equation | derivative |
                         // integral | algebraicity | closed-form
  std::function<Report(const ParamMap&, const PrecisionContext&)> run;
};

// Defaults plus the suite parameter grids; loadable from a JSON file given
// explicitly, or through the RAMACF_CONFIG environment variable.
struct Config {
  long precision_bits = 256;
  long guard_bits = 64;
  int algid_max_degree = 16;
  std::vector<std::string> cf_q_grid = {"0.05", "0.1", "0.3", "exp(-pi)"};
  std::vector<std::string> m_c_grid = {"1/2", "1", "2"};
  std::vector<std::string> m_q_grid = {"0.1", "0.3", "0.5"};

  static Config load(const std::string& explicit_path);
};

const std::vector<Quantity>& quantity_registry();
const std::vector<Integrand>& integrand_registry();
std::vector<IdentityCase> identity_cases(const Config& config = {});

BigReal eval_quantity(const std::string& name, const ParamMap& params,
                      const PrecisionContext& ctx);
const Integrand& find_integrand(const std::string& name);

/// Runs one registered case; mathematical mismatch is encoded in the report
/// status, never thrown.
Report run_identity(const std::string& name, const ParamMap& overrides,
                    const PrecisionContext& ctx, const Config& config = {});

/// Runs every case in a category ("all" for the whole catalog); reports are
/// ordered by case name.
std::vector<Report> run_suite(const std::string& filter, const PrecisionContext& ctx,
                              const Config& config = {});

std::string reports_to_json(const std::vector<Report>& reports);
void print_report_table(std::ostream& os, const std::vector<Report>& reports);

}  // namespace ramacf
