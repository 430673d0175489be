// ramacf: evaluate Ramanujan-type continued fractions and q-series by
// independent routes, check the identity catalog, and recover the integer
// polynomials behind algebraic values.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "ramacf/algid.hpp"
#include "ramacf/harness.hpp"
#include "ramacf/numerics.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

ramacf::ParamMap collect_params(const std::vector<std::string>& kvs,
                                const std::map<std::string, std::string>& direct) {
  ramacf::ParamMap params;
  for (const auto& [key, value] : direct) {
    if (!value.empty()) params[key] = value;
  }
  for (const std::string& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ramacf::DomainError("--param expects k=v, got '" + kv + "'");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return params;
}

void list_quantities(std::ostream& os) {
  os << "registered quantities:\n";
  for (const auto& q : ramacf::quantity_registry()) {
    os << "  " << q.name;
    if (!q.params_help.empty()) os << "  [" << q.params_help << "]";
    os << "  -- " << q.description << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"high-precision evaluation and verification of Ramanujan-type "
               "continued fractions and q-series"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON config file (default: RAMACF_CONFIG environment variable)");

  long prec = 0;
  long guard = -1;
  auto add_precision_opts = [&](CLI::App* cmd) {
    cmd->fallthrough();  // lets --config reach the parent parser
    cmd->add_option("--prec", prec, "working precision in bits");
    cmd->add_option("--guard", guard, "guard bits (default from config)");
  };

  std::vector<std::string> param_kvs;
  std::map<std::string, std::string> direct = {{"x", ""},   {"q", ""}, {"tau", ""}, {"r", ""},
                                               {"c", ""},   {"t", ""}, {"y", ""},   {"a", ""},
                                               {"b", ""}};
  auto add_param_opts = [&](CLI::App* cmd) {
    cmd->add_option("--param", param_kvs, "quantity parameter as k=v (repeatable)");
    for (auto& [key, slot] : direct) {
      cmd->add_option("--" + key, slot, "shorthand for --param " + key + "=<value>");
    }
  };

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a registered quantity");
  std::string eval_quantity;
  bool eval_list = false;
  eval_cmd->add_option("quantity", eval_quantity, "registered quantity name");
  eval_cmd->add_flag("--list", eval_list, "list registered quantities and exit");
  add_param_opts(eval_cmd);
  add_precision_opts(eval_cmd);

  // identity
  auto* id_cmd = app.add_subcommand("identity", "run identity checks");
  std::string id_name, id_category, id_json;
  bool id_all = false;
  id_cmd->add_option("name", id_name, "single case name");
  id_cmd->add_option("--category", id_category,
                     "cf-product | functional-equation | derivative | integral | "
                     "algebraicity | closed-form");
  id_cmd->add_flag("--all", id_all, "run the full catalog");
  id_cmd->add_option("--json", id_json, "also write the reports as JSON to this path");
  add_precision_opts(id_cmd);
  id_cmd->add_option("--param", param_kvs, "case parameter overrides as k=v (repeatable)");

  // minpoly
  auto* mp_cmd = app.add_subcommand("minpoly", "integer minimal polynomial of a quantity");
  std::string mp_quantity;
  int mp_max_degree = 0;
  mp_cmd->add_option("quantity", mp_quantity, "registered quantity name")->required();
  mp_cmd->add_option("--max-degree", mp_max_degree, "degree cap (default from config)");
  add_param_opts(mp_cmd);
  add_precision_opts(mp_cmd);

  // integrate
  auto* int_cmd = app.add_subcommand("integrate", "quadrature of a registered integrand");
  std::string int_name, int_a, int_b;
  int_cmd->add_option("name", int_name, "integrand: eta4 | glasser8 | glasser9")->required();
  int_cmd->add_option("--a", int_a, "lower bound")->required();
  int_cmd->add_option("--b", int_b, "upper bound")->required();
  add_precision_opts(int_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    ramacf::Config config = ramacf::Config::load(config_path);
    if (prec <= 0) prec = config.precision_bits;
    if (guard < 0) guard = config.guard_bits;
    ramacf::PrecisionContext ctx(prec, guard);

    if (eval_cmd->parsed()) {
      if (eval_list || eval_quantity.empty()) {
        list_quantities(std::cout);
        return eval_quantity.empty() && !eval_list ? kExitUsage : kExitPass;
      }
      ramacf::ParamMap params = collect_params(param_kvs, direct);
      ramacf::BigReal value = ramacf::eval_quantity(eval_quantity, params, ctx);
      std::cout << value.decimal(50) << "\n";
      return kExitPass;
    }

    if (id_cmd->parsed()) {
      int selectors = (!id_name.empty() ? 1 : 0) + (!id_category.empty() ? 1 : 0) +
                      (id_all ? 1 : 0);
      if (selectors != 1) {
        std::cerr << "identity: give exactly one of <name>, --category, --all\n";
        return kExitUsage;
      }
      std::vector<ramacf::Report> reports;
      if (!id_name.empty()) {
        reports.push_back(
            ramacf::run_identity(id_name, collect_params(param_kvs, direct), ctx, config));
      } else {
        reports = ramacf::run_suite(id_all ? "all" : id_category, ctx, config);
      }
      ramacf::print_report_table(std::cout, reports);
      if (!id_json.empty()) {
        std::ofstream out(id_json);
        if (!out) throw ramacf::DomainError("cannot write JSON to " + id_json);
        out << ramacf::reports_to_json(reports) << "\n";
      }
      bool any_fail = false;
      for (const auto& r : reports) any_fail |= (r.status == "fail" || r.status == "not-found");
      return any_fail ? kExitFail : kExitPass;
    }

    if (mp_cmd->parsed()) {
      if (mp_max_degree <= 0) mp_max_degree = config.algid_max_degree;
      ramacf::ParamMap params = collect_params(param_kvs, direct);
      ramacf::AlgebraicCandidate cand = ramacf::min_poly(
          [&](const ramacf::PrecisionContext& c) {
            return ramacf::eval_quantity(mp_quantity, params, c);
          },
          mp_max_degree, ctx);
      ramacf::BigReal value = ramacf::eval_quantity(mp_quantity, params, ctx);
      std::cout << "value    = " << value.decimal(50) << "\n";
      if (cand.found() && cand.confirmed) {
        std::cout << "minpoly  = " << ramacf::poly_string(cand.coefficients) << "\n"
                  << "degree   = " << cand.degree << "\n"
                  << "height   = " << cand.height.get_str() << "\n"
                  << "residual = " << cand.residual.decimal(8) << " (confirmed at doubled "
                  << "precision)\n";
        return kExitPass;
      }
      std::cout << "minpoly  = not found (degree cap " << mp_max_degree << ")\n";
      return kExitFail;
    }

    if (int_cmd->parsed()) {
      const ramacf::Integrand& integrand = ramacf::find_integrand(int_name);
      ramacf::BigReal a = ramacf::parse_real_expr(int_a, ctx.internal_bits());
      ramacf::BigReal b = ramacf::parse_real_expr(int_b, ctx.internal_bits());
      ramacf::BigReal value = ramacf::integrate(integrand.f, a, b, ctx);
      std::cout << value.decimal(50) << "\n";
      return kExitPass;
    }
  } catch (const ramacf::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ramacf::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ramacf::ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
