#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <string>

#include "harmsum/cli.hpp"
#include "harmsum/context.hpp"
#include "harmsum/elementary.hpp"
#include "harmsum/error.hpp"
#include "harmsum/eulersum.hpp"
#include "harmsum/specfun.hpp"

namespace harmsum::cli {

namespace {

/// Usage problems detected after CLI11 parsing (bad ids, bindings, domains).
struct UsageError : Error {
  using Error::Error;
};

constexpr int kDefaultDigits = 30;
constexpr int kContextExtra = 15;

VerifyPolicy policy_for(int digits, unsigned threads, std::string lhs_plan) {
  VerifyPolicy p;
  p.digits = digits;
  p.context_digits = digits + kContextExtra;
  p.threads = threads;
  p.lhs_plan = std::move(lhs_plan);
  return p;
}

ParamMap parse_bindings(const std::vector<std::string>& bindings) {
  ParamMap out;
  for (const auto& b : bindings) {
    auto [name, value] = parse_binding(b);
    if (!out.emplace(name, value).second) throw UsageError("parameter '" + name + "' given twice");
  }
  return out;
}

std::string schema(const IdentityRecord& r) {
  std::string s = r.id;
  if (r.params.empty()) return s + " (no parameters)";
  for (const auto& p : r.params) s += "\n  " + p.describe();
  return s;
}

const IdentityRecord& lookup(const std::string& id) {
  for (const auto& r : list_identities()) {
    if (r.id == id) return r;
  }
  throw UsageError("unknown identity '" + id + "'; run 'harmsum list' for the catalog");
}

/// Resolves bindings up front so domain violations count as usage errors.
ParamMap checked_params(const IdentityRecord& r, const std::vector<std::string>& bindings) {
  try {
    return resolve_params(r, parse_bindings(bindings));
  } catch (const DomainError& e) {
    throw UsageError(std::string(e.what()) + "\nparameters of " + schema(r));
  }
}

int exit_for(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.status != Status::Pass) return kExitFailure;
  }
  return kExitOk;
}

void print_detail(const IdentityRecord& r, const VerificationReport& rep, std::ostream& out) {
  out << rep.id;
  if (!rep.params.empty()) out << "  " << format_params(rep.params);
  out << "\n  " << r.statement << "\n";
  out << "  lhs     " << (rep.lhs.empty() ? "-" : rep.lhs) << "\n";
  out << "  rhs     " << (rep.rhs.empty() ? "-" : rep.rhs) << "\n";
  out << "  matched " << rep.matched_digits << " digits\n";
  out << "  method  " << rep.method << "\n";
  out << "  status  " << to_string(rep.status) << "\n";
}

BigReal special_value(const std::string& fn, const Rational& arg, int order, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  const BigReal x = to_real(arg);
  if (fn == "zeta") return riemann_zeta(x, ctx);
  if (fn == "eta") return dirichlet_eta(x, ctx);
  if (fn == "beta") return dirichlet_beta(x, ctx);
  if (fn == "polylog") return polylog(order, x, ctx);
  if (fn == "loggamma") return loggamma(x, ctx);
  if (fn == "digamma") return polygamma(0, x, ctx);
  if (fn == "polygamma") return polygamma(order, x, ctx);
  if (fn == "negapolygamma2") return negapolygamma2(x, ctx);
  if (fn == "log-barnes-g") return log_barnes_g(x, ctx);
  if (fn == "ein") return ein(x, ctx);
  if (fn == "ei") return ei(x, ctx);
  if (fn == "zeta-prime") {
    if (arg.get_den() != 1) throw DomainError("zeta_prime", to_string(arg), "argument must be an integer");
    return zeta_prime(static_cast<int>(arg.get_num().get_si()), ctx);
  }
  return elementary(parse_elementary(fn), x, ctx, BigReal(order));
}

const char* kSpecialNames =
    "zeta, eta, beta, polylog (--order s), loggamma, digamma, polygamma (--order n), negapolygamma2, "
    "log-barnes-g, ein, ei, zeta-prime, exp, log, sqrt, cosh, atanh, pow (--order y)";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify harmonic-number series identities to high precision", "harmsum"};
  app.require_subcommand(1);

  int digits = kDefaultDigits;
  std::string only = "*";
  std::string json_path;
  unsigned threads = 0;
  std::string lhs_plan;
  bool no_timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Verify catalog identities at their sweep parameters");
  verify_cmd->add_option("--only", only, "Glob selecting identity ids");
  verify_cmd->add_option("--digits", digits, "Matched digits required to pass")->check(CLI::Range(10, 2000));
  verify_cmd->add_option("--json", json_path, "Also write the JSON report to PATH ('-' for stdout)");
  verify_cmd->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  verify_cmd->add_option("--lhs-plan", lhs_plan, "Evaluate the LHS by this alternative plan");
  verify_cmd->add_flag("--no-timing", no_timing, "Report elapsed times as 0");

  std::string id;
  std::vector<std::string> bindings;
  bool eval_json = false;
  auto* eval = app.add_subcommand("eval", "Evaluate both sides of one identity");
  eval->add_option("--id", id, "Identity id")->required();
  eval->add_option("--param", bindings, "Parameter binding name=value (exact rational)");
  eval->add_option("--digits", digits, "Matched digits required to pass")->check(CLI::Range(10, 2000));
  eval->add_option("--lhs-plan", lhs_plan, "Evaluate the LHS by this alternative plan");
  eval->add_flag("--json", eval_json, "Print the JSON report instead of the summary");
  eval->add_flag("--no-timing", no_timing, "Report elapsed times as 0");

  std::string fn;
  std::string arg_text;
  std::string order_text = "1";
  auto* special = app.add_subcommand("special", "Evaluate a special or elementary function");
  special->add_option("--fn", fn, std::string("Function: ") + kSpecialNames)->required();
  special->add_option("--arg", arg_text, "Argument (exact rational)")->required();
  special->add_option("--order", order_text, "Order or exponent where the function takes one");
  special->add_option("--digits", digits, "Significant digits")->check(CLI::Range(10, 2000));

  int p = 0;
  int q = 0;
  bool numeric = false;
  auto* euler = app.add_subcommand("euler-sum", "Closed form of Σ (−1)^(n−1) H_n^(p)/n^q, p + q odd");
  euler->add_option("--p", p, "Order of the generalized harmonic number")->required();
  euler->add_option("--q", q, "Power of n")->required();
  euler->add_flag("--numeric", numeric, "Also print its value");
  euler->add_option("--digits", digits, "Significant digits for --numeric")->check(CLI::Range(10, 2000));

  auto* integrate = app.add_subcommand("integrate", "Evaluate an integral identity by tanh-sinh quadrature");
  integrate->add_option("--id", id, "Identity id whose LHS is an integral")->required();
  integrate->add_option("--param", bindings, "Parameter binding name=value (exact rational)");
  integrate->add_option("--digits", digits, "Matched digits required to pass")->check(CLI::Range(10, 2000));

  bool list_json = false;
  auto* list = app.add_subcommand("list", "List catalog identities with their parameter schemas");
  list->add_flag("--json", list_json, "Print the catalog as JSON");

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();  // program name
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify_cmd) {
      const auto reports = verify_all(policy_for(digits, threads, lhs_plan), only);
      if (reports.empty()) throw UsageError("no identity matches '" + only + "'");
      const FormatOptions fo{no_timing};
      out << format_report(reports, OutputMode::Text, fo);
      int pass = 0;
      for (const auto& r : reports) pass += r.status == Status::Pass;
      out << reports.size() << " runs, " << pass << " pass, " << reports.size() - pass << " not pass\n";
      if (!json_path.empty()) {
        const std::string doc = format_report(reports, OutputMode::Json, fo);
        if (json_path == "-") {
          out << doc;
        } else {
          std::ofstream f(json_path);
          if (!(f << doc)) throw Error("cannot write " + json_path);
        }
      }
      return exit_for(reports);
    }
    if (*eval || *integrate) {
      const IdentityRecord& r = lookup(id);
      if (*integrate && !r.integral) {
        throw UsageError(id + " is not an integral identity; integral ids are listed by 'harmsum list'");
      }
      const ParamMap params = checked_params(r, bindings);
      const VerificationReport rep = harmsum::verify(id, params, policy_for(digits, 1, lhs_plan));
      if (eval_json) {
        out << format_report({rep}, OutputMode::Json, {no_timing});
      } else {
        print_detail(r, rep, out);
      }
      return exit_for({rep});
    }
    if (*special) {
      const PrecisionContext ctx = make_context(digits);
      const Rational arg = parse_rational(arg_text);
      const Rational order = parse_rational(order_text);
      if (fn != "pow" && order.get_den() != 1) throw UsageError("--order must be an integer for " + fn);
      BigReal v;
      if (fn == "pow") {
        auto g = ctx.activate();
        v = elementary(ElementaryFn::Pow, to_real(arg), ctx, to_real(order));
      } else {
        v = special_value(fn, arg, static_cast<int>(order.get_num().get_si()), ctx);
      }
      out << v.to_string(digits) << "\n";
      return kExitOk;
    }
    if (*euler) {
      const Expression e = euler_alternating(p, q);
      out << to_string(e) << "\n";
      if (numeric) out << expr_eval(e, make_context(digits)).to_string(digits) << "\n";
      return kExitOk;
    }
    if (*list) {
      if (list_json) {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& r : list_identities()) {
          nlohmann::ordered_json params = nlohmann::ordered_json::array();
          for (const auto& ps : r.params) params.push_back(ps.describe());
          doc.push_back({{"id", r.id}, {"statement", r.statement}, {"params", params}});
        }
        out << doc.dump(2) << "\n";
      } else {
        for (const auto& r : list_identities()) {
          out << r.id << (r.integral ? "  [integral]" : "") << "\n  " << r.statement << "\n";
          for (const auto& ps : r.params) out << "  param " << ps.describe() << "\n";
        }
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace harmsum::cli
