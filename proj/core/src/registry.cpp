#include "harmsum/registry.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <string>
#include <thread>

#include "catalog.hpp"
#include "harmsum/error.hpp"

namespace harmsum {

bool ParamSpec::contains(const Rational& v) const {
  if (!choices.empty()) return std::find(choices.begin(), choices.end(), v) != choices.end();
  if (integer && v.get_den() != 1) return false;
  if (min_inclusive ? v < min : v <= min) return false;
  if (max && (max_inclusive ? v > *max : v >= *max)) return false;
  return true;
}

std::string ParamSpec::describe() const {
  std::string s = name + ": " + (integer ? "integer" : "rational");
  if (!choices.empty()) {
    s += " in {";
    for (size_t i = 0; i < choices.size(); ++i) s += (i ? ", " : "") + to_string(choices[i]);
    s += "}";
  } else if (max) {
    s += std::string(" in ") + (min_inclusive ? "[" : "(") + to_string(min) + ", " + to_string(*max) +
         (max_inclusive ? "]" : ")");
  } else {
    s += std::string(min_inclusive ? " >= " : " > ") + to_string(min);
  }
  return s + " (default " + to_string(default_value) + ")";
}

const std::vector<IdentityRecord>& list_identities() {
  static const std::vector<IdentityRecord> records = [] {
    auto r = internal::build_catalog();
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return r;
  }();
  return records;
}

const IdentityRecord& find_identity(std::string_view id) {
  for (const auto& r : list_identities()) {
    if (r.id == id) return r;
  }
  throw DomainError("find_identity", std::string(id), "unknown identity");
}

ParamMap resolve_params(const IdentityRecord& record, const ParamMap& given) {
  ParamMap out;
  for (const auto& [name, value] : given) {
    auto it = std::find_if(record.params.begin(), record.params.end(),
                           [&](const ParamSpec& p) { return p.name == name; });
    if (it == record.params.end()) {
      throw DomainError(record.id, name + "=" + to_string(value), "unknown parameter");
    }
    if (!it->contains(value)) {
      throw DomainError(record.id, name + "=" + to_string(value), "outside domain " + it->describe());
    }
  }
  for (const auto& p : record.params) {
    auto it = given.find(p.name);
    out[p.name] = it == given.end() ? p.default_value : it->second;
  }
  return out;
}

namespace {

const Plan& pick(const IdentityRecord& r, const std::vector<Plan>& plans, std::string_view name) {
  if (name.empty()) return plans.front();
  for (const auto& p : plans) {
    if (p.name == name) return p;
  }
  throw DomainError(r.id, std::string(name), "no such plan");
}

SideValue run_plan(const IdentityRecord& r, const Plan& plan, const ParamMap& params,
                   const PrecisionContext& ctx) {
  try {
    auto p = ctx.activate();
    return plan.evaluate(params, ctx);
  } catch (const ConvergenceError& e) {
    std::string what = e.what();
    what = what.substr(0, what.rfind(" (achieved ~"));
    throw ConvergenceError(r.id + ": " + what, e.achieved_digits());
  } catch (const DomainError& e) {
    throw DomainError(r.id, format_params(params), e.what());
  }
}

int capped_agreement(const BigReal& a, const BigReal& b, const PrecisionContext& ctx) {
  return std::min(agree_digits(a, b), ctx.target_digits());
}

}  // namespace

SideValue evaluate_side(std::string_view id, Side side, const ParamMap& params,
                        const PrecisionContext& ctx, std::string_view plan) {
  const IdentityRecord& r = find_identity(id);
  const ParamMap resolved = resolve_params(r, params);
  return run_plan(r, pick(r, side == Side::Lhs ? r.lhs : r.rhs, plan), resolved, ctx);
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

Status parse_status(std::string_view text) {
  if (text == "pass") return Status::Pass;
  if (text == "fail") return Status::Fail;
  if (text == "error") return Status::Error;
  throw ParseError("unknown status '" + std::string(text) + "'");
}

std::string format_params(const ParamMap& params) {
  std::string s;
  for (const auto& [name, value] : params) {
    if (!s.empty()) s += ", ";
    s += name + "=" + to_string(value);
  }
  return s;
}

VerificationReport verify(std::string_view id, const ParamMap& params, const VerifyPolicy& policy) {
  VerificationReport report;
  report.id = std::string(id);
  report.params = params;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  std::string method;
  try {
    const IdentityRecord& r = find_identity(id);
    report.params = resolve_params(r, params);
    const PrecisionContext ctx = make_context(policy.context_digits);
    const Plan& lhs_plan = pick(r, r.lhs, policy.lhs_plan);
    method = "lhs:" + lhs_plan.name;
    const SideValue lhs = run_plan(r, lhs_plan, report.params, ctx);
    method = "lhs:" + lhs.method + " rhs:";
    int matched = kExactAgreement;
    std::string rhs_text;
    for (size_t i = 0; i < r.rhs.size(); ++i) {
      const SideValue rhs = run_plan(r, r.rhs[i], report.params, ctx);
      method += (i ? "+" : "") + rhs.method;
      matched = std::min(matched, capped_agreement(lhs.value, rhs.value, ctx));
      if (i == 0) rhs_text = rhs.value.to_string(ctx.target_digits());
    }
    report.lhs = lhs.value.to_string(ctx.target_digits());
    report.rhs = rhs_text;
    report.matched_digits = matched;
    report.method = method;
    report.status = matched >= policy.digits ? Status::Pass : Status::Fail;
  } catch (const std::exception& e) {
    report.status = Status::Error;
    report.method = (method.empty() ? "" : method + " ") + "error: " + e.what();
  }
  report.elapsed_ms = elapsed();
  return report;
}

namespace {

struct Run {
  const IdentityRecord* record;
  ParamMap params;
};

std::vector<Run> plan_runs(std::string_view filter) {
  const std::string pattern(filter.empty() ? "*" : filter);
  std::vector<Run> runs;
  for (const auto& r : list_identities()) {
    if (fnmatch(pattern.c_str(), r.id.c_str(), 0) != 0) continue;
    if (r.sweep.empty()) {
      runs.push_back({&r, {}});
    } else {
      for (const auto& p : r.sweep) runs.push_back({&r, p});
    }
  }
  return runs;
}

}  // namespace

std::size_t count_runs(std::string_view filter) { return plan_runs(filter).size(); }

std::vector<VerificationReport> verify_all(const VerifyPolicy& policy, std::string_view filter) {
  const std::vector<Run> runs = plan_runs(filter);
  std::vector<VerificationReport> reports(runs.size());
  unsigned workers = policy.threads ? policy.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<size_t>(runs.size(), 1)));
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < runs.size(); i = next++) {
      reports[i] = verify(runs[i].record->id, runs[i].params, policy);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return reports;
}

}  // namespace harmsum
