#include "harmsum/quadrature.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "harmsum/constants.hpp"
#include "harmsum/elementary.hpp"
#include "harmsum/error.hpp"
#include "harmsum/specfun.hpp"
#include "internal.hpp"

namespace harmsum {

namespace {

// One abscissa t > 0 (or t = 0) of the standard rule on (−1, 1):
// x = ±(1 − complement), weight excludes the step h.
struct Node {
  BigReal complement;
  BigReal weight;
};

using NodeList = std::vector<Node>;

// Nodes added at `level`: t = k·2^(−level) for odd k (all k ≥ 0 at level 0).
NodeList make_level(int level) {
  NodeList nodes;
  const BigReal half_pi = pi() / 2;
  const BigReal h = ldexp(BigReal(1), -level);
  const BigReal cutoff = internal::epsilon();
  const long step = level == 0 ? 1 : 2;
  for (long k = level == 0 ? 0 : 1;; k += step) {
    const BigReal t = h * k;
    const BigReal u = half_pi * sinh(t);
    const BigReal e2u = exp(u * 2);
    const BigReal complement = 2 / (e2u + 1);
    if (complement < cutoff) break;
    const BigReal ch = cosh(u);
    nodes.push_back({complement, half_pi * cosh(t) / square(ch)});
  }
  return nodes;
}

std::shared_ptr<const NodeList> level_nodes(int level) {
  static std::shared_mutex mutex;
  static std::map<std::pair<int, mpfr_prec_t>, std::shared_ptr<const NodeList>> cache;
  const auto key = std::make_pair(level, working_precision_bits());
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto nodes = std::make_shared<const NodeList>(make_level(level));
  std::unique_lock lock(mutex);
  return cache.emplace(key, std::move(nodes)).first->second;
}

Rational param(const ParamMap& params, const std::string& name, std::string_view family) {
  auto it = params.find(name);
  if (it == params.end()) {
    throw DomainError("integrate_param", std::string(family), "missing parameter '" + name + "'");
  }
  return it->second;
}

long integer_param(const ParamMap& params, const std::string& name, std::string_view family,
                   long min_value) {
  const Rational v = param(params, name, family);
  if (v.get_den() != 1 || v < min_value || !v.get_num().fits_slong_p()) {
    throw DomainError("integrate_param", std::string(family),
                      "parameter '" + name + "' must be an integer >= " + std::to_string(min_value));
  }
  return v.get_num().get_si();
}

Integrand unit(std::function<BigReal(const BigReal&)> f, std::string note) {
  return {std::move(f), BigReal(0), BigReal(1), std::move(note)};
}

}  // namespace

QuadratureResult integrate_detailed(const Integrand& ig, const PrecisionContext& ctx, int max_levels) {
  auto p = ctx.activate();
  if (!(ig.a < ig.b)) throw DomainError("integrate", ig.a.to_string(20), "interval must satisfy a < b");
  const BigReal half = (ig.b - ig.a) / 2;
  const BigReal eps = BigReal::pow10(-ctx.working_digits());
  const BigReal lo = ig.a + eps * max(BigReal(1), abs(ig.a));
  const BigReal hi = ig.b - eps * max(BigReal(1), abs(ig.b));
  long evaluations = 0;

  auto eval = [&](BigReal x) {
    if (x <= ig.a) x = lo;
    if (x >= ig.b) x = hi;
    ++evaluations;
    return ig.f(x);
  };

  // Σ weight·(f(x+) + f(x−)) over the nodes added at one level.
  auto level_sum = [&](int level) {
    const auto nodes = level_nodes(level);
    BigReal sum(0);
    for (const Node& node : *nodes) {
      const BigReal offset = half * node.complement;
      if (node.complement == 1) {
        sum += node.weight * eval(ig.a + half);
      } else {
        sum += node.weight * (eval(ig.b - offset) + eval(ig.a + offset));
      }
    }
    return sum;
  };

  constexpr int kFirstCompared = 4;
  const BigReal tol = BigReal::pow10(-(ctx.target_digits() + 5));
  BigReal raw = level_sum(0);  // Σ over all nodes at the current step
  for (int level = 1; level < kFirstCompared - 1; ++level) raw += level_sum(level);
  BigReal previous = ldexp(raw, -(kFirstCompared - 2)) * half;
  for (int level = kFirstCompared - 1; level <= max_levels; ++level) {
    raw += level_sum(level);
    BigReal current = ldexp(raw, -level) * half;
    const BigReal diff = abs(current - previous);
    if (level >= kFirstCompared && diff <= tol * max(BigReal(1), abs(current))) {
      QuadratureResult r;
      r.est_error = diff + rounding_floor(current, ctx);
      r.value = std::move(current);
      r.levels = level;
      r.evaluations = evaluations;
      return r;
    }
    if (level == max_levels) {
      throw ConvergenceError("integrate: no convergence after " + std::to_string(max_levels) +
                                 " levels (last estimates " + previous.to_string(30) + ", " +
                                 current.to_string(30) + ")",
                             agree_digits(previous, current));
    }
    previous = std::move(current);
  }
  throw ConvergenceError("integrate: max_levels too small", 0);
}

BigReal integrate(const Integrand& ig, const PrecisionContext& ctx) {
  return integrate_detailed(ig, ctx).value;
}

Integrand make_family_integrand(std::string_view family, const ParamMap& params) {
  if (family == "harmonic-rep") {
    const long n = integer_param(params, "n", family, 1);
    return unit([n](const BigReal& x) { return (1 - pow(x, n)) / (1 - x); }, "removable at 1");
  }
  if (family == "skew-rep") {
    const long n = integer_param(params, "n", family, 1);
    return unit([n](const BigReal& x) { return (1 - pow(-x, n)) / (1 + x); }, "smooth");
  }
  if (family == "log-power-plus") {
    const long q = integer_param(params, "q", family, 1);
    return unit([q](const BigReal& x) { return pow(log1p(x), q) / x; }, "removable at 0");
  }
  if (family == "log-power-minus") {
    const long q = integer_param(params, "q", family, 1);
    return unit([q](const BigReal& x) { return pow(log1p(-x), q) / x; }, "log^q at 1");
  }
  if (family == "log-1mx2") {
    return unit([](const BigReal& x) { return log1p(-square(x)) / x; }, "log at 1");
  }
  if (family == "atanh-log") {
    return unit([](const BigReal& x) { return atanh(x) * log1p(-square(x)) / x; }, "log² at 1");
  }
  if (family == "log-1px-over-1px") {
    return unit([](const BigReal& x) { return log1p(x) / (1 + x); }, "smooth");
  }
  if (family == "li4-minus") {
    return unit([](const BigReal& x) { return wp::polylog(4, -x) / (1 + x); }, "smooth");
  }
  if (family == "valean") {
    return unit([](const BigReal& x) { return square(log1p(x)) * wp::polylog(2, -x) / x; },
                "removable at 0");
  }
  if (family == "log-li3") {
    return unit([](const BigReal& x) { return log1p(x) * wp::polylog(3, -x) / (1 + x); }, "smooth");
  }
  if (family == "li2-squared") {
    return unit([](const BigReal& x) { return square(wp::polylog(2, -x)) / (1 + x); }, "smooth");
  }
  if (family == "loggamma") {
    const Rational z = param(params, "z", family);
    if (z <= 0) throw DomainError("integrate_param", "loggamma", "parameter 'z' must be > 0");
    return {[](const BigReal& x) { return wp::loggamma(x); }, BigReal(0), to_real(z), "log at 0"};
  }
  throw DomainError("integrate_param", std::string(family), "unknown integrand family");
}

std::vector<std::string> integrand_families() {
  return {"atanh-log",      "harmonic-rep",    "li2-squared",    "li4-minus",
          "log-1mx2",       "log-1px-over-1px", "log-li3",        "log-power-minus",
          "log-power-plus", "loggamma",        "skew-rep",       "valean"};
}

QuadratureResult integrate_param_detailed(std::string_view family, const ParamMap& params,
                                          const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return integrate_detailed(make_family_integrand(family, params), ctx);
}

BigReal integrate_param(std::string_view family, const ParamMap& params, const PrecisionContext& ctx) {
  return integrate_param_detailed(family, params, ctx).value;
}

}  // namespace harmsum
