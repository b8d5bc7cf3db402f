#include "catalog.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "harmsum/constants.hpp"
#include "harmsum/elementary.hpp"
#include "harmsum/error.hpp"
#include "harmsum/eulersum.hpp"
#include "harmsum/expression.hpp"
#include "harmsum/quadrature.hpp"
#include "harmsum/sequences.hpp"
#include "harmsum/series.hpp"
#include "harmsum/specfun.hpp"

namespace harmsum::internal {

namespace {

using Closed = std::function<BigReal(const ParamMap&)>;
using Values = std::vector<Rational>;

Rational r(long num, long den = 1) { return make_rational(num, den); }

long ival(const ParamMap& p, const std::string& name) { return p.at(name).get_num().get_si(); }
BigReal rval(const ParamMap& p, const std::string& name) { return to_real(p.at(name)); }

ParamSpec integer(std::string name, long min, long dflt) {
  ParamSpec s;
  s.name = std::move(name);
  s.integer = true;
  s.min = min;
  s.default_value = dflt;
  return s;
}

ParamSpec rational(std::string name, Rational min, bool min_inclusive, Rational dflt) {
  ParamSpec s;
  s.name = std::move(name);
  s.min = std::move(min);
  s.min_inclusive = min_inclusive;
  s.default_value = std::move(dflt);
  return s;
}

ParamSpec open_interval(std::string name, Rational lo, Rational hi, Rational dflt) {
  ParamSpec s = rational(std::move(name), std::move(lo), false, std::move(dflt));
  s.max = std::move(hi);
  s.max_inclusive = false;
  return s;
}

ParamSpec choice(std::string name, Values choices, Rational dflt) {
  ParamSpec s = rational(std::move(name), choices.front(), true, std::move(dflt));
  s.choices = std::move(choices);
  return s;
}

std::vector<ParamMap> sweep1(const std::string& name, const Values& values) {
  std::vector<ParamMap> out;
  for (const auto& v : values) out.push_back({{name, v}});
  return out;
}

std::vector<ParamMap> sweep2(const std::string& a, const Values& av, const std::string& b,
                             const Values& bv) {
  std::vector<ParamMap> out;
  for (const auto& x : av) {
    for (const auto& y : bv) out.push_back({{a, x}, {b, y}});
  }
  return out;
}

SideValue from_sum(const SumResult& s) { return {s.value, s.est_error, to_string(s.method)}; }

Plan closed(std::string description, Closed f) {
  return {"closed-form", std::move(description), [f = std::move(f)](const ParamMap& p, const PrecisionContext& ctx) {
            Estimate e = dual_evaluate(ctx, [&](const PrecisionContext&) { return f(p); });
            return SideValue{std::move(e.value), std::move(e.est_error), "closed-form"};
          }};
}

Plan expression(const std::string& text) {
  auto e = std::make_shared<const Expression>(expr_normalize(parse_expression(text)));
  return {"expression", to_string(*e), [e](const ParamMap&, const PrecisionContext& ctx) {
            Estimate v = dual_evaluate(ctx, [&](const PrecisionContext& c) { return expr_eval(*e, c); });
            return SideValue{std::move(v.value), std::move(v.est_error), "expression"};
          }};
}

/// RHS built from a parameter-dependent Expression.
Plan expression_of(std::string description, std::function<Expression(const ParamMap&)> make) {
  return {"expression", std::move(description),
          [make = std::move(make)](const ParamMap& p, const PrecisionContext& ctx) {
            const Expression e = make(p);
            Estimate v = dual_evaluate(ctx, [&](const PrecisionContext& c) { return expr_eval(e, c); });
            return SideValue{std::move(v.value), std::move(v.est_error), "expression"};
          }};
}

Plan exact(std::string description, std::function<Rational(const ParamMap&)> f) {
  return {"exact", std::move(description), [f = std::move(f)](const ParamMap& p, const PrecisionContext& ctx) {
            auto g = ctx.activate();
            BigReal v = to_real(f(p));
            BigReal est = rounding_floor(v, ctx);
            return SideValue{std::move(v), std::move(est), "exact"};
          }};
}

Plan quadrature(std::string family, std::function<ParamMap(const ParamMap&)> map_params = {}) {
  std::string description = "tanh-sinh on the '" + family + "' integrand";
  return {"tanh-sinh", std::move(description),
          [family = std::move(family), map_params = std::move(map_params)](const ParamMap& p,
                                                                           const PrecisionContext& ctx) {
            const QuadratureResult q = integrate_param_detailed(family, map_params ? map_params(p) : p, ctx);
            return SideValue{q.value, q.est_error, "tanh-sinh"};
          }};
}

ParamMap fixed(std::string name, Rational v) { return {{std::move(name), std::move(v)}}; }

Plan quadrature_at(std::string family, std::string name, Rational v) {
  ParamMap m = fixed(std::move(name), std::move(v));
  return quadrature(std::move(family), [m](const ParamMap&) { return m; });
}

using SpecMaker = std::function<SeriesSpec(const ParamMap&)>;

/// Tail-fit summation with a basis N^−e·log^l N, e = first.. chosen from the
/// target: about three digits per exponent for pure powers, four with logs.
SumResult tail_fit(const SeriesSpec& s, int first_exp, int log_power, const PrecisionContext& ctx,
                   long node_multiple = 1) {
  const int per = log_power > 0 ? 4 : 3;
  const int last = first_exp + (ctx.target_digits() + per - 1) / per;
  TailOptions o;
  o.node_multiple = node_multiple;
  return sum_with_asymptotic_tail(s, 200, power_log_model(first_exp, last, log_power), ctx, o);
}

Plan tail_plan(std::string description, SpecMaker make, int first_exp, int log_power, long node_multiple = 1) {
  return {"tail-fit", std::move(description),
          [=](const ParamMap& p, const PrecisionContext& ctx) {
            return from_sum(tail_fit(make(p), first_exp, log_power, ctx, node_multiple));
          }};
}

Plan cvz_plan(std::string description, SpecMaker make) {
  return {"cvz", std::move(description), [make = std::move(make)](const ParamMap& p, const PrecisionContext& ctx) {
            return from_sum(sum_alternating_accel(make(p), 0, ctx));
          }};
}

Plan direct_plan(std::string description, SpecMaker make) {
  return {"direct", std::move(description), [make = std::move(make)](const ParamMap& p, const PrecisionContext& ctx) {
            return from_sum(sum_direct(make(p), ctx));
          }};
}

/// Σ a_n b_n rewritten by parts with a_n = sign^n (sign = ±1) and summed by
/// tail fit; the boundary term A_n·b_(n+1) tends to zero for every caller.
Plan abel_plan(std::string description, SpecMaker make_b, int sign) {
  return {"abel+tail-fit", std::move(description),
          [make_b = std::move(make_b), sign](const ParamMap& p, const PrecisionContext& ctx) {
            const SeriesSpec b = make_b(p);
            SeriesSpec a;
            a.name = sign < 0 ? "(-1)^n" : "1";
            a.start_index = b.start_index;
            a.terms = [sign, start = b.start_index]() -> TermGenerator {
              return [sign, s = (sign < 0 && start % 2 == 1) ? -1L : 1L]() mutable {
                const long v = s;
                if (sign < 0) s = -s;
                return BigReal(v);
              };
            };
            const AbelSeries t = abel_transform(a, b, AbelLimit::zero(), SignPattern::General,
                                                DecayClass::power_log(2, 0));
            SideValue v = from_sum(tail_fit(t.series, 1, 0, ctx, sign < 0 ? 2 : 1));
            v.value += t.limit.value(ctx);
            v.method = "abel+" + v.method;
            return v;
          }};
}

SeriesSpec make_series(std::string name, std::function<TermGenerator()> terms, SignPattern sign,
                       DecayClass decay, long start = 1) {
  SeriesSpec s;
  s.name = std::move(name);
  s.terms = std::move(terms);
  s.sign_pattern = sign;
  s.decay = decay;
  s.start_index = start;
  return s;
}

// --- summands --------------------------------------------------------------

/// b_n = H_n − (1/k)Σ_{j<k} log(n + x − 1 + j) − γ + c/n, n ≥ 1.
TermGenerator hardy_b(long k, const Rational& x, const Rational& c) {
  return [n = 0L, k, h = BigReal(0), shift = to_real(x - 1), gamma = euler_gamma(), cr = to_real(c)]() mutable {
    ++n;
    h += BigReal(1) / n;
    BigReal logs(0);
    for (long j = 0; j < k; ++j) logs += log(shift + (n + j));
    return h - logs / k - gamma + cr / n;
  };
}

SeriesSpec hardy_series(long k, const Rational& x, const Rational& c, bool alternating) {
  const std::string name = std::string(alternating ? "hardy-alt" : "hardy-pos") + "(k=" + std::to_string(k) +
                           ", x=" + to_string(x) + ")";
  auto make = [k, x, c, alternating]() -> TermGenerator {
    return [b = hardy_b(k, x, c), alternating, odd = false]() mutable {
      odd = !odd;
      BigReal v = b();
      return alternating && odd ? -v : v;
    };
  };
  return make_series(name, make, alternating ? SignPattern::Alternating : SignPattern::EventuallyPositive,
                     alternating ? DecayClass::power_log(1, 0) : DecayClass::power_log(2, 0));
}

SeriesSpec hardy_b_series(long k, const Rational& x, const Rational& c) {
  return make_series("hardy-b", [k, x, c] { return hardy_b(k, x, c); }, SignPattern::General,
                     DecayClass::power_log(1, 0));
}

/// n(H_n − log(n + x − 1) − γ + (x − 3/2)/n), n ≥ 1.
TermGenerator hardy_n_b(const Rational& x) {
  return [n = 0L, b = hardy_b(1, x, x - r(3, 2))]() mutable {
    ++n;
    return b() * n;
  };
}

SeriesSpec hardy_n_series(const Rational& x) {
  auto make = [x]() -> TermGenerator {
    return [b = hardy_n_b(x), odd = false]() mutable {
      odd = !odd;
      BigReal v = b();
      return odd ? -v : v;
    };
  };
  return make_series("hardy-n(x=" + to_string(x) + ")", make, SignPattern::Alternating, DecayClass::power_log(1, 0));
}

SeriesSpec hardy_n_b_series(const Rational& x) {
  return make_series("hardy-n-b", [x] { return hardy_n_b(x); }, SignPattern::General, DecayClass::power_log(1, 0));
}

/// H_2n (ζ(2) − H_n^(2) − 1/n).
SeriesSpec s1_series() {
  auto make = []() -> TermGenerator {
    return [n = 0L, h2n = BigReal(0), h2 = BigReal(0), z2 = wp::zeta_int(2)]() mutable {
      ++n;
      h2n += BigReal(1) / (2 * n - 1) + BigReal(1) / (2 * n);
      h2 += BigReal(1) / (BigReal(n) * n);
      return h2n * (z2 - h2 - BigReal(1) / n);
    };
  };
  return make_series("S1", make, SignPattern::EventuallyPositive, DecayClass::power_log(2, 1));
}

/// (H̄_n / n)(ζ(3) − H_n^(3)).
SeriesSpec s2_series() {
  auto make = []() -> TermGenerator {
    return [n = 0L, hb = BigReal(0), h3 = BigReal(0), z3 = wp::zeta_int(3)]() mutable {
      ++n;
      hb += (n % 2 ? BigReal(1) : BigReal(-1)) / n;
      const BigReal nn(n);
      h3 += BigReal(1) / (nn * nn * nn);
      return hb / n * (z3 - h3);
    };
  };
  return make_series("S2", make, SignPattern::EventuallyPositive, DecayClass::power_log(3, 0));
}

enum class Weight { Harmonic, Skew };

/// w_n · exp_tail(y, n), n ≥ 1, with w = H_n or H̄_n.
SeriesSpec exp_tail_series(Weight weight, const Rational& y) {
  auto make = [weight, y]() -> TermGenerator {
    return [weight, n = 0L, w = BigReal(0), yr = to_real(y)]() mutable {
      ++n;
      if (weight == Weight::Harmonic) {
        w += BigReal(1) / n;
      } else {
        w += (n % 2 ? BigReal(1) : BigReal(-1)) / n;
      }
      return w * wp::exp_tail(yr, n);
    };
  };
  return make_series("exp-tail(y=" + to_string(y) + ")", make, SignPattern::General, DecayClass::factorial());
}

/// Σ_{n≥1} s_n x^n/n^e with the running tail s_n = ζ(p) − H_n^(p).
SeriesSpec gf_tail_series(int p, int e, const Rational& x) {
  auto make = [p, e, x]() -> TermGenerator {
    return [p, e, n = 0L, tail = wp::zeta_int(p), xr = to_real(x), xn = BigReal(1)]() mutable {
      ++n;
      tail -= pow(BigReal(n), -p);
      xn *= xr;
      return e == 0 ? tail * xn : tail * xn / n;
    };
  };
  const double ratio = std::max(std::abs(x.get_d()), 1e-3);
  return make_series("gf-tail(p=" + std::to_string(p) + ", x=" + to_string(x) + ")", make, SignPattern::General,
                     DecayClass::geometric(ratio));
}

SideValue short_circuit_zero(const PrecisionContext& ctx) {
  auto g = ctx.activate();
  return {BigReal(0), BigReal(0), "short-circuit"};
}

// --- records ---------------------------------------------------------------

IdentityRecord record(std::string id, std::string statement, std::vector<ParamSpec> params,
                      std::vector<Plan> lhs, std::vector<Plan> rhs, std::vector<ParamMap> sweep = {}) {
  IdentityRecord rec;
  rec.id = std::move(id);
  rec.statement = std::move(statement);
  rec.params = std::move(params);
  rec.lhs = std::move(lhs);
  rec.rhs = std::move(rhs);
  rec.sweep = std::move(sweep);
  for (const auto& p : rec.lhs) {
    if (p.name == "tanh-sinh") rec.integral = true;
  }
  return rec;
}

void euler_sums(std::vector<IdentityRecord>& out) {
  out.push_back(record(
      "EULER_CLASSICAL", "Σ_{n≥1} H_n/n^k = (1 + k/2)ζ(k+1) − ½ Σ_{j=1}^{k−2} ζ(k−j)ζ(j+1)",
      {integer("k", 2, 2)},
      {tail_plan("Σ H_n/n^k",
                 [](const ParamMap& p) {
                   const long k = ival(p, "k");
                   auto make = [k]() -> TermGenerator {
                     return [k, n = 0L, h = BigReal(0)]() mutable {
                       ++n;
                       h += BigReal(1) / n;
                       return h * pow(BigReal(n), -k);
                     };
                   };
                   return make_series("H_n/n^" + std::to_string(k), make, SignPattern::EventuallyPositive,
                                      DecayClass::power_log(static_cast<double>(k), 1));
                 },
                 1, 1)},
      {expression_of("euler_classical(k)", [](const ParamMap& p) { return euler_classical(ival(p, "k")); })},
      sweep1("k", {r(2), r(3), r(4), r(5), r(6)})));
  std::vector<ParamMap> alt_sweep;
  for (int p = 1; p <= 8; ++p) {
    for (int q = 2; p + q <= 9; ++q) {
      if ((p + q) % 2 == 1) alt_sweep.push_back({{"p", r(p)}, {"q", r(q)}});
    }
  }
  out.push_back(record(
      "EULER_ALT", "Σ_{n≥1} (−1)^(n−1) H_n^(p)/n^q = closed form in ζ, η (p + q odd)",
      {integer("p", 1, 1), integer("q", 2, 2)},
      {cvz_plan("Σ (−1)^(n−1) H_n^(p)/n^q",
                [](const ParamMap& m) {
                  const long p = ival(m, "p");
                  const long q = ival(m, "q");
                  auto make = [p, q]() -> TermGenerator {
                    return [p, q, n = 0L, h = BigReal(0)]() mutable {
                      ++n;
                      const BigReal nn(n);
                      h += pow(nn, -p);
                      const BigReal t = h * pow(nn, -q);
                      return n % 2 ? t : -t;
                    };
                  };
                  return make_series("alt-euler", make, SignPattern::Alternating,
                                     DecayClass::power_log(static_cast<double>(q), 0));
                })},
      {expression_of("euler_alternating(p, q)",
                     [](const ParamMap& m) { return euler_alternating(static_cast<int>(ival(m, "p")),
                                                                      static_cast<int>(ival(m, "q"))); })},
      alt_sweep));
}

void integral_lemmas(std::vector<IdentityRecord>& out) {
  const Values rep_n{r(1), r(2), r(5), r(10), r(20)};
  out.push_back(record("HARMONIC_REP", "∫₀¹ (1 − x^n)/(1 − x) dx = H_n", {integer("n", 1, 5)},
                       {quadrature("harmonic-rep")},
                       {exact("H_n", [](const ParamMap& p) { return harmonic(ival(p, "n")); })},
                       sweep1("n", rep_n)));
  out.push_back(record("SKEW_REP", "∫₀¹ (1 − (−x)^n)/(1 + x) dx = H̄_n", {integer("n", 1, 5)},
                       {quadrature("skew-rep")},
                       {exact("H̄_n", [](const ParamMap& p) { return skew_harmonic(ival(p, "n")); })},
                       sweep1("n", rep_n)));
  out.push_back(record("LEMMA_ATANH", "∫₀¹ atanh(x) log(1 − x²)/x dx = −7/8 ζ(3)", {},
                       {quadrature("atanh-log")}, {expression("-7/8*zeta(3)")}));
  out.push_back(record("LOGPOW_PLUS",
                       "∫₀¹ log^q(1 + x)/x dx = log^(q+1)2/(q+1) + q!ζ(q+1) − q! Σ_k log^(q−k)2 Li_(k+1)(½)/(q−k)!",
                       {integer("q", 1, 2)}, {quadrature("log-power-plus")},
                       {expression_of("log_power_integral_closed(q)", [](const ParamMap& p) {
                         return log_power_integral_closed(static_cast<int>(ival(p, "q")));
                       })},
                       sweep1("q", {r(1), r(2), r(3), r(4)})));
  out.push_back(record("LOG2_1MX", "∫₀¹ log²(1 − x)/x dx = 2ζ(3)", {},
                       {quadrature_at("log-power-minus", "q", r(2))}, {expression("2*zeta(3)")}));
  out.push_back(record("LEMMA_LOG", "∫₀¹ log(1 − x²)/x dx = −π²/12", {}, {quadrature("log-1mx2")},
                       {expression("-1/12*pi2")}));
  out.push_back(record("LOG_1PX_OVER_1PX", "∫₀¹ log(1 + x)/(1 + x) dx = ½ log²2", {},
                       {quadrature("log-1px-over-1px")}, {expression("1/2*log2^2")}));
  out.push_back(record("LEMMA_LI4", "∫₀¹ Li₄(−x)/(1 + x) dx = 17/16 ζ(5) − 3/8 ζ(2)ζ(3) − 7/8 log2 ζ(4)", {},
                       {quadrature("li4-minus")},
                       {expression("17/16*zeta(5) - 3/8*zeta(2)*zeta(3) - 7/8*log2*zeta(4)")}));
  out.push_back(record(
      "VALEAN_INT", "∫₀¹ log²(1 + x) Li₂(−x)/x dx = closed form in log2, ζ, Li₄(½), Li₅(½)", {},
      {quadrature("valean")},
      {expression("2/15*log2^5 - 2/3*log2^3*zeta(2) + 7/4*log2^2*zeta(3) - 1/8*zeta(2)*zeta(3) - "
                  "125/32*zeta(5) + 4*log2*Li(4,1/2) + 4*Li(5,1/2)")}));
  out.push_back(record(
      "LEMMA_LOG_LI3", "∫₀¹ log(1 + x) Li₃(−x)/(1 + x) dx = closed form in log2, ζ, Li₄(½), Li₅(½)", {},
      {quadrature("log-li3")},
      {expression("1/16*zeta(2)*zeta(3) + 125/64*zeta(5) - 1/15*log2^5 + 1/3*log2^3*zeta(2) - "
                  "5/4*log2^2*zeta(3) - 2*log2*Li(4,1/2) - 2*Li(5,1/2)")}));
  out.push_back(record(
      "LEMMA_LI2SQ", "∫₀¹ Li₂(−x)²/(1 + x) dx = closed form in log2, ζ, Li₄(½), Li₅(½)", {},
      {quadrature("li2-squared")},
      {expression("4/15*log2^5 - 4/3*log2^3*zeta(2) + 7/2*log2^2*zeta(3) + 5/8*log2*zeta(4) - "
                  "125/16*zeta(5) - 1/4*zeta(2)*zeta(3) + 8*log2*Li(4,1/2) + 8*Li(5,1/2)")}));
}

void tail_series(std::vector<IdentityRecord>& out) {
  out.push_back(record(
      "THM_S1", "Σ_{n≥1} H_2n (ζ(2) − H_n^(2) − 1/n) = log 2 − 7/8 ζ(3) − 1", {},
      {tail_plan("Σ H_2n (ζ(2) − H_n^(2) − 1/n)", [](const ParamMap&) { return s1_series(); }, 1, 1),
       direct_plan("Σ H_2n (ζ(2) − H_n^(2) − 1/n)", [](const ParamMap&) { return s1_series(); })},
      {expression("log2 - 7/8*zeta(3) - 1")}));
  out.push_back(record(
      "THM_S2", "Σ_{n≥1} (H̄_n/n)(ζ(3) − H_n^(3)) = 193/64 ζ(5) − ... − 2 Li₅(½)", {},
      {tail_plan("Σ (H̄_n/n)(ζ(3) − H_n^(3))", [](const ParamMap&) { return s2_series(); }, 2, 0, 2),
       direct_plan("Σ (H̄_n/n)(ζ(3) − H_n^(3))", [](const ParamMap&) { return s2_series(); })},
      {expression("193/64*zeta(5) - 5/16*zeta(2)*zeta(3) - 1/15*log2^5 + 1/3*log2^3*zeta(2) - "
                  "15/16*log2*zeta(4) - 2*log2*Li(4,1/2) - 2*Li(5,1/2)")}));
  out.push_back(record(
      "TAIL2_SUM", "Σ_{n≥1} (ζ(2) − H_n^(2) − 1/(n+k)) = H_(k+1) + k/(k+1) − ζ(2)", {integer("k", 0, 0)},
      {tail_plan("Σ (ζ(2) − H_n^(2) − 1/(n+k))",
                 [](const ParamMap& p) {
                   const long k = ival(p, "k");
                   auto make = [k]() -> TermGenerator {
                     return [k, n = 0L, tail = wp::zeta_int(2)]() mutable {
                       ++n;
                       tail -= BigReal(1) / (BigReal(n) * n);
                       return tail - BigReal(1) / (n + k);
                     };
                   };
                   return make_series("tail2-sum", make, SignPattern::General, DecayClass::power_log(2, 0));
                 },
                 1, 0)},
      {closed("H_(k+1) + k/(k+1) − ζ(2)",
              [](const ParamMap& p) {
                const long k = ival(p, "k");
                return to_real(harmonic(k + 1) + r(k, k + 1)) - wp::zeta_int(2);
              })},
      sweep1("k", {r(0), r(1), r(2)})));

  const Values gf_x{r(-9, 10), r(-1, 2), r(0), r(1, 2), r(9, 10)};
  out.push_back(record(
      "GF_TAIL2", "Σ_{n≥1} (ζ(2) − H_n^(2)) x^n = (x ζ(2) − Li₂(x))/(1 − x)",
      {open_interval("x", r(-1), r(1), r(1, 2))},
      {direct_plan("Σ (ζ(2) − H_n^(2)) x^n", [](const ParamMap& p) { return gf_tail_series(2, 0, p.at("x")); })},
      {closed("(x ζ(2) − Li₂(x))/(1 − x)", [](const ParamMap& p) { return wp::gf_tail_zeta2(rval(p, "x")); })},
      sweep1("x", gf_x)));
  out.push_back(record(
      "GF_TAIL3",
      "Σ_{n≥1} (ζ(3) − H_n^(3)) x^n/n = log(1 − x)(Li₃(x) − ζ(3)) − Li₄(x) + ½ Li₂(x)²",
      {open_interval("x", r(-1), r(1), r(1, 2))},
      {direct_plan("Σ (ζ(3) − H_n^(3)) x^n/n", [](const ParamMap& p) { return gf_tail_series(3, 1, p.at("x")); })},
      {closed("log(1 − x)(Li₃(x) − ζ(3)) − Li₄(x) + ½ Li₂(x)²",
              [](const ParamMap& p) { return wp::gf_tail_zeta3_over_n(rval(p, "x")); })},
      sweep1("x", gf_x)));
  out.push_back(record(
      "DILOG_REFLECT", "Li₂(x) + Li₂(1 − x) = ζ(2) − log x log(1 − x)", {open_interval("x", r(0), r(1), r(1, 2))},
      {direct_plan("Σ (x^n + (1 − x)^n)/n²",
                   [](const ParamMap& p) {
                     const Rational x = p.at("x");
                     auto make = [x]() -> TermGenerator {
                       return [n = 0L, a = to_real(x), b = to_real(1 - x), an = BigReal(1),
                               bn = BigReal(1)]() mutable {
                         ++n;
                         an *= a;
                         bn *= b;
                         return (an + bn) / (BigReal(n) * n);
                       };
                     };
                     const double ratio = std::max(x.get_d(), 1 - x.get_d());
                     return make_series("dilog-pair", make, SignPattern::EventuallyPositive,
                                        DecayClass::geometric(ratio));
                   })},
      {closed("ζ(2) − log x log(1 − x)",
              [](const ParamMap& p) {
                const BigReal x = rval(p, "x");
                return wp::zeta_int(2) - log(x) * log1p(-x);
              })},
      sweep1("x", {r(1, 10), r(1, 4), r(1, 2), r(2, 3), r(9, 10)})));
}

void exponential_tails(std::vector<IdentityRecord>& out) {
  // Bounded so that Ein(2y) stays within its series range.
  ParamSpec y = rational("y", r(-4), true, r(1));
  y.max = r(4);
  out.push_back(record(
      "EXP_TAIL_H", "Σ_{n≥1} H_n (e^y − Σ_{j≤n} y^j/j!) = e^y (y Ein(y) − y + 1) − 1", {y},
      {{"direct", "Σ H_n·exp_tail(y, n)",
        [](const ParamMap& p, const PrecisionContext& ctx) {
          if (p.at("y") == 0) return short_circuit_zero(ctx);
          return from_sum(sum_direct(exp_tail_series(Weight::Harmonic, p.at("y")), ctx));
        }}},
      {closed("e^y (y Ein(y) − y + 1) − 1",
              [](const ParamMap& p) {
                const BigReal y = rval(p, "y");
                return exp(y) * (y * wp::ein(y) - y + 1) - 1;
              })},
      sweep1("y", {r(-1), r(1), r(2)})));
  out.push_back(record(
      "THM_EXP_TAIL_SKEW", "Σ_{n≥1} H̄_n (e^y − Σ_{j≤n} y^j/j!) = y e^y [Ein(2y) − Ein(y)] − cosh y + 1", {y},
      {{"direct", "Σ H̄_n·exp_tail(y, n)",
        [](const ParamMap& p, const PrecisionContext& ctx) {
          if (p.at("y") == 0) return short_circuit_zero(ctx);
          return from_sum(sum_direct(exp_tail_series(Weight::Skew, p.at("y")), ctx));
        }}},
      {closed("y e^y [Ein(2y) − Ein(y)] − cosh y + 1",
              [](const ParamMap& p) {
                const BigReal y = rval(p, "y");
                return y * exp(y) * (wp::ein(y * 2) - wp::ein(y)) - cosh(y) + 1;
              })},
      sweep1("y", {r(-2), r(-1, 2), r(0), r(1), r(3)})));

  out.push_back(record(
      "COR_FRAC_NE", "Σ_{n≥1} H̄_n {n! e}/n! = e [Ein(2) − γ] − cosh 1 − δ + 1", {},
      {direct_plan("Σ H̄_n {n! e}/n!",
                   [](const ParamMap&) {
                     auto make = []() -> TermGenerator {
                       return [n = 0L, w = BigReal(0), fact = BigReal(1)]() mutable {
                         ++n;
                         w += (n % 2 ? BigReal(1) : BigReal(-1)) / n;
                         fact *= n;
                         const PrecisionContext here(working_precision_digits() - 10, 10);
                         return w * frac_ne(n, here) / fact;
                       };
                     };
                     return make_series("frac-ne", make, SignPattern::EventuallyPositive, DecayClass::factorial());
                   })},
      {closed("e [Ein(2) − γ] − cosh 1 − δ + 1", [](const ParamMap&) {
        const BigReal e = exp(BigReal(1));
        return e * (wp::ein(BigReal(2)) - euler_gamma()) - cosh(BigReal(1)) -
               constant(ConstantName::EulerGompertz) + 1;
      })}));
}

void hardy_families(std::vector<IdentityRecord>& out) {
  const Values ks{r(1), r(2), r(3)};
  const Values xs{r(1, 2), r(1), r(2), r(7, 2)};
  const ParamSpec k = integer("k", 1, 1);
  const ParamSpec x = rational("x", r(0), false, r(1));

  auto alt = [](long kk, Rational xx) {
    return [kk, xx](const ParamMap& p) {
      const long k = kk ? kk : ival(p, "k");
      const Rational x = xx != 0 ? xx : p.at("x");
      return hardy_series(k, x, r(0), true);
    };
  };
  auto alt_b = [](long kk, Rational xx) {
    return [kk, xx](const ParamMap& p) {
      const long k = kk ? kk : ival(p, "k");
      const Rational x = xx != 0 ? xx : p.at("x");
      return hardy_b_series(k, x, r(0));
    };
  };
  const std::string alt_desc = "Σ (−1)^n (H_n − (1/k)Σ_{j<k} log(n+x−1+j) − γ)";

  out.push_back(record("HARDY_BASE_ALT", "Σ_{n≥1} (−1)^n (H_n − log n − γ) = (γ − log π)/2", {},
                       {cvz_plan(alt_desc, alt(1, r(1))), abel_plan(alt_desc, alt_b(1, r(1)), -1)},
                       {expression("1/2*gamma - 1/2*logpi")}));
  out.push_back(record(
      "THM_HARDY_ALT",
      "Σ_{n≥1} (−1)^n (H_n − (1/k) log((n+x−1)_k) − γ) = γ/2 + (log Γ((x+k)/2) − log Γ(x/2))/k", {k, x},
      {cvz_plan(alt_desc, alt(0, r(0))), abel_plan(alt_desc, alt_b(0, r(0)), -1)},
      {closed("γ/2 + (log Γ((x+k)/2) − log Γ(x/2))/k",
              [](const ParamMap& p) {
                const long k = ival(p, "k");
                const BigReal x = rval(p, "x");
                return euler_gamma() / 2 + (wp::loggamma((x + k) / 2) - wp::loggamma(x / 2)) / k;
              })},
      sweep2("k", ks, "x", xs)));
  out.push_back(record(
      "COR_HARDY_ALT_I", "Σ_{n≥1} (−1)^n (H_n − (1/k) log((n)_k) − γ) = γ/2 − log π/(2k) + log Γ((k+1)/2)/k", {k},
      {cvz_plan(alt_desc, alt(0, r(1)))},
      {closed("γ/2 − log π/(2k) + log Γ((k+1)/2)/k",
              [](const ParamMap& p) {
                const long k = ival(p, "k");
                return euler_gamma() / 2 - log(pi()) / (2 * k) + wp::loggamma(BigReal(k + 1) / 2) / k;
              })},
      sweep1("k", {r(1), r(2), r(3), r(4)})));
  out.push_back(record(
      "COR_HARDY_ALT_II", "Σ_{n≥1} (−1)^n (H_n − log(n+x−1) − γ) = γ/2 + log Γ((x+1)/2) − log Γ(x/2)", {x},
      {cvz_plan(alt_desc, alt(1, r(0)))},
      {closed("γ/2 + log Γ((x+1)/2) − log Γ(x/2)",
              [](const ParamMap& p) {
                const BigReal x = rval(p, "x");
                return euler_gamma() / 2 + wp::loggamma((x + 1) / 2) - wp::loggamma(x / 2);
              })},
      sweep1("x", xs)));

  // Positive family: c = x − 2 + k/2 makes b_n = O(1/n²).
  auto pos = [](long kk, Rational xx) {
    return [kk, xx](const ParamMap& p) {
      const long k = kk ? kk : ival(p, "k");
      const Rational x = xx != 0 ? xx : p.at("x");
      return hardy_series(k, x, x - 2 + r(k, 2), false);
    };
  };
  auto pos_b = [](long kk, Rational xx) {
    return [kk, xx](const ParamMap& p) {
      const long k = kk ? kk : ival(p, "k");
      const Rational x = xx != 0 ? xx : p.at("x");
      return hardy_b_series(k, x, x - 2 + r(k, 2));
    };
  };
  const std::string pos_desc = "Σ (H_n − (1/k)Σ_{j<k} log(n+x−1+j) − γ + (x − 2 + k/2)/n)";

  out.push_back(record("HARDY_BASE_POS", "Σ_{n≥1} (H_n − log n − γ − 1/(2n)) = (γ + 1 − log 2π)/2", {},
                       {tail_plan(pos_desc, pos(1, r(1)), 1, 0), abel_plan(pos_desc, pos_b(1, r(1)), 1)},
                       {expression("1/2*gamma + 1/2 - 1/2*log2 - 1/2*logpi")}));
  out.push_back(record(
      "THM_HARDY_POS",
      "Σ_{n≥1} (H_n − (1/k) log((n+x−1)_k) − γ + (x−2+k/2)/n) = γ(x + k/2 − 1) + (1 − log 2π)/2 + (log G(x+k) − log G(x))/k",
      {k, x}, {tail_plan(pos_desc, pos(0, r(0)), 1, 0), abel_plan(pos_desc, pos_b(0, r(0)), 1)},
      {closed("γ(x + k/2 − 1) + (1 − log 2π)/2 + (log G(x+k) − log G(x))/k",
              [](const ParamMap& p) {
                const long k = ival(p, "k");
                const BigReal x = rval(p, "x");
                const BigReal half_k = BigReal(k) / 2;
                return euler_gamma() * (x + half_k - 1) + (1 - log(pi() * 2)) / 2 +
                       (wp::log_barnes_g(x + k) - wp::log_barnes_g(x)) / k;
              })},
      sweep2("k", ks, "x", xs)));
  out.push_back(record(
      "COR_HARDY_POS_I", "Σ_{n≥1} (H_n − (1/k) log((n)_k) − γ + (k−2)/(2n)) = (γk + 1 − log 2π)/2 + log G(k+1)/k",
      {k}, {tail_plan(pos_desc, pos(0, r(1)), 1, 0)},
      {closed("(γk + 1 − log 2π)/2 + log G(k+1)/k",
              [](const ParamMap& p) {
                const long k = ival(p, "k");
                return (euler_gamma() * k + 1 - log(pi() * 2)) / 2 + wp::log_barnes_g(BigReal(k + 1)) / k;
              })},
      sweep1("k", {r(1), r(2), r(3), r(4)})));
  out.push_back(record(
      "COR_HARDY_POS_II", "Σ_{n≥1} (H_n − log(n+x−1) − γ + (x − 3/2)/n) = γx + log Γ(x) + (1 − γ − log 2π)/2", {x},
      {tail_plan(pos_desc, pos(1, r(0)), 1, 0)},
      {closed("γx + log Γ(x) + (1 − γ − log 2π)/2",
              [](const ParamMap& p) {
                const BigReal x = rval(p, "x");
                return euler_gamma() * x + wp::loggamma(x) + (1 - euler_gamma() - log(pi() * 2)) / 2;
              })},
      sweep1("x", {r(1, 2), r(1), r(2)})));

  // n-weighted alternating family.
  auto nser = [](Rational xx) {
    return [xx](const ParamMap& p) { return hardy_n_series(xx != 0 ? xx : p.at("x")); };
  };
  auto nser_b = [](Rational xx) {
    return [xx](const ParamMap& p) { return hardy_n_b_series(xx != 0 ? xx : p.at("x")); };
  };
  const std::string n_desc = "Σ (−1)^n n (H_n − log(n+x−1) − γ + (x − 3/2)/n)";
  auto lg = [](const BigReal& v) { return wp::loggamma(v); };
  auto lgb = [](const BigReal& v) { return wp::log_barnes_g(v); };

  out.push_back(record("HARDY_N_BASE", "Σ_{n≥1} (−1)^n n (H_n − log n − γ − 1/(2n)) = (γ+1)/4 + 7/12 log 2 − 3 log A",
                       {}, {cvz_plan(n_desc, nser(r(1))), abel_plan(n_desc, nser_b(r(1)), -1)},
                       {expression("1/4*gamma + 1/4 + 7/12*log2 - 3*logA")}));
  Plan n_main = closed("γ/4 − (x − log 2 − 1)/2 − 2(log G((x+1)/2) − log G(x/2)) + log Γ(x/2)",
                       [lg, lgb](const ParamMap& p) {
                         const BigReal x = rval(p, "x");
                         return euler_gamma() / 4 - (x - log_two() - 1) / 2 -
                                2 * (lgb((x + 1) / 2) - lgb(x / 2)) + lg(x / 2);
                       });
  Plan n_alt = closed("(γ+1)/4 − log π/2 − (x−1)(log Γ((x+1)/2) − log Γ(x/2)) + 2(ψ⁽⁻²⁾((x+1)/2) − ψ⁽⁻²⁾(x/2))",
                      [lg](const ParamMap& p) {
                        const BigReal x = rval(p, "x");
                        return (euler_gamma() + 1) / 4 - log(pi()) / 2 -
                               (x - 1) * (lg((x + 1) / 2) - lg(x / 2)) +
                               2 * (wp::negapolygamma2((x + 1) / 2) - wp::negapolygamma2(x / 2));
                      });
  n_alt.name = "closed-form-psi2";
  out.push_back(record("THM_HARDY_N",
                       "Σ_{n≥1} (−1)^n n (H_n − log(n+x−1) − γ + (x − 3/2)/n) = γ/4 − (x − log 2 − 1)/2 − "
                       "2 log[G((x+1)/2)/G(x/2)] + log Γ(x/2)",
                       {x}, {cvz_plan(n_desc, nser(r(0))), abel_plan(n_desc, nser_b(r(0)), -1)}, {n_main, n_alt},
                       sweep1("x", {r(1, 2), r(2, 3), r(1), r(3, 2), r(3)})));
  out.push_back(record("COR_CATALAN", "Σ_{n≥1} (−1)^n n (H_n − log(n − 1/2) − γ − 1/n) = (γ+1)/4 − G/π − log(ϖ²/π)/4",
                       {}, {cvz_plan(n_desc, nser(r(1, 2)))},
                       {closed("(γ+1)/4 − G/π − log(ϖ²/π)/4", [](const ParamMap&) {
                         const BigReal varpi = constant(ConstantName::Lemniscate);
                         return (euler_gamma() + 1) / 4 - catalan() / pi() - log(square(varpi) / pi()) / 4;
                       })}));
  out.push_back(record(
      "COR_GIESEKING",
      "Σ_{n≥1} (−1)^n n (H_n − log(n − 1/3) − γ − 5/(6n)) = (γ+1)/4 − 5κ/(6π) − log A + 19/36 log 2 + log 3/24 + "
      "(log Γ(5/6) − log Γ(1/3))/3",
      {}, {cvz_plan(n_desc, nser(r(2, 3)))},
      {closed("(γ+1)/4 − 5κ/(6π) − log A + 19/36 log 2 + log 3/24 + (log Γ(5/6) − log Γ(1/3))/3",
              [](const ParamMap&) {
                const BigReal kappa = constant(ConstantName::Gieseking);
                return (euler_gamma() + 1) / 4 - kappa * 5 / (pi() * 6) - log_glaisher() + log_two() * 19 / 36 +
                       log(BigReal(3)) / 24 +
                       (wp::loggamma(BigReal(5) / 6) - wp::loggamma(BigReal(1) / 3)) / 3;
              })}));
}

void gamma_family(std::vector<IdentityRecord>& out) {
  out.push_back(record("NEGAPOLY_HALF", "∫₀^½ log Γ(t) dt = 3/2 log A + 5/24 log 2 + log π/4", {},
                       {quadrature_at("loggamma", "z", r(1, 2))},
                       {expression("3/2*logA + 5/24*log2 + 1/4*logpi")}));
  out.push_back(record("NEGAPOLY_ONE", "∫₀¹ log Γ(t) dt = log(2π)/2", {}, {quadrature_at("loggamma", "z", r(1))},
                       {expression("1/2*log2 + 1/2*logpi")}));
  out.push_back(record("NEGAPOLY_BARNES", "∫₀^z log Γ(t) dt = z(1 − z)/2 + (z/2) log 2π + z log Γ(z) − log G(1 + z)",
                       {rational("z", r(0), false, r(2))}, {quadrature("loggamma")},
                       {closed("z(1 − z)/2 + (z/2) log 2π + z log Γ(z) − log G(1 + z)",
                               [](const ParamMap& p) { return wp::negapolygamma2(rval(p, "z")); })},
                       sweep1("z", {r(1, 4), r(1, 2), r(1), r(2), r(3)})));
  out.push_back(record(
      "DIGAMMA_ALT_SERIES", "Σ_{n≥0} (−1)^n/(n + z) = (ψ((z+1)/2) − ψ(z/2))/2", {rational("z", r(0), false, r(1))},
      {cvz_plan("Σ (−1)^n/(n + z)",
                [](const ParamMap& p) {
                  const Rational z = p.at("z");
                  return SeriesSpec::from_term(
                      "digamma-alt",
                      [z](long n) {
                        BigReal t = 1 / (to_real(z) + n);
                        return n % 2 ? -t : t;
                      },
                      SignPattern::Alternating, DecayClass::power_log(1, 0), 0);
                })},
      {closed("(ψ((z+1)/2) − ψ(z/2))/2",
              [](const ParamMap& p) {
                const BigReal z = rval(p, "z");
                return (wp::digamma((z + 1) / 2) - wp::digamma(z / 2)) / 2;
              })},
      sweep1("z", {r(1, 3), r(1, 2), r(1), r(5, 2)})));
  out.push_back(record(
      "LOGGAMMA_SERIES", "−Σ_{n≥1} (log(1 + z/n) − z/n) = log Γ(z + 1) + γz", {rational("z", r(-1), false, r(1, 2))},
      {tail_plan("−Σ (log(1 + z/n) − z/n)",
                 [](const ParamMap& p) {
                   const Rational z = p.at("z");
                   return SeriesSpec::from_term(
                       "loggamma-product",
                       [z](long n) {
                         const BigReal w = to_real(z) / n;
                         return w - log1p(w);
                       },
                       SignPattern::EventuallyPositive, DecayClass::power_log(2, 0));
                 },
                 1, 0)},
      {closed("log Γ(z + 1) + γz",
              [](const ParamMap& p) {
                const BigReal z = rval(p, "z");
                return wp::loggamma(z + 1) + euler_gamma() * z;
              })},
      sweep1("z", {r(-1, 2), r(1, 2), r(1), r(3)})));

  const Values quarters{r(1, 4), r(3, 4)};
  auto point = [](const ParamMap& p) {
    return p.at("a") == r(1, 4) ? QuarterPoint::OneQuarter : QuarterPoint::ThreeQuarters;
  };
  out.push_back(record(
      "QUARTER_VALUES", "ψ^(2k−1)(a), a ∈ {1/4, 3/4} = 2^(4k−2)/(2k)·(π^(2k)(2^(2k) − 1)|B_2k| ± 2(2k)! β(2k))",
      {integer("k", 1, 1), choice("a", quarters, r(1, 4))},
      {{"hurwitz", "(2k−1)!·ζ(2k, a)",
        [](const ParamMap& p, const PrecisionContext& ctx) {
          const int k = static_cast<int>(ival(p, "k"));
          Estimate e = dual_evaluate(ctx, [&](const PrecisionContext&) { return wp::polygamma(2 * k - 1, rval(p, "a")); });
          return SideValue{std::move(e.value), std::move(e.est_error), "hurwitz"};
        }}},
      {closed("Bernoulli/β closed form",
              [point](const ParamMap& p) {
                return wp::quarter_values(static_cast<int>(ival(p, "k")), point(p), QuarterKind::Polygamma);
              })},
      sweep2("k", {r(1), r(2), r(3)}, "a", quarters)));
  out.push_back(record(
      "HURWITZ_ZETA_PRIME", "ζ′(−1, a) = 1/12 − log A − log G(a + 1) + a log Γ(a), against the closed forms at a ∈ {1/4, 1/2, 3/4}",
      {choice("a", {r(1, 4), r(1, 2), r(3, 4)}, r(1, 4))},
      {{"barnes", "1/12 − log A − log G(a + 1) + a log Γ(a)",
        [](const ParamMap& p, const PrecisionContext& ctx) {
          Estimate e = dual_evaluate(ctx, [&](const PrecisionContext&) {
            const BigReal a = rval(p, "a");
            return BigReal(1) / 12 - log_glaisher() - wp::log_barnes_g(a + 1) + a * wp::loggamma(a);
          });
          return SideValue{std::move(e.value), std::move(e.est_error), "barnes"};
        }}},
      {closed("quarter/half closed forms",
              [point](const ParamMap& p) {
                if (p.at("a") == r(1, 2)) return wp::zeta_prime_half(1);
                return wp::quarter_values(1, point(p), QuarterKind::ZetaPrime);
              })},
      sweep1("a", {r(1, 4), r(1, 2), r(3, 4)})));
  Plan clausen = closed("Clausen series for κ", [](const ParamMap&) { return constant(ConstantName::Gieseking); });
  clausen.name = "clausen";
  Plan agm = closed("ϖ by AGM", [](const ParamMap&) { return constant(ConstantName::Lemniscate); });
  agm.name = "agm";
  out.push_back(record("GIESEKING_TRIGAMMA", "κ = (9 − ψ′(2/3) + ψ′(4/3))/(4√3)", {}, {clausen},
                       {closed("(9 − ψ′(2/3) + ψ′(4/3))/(4√3)", [](const ParamMap&) {
                         return (9 - wp::polygamma(1, BigReal(2) / 3) + wp::polygamma(1, BigReal(4) / 3)) /
                                (4 * sqrt(BigReal(3)));
                       })}));
  out.push_back(record("LEMNISCATE_GAMMA", "ϖ = Γ(1/4)²/(2√(2π))", {}, {agm},
                       {closed("Γ(1/4)²/(2√(2π))", [](const ParamMap&) {
                         return exp(2 * wp::loggamma(BigReal(1) / 4)) / (2 * sqrt(pi() * 2));
                       })}));
}

}  // namespace

std::vector<IdentityRecord> build_catalog() {
  std::vector<IdentityRecord> out;
  euler_sums(out);
  integral_lemmas(out);
  tail_series(out);
  exponential_tails(out);
  hardy_families(out);
  gamma_family(out);
  return out;
}

}  // namespace harmsum::internal
