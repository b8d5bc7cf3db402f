// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "harmsum/constants.hpp"
#include "harmsum/elementary.hpp"
#include "harmsum/error.hpp"
#include "harmsum/eulersum.hpp"
#include "harmsum/expression.hpp"
#include "harmsum/quadrature.hpp"
#include "harmsum/registry.hpp"
#include "harmsum/sequences.hpp"
#include "harmsum/series.hpp"
#include "harmsum/specfun.hpp"

using namespace harmsum;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  int worst = kExactAgreement;

  void note(const std::string& what) {
    ok = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what;
  }
  void require_report(const VerificationReport& r, int digits) {
    worst = std::min(worst, r.matched_digits);
    if (r.status != Status::Pass || r.matched_digits < digits)
      note(r.id + (r.params.empty() ? "" : "(" + format_params(r.params) + ")") + " matched " +
           std::to_string(r.matched_digits) + ": " + r.method);
  }
};

int failures = 0;

void criterion(int n, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.note(std::string("exception: ") + e.what());
  }
  const double s = seconds_since(start);
  if (limit_s > 0 && s > limit_s) o.note("took " + std::to_string(s) + " s > " + std::to_string(limit_s) + " s");
  if (!o.ok) ++failures;
  std::printf("%s criterion %d: %s [%.1f s", o.ok ? "PASS" : "FAIL", n, title, s);
  if (o.worst != kExactAgreement) std::printf(", min matched %d", o.worst);
  std::printf("]");
  const std::string d = o.detail.str();
  if (!d.empty()) std::printf(" %s", d.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

VerifyPolicy policy(int digits, int context_digits) {
  VerifyPolicy p;
  p.digits = digits;
  p.context_digits = context_digits;
  p.threads = 1;
  return p;
}

Rational rq(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Σ (−1)^(n−1) H_n^(p)/n^q, terms built here and not taken from the catalog.
SeriesSpec alternating_euler(int p, int q) {
  SeriesSpec s;
  s.name = "alt-euler";
  s.sign_pattern = SignPattern::Alternating;
  s.decay = DecayClass::power_log(q, p == 1 ? 1 : 0);
  s.terms = [p, q]() -> TermGenerator {
    return [p, q, h = BigReal(0), n = 0L]() mutable {
      ++n;
      const BigReal nn(n);
      h += 1 / pow(nn, long{p});
      BigReal v = h / pow(nn, long{q});
      return n % 2 == 0 ? -v : v;
    };
  };
  return s;
}

void properties(Outcome& o) {
  const PrecisionContext ctx = make_context(30);
  auto scope = ctx.activate();
  const int t = ctx.target_digits();
  std::mt19937_64 gen(20261016);
  std::uniform_int_distribution<long> grid(1, (1L << 20) - 1);
  auto unit = [&] { return to_real(rq(grid(gen), 1L << 20)); };

  // Dilogarithm reflection.
  const BigReal z2 = riemann_zeta(BigReal(2), ctx);
  for (int i = 0; i < 20; ++i) {
    const BigReal x = unit();
    const BigReal lhs = polylog(2, x, ctx) + polylog(2, 1 - x, ctx);
    const BigReal rhs = z2 - log(x) * log(1 - x);
    if (agree_digits(lhs, rhs) < t) o.note("dilog reflection at " + x.to_string(12));
  }
  // η(s) = (1 − 2^(1−s)) ζ(s).
  for (long s = 2; s <= 10; ++s) {
    const BigReal lhs = dirichlet_eta(BigReal(s), ctx);
    const BigReal rhs = (1 - pow(BigReal(2), 1 - s)) * riemann_zeta(BigReal(s), ctx);
    if (agree_digits(lhs, rhs) < t) o.note("eta relation at s=" + std::to_string(s));
  }
  // Integral representations of H_n and H̄_n.
  for (long n = 1; n <= 12; ++n) {
    if (agree_digits(integrate_param("harmonic-rep", {{"n", rq(n)}}, ctx), to_real(harmonic(n))) < 25)
      o.note("harmonic-rep n=" + std::to_string(n));
    if (agree_digits(integrate_param("skew-rep", {{"n", rq(n)}}, ctx), to_real(skew_harmonic(n))) < 25)
      o.note("skew-rep n=" + std::to_string(n));
  }
  // Abel round trip: the summation-by-parts plan against the accelerated sum.
  for (const char* id : {"HARDY_BASE_ALT", "HARDY_BASE_POS", "HARDY_N_BASE"}) {
    const BigReal a = evaluate_side(id, Side::Lhs, {}, ctx, "abel+tail-fit").value;
    const BigReal b = evaluate_side(id, Side::Lhs, {}, ctx).value;
    if (agree_digits(a, b) < 25) o.note(std::string("abel round trip ") + id);
  }
  // Generating functions approach their x → 1⁻ limits.
  const BigReal near_one = 1 - BigReal::pow10(-8);
  if (agree_digits(gf_tail_zeta3_over_n(near_one, ctx), riemann_zeta(BigReal(4), ctx) / 4) < 6)
    o.note("GF tail3 continuity");
  if (agree_digits(gf_exp_tail(1 - BigReal::pow10(-12), BigReal(2), ctx), 2 * exp(BigReal(2))) < 10)
    o.note("GF exp-tail continuity");
  // |e^y − Σ_{j≤n} y^j/j!| ≤ e^|y| |y|^(n+1)/(n+1)!.
  for (long y : {-3L, -1L, 1L, 2L}) {
    const BigReal yv(y);
    BigReal power = abs(yv), fact = 1;
    for (long n = 0; n <= 20; ++n) {
      fact *= n + 1;
      if (abs(exp_tail(yv, n, ctx)) > exp(abs(yv)) * power / fact)
        o.note("Lagrange bound y=" + std::to_string(y) + " n=" + std::to_string(n));
      power *= abs(yv);
    }
  }
}

void honest_errors(Outcome& o) {
  const PrecisionContext ctx = make_context(40);
  const PrecisionContext wide = ctx.widened(10);
  int checked = 0;
  for (const IdentityRecord& r : list_identities()) {
    std::vector<ParamMap> runs = r.sweep;
    if (runs.empty()) runs.push_back({});
    for (const ParamMap& p : runs) {
      auto check = [&](Side side, const std::string& plan) {
        const SideValue base = evaluate_side(r.id, side, p, ctx, plan);
        const SideValue again = evaluate_side(r.id, side, p, wide, plan);
        auto scope = wide.activate();
        const BigReal delta = abs(base.value - again.value);
        ++checked;
        // A zero estimate claims an exact value, which must then not move at all.
        const bool bounded = base.est_error.is_zero() ? delta.is_zero() : delta < base.est_error;
        if (!bounded)
          o.note(r.id + (p.empty() ? "" : "(" + format_params(p) + ")") + " " + plan + ": |delta| " +
                 delta.to_string(3) + " >= est " + base.est_error.to_string(3));
      };
      check(Side::Lhs, r.lhs.front().name);
      for (const Plan& plan : r.rhs) check(Side::Rhs, plan.name);
    }
  }
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << checked << " side values checked";
}

}  // namespace

int main() {
  criterion(1, "THM_S1 by asymptotic-tail summation, >= 20 digits, <= 120 s", 120, [](Outcome& o) {
    o.require_report(verify("THM_S1", {}, policy(20, 35)), 20);
  });

  criterion(2, "THM_S2 by direct summation, >= 25 digits, <= 60 s", 60, [](Outcome& o) {
    VerifyPolicy p = policy(25, 40);
    p.lhs_plan = "direct";
    o.require_report(verify("THM_S2", {}, p), 25);
    if (!o.ok) {
      const VerificationReport fit = verify("THM_S2", {}, policy(25, 40));
      o.detail << "; for reference the tail-fit plan matches " << fit.matched_digits << " digits ("
               << to_string(fit.status) << ")";
    }
  });

  criterion(3, "THM_EXP_TAIL_SKEW on y grid and COR_FRAC_NE, >= 30 digits, grid <= 10 s", 0, [](Outcome& o) {
    const auto start = Clock::now();
    for (const Rational& y : {rq(-2), rq(-1, 2), rq(0), rq(1), rq(3)})
      o.require_report(verify("THM_EXP_TAIL_SKEW", {{"y", y}}, policy(30, 45)), 30);
    const double grid_s = seconds_since(start);
    if (grid_s > 10) o.note("y grid took " + std::to_string(grid_s) + " s");
    o.require_report(verify("COR_FRAC_NE", {}, policy(30, 45)), 30);
  });

  criterion(4, "Hardy families on their grids, >= 25 digits, <= 300 s", 300, [](Outcome& o) {
    for (const char* id : {"THM_HARDY_ALT", "THM_HARDY_POS"})
      for (long k : {1, 2, 3})
        for (const Rational& x : {rq(1, 2), rq(1), rq(2), rq(7, 2)})
          o.require_report(verify(id, {{"k", rq(k)}, {"x", x}}, policy(25, 40)), 25);
    for (const Rational& x : {rq(1, 2), rq(2, 3), rq(1), rq(3, 2), rq(3)})
      o.require_report(verify("THM_HARDY_N", {{"x", x}}, policy(25, 40)), 25);
    const VerificationReport base = verify("HARDY_BASE_ALT", {}, policy(25, 40));
    o.require_report(base, 25);
    const PrecisionContext ctx = make_context(40);
    auto scope = ctx.activate();
    const BigReal expected =
        (constant(ConstantName::EulerGamma, ctx) - log(constant(ConstantName::Pi, ctx))) / 2;
    if (agree_digits(BigReal::parse(base.lhs), expected) < 25) o.note("HARDY_BASE_ALT lhs differs from (γ − log π)/2");
  });

  criterion(5, "COR_CATALAN and COR_GIESEKING, >= 25 digits", 0, [](Outcome& o) {
    o.require_report(verify("COR_CATALAN", {}, policy(25, 40)), 25);
    o.require_report(verify("COR_GIESEKING", {}, policy(25, 40)), 25);
  });

  criterion(6, "integral lemmas and the Valean integral by tanh-sinh, >= 25 digits, <= 60 s", 60, [](Outcome& o) {
    for (const char* id : {"LEMMA_ATANH", "LOG2_1MX", "LEMMA_LOG", "LEMMA_LI4", "LEMMA_LOG_LI3", "LEMMA_LI2SQ",
                           "VALEAN_INT"})
      o.require_report(verify(id, {}, policy(25, 40)), 25);
    for (long q = 1; q <= 4; ++q) o.require_report(verify("LOGPOW_PLUS", {{"q", rq(q)}}, policy(25, 40)), 25);
  });

  criterion(7, "EULER_ALT closed forms against summation, p+q odd <= 9, >= 25 digits", 0, [](Outcome& o) {
    const PrecisionContext ctx = make_context(40);
    auto scope = ctx.activate();
    int pairs = 0;
    for (int total = 3; total <= 9; total += 2) {
      for (int p = 1; total - p >= 2; ++p) {
        const int q = total - p;
        ++pairs;
        const BigReal closed = expr_eval(euler_alternating(p, q), ctx);
        const BigReal summed = sum_alternating_accel(alternating_euler(p, q), 0, ctx).value;
        const int d = agree_digits(closed, summed);
        o.worst = std::min(o.worst, d);
        if (d < 25) o.note("(p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ") matched " + std::to_string(d));
      }
    }
    for (const VerificationReport& r : verify_all(policy(25, 40), "EULER_ALT")) o.require_report(r, 25);
    if (pairs != 16 || count_runs("EULER_ALT") != 16) o.note("expected 16 (p,q) pairs");
  });

  criterion(8, "property suites and full verify at the default policy, <= 900 s", 900, [](Outcome& o) {
    properties(o);
    VerifyPolicy p;
    p.threads = 1;
    const auto reports = verify_all(p);
    for (const VerificationReport& r : reports) o.require_report(r, p.digits);
    if (o.ok) o.detail << reports.size() << " verify runs";
  });

  criterion(9, "est_error bounds the change under +10 guard digits", 0, honest_errors);

  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
