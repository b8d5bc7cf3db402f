#include "harmsum/series.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "harmsum/elementary.hpp"
#include "harmsum/error.hpp"
#include "internal.hpp"

namespace harmsum {

namespace {

// Digits implied by an absolute error estimate, for diagnostics.
int achieved_digits(const BigReal& err) {
  if (err.is_zero()) return kExactAgreement;
  const double lg = std::log10(std::max(err.to_double(), 1e-300));
  return std::max(0, static_cast<int>(std::floor(-lg)));
}

// Observed |a_n| must stay within the declared class. Checked on the first
// terms only; returns normally when the sample is too short to judge.
class DecayValidator {
 public:
  DecayValidator(const SeriesSpec& s) : spec_(s) {}

  void observe(long n, const BigReal& term) {
    if (n - spec_.start_index >= kSample) return;
    const double mag = std::fabs(term.to_double());
    if (mag == 0 || !std::isfinite(mag)) {
      prev_ = 0;
      return;
    }
    switch (spec_.decay.kind) {
      case DecayClass::Kind::Geometric:
        if (prev_ > 0 && n - spec_.start_index >= kSample / 2 &&
            mag / prev_ > spec_.decay.ratio * 1.05) {
          fail("terms shrink slower than the declared geometric ratio");
        }
        break;
      case DecayClass::Kind::Factorial:
        if (prev_ > 0 && n - spec_.start_index >= kSample / 2 && mag / prev_ > 0.5) {
          fail("terms shrink slower than factorial decay");
        }
        break;
      case DecayClass::Kind::PowerLog: {
        const double x = static_cast<double>(n);
        const double lg = std::log(std::max(x, 3.0));
        const double c = mag * std::pow(x, spec_.decay.m) / std::pow(lg, spec_.decay.j);
        if (n - spec_.start_index == kSample / 4) c_quarter_ = c;
        if (n - spec_.start_index == kSample - 1 && c_quarter_ > 0 && c > 4 * c_quarter_) {
          fail("terms shrink slower than the declared power_log class");
        }
        break;
      }
    }
    prev_ = mag;
  }

 private:
  static constexpr long kSample = 1000;

  [[noreturn]] void fail(const char* why) const { throw DomainError("sum_direct", spec_.name, why); }

  const SeriesSpec& spec_;
  double prev_ = 0;
  double c_quarter_ = 0;
};

BigReal tail_bound(const SeriesSpec& s, long n, const BigReal& next, double observed_ratio) {
  const BigReal mag = abs(next);
  switch (s.sign_pattern == SignPattern::Alternating ? DecayClass::Kind::Factorial
                                                      : s.decay.kind) {
    case DecayClass::Kind::Factorial:
      if (s.sign_pattern == SignPattern::Alternating) return mag;
      if (observed_ratio > 0.5) return BigReal(-1);  // not yet in the decaying regime
      return mag * 2;
    case DecayClass::Kind::Geometric:
      if (observed_ratio > s.decay.ratio) return BigReal(-1);
      return mag / BigReal(1.0 - s.decay.ratio);
    case DecayClass::Kind::PowerLog: {
      const double m = s.decay.m;
      const double x = static_cast<double>(n + 1);
      const double factor = 2.0 * x / (m - 1) * (1.0 + s.decay.j / ((m - 1) * std::log(x)));
      return mag * BigReal(factor);
    }
  }
  return BigReal(-1);
}

BigReal solve_for_constant(std::vector<std::vector<BigReal>> a, std::vector<BigReal> rhs) {
  const size_t n = rhs.size();
  for (size_t col = 0; col < n; ++col) {
    BigReal scale(0);
    for (size_t row = 0; row < n; ++row) scale = max(scale, abs(a[row][col]));
    if (scale.is_zero()) throw ConvergenceError("tail fit: singular basis", 0);
    for (size_t row = 0; row < n; ++row) a[row][col] /= scale;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    for (size_t row = col + 1; row < n; ++row) {
      if (abs(a[row][col]) > abs(a[pivot][col])) pivot = row;
    }
    if (a[pivot][col].is_zero()) throw ConvergenceError("tail fit: singular system", 0);
    std::swap(a[col], a[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (size_t row = col + 1; row < n; ++row) {
      const BigReal f = a[row][col] / a[col][col];
      if (f.is_zero()) continue;
      for (size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<BigReal> x(n);
  for (size_t i = n; i-- > 0;) {
    BigReal acc = rhs[i];
    for (size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }
  // Column 0 is the constant; its scale is 1 because the column is all ones.
  return x[0];
}

BigReal cvz_weighted(const std::vector<BigReal>& a, long n) {
  BigReal d = pow(BigReal(3) + sqrt(BigReal(8)), n);
  d = (d + 1 / d) / 2;
  BigReal b(-1);
  BigReal c = -d;
  BigReal s(0);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c * a[static_cast<size_t>(k)];
    b *= 2 * (k + n) * (k - n);
    b /= (2 * k + 1) * (k + 1);
  }
  return s / d;
}

}  // namespace

SeriesSpec SeriesSpec::from_term(std::string name, std::function<BigReal(long)> term,
                                 SignPattern sign, DecayClass decay, long start_index) {
  SeriesSpec s;
  s.name = std::move(name);
  s.sign_pattern = sign;
  s.decay = decay;
  s.start_index = start_index;
  s.terms = [term = std::move(term), start_index]() -> TermGenerator {
    return [term, n = start_index]() mutable { return term(n++); };
  };
  return s;
}

std::string to_string(SumMethod method) {
  switch (method) {
    case SumMethod::Direct: return "direct";
    case SumMethod::AlternatingAccel: return "cvz";
    case SumMethod::AsymptoticTail: return "tail-fit";
  }
  return "unknown";
}

SumResult sum_direct(const SeriesSpec& s, const PrecisionContext& ctx, long budget) {
  auto p = ctx.activate();
  const BigReal tol = BigReal::pow10(-(ctx.target_digits() + 5));
  TermGenerator next = s.terms();
  DecayValidator validator(s);
  BigReal sum(0);
  BigReal term = next();
  double prev_mag = std::fabs(term.to_double());
  long n = s.start_index;
  BigReal last_bound(-1);
  for (long used = 1; used <= budget; ++used, ++n) {
    validator.observe(n, term);
    sum += term;
    BigReal upcoming = next();
    const double mag = std::fabs(upcoming.to_double());
    const double ratio = prev_mag > 0 ? mag / prev_mag : 0;
    prev_mag = mag;
    const BigReal bound = tail_bound(s, n, upcoming, ratio);
    if (bound.sign() >= 0) {
      last_bound = bound;
      if (bound <= tol * max(BigReal(1), abs(sum))) {
        SumResult r;
        r.est_error = bound + rounding_floor(sum, ctx) * BigReal(std::sqrt(double(used)) + 1);
        r.value = std::move(sum);
        r.terms_used = used;
        r.method = SumMethod::Direct;
        return r;
      }
    }
    term = std::move(upcoming);
  }
  throw ConvergenceError("sum_direct: term budget exhausted for " + s.name,
                         last_bound.sign() < 0 ? 0 : achieved_digits(last_bound));
}

SumResult sum_alternating_accel(const SeriesSpec& s, long n_terms, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  const long n = n_terms > 0 ? n_terms : wp::cvz_terms();
  const long n2 = n + n / 4 + 4;
  BigReal result;
  BigReal spread;
  BigReal amax(0);
  {
    ScopedPrecision guard(ctx.working_bits() + 32);
    {
      TermGenerator next = s.terms();
      std::vector<BigReal> a;
      a.reserve(static_cast<size_t>(n2));
      for (long k = 0; k < n2; ++k) {
        BigReal t = next();
        if (k % 2 == 1) t = -t;
        a.push_back(std::move(t));
      }
      int sign = 0;
      for (long k = n2 / 2; k < n2; ++k) {
        const int sk = a[static_cast<size_t>(k)].sign();
        if (sk == 0) continue;
        if (sign == 0) sign = sk;
        if (sk != sign) {
          throw DomainError("sum_alternating_accel", s.name, "terms do not alternate in sign");
        }
      }
      for (const auto& v : a) amax = max(amax, abs(v));
      BigReal lo = cvz_weighted(a, n);
      result = cvz_weighted(a, n2);
      spread = abs(result - lo);
    }
  }
  BigReal value = internal::round_to(result, ctx.working_bits());
  BigReal bound = amax * 2 * pow(BigReal(3) + sqrt(BigReal(8)), -n2);
  SumResult r;
  r.est_error = max(bound, spread) + rounding_floor(value, ctx);
  r.value = std::move(value);
  r.terms_used = n2;
  r.method = SumMethod::AlternatingAccel;
  if (r.est_error > ctx.tolerance()) {
    throw ConvergenceError("sum_alternating_accel: " + s.name + " did not settle",
                           achieved_digits(r.est_error));
  }
  return r;
}

std::vector<TailTerm> power_log_model(int first, int last, int max_log_power) {
  std::vector<TailTerm> model;
  for (int e = first; e <= last; ++e) {
    for (int l = max_log_power; l >= 0; --l) model.push_back({e, l});
  }
  return model;
}

SumResult sum_with_asymptotic_tail(const SeriesSpec& s, long cutoff,
                                   const std::vector<TailTerm>& tail_model,
                                   const PrecisionContext& ctx, TailOptions options) {
  if (tail_model.empty()) throw DomainError("sum_with_asymptotic_tail", s.name, "empty tail model");
  if (cutoff < 1 || options.node_multiple < 1 || options.node_ratio <= 1) {
    throw DomainError("sum_with_asymptotic_tail", s.name, "invalid cutoff or node options");
  }
  const size_t unknowns = tail_model.size() + 1;
  std::vector<long> nodes;
  double x = static_cast<double>(cutoff);
  while (nodes.size() < unknowns + 1) {
    long node = static_cast<long>(std::llround(x / options.node_multiple)) * options.node_multiple;
    if (!nodes.empty() && node <= nodes.back()) node = nodes.back() + options.node_multiple;
    if (node < s.start_index) node = s.start_index;
    nodes.push_back(node);
    x *= options.node_ratio;
  }

  auto p = ctx.widened(options.extra_digits).activate();
  std::vector<BigReal> partial;
  partial.reserve(nodes.size());
  {
    TermGenerator next = s.terms();
    BigReal sum(0);
    size_t idx = 0;
    for (long n = s.start_index; idx < nodes.size(); ++n) {
      sum += next();
      if (n == nodes[idx]) {
        partial.push_back(sum);
        ++idx;
      }
    }
  }

  auto fit = [&](size_t first) {
    std::vector<std::vector<BigReal>> a;
    std::vector<BigReal> rhs;
    for (size_t i = first; i < first + unknowns; ++i) {
      BigReal big_n(nodes[i]);
      BigReal lg;
      mpfr_log_ui(lg.get(), static_cast<unsigned long>(nodes[i]), MPFR_RNDN);
      std::vector<BigReal> row;
      row.emplace_back(1);
      for (const auto& t : tail_model) row.push_back(pow(big_n, -t.exponent) * pow(lg, t.log_power));
      a.push_back(std::move(row));
      rhs.push_back(partial[i]);
    }
    return solve_for_constant(std::move(a), std::move(rhs));
  };
  const BigReal upper = fit(1);
  const BigReal lower = fit(0);

  auto q = ctx.activate();
  SumResult r;
  r.value = internal::round_to(upper, ctx.working_bits());
  r.est_error = abs(upper - lower) + rounding_floor(r.value, ctx);
  r.terms_used = nodes.back() - s.start_index + 1;
  r.method = SumMethod::AsymptoticTail;
  if (r.est_error > ctx.tolerance()) {
    throw ConvergenceError("sum_with_asymptotic_tail: fits for " + s.name + " disagree (" +
                               upper.to_string(12) + " vs " + lower.to_string(12) + ")",
                           achieved_digits(r.est_error));
  }
  return r;
}

BigReal AbelLimit::value(const PrecisionContext& ctx) const {
  if (!evaluator) return BigReal(0);
  return evaluator(ctx);
}

AbelSeries abel_transform(const SeriesSpec& a, const SeriesSpec& b, AbelLimit limit,
                          SignPattern sign, DecayClass decay) {
  if (a.start_index != b.start_index) {
    throw DomainError("abel_transform", a.name + ", " + b.name, "start indices differ");
  }
  SeriesSpec t;
  t.name = "abel(" + a.name + ", " + b.name + ")";
  t.sign_pattern = sign;
  t.decay = decay;
  t.start_index = a.start_index;
  t.terms = [make_a = a.terms, make_b = b.terms]() -> TermGenerator {
    struct State {
      TermGenerator a;
      TermGenerator b;
      BigReal partial{0};
      BigReal b_next;
    };
    auto st = std::make_shared<State>();
    st->a = make_a();
    st->b = make_b();
    st->b_next = st->b();
    return [st]() {
      st->partial += st->a();
      BigReal bk = std::move(st->b_next);
      st->b_next = st->b();
      return st->partial * (bk - st->b_next);
    };
  };
  return {std::move(t), std::move(limit)};
}

namespace wp {

long cvz_terms() {
  const double digits = static_cast<double>(working_precision_bits()) / 3.3219280948873623;
  return static_cast<long>(std::ceil(1.31 * digits)) + 10;
}

BigReal cvz(const std::function<BigReal(long)>& a, long n) {
  return internal::with_guard(32, [&] {
    std::vector<BigReal> terms;
    terms.reserve(static_cast<size_t>(n));
    for (long k = 0; k < n; ++k) terms.push_back(a(k));
    return cvz_weighted(terms, n);
  });
}

}  // namespace wp

}  // namespace harmsum
