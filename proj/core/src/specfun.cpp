#include "harmsum/specfun.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "harmsum/bernoulli.hpp"
#include "harmsum/constants.hpp"
#include "harmsum/elementary.hpp"
#include "harmsum/error.hpp"
#include "harmsum/sequences.hpp"
#include "harmsum/series.hpp"
#include "internal.hpp"

namespace harmsum {

namespace {

constexpr mpfr_prec_t kGuard = 32;

[[noreturn]] void domain(const char* fn, const BigReal& x, const char* why) {
  throw DomainError(fn, x.to_string(20), why);
}

double current_digits() { return static_cast<double>(working_precision_bits()) / 3.3219280948873623; }

bool negligible(const BigReal& term, const BigReal& scale) {
  return abs(term) <= internal::epsilon() * max(abs(scale), BigReal(1)) / 4;
}

// Memo of values keyed by (index, precision).
class ValueCache {
 public:
  template <typename F>
  BigReal get(long key, F&& compute) {
    const auto k = std::make_pair(key, working_precision_bits());
    {
      std::shared_lock lock(mutex_);
      auto it = values_.find(k);
      if (it != values_.end()) return it->second;
    }
    BigReal v = std::forward<F>(compute)();
    std::unique_lock lock(mutex_);
    return values_.emplace(k, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<long, mpfr_prec_t>, BigReal> values_;
};

BigReal inverse_power(long base, long s) {
  BigReal r;
  mpfr_ui_pow_ui(r.get(), static_cast<unsigned long>(base), static_cast<unsigned long>(s), MPFR_RNDN);
  return 1 / r;
}

// 1 − 2^(1−s), computed without cancellation near s = 1.
BigReal eta_factor(const BigReal& s) { return -expm1((1 - s) * log_two()); }

BigReal eta_integer(long s) {
  return wp::cvz([s](long k) { return inverse_power(k + 1, s); }, wp::cvz_terms());
}

BigReal zeta_negative_integer(long k) {
  if (k == 0) return BigReal(-1) / 2;
  const long m = -k;
  return to_real(Rational(-bernoulli(static_cast<int>(m + 1)) / (m + 1)));
}

BigReal log_two_pi() { return log(pi() * 2); }

// Stirling series for log Γ(y), y large enough for the current precision.
BigReal stirling_loggamma(const BigReal& y) {
  BigReal sum = (y - BigReal(1) / 2) * log(y) - y + log_two_pi() / 2;
  const BigReal inv_y2 = 1 / square(y);
  BigReal power = 1 / y;
  for (int k = 1;; ++k) {
    const BigReal term = to_real(bernoulli(2 * k)) * power / (2L * k * (2 * k - 1));
    sum += term;
    if (negligible(term, sum)) break;
    if (k > 2000) throw ConvergenceError("loggamma: Stirling series", 0);
    power *= inv_y2;
  }
  return sum;
}

// Asymptotic digamma series, y large.
BigReal asymptotic_digamma(const BigReal& y) {
  BigReal sum = log(y) - 1 / (y * 2);
  const BigReal inv_y2 = 1 / square(y);
  BigReal power = inv_y2;
  for (int k = 1;; ++k) {
    const BigReal term = to_real(bernoulli(2 * k)) * power / (2L * k);
    sum -= term;
    if (negligible(term, sum)) break;
    if (k > 2000) throw ConvergenceError("digamma: asymptotic series", 0);
    power *= inv_y2;
  }
  return sum;
}

// Shift count that brings x up to the asymptotic regime.
long shift_to(const BigReal& x, double threshold) {
  const double xd = x.to_double();
  return xd >= threshold ? 0 : static_cast<long>(std::ceil(threshold - xd));
}

// ζ(k) − 1 for k ≥ 2 with full relative accuracy.
BigReal zeta_minus_one(int k) {
  const mpfr_prec_t bits = working_precision_bits();
  if (static_cast<double>(bits) / k <= 6.0) {
    BigReal sum(0);
    for (long n = 2;; ++n) {
      const BigReal term = inverse_power(n, k);
      sum += term;
      if (abs(term) <= internal::epsilon() * sum / 4) break;
    }
    return sum;
  }
  return internal::with_guard(k + 8, [k] {
    return eta_integer(k) / (1 - inverse_power(2, k - 1)) - 1;
  });
}

// Table of ζ(k) − 1 for k = 0.. used by the Barnes G Taylor series.
const std::vector<BigReal>& zeta_minus_one_table() {
  static std::shared_mutex mutex;
  static std::map<mpfr_prec_t, std::vector<BigReal>> tables;
  const mpfr_prec_t bits = working_precision_bits();
  {
    std::shared_lock lock(mutex);
    auto it = tables.find(bits);
    if (it != tables.end()) return it->second;
  }
  std::vector<BigReal> table(2);
  const int kmax = static_cast<int>(bits / 2) + 12;
  for (int k = 2; k <= kmax; ++k) table.push_back(zeta_minus_one(k));
  std::unique_lock lock(mutex);
  return tables.emplace(bits, std::move(table)).first->second;
}

// log G(1 + w) for |w| ≤ 1/2.
BigReal log_barnes_g_taylor(const BigReal& w) {
  const auto& table = zeta_minus_one_table();
  const BigReal w2 = square(w);
  BigReal sum = w / 2 * log_two_pi() - (w + (1 + euler_gamma()) * w2) / 2 + log1p(w) - w + w2 / 2;
  BigReal power = w2 * w;  // w^(k+1)
  for (size_t k = 2; k < table.size(); ++k) {
    BigReal term = table[k] * power / static_cast<long>(k + 1);
    if (k % 2 == 1) term = -term;
    sum += term;
    if (negligible(term, BigReal(1))) return sum;
    power *= w;
  }
  throw ConvergenceError("log_barnes_g: Taylor series", 0);
}

BigReal psi_quarter(int k, bool one_quarter) {
  const int two_k = 2 * k;
  const BigReal b = to_real(abs(bernoulli(two_k)));
  const BigReal fact = BigReal(factorial(static_cast<unsigned long>(two_k)));
  const BigReal beta = wp::beta(BigReal(two_k));
  const BigReal lead = pow(pi(), two_k) * (ldexp(BigReal(1), two_k) - 1) * b;
  const BigReal corr = 2 * fact * beta;
  const BigReal scale = ldexp(BigReal(1), 2 * (two_k - 1)) / two_k;
  return scale * (one_quarter ? lead + corr : lead - corr);
}

}  // namespace

namespace wp {

BigReal zeta_int(int k) {
  if (k < 2) domain("zeta", BigReal(k), "integer argument must be >= 2");
  static ValueCache cache;
  return cache.get(k, [k] {
    return internal::with_guard(kGuard, [k] { return eta_integer(k) / (1 - inverse_power(2, k - 1)); });
  });
}

BigReal zeta(const BigReal& s) {
  if (s.is_integer()) {
    if (s == 1) domain("zeta", s, "pole at s = 1");
    if (s <= 0) {
      if (s < -100000) domain("zeta", s, "argument too negative");
      return zeta_negative_integer(s.to_long());
    }
    if (s < 100000) return zeta_int(static_cast<int>(s.to_long()));
  }
  if (s <= 1) domain("zeta", s, "non-integer argument must be > 1");
  return internal::with_guard(kGuard, [&] { return eta(s) / eta_factor(s); });
}

BigReal eta(const BigReal& s) {
  if (s.sign() <= 0) domain("eta", s, "argument must be > 0");
  return internal::with_guard(kGuard, [&] {
    if (s.is_integer() && s < 100000) return eta_integer(s.to_long());
    return cvz([&](long k) { return pow(BigReal(k + 1), -s); }, cvz_terms());
  });
}

BigReal beta(const BigReal& s) {
  if (s.sign() <= 0) domain("beta", s, "argument must be > 0");
  return internal::with_guard(kGuard, [&] {
    if (s.is_integer() && s < 100000) {
      const long si = s.to_long();
      return cvz([si](long k) { return inverse_power(2 * k + 1, si); }, cvz_terms());
    }
    return cvz([&](long k) { return pow(BigReal(2 * k + 1), -s); }, cvz_terms());
  });
}

BigReal polylog(int s, const BigReal& z) {
  if (s < 1) domain("polylog", BigReal(s), "order must be >= 1");
  if (abs(z) > 1) domain("polylog", z, "argument must satisfy |z| <= 1");
  if (s == 1) {
    if (z >= 1) domain("polylog", z, "Li_1 has a pole at z = 1");
    return -log1p(-z);
  }
  if (z.is_zero()) return BigReal(0);
  if (z == 1) return zeta_int(s);
  if (z == -1) return -eta(BigReal(s));
  return internal::with_guard(kGuard, [&]() -> BigReal {
    if (abs(z) * 2 <= 1) {
      BigReal sum(0);
      BigReal zk(1);
      for (long k = 1;; ++k) {
        zk *= z;
        const BigReal term = zk * inverse_power(k, s);
        sum += term;
        if (negligible(term, sum)) return sum;
      }
    }
    if (z.sign() < 0) {
      const BigReal r = -z;
      return -cvz([&](long k) { return pow(r, k + 1) * inverse_power(k + 1, s); }, cvz_terms());
    }
    // z in (1/2, 1): expansion in μ = log z around z = 1.
    const BigReal mu = log(z);
    BigReal sum(0);
    BigReal mu_k(1);  // μ^k / k!
    BigReal prev_term(1);
    for (long k = 0;; ++k) {
      if (k > 0) mu_k = mu_k * mu / k;
      BigReal term;
      if (k == s - 1) {
        term = mu_k * (to_real(harmonic(s - 1)) - log(-mu));
      } else if (k < s - 1) {
        term = zeta_int(static_cast<int>(s - k)) * mu_k;
      } else {
        term = zeta_negative_integer(s - k) * mu_k;
      }
      sum += term;
      if (k > s + 2 && negligible(term, sum) && negligible(prev_term, sum) &&
          negligible(mu_k, sum)) {
        return sum;
      }
      prev_term = term;
      if (k > 100000) throw ConvergenceError("polylog: log series", 0);
    }
  });
}

BigReal loggamma(const BigReal& x) {
  if (x.sign() <= 0) domain("loggamma", x, "argument must be > 0");
  return internal::with_guard(kGuard, [&] {
    const long n = shift_to(x, 0.5 * current_digits() + 5);
    if (n == 0) return stirling_loggamma(x);
    BigReal product = x;
    for (long j = 1; j < n; ++j) product *= x + j;
    return stirling_loggamma(x + n) - log(product);
  });
}

BigReal digamma(const BigReal& x) {
  if (x.sign() <= 0) domain("digamma", x, "argument must be > 0");
  return internal::with_guard(kGuard, [&] {
    const long n = shift_to(x, 0.5 * current_digits() + 5);
    BigReal shift(0);
    for (long j = 0; j < n; ++j) shift += 1 / (x + j);
    return asymptotic_digamma(x + n) - shift;
  });
}

BigReal hurwitz_zeta(int s, const BigReal& x) {
  if (s < 2) domain("hurwitz_zeta", BigReal(s), "order must be >= 2");
  if (x.sign() <= 0) domain("hurwitz_zeta", x, "argument must be > 0");
  return internal::with_guard(kGuard, [&] {
    const long n = shift_to(x, 0.5 * current_digits() + 0.5 * s + 5);
    BigReal head(0);
    for (long j = 0; j < n; ++j) head += pow(x + j, -static_cast<long>(s));
    const BigReal y = x + n;
    const BigReal inv_y = 1 / y;
    const BigReal y_pow = pow(y, -static_cast<long>(s));  // y^(−s)
    BigReal tail = y_pow * y / (s - 1) + y_pow / 2;
    // Σ B_2k/(2k)! · s(s+1)…(s+2k−2) · y^(−s−2k+1)
    BigReal rising(s);        // s(s+1)…(s+2k−2)
    BigReal power = y_pow * inv_y;  // y^(−s−1)
    BigReal fact(2);          // (2k)!
    const BigReal inv_y2 = square(inv_y);
    for (long k = 1;; ++k) {
      const BigReal term = to_real(bernoulli(static_cast<int>(2 * k))) * rising * power / fact;
      tail += term;
      if (negligible(term, tail)) break;
      if (k > 4000) throw ConvergenceError("hurwitz_zeta: Euler-Maclaurin", 0);
      rising *= (s + 2 * k - 1) * (s + 2 * k);
      power *= inv_y2;
      fact *= (2 * k + 1) * (2 * k + 2);
    }
    return head + tail;
  });
}

BigReal polygamma(int n, const BigReal& x) {
  if (n < 0) domain("polygamma", BigReal(n), "order must be >= 0");
  if (x.sign() <= 0) domain("polygamma", x, "argument must be > 0");
  if (n == 0) return digamma(x);
  return internal::with_guard(kGuard, [&] {
    BigReal v = BigReal(factorial(static_cast<unsigned long>(n))) * hurwitz_zeta(n + 1, x);
    return n % 2 == 1 ? v : -v;
  });
}

BigReal log_barnes_g(const BigReal& z) {
  if (z.sign() <= 0) domain("log_barnes_g", z, "argument must be > 0");
  return internal::with_guard(kGuard, [&] {
    const BigReal half = BigReal(1) / 2;
    if (z < half) return log_barnes_g_taylor(z) - loggamma(z);
    const BigReal three_halves = BigReal(3) / 2;
    if (z <= three_halves) return log_barnes_g_taylor(z - 1);
    // log G(z) = log G(z0) + Σ_{i<m} log Γ(z0 + i), z0 = z − m ∈ (1/2, 3/2].
    const long m = static_cast<long>(std::ceil((z - three_halves).to_double()));
    const BigReal z0 = z - m;
    BigReal product(1);
    for (long t = 0; t + 1 < m; ++t) product *= pow(z0 + t, m - 1 - t);
    return log_barnes_g_taylor(z0 - 1) + loggamma(z0) * m + log(product);
  });
}

BigReal negapolygamma2(const BigReal& z) {
  if (z.sign() <= 0) domain("negapolygamma2", z, "argument must be > 0");
  return internal::with_guard(kGuard, [&] {
    return z * (1 - z) / 2 + z / 2 * log_two_pi() + z * loggamma(z) - log_barnes_g(z + 1);
  });
}

BigReal ein(const BigReal& z) {
  const double mag = std::fabs(z.to_double());
  const mpfr_prec_t extra = kGuard + (z.sign() > 0 ? static_cast<mpfr_prec_t>(1.45 * mag) : 0);
  return internal::with_guard(extra, [&] {
    BigReal sum(0);
    BigReal p(1);  // z^k / k!
    for (long k = 1;; ++k) {
      p = p * z / k;
      BigReal term = p / k;
      if (k % 2 == 0) term = -term;
      sum += term;
      if (k > mag && negligible(term, sum)) return sum;
      if (k > 1000000) throw ConvergenceError("ein: series", 0);
    }
  });
}

BigReal ei(const BigReal& x) {
  if (x.is_zero()) domain("ei", x, "logarithmic singularity at 0");
  return internal::with_guard(kGuard, [&] { return euler_gamma() + log(abs(x)) - ein(-x); });
}

BigReal zeta_prime(int s) {
  if (s >= 2) {
    static ValueCache cache;
    return cache.get(s, [s] {
      return internal::with_guard(kGuard, [s] {
        const BigReal d = 1 - inverse_power(2, s - 1);
        const BigReal d_prime = inverse_power(2, s - 1) * log_two();
        const BigReal eta_prime = cvz(
            [s](long k) {
              BigReal lg;
              mpfr_log_ui(lg.get(), static_cast<unsigned long>(k + 2), MPFR_RNDN);
              return lg * inverse_power(k + 2, s);
            },
            cvz_terms());
        const BigReal zeta_s = eta_integer(s) / d;
        return (eta_prime - zeta_s * d_prime) / d;
      });
    });
  }
  if (s < 0 && s % 2 != 0) {
    // Functional equation at s = 1 − 2n.
    const int n = (1 - s) / 2;
    return internal::with_guard(kGuard, [n] {
      const BigReal psi = to_real(harmonic(2 * n - 1)) - euler_gamma();
      const BigReal bracket = zeta_int(2 * n) * (psi - log_two_pi()) + zeta_prime(2 * n);
      BigReal v = BigReal(factorial(static_cast<unsigned long>(2 * n - 1))) * 2 *
                  pow(pi() * 2, -2L * n) * bracket;
      return n % 2 == 1 ? v : -v;
    });
  }
  domain("zeta_prime", BigReal(s), "supported for integer s >= 2 and negative odd s");
}

BigReal zeta_prime_half(int k) {
  if (k < 1) domain("zeta_prime_half", BigReal(k), "k must be >= 1");
  return internal::with_guard(kGuard, [k] {
    const BigReal b = to_real(bernoulli(2 * k));
    const BigReal p = ldexp(BigReal(1), 2 * k - 1);  // 2^(2k−1)
    return -b * log_two() / (ldexp(BigReal(1), 2 * k) * k) - (p - 1) * zeta_prime(1 - 2 * k) / p;
  });
}

BigReal quarter_values(int k, QuarterPoint which, QuarterKind kind) {
  if (k < 1) domain("quarter_values", BigReal(k), "k must be >= 1");
  const bool quarter = which == QuarterPoint::OneQuarter;
  return internal::with_guard(kGuard, [&] {
    if (kind == QuarterKind::Polygamma) return psi_quarter(k, quarter);
    // ζ′(−2k+1, a): upper signs for a = 1/4, lower for 3/4.
    const BigReal sign(quarter ? -1 : 1);
    const BigReal b = to_real(bernoulli(2 * k));
    const BigReal four_k = ldexp(BigReal(1), 2 * k);
    const BigReal t1 = sign * (four_k - 1) * b * pi() / (four_k * 4 * k);
    const BigReal t2 = (four_k / 4 - 1) * b * log_two() / (ldexp(BigReal(1), 4 * k - 1) * k);
    const BigReal psi14 = psi_quarter(k, true);
    BigReal t3 = sign * psi14 / (pow(pi() * 8, 2L * k - 1) * 4);
    if (k % 2 == 1) t3 = -t3;
    const BigReal t4 = (ldexp(BigReal(1), 2 * k - 1) - 1) * zeta_prime(1 - 2 * k) /
                       ldexp(BigReal(1), 4 * k - 1);
    return t1 + t2 + t3 - t4;
  });
}

}  // namespace wp

BigReal riemann_zeta(const BigReal& s, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return wp::zeta(s);
}

BigReal dirichlet_eta(const BigReal& s, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return wp::eta(s);
}

BigReal dirichlet_beta(const BigReal& s, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return wp::beta(s);
}

BigReal polylog(int s, const BigReal& z, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return wp::polylog(s, z);
}

BigReal loggamma(const BigReal& x, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return wp::loggamma(x);
}

BigReal polygamma(int n, const BigReal& x, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return wp::polygamma(n, x);
}

BigReal negapolygamma2(const BigReal& z, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return wp::negapolygamma2(z);
}

BigReal log_barnes_g(const BigReal& z, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return wp::log_barnes_g(z);
}

BigReal ein(const BigReal& z, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return wp::ein(z);
}

BigReal ei(const BigReal& x, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return wp::ei(x);
}

BigReal zeta_prime(int s, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return wp::zeta_prime(s);
}

BigReal zeta_prime_neg1(const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return BigReal(1) / 12 - log_glaisher();
}

BigReal zeta_prime_half(int k, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return wp::zeta_prime_half(k);
}

BigReal quarter_values(int k, QuarterPoint which, QuarterKind kind, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return wp::quarter_values(k, which, kind);
}

QuarterPoint parse_quarter_point(std::string_view text) {
  if (text == "1/4") return QuarterPoint::OneQuarter;
  if (text == "3/4") return QuarterPoint::ThreeQuarters;
  throw ParseError("quarter point must be 1/4 or 3/4, got '" + std::string(text) + "'");
}

}  // namespace harmsum
