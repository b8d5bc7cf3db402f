#include "harmsum/sequences.hpp"

#include <cmath>
#include <string>

#include "harmsum/elementary.hpp"
#include "harmsum/error.hpp"
#include "harmsum/specfun.hpp"
#include "internal.hpp"

namespace harmsum {

namespace {

constexpr mpfr_prec_t kGuard = 32;

[[noreturn]] void domain(const char* fn, const std::string& arg, const char* why) {
  throw DomainError(fn, arg, why);
}

}  // namespace

Rational HarmonicCache::get(Kind kind, long n, int p) {
  if (kind != Kind::Generalized) p = 1;
  std::lock_guard lock(mutex_);
  auto& table = tables_[{kind, p}];
  if (table.empty()) table.emplace_back(0);
  for (long j = static_cast<long>(table.size()); j <= n; ++j) {
    Rational step;
    switch (kind) {
      case Kind::Plain: step = Rational(1, j); break;
      case Kind::Skew: step = Rational(j % 2 == 1 ? 1 : -1, j); break;
      case Kind::Generalized: {
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(p));
        step = Rational(BigInt(1), den);
        break;
      }
    }
    Rational next = table.back() + step;
    next.canonicalize();
    table.push_back(std::move(next));
  }
  return table[static_cast<size_t>(n)];
}

HarmonicCache& HarmonicCache::global() {
  static HarmonicCache cache;
  return cache;
}

Rational harmonic(long n) {
  if (n < 1) domain("harmonic", std::to_string(n), "n must be >= 1");
  return HarmonicCache::global().get(HarmonicCache::Kind::Plain, n);
}

Rational gen_harmonic(long n, int p) {
  if (n < 1) domain("gen_harmonic", std::to_string(n), "n must be >= 1");
  if (p < 1) domain("gen_harmonic", std::to_string(p), "p must be >= 1");
  return HarmonicCache::global().get(HarmonicCache::Kind::Generalized, n, p);
}

Rational skew_harmonic(long n) {
  if (n < 1) domain("skew_harmonic", std::to_string(n), "n must be >= 1");
  return HarmonicCache::global().get(HarmonicCache::Kind::Skew, n);
}

BigReal pochhammer_rising(const BigReal& z, long k) {
  if (k < 1) domain("pochhammer_rising", std::to_string(k), "k must be >= 1");
  BigReal r = z;
  for (long j = 1; j < k; ++j) r *= z + j;
  return r;
}

namespace wp {

BigReal tail_zeta(int p, long n) {
  if (p < 2) domain("tail_zeta", std::to_string(p), "p must be >= 2");
  if (n < 0) domain("tail_zeta", std::to_string(n), "n must be >= 0");
  if (n == 0) return zeta_int(p);
  return hurwitz_zeta(p, BigReal(n + 1));
}

BigReal exp_tail(const BigReal& y, long n) {
  if (n < 0) domain("exp_tail", std::to_string(n), "n must be >= 0");
  if (y.is_zero()) return BigReal(0);
  const double mag = std::fabs(y.to_double());
  return internal::with_guard(kGuard + static_cast<mpfr_prec_t>(1.45 * mag), [&] {
    BigReal term = pow(y, n + 1) / BigReal(factorial(static_cast<unsigned long>(n + 1)));
    BigReal sum = term;
    for (long j = n + 2;; ++j) {
      term = term * y / j;
      sum += term;
      if (j > mag && abs(term) <= internal::epsilon() * abs(sum) / 4) return sum;
      if (j > n + 1000000) throw ConvergenceError("exp_tail: remainder series", 0);
    }
  });
}

BigReal gf_tail_zeta2(const BigReal& x) {
  if (x < -1 || x >= 1) domain("gf_tail_zeta2", x.to_string(20), "x must satisfy -1 <= x < 1");
  if (x.is_zero()) return BigReal(0);
  return internal::with_guard(kGuard, [&] { return (x * zeta_int(2) - polylog(2, x)) / (1 - x); });
}

BigReal gf_tail_zeta3_over_n(const BigReal& x) {
  if (x < -1 || x > 1) domain("gf_tail_zeta3_over_n", x.to_string(20), "x must satisfy |x| <= 1");
  if (x.is_zero()) return BigReal(0);
  return internal::with_guard(kGuard, [&] {
    if (x == 1) return zeta_int(4) / 4;
    const BigReal li2 = polylog(2, x);
    return log1p(-x) * (polylog(3, x) - zeta_int(3)) - polylog(4, x) + square(li2) / 2;
  });
}

BigReal gf_exp_tail(const BigReal& x, const BigReal& y) {
  if (x < 0 || x > 1) domain("gf_exp_tail", x.to_string(20), "x must satisfy 0 <= x <= 1");
  return internal::with_guard(kGuard, [&] {
    if (x == 1) return y * exp(y);
    const BigReal gap = 1 - x;
    // e^y − e^(xy) = e^(xy)·expm1((1−x)y), free of cancellation near x = 1.
    return exp(x * y) * expm1(gap * y) / gap;
  });
}

}  // namespace wp

BigReal tail_zeta(int p, long n, const PrecisionContext& ctx) {
  auto g = ctx.activate();
  return wp::tail_zeta(p, n);
}

BigReal exp_tail(const BigReal& y, long n, const PrecisionContext& ctx) {
  auto g = ctx.activate();
  return wp::exp_tail(y, n);
}

BigReal frac_ne(long n, const PrecisionContext& ctx) {
  if (n < 1) domain("frac_ne", std::to_string(n), "n must be >= 1");
  auto g = ctx.activate();
  return internal::with_guard(kGuard, [n] {
    return BigReal(factorial(static_cast<unsigned long>(n))) * wp::exp_tail(BigReal(1), n);
  });
}

BigReal gf_tail_zeta2(const BigReal& x, const PrecisionContext& ctx) {
  auto g = ctx.activate();
  return wp::gf_tail_zeta2(x);
}

BigReal gf_tail_zeta3_over_n(const BigReal& x, const PrecisionContext& ctx) {
  auto g = ctx.activate();
  return wp::gf_tail_zeta3_over_n(x);
}

BigReal gf_exp_tail(const BigReal& x, const BigReal& y, const PrecisionContext& ctx) {
  auto g = ctx.activate();
  return wp::gf_exp_tail(x, y);
}

}  // namespace harmsum
