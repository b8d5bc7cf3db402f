#include "harmsum/constants.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "harmsum/bernoulli.hpp"
#include "harmsum/elementary.hpp"
#include "harmsum/error.hpp"
#include "harmsum/specfun.hpp"
#include "internal.hpp"

namespace harmsum {

namespace {

constexpr mpfr_prec_t kGuard = 64;

using MpfrConstant = int (*)(mpfr_ptr, mpfr_rnd_t);

BigReal from_mpfr(MpfrConstant f) {
  BigReal r;
  f(r.get(), MPFR_RNDN);
  return r;
}

// Cl₂(π/3) from its Bernoulli expansion around 0.
BigReal gieseking() {
  const BigReal theta = from_mpfr(mpfr_const_pi) / 3;
  const BigReal theta2 = square(theta);
  BigReal sum = theta - theta * log(theta);
  BigReal power = theta;       // θ^(2n+1)
  BigReal fact(1);             // (2n+1)!
  for (long n = 1;; ++n) {
    power *= theta2;
    fact *= (2 * n) * (2 * n + 1);
    const BigReal term = to_real(abs(bernoulli(static_cast<int>(2 * n)))) * power / (fact * (2 * n));
    sum += term;
    if (abs(term) <= internal::epsilon() * sum / 4) return sum;
  }
}

BigReal glaisher() {
  const BigReal pi = from_mpfr(mpfr_const_pi);
  const BigReal gamma = from_mpfr(mpfr_const_euler);
  const BigReal log_a = (gamma + log(pi * 2)) / 12 - wp::zeta_prime(2) / (square(pi) * 2);
  return exp(log_a);
}

BigReal compute(ConstantName name) {
  switch (name) {
    case ConstantName::EulerGamma: return from_mpfr(mpfr_const_euler);
    case ConstantName::Pi: return from_mpfr(mpfr_const_pi);
    case ConstantName::LogTwo: return from_mpfr(mpfr_const_log2);
    case ConstantName::Catalan: return from_mpfr(mpfr_const_catalan);
    case ConstantName::Glaisher: return glaisher();
    case ConstantName::Lemniscate: return from_mpfr(mpfr_const_pi) / agm(BigReal(1), sqrt(BigReal(2)));
    case ConstantName::Gieseking: return gieseking();
    case ConstantName::EulerGompertz: return -exp(BigReal(1)) * wp::ei(BigReal(-1));
  }
  throw DomainError("constant", std::to_string(static_cast<int>(name)), "unknown constant");
}

class ConstantCache {
 public:
  BigReal get(ConstantName name) {
    const auto key = std::make_pair(static_cast<int>(name), working_precision_bits());
    {
      std::shared_lock lock(mutex_);
      auto it = values_.find(key);
      if (it != values_.end()) return it->second;
    }
    BigReal v = internal::with_guard(kGuard, [name] { return compute(name); });
    std::unique_lock lock(mutex_);
    return values_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<int, mpfr_prec_t>, BigReal> values_;
};

ConstantCache& cache() {
  static ConstantCache instance;
  return instance;
}

}  // namespace

std::string_view constant_label(ConstantName name) {
  switch (name) {
    case ConstantName::EulerGamma: return "gamma";
    case ConstantName::Pi: return "pi";
    case ConstantName::LogTwo: return "log2";
    case ConstantName::Glaisher: return "glaisher";
    case ConstantName::Catalan: return "catalan";
    case ConstantName::Lemniscate: return "lemniscate";
    case ConstantName::Gieseking: return "gieseking";
    case ConstantName::EulerGompertz: return "euler-gompertz";
  }
  return "?";
}

ConstantName parse_constant(std::string_view label) {
  for (int i = 0; i <= static_cast<int>(ConstantName::EulerGompertz); ++i) {
    const auto name = static_cast<ConstantName>(i);
    if (constant_label(name) == label) return name;
  }
  throw ParseError("unknown constant '" + std::string(label) + "'");
}

BigReal constant(ConstantName name, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return cache().get(name);
}

BigReal constant(ConstantName name) { return cache().get(name); }

BigReal log_glaisher() {
  return internal::with_guard(16, [] { return log(constant(ConstantName::Glaisher)); });
}

}  // namespace harmsum
