#include "harmsum/context.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "harmsum/error.hpp"

namespace harmsum {

PrecisionContext::PrecisionContext(int target_digits, int guard_digits)
    : target_(target_digits), guard_(guard_digits) {
  if (target_digits < 10) {
    throw DomainError("PrecisionContext", std::to_string(target_digits), "target_digits must be >= 10");
  }
  if (guard_digits < 10) {
    throw DomainError("PrecisionContext", std::to_string(guard_digits), "guard_digits must be >= 10");
  }
}

BigReal PrecisionContext::tolerance() const {
  auto p = activate();
  return BigReal::pow10(-target_);
}

PrecisionContext make_context(int target_digits) {
  if (target_digits < 10) {
    throw DomainError("make_context", std::to_string(target_digits), "target_digits must be >= 10");
  }
  return {target_digits, std::max(15, target_digits / 4)};
}

int agree_digits(const BigReal& a, const BigReal& b) {
  const mpfr_prec_t bits = std::max(a.precision_bits(), b.precision_bits());
  ScopedPrecision p(bits + 16);
  const BigReal diff = abs(a - b);
  if (diff.is_zero()) return kExactAgreement;
  const BigReal scale = max(max(abs(a), abs(b)), BigReal(1));
  BigReal rel = diff / scale;
  // log10 of the ratio; the small nudge keeps exact powers of ten such as
  // 1e-30 from landing on 29 after rounding.
  BigReal lg;
  mpfr_log10(lg.get(), rel.get(), MPFR_RNDN);
  const double digits = -lg.to_double();
  if (digits <= 0) return 0;
  const int n = static_cast<int>(std::floor(digits + 1e-9));
  return std::min(n, kExactAgreement - 1);
}

BigReal rounding_floor(const BigReal& v, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  return BigReal::pow10(-(ctx.working_digits() - 10)) * max(abs(v), BigReal(1));
}

}  // namespace harmsum
