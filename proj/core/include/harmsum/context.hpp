#pragma once

#include <utility>

#include "harmsum/bigreal.hpp"

namespace harmsum {

/// Requested accuracy plus the extra digits carried while computing.
class PrecisionContext {
 public:
  /// Throws DomainError unless target_digits ≥ 10 and guard_digits ≥ 10.
  PrecisionContext(int target_digits, int guard_digits);

  int target_digits() const noexcept { return target_; }
  int guard_digits() const noexcept { return guard_; }
  int working_digits() const noexcept { return target_ + guard_; }
  mpfr_prec_t working_bits() const noexcept { return digits_to_bits(working_digits()); }

  /// Same target, `extra` more guard digits.
  PrecisionContext widened(int extra) const { return {target_, guard_ + extra}; }

  /// 10^(−target_digits).
  BigReal tolerance() const;

  /// Makes this context's working precision current on the calling thread.
  ScopedPrecision activate() const noexcept { return ScopedPrecision(working_bits()); }

 private:
  int target_;
  int guard_;
};

/// Context with guard = max(15, target/4). Rejects target < 10.
PrecisionContext make_context(int target_digits);

/// Leading significant decimal digits on which a and b agree:
/// floor(−log10(|a−b| / max(|a|, |b|, 1))). Equal inputs give
/// kExactAgreement, which exceeds any working precision in use.
int agree_digits(const BigReal& a, const BigReal& b);
inline constexpr int kExactAgreement = 100000;

struct Estimate {
  BigReal value;
  BigReal est_error;
};

/// Evaluates f under ctx and under ctx widened by 10 digits. The error
/// estimate is twice their difference plus a rounding floor at the working
/// precision, so a later +10 recomputation stays inside it.
template <typename F>
Estimate dual_evaluate(const PrecisionContext& ctx, F&& f);

/// Rounding floor used by every error estimate: 10^(−(working−10))·max(1,|v|).
BigReal rounding_floor(const BigReal& v, const PrecisionContext& ctx);

template <typename F>
Estimate dual_evaluate(const PrecisionContext& ctx, F&& f) {
  const PrecisionContext wide = ctx.widened(10);
  BigReal hi;
  {
    auto p = wide.activate();
    hi = f(wide);
  }
  auto p = ctx.activate();
  BigReal lo = f(ctx);
  BigReal err = abs(lo - hi) * 2 + rounding_floor(lo, ctx);
  return {std::move(lo), std::move(err)};
}

}  // namespace harmsum
