#pragma once

#include <utility>

#include "harmsum/bigreal.hpp"

namespace harmsum::internal {

/// Copy of x rounded to `bits`.
inline BigReal round_to(const BigReal& x, mpfr_prec_t bits) {
  ScopedPrecision p(bits);
  BigReal r;
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

/// Runs f with `extra` more bits of working precision and rounds the result
/// back to the caller's precision.
template <typename F>
BigReal with_guard(mpfr_prec_t extra, F&& f) {
  const mpfr_prec_t outer = working_precision_bits();
  BigReal v;
  {
    ScopedPrecision p(outer + extra);
    v = std::forward<F>(f)();
  }
  return round_to(v, outer);
}

/// 2^(−bits) at the current precision: the relative size of one ulp.
inline BigReal epsilon() { return ldexp(BigReal(1), -static_cast<long>(working_precision_bits())); }

}  // namespace harmsum::internal
