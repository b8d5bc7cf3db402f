#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "harmsum/bigreal.hpp"
#include "harmsum/context.hpp"
#include "harmsum/rational.hpp"

namespace harmsum {

/// Exact partial sums H_n, H_n^(p) and H̄_n. Tables grow incrementally from
/// the last cached index; lookups are serialized by a mutex.
class HarmonicCache {
 public:
  enum class Kind { Plain, Generalized, Skew };

  /// p is ignored for Plain and Skew.
  Rational get(Kind kind, long n, int p = 1);

  static HarmonicCache& global();

 private:
  std::mutex mutex_;
  std::map<std::pair<Kind, int>, std::vector<Rational>> tables_;
};

/// H_n = Σ_{j≤n} 1/j, n ≥ 1.
Rational harmonic(long n);
/// H_n^(p) = Σ_{j≤n} 1/j^p, n ≥ 1, p ≥ 1.
Rational gen_harmonic(long n, int p);
/// H̄_n = Σ_{j≤n} (−1)^(j−1)/j, n ≥ 1.
Rational skew_harmonic(long n);

/// z(z+1)…(z+k−1), k ≥ 1.
BigReal pochhammer_rising(const BigReal& z, long k);

/// ζ(p) − H_n^(p), p ≥ 2, n ≥ 0.
BigReal tail_zeta(int p, long n, const PrecisionContext& ctx);
/// e^y − Σ_{j≤n} y^j/j!, summed as the remainder series.
BigReal exp_tail(const BigReal& y, long n, const PrecisionContext& ctx);
/// {n!·e} = n!·exp_tail(1, n), n ≥ 1.
BigReal frac_ne(long n, const PrecisionContext& ctx);

/// Σ_{n≥1} (ζ(2) − H_n^(2)) x^n for −1 ≤ x < 1.
BigReal gf_tail_zeta2(const BigReal& x, const PrecisionContext& ctx);
/// Σ_{n≥1} (ζ(3) − H_n^(3)) x^n / n for −1 ≤ x ≤ 1.
BigReal gf_tail_zeta3_over_n(const BigReal& x, const PrecisionContext& ctx);
/// Σ_{n≥0} exp_tail(y, n) x^n for 0 ≤ x ≤ 1.
BigReal gf_exp_tail(const BigReal& x, const BigReal& y, const PrecisionContext& ctx);

namespace wp {

BigReal tail_zeta(int p, long n);
BigReal exp_tail(const BigReal& y, long n);
BigReal gf_tail_zeta2(const BigReal& x);
BigReal gf_tail_zeta3_over_n(const BigReal& x);
BigReal gf_exp_tail(const BigReal& x, const BigReal& y);

}  // namespace wp

}  // namespace harmsum
