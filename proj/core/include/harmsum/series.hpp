#pragma once

#include <functional>
#include <string>
#include <vector>

#include "harmsum/bigreal.hpp"
#include "harmsum/context.hpp"

namespace harmsum {

enum class SignPattern { Alternating, EventuallyPositive, General };

/// Upper-bound decay class of |a_n|: factorial, geometric(r) or
/// power_log(m, j), meaning |a_n| ≲ C·log^j(n)/n^m.
struct DecayClass {
  enum class Kind { Factorial, Geometric, PowerLog };
  Kind kind = Kind::PowerLog;
  double ratio = 0;  // geometric
  double m = 2;      // power_log
  int j = 0;         // power_log

  static DecayClass factorial() { return {Kind::Factorial, 0, 0, 0}; }
  static DecayClass geometric(double r) { return {Kind::Geometric, r, 0, 0}; }
  static DecayClass power_log(double m, int j) { return {Kind::PowerLog, 0, m, j}; }
};

/// Yields a_start, a_start+1, ... on successive calls. A generator is owned by
/// one summation and may keep running state (partial harmonic sums etc.).
using TermGenerator = std::function<BigReal()>;

/// A series Σ_{n ≥ start_index} a_n with convergence metadata.
struct SeriesSpec {
  std::string name;
  /// Creates a fresh generator; called under the summation's working precision.
  std::function<TermGenerator()> terms;
  SignPattern sign_pattern = SignPattern::General;
  DecayClass decay;
  long start_index = 1;

  /// Wraps a random-access term function n ↦ a_n.
  static SeriesSpec from_term(std::string name, std::function<BigReal(long)> term,
                              SignPattern sign, DecayClass decay, long start_index = 1);
};

enum class SumMethod { Direct, AlternatingAccel, AsymptoticTail };

std::string to_string(SumMethod method);

struct SumResult {
  BigReal value;
  long terms_used = 0;
  SumMethod method = SumMethod::Direct;
  BigReal est_error;
};

inline constexpr long kDefaultTermBudget = 10'000'000;

/// Partial sum until the decay-class tail bound drops below 10^(−target−5).
/// Throws ConvergenceError naming the series when the budget runs out and
/// DomainError when the first terms contradict the declared decay class.
SumResult sum_direct(const SeriesSpec& s, const PrecisionContext& ctx,
                     long budget = kDefaultTermBudget);

/// Cohen–Villegas–Zagier acceleration using n_terms terms (n_terms ≤ 0 picks
/// a count from the working precision). Throws DomainError when the terms do
/// not alternate.
SumResult sum_alternating_accel(const SeriesSpec& s, long n_terms, const PrecisionContext& ctx);

/// Basis function N^(−exponent)·log^log_power(N) of the partial-sum tail.
struct TailTerm {
  int exponent;
  int log_power;
};

struct TailOptions {
  double node_ratio = 1.4;
  /// Nodes are rounded to multiples of this (2 for series whose terms carry a
  /// (−1)^n component).
  long node_multiple = 1;
  /// Extra working digits for the partial sums and the fit.
  int extra_digits = 20;
};

/// Partial sums at geometric nodes N_m ≥ cutoff are fitted to
/// S + Σ c·N^(−e)·log^l(N). Two fits on shifted node sets give the value and
/// the error estimate; disagreement beyond 10^(−target) throws ConvergenceError.
SumResult sum_with_asymptotic_tail(const SeriesSpec& s, long cutoff,
                                   const std::vector<TailTerm>& tail_model,
                                   const PrecisionContext& ctx, TailOptions options = {});

/// {N^−e, N^−e log N} pairs for e = first..last, in increasing order.
std::vector<TailTerm> power_log_model(int first, int last, int max_log_power);

/// The limit lim A_n·b_{n+1} of an Abel summation.
struct AbelLimit {
  /// nullptr means the limit is asserted to be zero.
  std::function<BigReal(const PrecisionContext&)> evaluator;

  static AbelLimit zero() { return {}; }
  BigReal value(const PrecisionContext& ctx) const;
};

struct AbelSeries {
  /// Σ A_k (b_k − b_{k+1}) with A_k = a_start + ... + a_k.
  SeriesSpec series;
  AbelLimit limit;
};

/// Summation by parts: Σ a_k b_k = Σ A_k (b_k − b_{k+1}) + lim A_n b_{n+1}.
/// Both inputs must share the start index. The sign pattern and decay class
/// of the result are supplied by the caller.
AbelSeries abel_transform(const SeriesSpec& a, const SeriesSpec& b, AbelLimit limit,
                          SignPattern sign, DecayClass decay);

namespace wp {

/// Σ_{k≥0} (−1)^k a_k by CVZ with n terms of the magnitudes a_k, at the
/// current working precision.
BigReal cvz(const std::function<BigReal(long)>& a, long n);

/// CVZ term count that reaches the current working precision.
long cvz_terms();

}  // namespace wp

}  // namespace harmsum
