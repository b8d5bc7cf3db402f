#pragma once

#include <string_view>

#include "harmsum/bigreal.hpp"
#include "harmsum/context.hpp"
#include "harmsum/rational.hpp"

namespace harmsum {

// Special functions of a real argument. Every function evaluates under the
// given context; arguments outside the stated domain raise DomainError.

/// ζ(s) for real s > 1 or integer s ≤ 0.
BigReal riemann_zeta(const BigReal& s, const PrecisionContext& ctx);
/// η(s) = Σ (−1)^(n−1)/n^s, s > 0.
BigReal dirichlet_eta(const BigReal& s, const PrecisionContext& ctx);
/// β(s) = Σ (−1)^n/(2n+1)^s, s > 0.
BigReal dirichlet_beta(const BigReal& s, const PrecisionContext& ctx);
/// Li_s(z) for integer s ≥ 1 and −1 ≤ z ≤ 1 (z < 1 when s = 1).
BigReal polylog(int s, const BigReal& z, const PrecisionContext& ctx);
/// log Γ(x), x > 0.
BigReal loggamma(const BigReal& x, const PrecisionContext& ctx);
/// ψ^(n)(x), n ≥ 0, x > 0.
BigReal polygamma(int n, const BigReal& x, const PrecisionContext& ctx);
/// ψ^(−2)(z) = ∫₀^z log Γ(t) dt, z > 0.
BigReal negapolygamma2(const BigReal& z, const PrecisionContext& ctx);
/// log G(z) for the Barnes G-function, z > 0.
BigReal log_barnes_g(const BigReal& z, const PrecisionContext& ctx);
/// Ein(z) = ∫₀^z (1 − e^(−t))/t dt.
BigReal ein(const BigReal& z, const PrecisionContext& ctx);
/// Ei(x), x ≠ 0.
BigReal ei(const BigReal& x, const PrecisionContext& ctx);
/// ζ′(s) for integer s ≥ 2 or negative odd s.
BigReal zeta_prime(int s, const PrecisionContext& ctx);
/// ζ′(−1) = 1/12 − log A.
BigReal zeta_prime_neg1(const PrecisionContext& ctx);
/// ζ′(−2k+1, 1/2), k ≥ 1.
BigReal zeta_prime_half(int k, const PrecisionContext& ctx);

enum class QuarterPoint { OneQuarter, ThreeQuarters };
enum class QuarterKind { ZetaPrime, Polygamma };

/// Closed forms for ζ′(−2k+1, a) and ψ^(2k−1)(a), a ∈ {1/4, 3/4}, k ≥ 1,
/// built from Bernoulli numbers, β(2k), ζ′(−2k+1) and π.
BigReal quarter_values(int k, QuarterPoint which, QuarterKind kind, const PrecisionContext& ctx);

/// Parses "1/4" or "3/4".
QuarterPoint parse_quarter_point(std::string_view text);

namespace wp {

// The same functions at the calling thread's working precision. Each adds
// its own internal guard bits and rounds the result back.
BigReal zeta(const BigReal& s);
/// ζ(k) for integer k ≥ 2, memoized per precision.
BigReal zeta_int(int k);
BigReal eta(const BigReal& s);
BigReal beta(const BigReal& s);
BigReal polylog(int s, const BigReal& z);
BigReal loggamma(const BigReal& x);
BigReal digamma(const BigReal& x);
BigReal polygamma(int n, const BigReal& x);
/// Hurwitz ζ(s, x) for integer s ≥ 2 and x > 0.
BigReal hurwitz_zeta(int s, const BigReal& x);
BigReal negapolygamma2(const BigReal& z);
BigReal log_barnes_g(const BigReal& z);
BigReal ein(const BigReal& z);
BigReal ei(const BigReal& x);
BigReal zeta_prime(int s);
BigReal zeta_prime_half(int k);
BigReal quarter_values(int k, QuarterPoint which, QuarterKind kind);

}  // namespace wp

}  // namespace harmsum
