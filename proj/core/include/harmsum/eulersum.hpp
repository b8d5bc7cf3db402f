#pragma once

#include "harmsum/expression.hpp"

namespace harmsum {

/// Σ H_n/n^k = (1 + k/2)ζ(k+1) − ½ Σ_{n=1}^{k−2} ζ(k−n)ζ(n+1), k ≥ 2, normalized.
Expression euler_classical(int k);

/// Σ (−1)^(n−1) H_n^(p)/n^q for p ≥ 1, q ≥ 2, p + q odd, normalized.
///
/// Index conventions: j + 2k = p and i + 2k = q range over j, i, k ≥ 0, with
/// η(0) = 1/2 and η(1) = log 2. For p = 1 the two ζ(1) terms cancel exactly.
Expression euler_alternating(int p, int q);

/// ∫₀¹ log^q(1+x)/x dx = log^(q+1)2/(q+1) + q!ζ(q+1)
///   − q! Σ_{k=0}^{q} log^(q−k)2/(q−k)! · Li_{k+1}(1/2), q ≥ 1, normalized.
Expression log_power_integral_closed(int q);

}  // namespace harmsum
