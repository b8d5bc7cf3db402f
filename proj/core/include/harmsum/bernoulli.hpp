#pragma once

#include "harmsum/rational.hpp"

namespace harmsum {

/// Exact Bernoulli number B_n with B_1 = −1/2; B_n = 0 for odd n ≥ 3.
/// Results are memoized and safe to request from any thread.
Rational bernoulli(int n);

}  // namespace harmsum
