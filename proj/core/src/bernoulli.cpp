#include "harmsum/bernoulli.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "harmsum/error.hpp"

namespace harmsum {

namespace {

// Even-index values B_0, B_2, B_4, ... built from tangent numbers
// (Brent–Harvey in-place recurrence, integer-only).
class BernoulliTable {
 public:
  Rational even(int half_index) {
    std::lock_guard lock(mutex_);
    if (half_index >= static_cast<int>(values_.size())) grow(half_index);
    return values_[static_cast<size_t>(half_index)];
  }

 private:
  void grow(int half_index) {
    const int n = std::max(half_index, 2 * static_cast<int>(values_.size()) + 16);
    std::vector<BigInt> t(static_cast<size_t>(n) + 1);
    t[1] = 1;
    for (int k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
    for (int k = 2; k <= n; ++k) {
      for (int j = k; j <= n; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    }
    values_.assign(static_cast<size_t>(n) + 1, Rational(0));
    values_[0] = 1;
    for (int k = 1; k <= n; ++k) {
      BigInt four_k = BigInt(1) << (2 * k);
      Rational b = make_rational(BigInt(2 * k) * t[k], four_k * (four_k - 1));
      values_[static_cast<size_t>(k)] = (k % 2 == 1) ? b : Rational(-b);
    }
  }

  std::mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliTable& table() {
  static BernoulliTable instance;
  return instance;
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw DomainError("bernoulli", std::to_string(n), "index must be >= 0");
  if (n == 1) return Rational(-1, 2);
  if (n % 2 == 1) return Rational(0);
  return table().even(n / 2);
}

}  // namespace harmsum
