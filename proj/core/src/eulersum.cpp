#include "harmsum/eulersum.hpp"

#include <string>

#include "harmsum/error.hpp"

namespace harmsum {

namespace {

Expression zeta(int k) { return Expression::symbol(BasisSymbol::zeta(k)); }
Expression eta(int k) { return Expression::symbol(BasisSymbol::eta(k)); }
Expression log2() { return Expression::symbol(BasisSymbol::simple(BasisSymbol::Kind::LogTwo)); }

Rational binom(int n, int k) { return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))); }

}  // namespace

Expression euler_classical(int k) {
  if (k < 2) throw DomainError("euler_classical", std::to_string(k), "k must be >= 2");
  Expression e = make_rational(2 + k, 2) * zeta(k + 1);
  for (int n = 1; n <= k - 2; ++n) e -= Rational(1, 2) * zeta(k - n) * zeta(n + 1);
  return expr_normalize(e);
}

Expression euler_alternating(int p, int q) {
  const std::string arg = std::to_string(p) + ", " + std::to_string(q);
  if (p < 1 || q < 2) throw DomainError("euler_alternating", arg, "requires p >= 1 and q >= 2");
  if ((p + q) % 2 == 0) throw DomainError("euler_alternating", arg, "p + q must be odd");

  const int sign_p = p % 2 == 0 ? 1 : -1;  // (−1)^p
  Expression e = make_rational(1 - sign_p, 2) * zeta(p) * eta(q) + Rational(1, 2) * eta(p + q);
  for (int k = 0; 2 * k <= p; ++k) {
    const int j = p - 2 * k;
    const int sign = (j + 1) % 2 == 0 ? 1 : -1;
    e += Rational(sign) * binom(q + j - 1, q - 1) * eta(q + j) * eta(2 * k);
  }
  for (int k = 0; 2 * k <= q; ++k) {
    const int i = q - 2 * k;
    e += Rational(sign_p) * binom(p + i - 1, p - 1) * zeta(p + i) * eta(2 * k);
  }
  Expression out = expr_normalize(e);
  for (const auto& t : out.terms()) {
    for (const auto& f : t.monomial) {
      if (f.first == BasisSymbol::zeta(1)) {
        throw Error("euler_alternating(" + arg + "): zeta(1) did not cancel");
      }
    }
  }
  return out;
}

Expression log_power_integral_closed(int q) {
  if (q < 1) throw DomainError("log_power_integral_closed", std::to_string(q), "q must be >= 1");
  const Rational qf(factorial(static_cast<unsigned long>(q)));
  Expression e = make_rational(1, q + 1) * pow(log2(), q + 1) + qf * zeta(q + 1);
  for (int k = 0; k <= q; ++k) {
    const Rational c = qf / Rational(factorial(static_cast<unsigned long>(q - k)));
    e -= c * pow(log2(), q - k) * Expression::symbol(BasisSymbol::polylog_half(k + 1));
  }
  return expr_normalize(e);
}

}  // namespace harmsum
