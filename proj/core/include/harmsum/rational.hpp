#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "harmsum/bigreal.hpp"

namespace harmsum {

using BigInt = mpz_class;

/// Exact rational, always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

/// num/den in lowest terms; throws DomainError when den is zero.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Accepts "a/b" or an integer literal, optional leading sign. Decimal
/// literals such as "0.5" are rejected with ParseError.
Rational parse_rational(std::string_view text);

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);

/// Nearest BigReal at the current working precision.
BigReal to_real(const Rational& q);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace harmsum
