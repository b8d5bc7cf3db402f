#pragma once

#include <string_view>

#include "harmsum/bigreal.hpp"
#include "harmsum/context.hpp"

namespace harmsum {

// Elementary functions at the calling thread's working precision. Arguments
// outside the real domain raise DomainError naming the function and argument.
BigReal exp(const BigReal& x);
BigReal expm1(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal atanh(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal square(const BigReal& x);
/// Arithmetic-geometric mean of two positive numbers.
BigReal agm(const BigReal& a, const BigReal& b);

enum class ElementaryFn { Exp, Log, Sqrt, Cosh, Atanh, Pow };

/// Parses "exp", "log", "sqrt", "cosh", "atanh", "pow".
ElementaryFn parse_elementary(std::string_view name);

/// f(x) under ctx. Pow takes the exponent as `y`; the other functions ignore it.
BigReal elementary(ElementaryFn f, const BigReal& x, const PrecisionContext& ctx,
                   const BigReal& y = BigReal(1));

}  // namespace harmsum
