#include "harmsum/elementary.hpp"

#include <string>

#include "harmsum/error.hpp"

namespace harmsum {

namespace {

using UnaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

BigReal apply(UnaryOp op, const BigReal& x, const char* name) {
  BigReal r;
  op(r.get(), x.get(), MPFR_RNDN);
  r.require_finite(name);
  return r;
}

[[noreturn]] void domain(const char* name, const BigReal& x, const char* reason) {
  throw DomainError(name, x.to_string(20), reason);
}

}  // namespace

BigReal exp(const BigReal& x) { return apply(mpfr_exp, x, "exp"); }

BigReal expm1(const BigReal& x) { return apply(mpfr_expm1, x, "expm1"); }

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) domain("log", x, "argument must be > 0");
  return apply(mpfr_log, x, "log");
}

BigReal log1p(const BigReal& x) {
  if (x <= -1) domain("log1p", x, "argument must be > -1");
  return apply(mpfr_log1p, x, "log1p");
}

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) domain("sqrt", x, "argument must be >= 0");
  return apply(mpfr_sqrt, x, "sqrt");
}

BigReal cosh(const BigReal& x) { return apply(mpfr_cosh, x, "cosh"); }

BigReal sinh(const BigReal& x) { return apply(mpfr_sinh, x, "sinh"); }

BigReal atanh(const BigReal& x) {
  if (abs(x) >= 1) domain("atanh", x, "argument must satisfy |x| < 1");
  return apply(mpfr_atanh, x, "atanh");
}

BigReal sin(const BigReal& x) { return apply(mpfr_sin, x, "sin"); }

BigReal cos(const BigReal& x) { return apply(mpfr_cos, x, "cos"); }

BigReal pow(const BigReal& x, const BigReal& y) {
  if (x.sign() < 0 && !y.is_integer()) domain("pow", x, "negative base needs an integer exponent");
  if (x.is_zero() && y.sign() <= 0) domain("pow", x, "zero base needs a positive exponent");
  BigReal r;
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  r.require_finite("pow");
  return r;
}

BigReal pow(const BigReal& x, long n) {
  if (x.is_zero() && n <= 0) domain("pow", x, "zero base needs a positive exponent");
  BigReal r;
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  r.require_finite("pow");
  return r;
}

BigReal square(const BigReal& x) {
  BigReal r;
  mpfr_sqr(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal agm(const BigReal& a, const BigReal& b) {
  if (a.sign() <= 0 || b.sign() <= 0) domain("agm", a.sign() <= 0 ? a : b, "arguments must be > 0");
  BigReal r;
  mpfr_agm(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

ElementaryFn parse_elementary(std::string_view name) {
  if (name == "exp") return ElementaryFn::Exp;
  if (name == "log") return ElementaryFn::Log;
  if (name == "sqrt") return ElementaryFn::Sqrt;
  if (name == "cosh") return ElementaryFn::Cosh;
  if (name == "atanh") return ElementaryFn::Atanh;
  if (name == "pow") return ElementaryFn::Pow;
  throw ParseError("unknown elementary function '" + std::string(name) + "'");
}

BigReal elementary(ElementaryFn f, const BigReal& x, const PrecisionContext& ctx, const BigReal& y) {
  auto p = ctx.activate();
  switch (f) {
    case ElementaryFn::Exp: return exp(x);
    case ElementaryFn::Log: return log(x);
    case ElementaryFn::Sqrt: return sqrt(x);
    case ElementaryFn::Cosh: return cosh(x);
    case ElementaryFn::Atanh: return atanh(x);
    case ElementaryFn::Pow: return pow(x, y);
  }
  throw DomainError("elementary", x.to_string(20), "unknown function");
}

}  // namespace harmsum
