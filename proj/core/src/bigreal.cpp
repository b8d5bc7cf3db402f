#include "harmsum/bigreal.hpp"

#include <climits>
#include <cmath>
#include <string>
#include <utility>

#include "harmsum/error.hpp"

namespace harmsum {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;

mpfr_prec_t& thread_bits() noexcept {
  thread_local mpfr_prec_t bits = 170;  // ~50 decimal digits
  return bits;
}

std::string describe(const BigReal& x) {
  if (!mpfr_number_p(x.get())) {
    return mpfr_nan_p(x.get()) ? "nan" : (mpfr_sgn(x.get()) < 0 ? "-inf" : "inf");
  }
  return x.to_string(20);
}

}  // namespace

mpfr_prec_t working_precision_bits() noexcept { return thread_bits(); }

int working_precision_digits() noexcept { return bits_to_digits(thread_bits()); }

mpfr_prec_t digits_to_bits(int digits) noexcept {
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 4;
}

int bits_to_digits(mpfr_prec_t bits) noexcept {
  return static_cast<int>(std::floor((static_cast<double>(bits) - 4) / kLog2Of10));
}

ScopedPrecision::ScopedPrecision(mpfr_prec_t bits) noexcept : saved_(thread_bits()) {
  thread_bits() = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
}

ScopedPrecision::~ScopedPrecision() { thread_bits() = saved_; }

BigReal::BigReal() {
  mpfr_init2(value_, thread_bits());
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(int value) : BigReal(static_cast<long>(value)) {}

BigReal::BigReal(long value) {
  mpfr_init2(value_, thread_bits());
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(long long value) : BigReal(static_cast<long>(value)) {
  static_assert(sizeof(long) == sizeof(long long));
}

BigReal::BigReal(unsigned long value) {
  mpfr_init2(value_, thread_bits());
  mpfr_set_ui(value_, value, MPFR_RNDN);
}

BigReal::BigReal(double value) {
  mpfr_init2(value_, thread_bits());
  mpfr_set_d(value_, value, MPFR_RNDN);
  require_finite("BigReal(double)");
}

BigReal::BigReal(const mpz_class& value) {
  mpfr_init2(value_, thread_bits());
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& value) {
  mpfr_init2(value_, thread_bits());
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal BigReal::parse(std::string_view text) {
  std::string s(text);
  BigReal r;
  char* end = nullptr;
  if (s.empty() || mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN), end != s.c_str() + s.size()) {
    throw ParseError("not a decimal number: '" + s + "'");
  }
  r.require_finite("parse");
  return r;
}

BigReal BigReal::pow10(long exponent) {
  BigReal r;
  mpfr_ui_pow_ui(r.value_, 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent),
                 MPFR_RNDN);
  if (exponent < 0) mpfr_ui_div(r.value_, 1, r.value_, MPFR_RNDN);
  return r;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal& BigReal::operator+=(const BigReal& rhs) {
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.is_zero()) throw DomainError("divide", describe(*this), "division by zero");
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  if (rhs == 0) throw DomainError("divide", describe(*this), "division by zero");
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

mpfr_prec_t BigReal::precision_bits() const noexcept { return mpfr_get_prec(value_); }

int BigReal::precision_digits() const noexcept { return bits_to_digits(precision_bits()); }

int BigReal::sign() const noexcept { return mpfr_sgn(value_); }

bool BigReal::is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }

bool BigReal::is_integer() const noexcept { return mpfr_integer_p(value_) != 0; }

double BigReal::to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }

long BigReal::to_long() const {
  if (!mpfr_fits_slong_p(value_, MPFR_RNDZ)) {
    throw DomainError("to_long", describe(*this), "out of range");
  }
  return mpfr_get_si(value_, MPFR_RNDZ);
}

std::string BigReal::to_string(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  if (!mpfr_number_p(value_)) return describe(*this);
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant_digits), value_,
                           MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  // Value is 0.d1d2d3... × 10^exp10.
  const long e = static_cast<long>(exp10);
  std::string out;
  if (e > 0 && e <= 21) {
    if (static_cast<size_t>(e) >= digits.size()) {
      out = digits + std::string(static_cast<size_t>(e) - digits.size(), '0');
    } else {
      out = digits.substr(0, static_cast<size_t>(e)) + "." + digits.substr(static_cast<size_t>(e));
    }
  } else if (e <= 0 && e > -6) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + digits;
  } else {
    out = digits.substr(0, 1) + (digits.size() > 1 ? "." + digits.substr(1) : "") + "e" +
          std::to_string(e - 1);
  }
  return sign + out;
}

std::string BigReal::to_string() const { return to_string(precision_digits()); }

void BigReal::require_finite(const char* operation) const {
  if (!mpfr_number_p(value_)) throw DomainError(operation, describe(*this), "non-finite result");
}

BigReal operator-(const BigReal& x) {
  BigReal r;
  mpfr_neg(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r;
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r;
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r;
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  if (b.is_zero()) throw DomainError("divide", describe(a), "division by zero");
  BigReal r;
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, long b) {
  BigReal r;
  mpfr_add_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, long b) {
  BigReal r;
  mpfr_sub_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, long b) {
  BigReal r;
  mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, long b) {
  if (b == 0) throw DomainError("divide", describe(a), "division by zero");
  BigReal r;
  mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

BigReal operator+(long a, const BigReal& b) { return b + a; }

BigReal operator-(long a, const BigReal& b) {
  BigReal r;
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

BigReal operator*(long a, const BigReal& b) { return b * a; }

BigReal operator/(long a, const BigReal& b) {
  if (b.is_zero()) throw DomainError("divide", std::to_string(a), "division by zero");
  BigReal r;
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

int compare(const BigReal& a, const BigReal& b) noexcept { return mpfr_cmp(a.get(), b.get()); }

int compare(const BigReal& a, long b) noexcept { return mpfr_cmp_si(a.get(), b); }

BigReal abs(const BigReal& x) {
  BigReal r;
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal min(const BigReal& a, const BigReal& b) { return a <= b ? a : b; }

BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }

BigReal floor(const BigReal& x) {
  BigReal r;
  mpfr_floor(r.get(), x.get());
  return r;
}

BigReal frac(const BigReal& x) { return x - floor(x); }

BigReal ldexp(const BigReal& x, long e) {
  BigReal r;
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

}  // namespace harmsum
