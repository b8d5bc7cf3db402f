#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace harmsum {

/// Precision helpers. Working precision is thread-local: every BigReal
/// produced by an arithmetic operation is rounded to the calling thread's
/// current working precision.
mpfr_prec_t working_precision_bits() noexcept;
int working_precision_digits() noexcept;
mpfr_prec_t digits_to_bits(int digits) noexcept;
int bits_to_digits(mpfr_prec_t bits) noexcept;

/// Sets the thread's working precision for the lifetime of the guard.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(mpfr_prec_t bits) noexcept;
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  mpfr_prec_t saved_;
};

/// Arbitrary-precision finite real number (RAII over mpfr_t).
///
/// Non-finite intermediate results never escape: operations that would
/// produce NaN or an infinity throw DomainError instead.
class BigReal {
 public:
  BigReal();
  BigReal(int value);   // NOLINT(google-explicit-constructor)
  BigReal(long value);  // NOLINT(google-explicit-constructor)
  BigReal(long long value);  // NOLINT(google-explicit-constructor)
  BigReal(unsigned long value);  // NOLINT(google-explicit-constructor)
  explicit BigReal(double value);
  explicit BigReal(const mpz_class& value);
  explicit BigReal(const mpq_class& value);

  /// Parses a decimal literal such as "-1.25e-3" at working precision.
  static BigReal parse(std::string_view text);
  /// 10^exponent at working precision.
  static BigReal pow10(long exponent);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  mpfr_prec_t precision_bits() const noexcept;
  int precision_digits() const noexcept;

  int sign() const noexcept;
  bool is_zero() const noexcept;
  bool is_integer() const noexcept;

  double to_double() const noexcept;
  /// Truncates toward zero; throws DomainError if out of range.
  long to_long() const;
  /// Decimal representation with the given number of significant digits.
  std::string to_string(int significant_digits) const;
  /// Decimal representation at the value's own precision.
  std::string to_string() const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  /// Throws DomainError naming `operation` unless the value is finite.
  void require_finite(const char* operation) const;

 private:
  mpfr_t value_;
};

BigReal operator-(const BigReal& x);
BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator+(const BigReal& a, long b);
BigReal operator-(const BigReal& a, long b);
BigReal operator*(const BigReal& a, long b);
BigReal operator/(const BigReal& a, long b);
BigReal operator+(long a, const BigReal& b);
BigReal operator-(long a, const BigReal& b);
BigReal operator*(long a, const BigReal& b);
BigReal operator/(long a, const BigReal& b);

// Overloads for int literals avoid ambiguity between the long and BigReal
// conversions.
inline BigReal operator+(const BigReal& a, int b) { return a + long{b}; }
inline BigReal operator-(const BigReal& a, int b) { return a - long{b}; }
inline BigReal operator*(const BigReal& a, int b) { return a * long{b}; }
inline BigReal operator/(const BigReal& a, int b) { return a / long{b}; }
inline BigReal operator+(int a, const BigReal& b) { return long{a} + b; }
inline BigReal operator-(int a, const BigReal& b) { return long{a} - b; }
inline BigReal operator*(int a, const BigReal& b) { return long{a} * b; }
inline BigReal operator/(int a, const BigReal& b) { return long{a} / b; }

int compare(const BigReal& a, const BigReal& b) noexcept;
int compare(const BigReal& a, long b) noexcept;

inline bool operator==(const BigReal& a, const BigReal& b) noexcept { return compare(a, b) == 0; }
inline bool operator!=(const BigReal& a, const BigReal& b) noexcept { return compare(a, b) != 0; }
inline bool operator<(const BigReal& a, const BigReal& b) noexcept { return compare(a, b) < 0; }
inline bool operator<=(const BigReal& a, const BigReal& b) noexcept { return compare(a, b) <= 0; }
inline bool operator>(const BigReal& a, const BigReal& b) noexcept { return compare(a, b) > 0; }
inline bool operator>=(const BigReal& a, const BigReal& b) noexcept { return compare(a, b) >= 0; }
inline bool operator==(const BigReal& a, long b) noexcept { return compare(a, b) == 0; }
inline bool operator!=(const BigReal& a, long b) noexcept { return compare(a, b) != 0; }
inline bool operator<(const BigReal& a, long b) noexcept { return compare(a, b) < 0; }
inline bool operator<=(const BigReal& a, long b) noexcept { return compare(a, b) <= 0; }
inline bool operator>(const BigReal& a, long b) noexcept { return compare(a, b) > 0; }
inline bool operator>=(const BigReal& a, long b) noexcept { return compare(a, b) >= 0; }
inline bool operator==(const BigReal& a, int b) noexcept { return compare(a, long{b}) == 0; }
inline bool operator!=(const BigReal& a, int b) noexcept { return compare(a, long{b}) != 0; }
inline bool operator<(const BigReal& a, int b) noexcept { return compare(a, long{b}) < 0; }
inline bool operator<=(const BigReal& a, int b) noexcept { return compare(a, long{b}) <= 0; }
inline bool operator>(const BigReal& a, int b) noexcept { return compare(a, long{b}) > 0; }
inline bool operator>=(const BigReal& a, int b) noexcept { return compare(a, long{b}) >= 0; }

BigReal abs(const BigReal& x);
BigReal min(const BigReal& a, const BigReal& b);
BigReal max(const BigReal& a, const BigReal& b);
BigReal floor(const BigReal& x);
/// x − floor(x), in [0, 1).
BigReal frac(const BigReal& x);
/// x · 2^e, exact.
BigReal ldexp(const BigReal& x, long e);

}  // namespace harmsum
