#pragma once

#include <stdexcept>
#include <string>

namespace harmsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside a function's real domain, or a result that is not
/// a finite real number.
class DomainError : public Error {
 public:
  DomainError(const std::string& function, const std::string& argument,
              const std::string& reason)
      : Error(function + "(" + argument + "): " + reason),
        function_(function),
        argument_(argument) {}

  const std::string& function() const noexcept { return function_; }
  const std::string& argument() const noexcept { return argument_; }

 private:
  std::string function_;
  std::string argument_;
};

/// A summation, extrapolation or quadrature that could not reach the
/// requested accuracy within its budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, int achieved_digits)
      : Error(what + " (achieved ~" + std::to_string(achieved_digits) +
              " digits)"),
        achieved_digits_(achieved_digits) {}

  int achieved_digits() const noexcept { return achieved_digits_; }

 private:
  int achieved_digits_;
};

/// Malformed textual input (rationals, expressions, parameters).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace harmsum
