#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "harmsum/bigreal.hpp"
#include "harmsum/context.hpp"
#include "harmsum/rational.hpp"

namespace harmsum::test {

/// Reference literal parsed at the current working precision.
inline BigReal lit(const char* text) { return BigReal::parse(text); }

/// Seeded source of exact rational test inputs, so every failure reproduces.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on the open interval (lo, hi) with denominator 2^20 spacing.
  Rational open(const Rational& lo, const Rational& hi) {
    constexpr long kSteps = 1L << 20;
    std::uniform_int_distribution<long> d(1, kSteps - 1);
    return lo + (hi - lo) * Rational(d(gen_), kSteps);
  }

  std::vector<Rational> open(const Rational& lo, const Rational& hi, int count) {
    std::vector<Rational> out;
    for (int i = 0; i < count; ++i) out.push_back(open(lo, hi));
    return out;
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

 private:
  std::mt19937_64 gen_;
};

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace harmsum::test

#define EXPECT_DIGITS(a, b, n) EXPECT_GE(::harmsum::agree_digits((a), (b)), (n))
