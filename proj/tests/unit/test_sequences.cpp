#include <gtest/gtest.h>

#include <memory>

#include "harmsum/constants.hpp"
#include "harmsum/elementary.hpp"
#include "harmsum/error.hpp"
#include "harmsum/quadrature.hpp"
#include "harmsum/sequences.hpp"
#include "harmsum/series.hpp"
#include "harmsum/specfun.hpp"
#include "support.hpp"

namespace harmsum {
namespace {

using test::lit;
using test::q;

class Sequences : public ::testing::Test {
 protected:
  const PrecisionContext ctx = make_context(30);
  ScopedPrecision scope = ctx.activate();
  const int t = ctx.target_digits();

  BigReal r(long num, long den = 1) const { return to_real(q(num, den)); }
  BigReal zeta(long s) const { return riemann_zeta(BigReal(s), ctx); }
  BigReal e() const { return exp(BigReal(1)); }
};

TEST(Harmonic, Examples) {
  EXPECT_EQ(harmonic(1), q(1));
  EXPECT_EQ(harmonic(3), q(11, 6));
  EXPECT_EQ(harmonic(6), q(49, 20));
  EXPECT_EQ(gen_harmonic(2, 2), q(5, 4));
  EXPECT_EQ(gen_harmonic(3, 3), q(251, 216));
  EXPECT_EQ(skew_harmonic(1), q(1));
  EXPECT_EQ(skew_harmonic(2), q(1, 2));
  EXPECT_EQ(skew_harmonic(4), q(7, 12));
  for (long n = 1; n <= 30; ++n) EXPECT_EQ(gen_harmonic(n, 1), harmonic(n));
  EXPECT_THROW(harmonic(0), DomainError);
  EXPECT_THROW(gen_harmonic(3, 0), DomainError);
  EXPECT_THROW(skew_harmonic(0), DomainError);
}

TEST(Harmonic, CacheDifferences) {
  test::Sampler s(11);
  for (int i = 0; i < 30; ++i) {
    const long n = s.integer(2, 400);
    const int p = static_cast<int>(s.integer(1, 5));
    EXPECT_EQ(harmonic(n) - harmonic(n - 1), q(1, n));
    EXPECT_EQ(skew_harmonic(n) - skew_harmonic(n - 1), q(n % 2 ? 1 : -1, n));
    Rational np = 1;
    for (int j = 0; j < p; ++j) np *= n;
    EXPECT_EQ(gen_harmonic(n, p) - gen_harmonic(n - 1, p), 1 / np);
  }
}

TEST(Harmonic, DirectRationalSums) {
  Rational h = 0, h3 = 0, skew = 0;
  for (long j = 1; j <= 50; ++j) {
    h += q(1, j);
    h3 += q(1, j * j * j);
    skew += q(j % 2 ? 1 : -1, j);
  }
  EXPECT_EQ(harmonic(50), h);
  EXPECT_EQ(gen_harmonic(50, 3), h3);
  EXPECT_EQ(skew_harmonic(50), skew);
}

TEST_F(Sequences, Pochhammer) {
  EXPECT_EQ(pochhammer_rising(BigReal(1), 3), 6);
  EXPECT_EQ(pochhammer_rising(r(7, 3), 1), r(7, 3));
  EXPECT_EQ(pochhammer_rising(r(1, 2), 2), r(3, 4));
  EXPECT_DIGITS(pochhammer_rising(r(1, 3), 5), r(1 * 4 * 7 * 10 * 13, 243), t);
}

TEST_F(Sequences, TailZeta) {
  EXPECT_DIGITS(tail_zeta(2, 1, ctx), zeta(2) - 1, t);
  EXPECT_DIGITS(tail_zeta(3, 2, ctx), zeta(3) - r(9, 8), t);
  EXPECT_DIGITS(tail_zeta(2, 0, ctx), zeta(2), t);
  EXPECT_THROW(tail_zeta(1, 3, ctx), DomainError);

  // c_n = 1/n − (ζ(2) − H_n^(2)) is positive and c_{n+1} − c_n = −1/(n(n+1)²).
  BigReal prev_tail = tail_zeta(2, 1, ctx);
  BigReal prev_c = 1 - prev_tail;
  for (long n = 1; n <= 40; ++n) {
    const BigReal tail = tail_zeta(2, n + 1, ctx);
    const BigReal c = BigReal(1) / (n + 1) - tail;
    EXPECT_GT(tail, 0);
    EXPECT_LT(tail, prev_tail);
    EXPECT_GT(c, 0);
    EXPECT_DIGITS(c - prev_c, -BigReal(1) / (n * (n + 1) * (n + 1)), t - 5) << n;
    prev_tail = tail;
    prev_c = c;
  }
}

TEST_F(Sequences, ExpTail) {
  EXPECT_TRUE(exp_tail(BigReal(0), 4, ctx).is_zero());
  EXPECT_DIGITS(exp_tail(BigReal(1), 0, ctx), e() - 1, t);
  EXPECT_DIGITS(exp_tail(BigReal(1), 3, ctx), e() - r(8, 3), t);
  BigReal remainder = 0;
  BigReal term = BigReal(1) / 24;
  for (long j = 4; j < 80; ++j) {
    remainder += term;
    term /= j + 1;
  }
  EXPECT_DIGITS(exp_tail(BigReal(1), 3, ctx), remainder, t);
  EXPECT_DIGITS(exp_tail(BigReal(-2), 5, ctx), exp(BigReal(-2)) - r(1, 15), t);
}

TEST_F(Sequences, FracNe) {
  EXPECT_DIGITS(frac_ne(1, ctx), e() - 2, t);
  EXPECT_DIGITS(frac_ne(2, ctx), 2 * e() - 5, t);
  for (long n = 1; n <= 40; ++n) {
    const BigReal v = frac_ne(n, ctx);
    EXPECT_GT(v, 0);
    EXPECT_LT(v, 1);
  }
  EXPECT_THROW(frac_ne(0, ctx), DomainError);
}

TEST_F(Sequences, GfTailZeta2) {
  EXPECT_TRUE(gf_tail_zeta2(BigReal(0), ctx).is_zero());
  BigReal partial = 0;
  BigReal half_pow = 1;
  for (long n = 1; n <= 220; ++n) {
    half_pow /= 2;
    partial += tail_zeta(2, n, ctx) * half_pow;
  }
  EXPECT_DIGITS(gf_tail_zeta2(r(1, 2), ctx), partial, t);
  EXPECT_DIGITS(gf_tail_zeta2(r(1, 2), ctx), zeta(2) - 2 * polylog(2, r(1, 2), ctx), t);

  // x = −1: the alternating tail series, accelerated.
  const SeriesSpec alt = SeriesSpec::from_term(
      "alt-tail", [this](long n) { return n % 2 ? -tail_zeta(2, n, ctx) : tail_zeta(2, n, ctx); },
      SignPattern::Alternating, DecayClass::power_log(1, 0));
  const BigReal accelerated = sum_alternating_accel(alt, 0, ctx).value;
  EXPECT_DIGITS(gf_tail_zeta2(BigReal(-1), ctx), accelerated, t);
  EXPECT_DIGITS(gf_tail_zeta2(BigReal(-1), ctx), (dirichlet_eta(BigReal(2), ctx) - zeta(2)) / 2, t);
  EXPECT_THROW(gf_tail_zeta2(BigReal(1), ctx), DomainError);
}

TEST_F(Sequences, GfTailZeta3OverN) {
  EXPECT_TRUE(gf_tail_zeta3_over_n(BigReal(0), ctx).is_zero());
  EXPECT_DIGITS(gf_tail_zeta3_over_n(BigReal(1), ctx), zeta(4) / 4, t);
  BigReal partial = 0;
  BigReal half_pow = 1;
  for (long n = 1; n <= 220; ++n) {
    half_pow /= 2;
    partial += tail_zeta(3, n, ctx) * half_pow / n;
  }
  EXPECT_DIGITS(gf_tail_zeta3_over_n(r(1, 2), ctx), partial, t);
  EXPECT_THROW(gf_tail_zeta3_over_n(r(11, 10), ctx), DomainError);
}

TEST_F(Sequences, GfExpTail) {
  for (long y : {-2L, 1L, 3L}) {
    const BigReal yv(y);
    EXPECT_DIGITS(gf_exp_tail(BigReal(1), yv, ctx), yv * exp(yv), t) << y;
    EXPECT_DIGITS(gf_exp_tail(BigReal(0), yv, ctx), exp(yv) - 1, t) << y;
  }
  EXPECT_DIGITS(gf_exp_tail(r(1, 2), BigReal(1), ctx), 2 * (e() - sqrt(e())), t);
  BigReal partial = 0;
  BigReal half_pow = 1;
  for (long n = 0; n <= 220; ++n) {
    partial += exp_tail(BigReal(1), n, ctx) * half_pow;
    half_pow /= 2;
  }
  EXPECT_DIGITS(gf_exp_tail(r(1, 2), BigReal(1), ctx), partial, t);
}

TEST_F(Sequences, HarmonicIntegralRepresentation) {
  for (long n = 1; n <= 20; ++n) {
    const BigReal v = integrate_param("harmonic-rep", {{"n", q(n)}}, ctx);
    EXPECT_GE(agree_digits(v, to_real(harmonic(n))), 25) << n;
  }
}

TEST_F(Sequences, SkewIntegralRepresentation) {
  for (long n = 1; n <= 20; ++n) {
    const BigReal v = integrate_param("skew-rep", {{"n", q(n)}}, ctx);
    EXPECT_GE(agree_digits(v, to_real(skew_harmonic(n))), 25) << n;
  }
}

TEST_F(Sequences, TailIdentity) {
  // Σ_{n≥1} (ζ(2) − H_n^(2) − 1/(n+k)) = H_{k+1} + k/(k+1) − ζ(2).
  for (long k = 0; k <= 2; ++k) {
    SeriesSpec s;
    s.name = "tail2-k" + std::to_string(k);
    s.terms = [k]() -> TermGenerator {
      auto tail = std::make_shared<BigReal>(wp::zeta_int(2));
      auto n = std::make_shared<long>(0);
      return [tail, n, k]() {
        ++*n;
        *tail -= BigReal(1) / (*n * *n);
        return *tail - BigReal(1) / (*n + k);
      };
    };
    s.sign_pattern = SignPattern::General;
    s.decay = DecayClass::power_log(2, 0);
    const SumResult res = sum_with_asymptotic_tail(s, 200, power_log_model(1, 12, 0), ctx);
    const BigReal expected = to_real(harmonic(k + 1) + q(k, k + 1)) - zeta(2);
    EXPECT_GE(agree_digits(res.value, expected), 20) << "k = " << k;
  }
}

TEST_F(Sequences, LagrangeBound) {
  for (const Rational& yr : {q(-3), q(-1), q(1, 2), q(2)}) {
    const BigReal y = to_real(yr);
    BigReal power = abs(y);
    BigReal fact = 1;
    for (long n = 0; n <= 20; ++n) {
      fact *= n + 1;
      const BigReal bound = exp(abs(y)) * power / fact;
      EXPECT_LE(abs(exp_tail(y, n, ctx)), bound) << "y = " << to_string(yr) << ", n = " << n;
      power *= abs(y);
    }
  }
}

TEST_F(Sequences, GfTail3ContinuityAtOne) {
  const BigReal x = 1 - BigReal::pow10(-8);
  EXPECT_GE(agree_digits(gf_tail_zeta3_over_n(x, ctx), zeta(4) / 4), 6);
}

TEST_F(Sequences, GfExpTailContinuityAtOne) {
  const BigReal x = 1 - BigReal::pow10(-12);
  const BigReal y(2);
  EXPECT_GE(agree_digits(gf_exp_tail(x, y, ctx), y * exp(y)), 10);
}

}  // namespace
}  // namespace harmsum
