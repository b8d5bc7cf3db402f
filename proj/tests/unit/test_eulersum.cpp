#include <gtest/gtest.h>

#include "harmsum/constants.hpp"
#include "harmsum/elementary.hpp"
#include "harmsum/error.hpp"
#include "harmsum/eulersum.hpp"
#include "harmsum/expression.hpp"
#include "harmsum/quadrature.hpp"
#include "harmsum/series.hpp"
#include "harmsum/specfun.hpp"
#include "support.hpp"

namespace harmsum {
namespace {

using test::lit;
using test::q;
using Kind = BasisSymbol::Kind;

class EulerSum : public ::testing::Test {
 protected:
  const PrecisionContext ctx = make_context(30);
  ScopedPrecision scope = ctx.activate();
  const int t = ctx.target_digits();

  BigReal eval(const Expression& e) const { return expr_eval(e, ctx); }
  BigReal zeta(long s) const { return riemann_zeta(BigReal(s), ctx); }
};

Expression normal(const char* text) { return expr_normalize(parse_expression(text)); }

// Σ (±1)^(n−1) H_n^(p)/n^q with H_n^(p) carried along.
SeriesSpec harmonic_sum(int p, int q, bool alternating) {
  SeriesSpec s;
  s.name = "euler-sum";
  s.sign_pattern = alternating ? SignPattern::Alternating : SignPattern::EventuallyPositive;
  s.decay = DecayClass::power_log(q, p == 1 ? 1 : 0);
  s.terms = [p, q, alternating]() -> TermGenerator {
    return [p, q, alternating, h = BigReal(0), n = 0L]() mutable {
      ++n;
      const BigReal nn(n);
      h += 1 / pow(nn, long{p});
      BigReal v = h / pow(nn, long{q});
      return alternating && n % 2 == 0 ? -v : v;
    };
  };
  return s;
}

TEST_F(EulerSum, ClassicalExamples) {
  EXPECT_EQ(euler_classical(2), normal("2*zeta(3)"));
  EXPECT_EQ(to_string(euler_classical(3)), "5/4*zeta(4)");
  EXPECT_EQ(euler_classical(4), normal("3*zeta(5) - zeta(2)*zeta(3)"));
  EXPECT_THROW(euler_classical(1), DomainError);
}

TEST_F(EulerSum, ClassicalAgainstSummation) {
  for (int k = 2; k <= 6; ++k) {
    const int per = 4;
    const SumResult s = sum_with_asymptotic_tail(harmonic_sum(1, k, false), 200,
                                                 power_log_model(k - 1, k - 1 + (t + per - 1) / per, 1), ctx);
    EXPECT_GE(agree_digits(eval(euler_classical(k)), s.value), 20) << "k = " << k;
  }
}

TEST_F(EulerSum, AlternatingExamples) {
  EXPECT_EQ(to_string(euler_alternating(1, 2)), "5/8*zeta(3)");
  const BigReal oracle = sum_alternating_accel(harmonic_sum(1, 2, true), 0, ctx).value;
  EXPECT_DIGITS(eval(euler_alternating(1, 2)), oracle, t);
  EXPECT_THROW(euler_alternating(1, 3), DomainError);
  EXPECT_THROW(euler_alternating(0, 3), DomainError);
  EXPECT_THROW(euler_alternating(3, 1), DomainError);
}

TEST_F(EulerSum, AlternatingAgainstSummation) {
  for (int total = 3; total <= 9; total += 2) {
    for (int p = 1; total - p >= 2; ++p) {
      const int qq = total - p;
      const BigReal oracle = sum_alternating_accel(harmonic_sum(p, qq, true), 0, ctx).value;
      EXPECT_GE(agree_digits(eval(euler_alternating(p, qq)), oracle), 25) << "p = " << p << ", q = " << qq;
    }
  }
}

TEST_F(EulerSum, LogPowerClosedForm) {
  EXPECT_EQ(to_string(log_power_integral_closed(2)), "1/4*zeta(3)");
  const BigReal pi = constant(ConstantName::Pi, ctx);
  EXPECT_DIGITS(eval(log_power_integral_closed(1)), pi * pi / 12, t);
  for (int qq = 1; qq <= 4; ++qq) {
    const BigReal quad = integrate_param("log-power-plus", {{"q", q(qq)}}, ctx);
    EXPECT_GE(agree_digits(eval(log_power_integral_closed(qq)), quad), 25) << qq;
  }
  EXPECT_THROW(log_power_integral_closed(0), DomainError);
}

TEST_F(EulerSum, EvalExamples) {
  EXPECT_DIGITS(eval(normal("2*zeta(3)")), lit("2.40411380631918857079947632302289998152997258468099776358454"), t);
  EXPECT_TRUE(eval(Expression()).is_zero());
  const BigReal l2 = log(BigReal(2));
  EXPECT_DIGITS(eval(Rational(1, 2) * Expression::symbol(BasisSymbol::simple(Kind::LogTwo), 2)), l2 * l2 / 2, t);
  EXPECT_THROW(eval(Expression::symbol(BasisSymbol::zeta(1))), DomainError);
}

TEST_F(EulerSum, NormalizeExamples) {
  EXPECT_EQ(expr_normalize(Expression::symbol(BasisSymbol::eta(4))), normal("7/8*zeta(4)"));
  EXPECT_EQ(to_string(expr_normalize(Expression::symbol(BasisSymbol::zeta(2), 2))), "5/2*zeta(4)");
  EXPECT_EQ(to_string(expr_normalize(Expression::symbol(BasisSymbol::eta(0)))), "1/2");
  EXPECT_EQ(to_string(expr_normalize(Expression::symbol(BasisSymbol::eta(1)))), "log2");
  EXPECT_EQ(to_string(normal("pi2")), "6*zeta(2)");
  EXPECT_EQ(to_string(normal("zeta(3) - zeta(3)")), "0");
  const Expression n = normal("193/64*zeta(5) - 2*log2*Li(4,1/2)");
  EXPECT_EQ(expr_normalize(n), n);
}

TEST_F(EulerSum, ParseErrors) {
  EXPECT_THROW(parse_expression("zeta("), ParseError);
  EXPECT_THROW(parse_expression("2**zeta(3)"), ParseError);
  EXPECT_THROW(parse_expression("foo(3)"), ParseError);
  EXPECT_THROW(parse_expression("0.5*zeta(3)"), ParseError);
}

// Random expressions over the whole basis, before normalization.
class ExpressionGen {
 public:
  explicit ExpressionGen(std::uint64_t seed) : s_(seed) {}

  BasisSymbol symbol() {
    switch (s_.integer(0, 10)) {
      case 0: return BasisSymbol::zeta(static_cast<int>(s_.integer(2, 7)));
      case 1: return BasisSymbol::eta(static_cast<int>(s_.integer(0, 6)));
      case 2: return BasisSymbol::simple(Kind::LogTwo);
      case 3: return BasisSymbol::simple(Kind::Pi2);
      case 4: return BasisSymbol::polylog_half(static_cast<int>(s_.integer(1, 5)));
      case 5: return BasisSymbol::simple(Kind::EulerGamma);
      case 6: return BasisSymbol::simple(Kind::LogPi);
      case 7: return BasisSymbol::simple(Kind::GlaisherLog);
      case 8: return BasisSymbol::simple(Kind::CatalanG);
      case 9: return BasisSymbol::with_arg(Kind::BarnesGLog, q(s_.integer(1, 7), 4));
      default: return BasisSymbol::with_arg(Kind::GammaLog, q(s_.integer(1, 7), 3));
    }
  }

  Expression expression() {
    Expression e;
    const long terms = s_.integer(1, 5);
    for (long i = 0; i < terms; ++i) {
      Expression m = Expression::constant(q(s_.integer(-40, 40), s_.integer(1, 12)));
      const long factors = s_.integer(0, 3);
      for (long f = 0; f < factors; ++f) m = m * Expression::symbol(symbol(), static_cast<int>(s_.integer(1, 2)));
      e += m;
    }
    return e;
  }

 private:
  test::Sampler s_;
};

TEST_F(EulerSum, NormalizePreservesValueAndIsIdempotent) {
  ExpressionGen gen(606);
  for (int i = 0; i < 50; ++i) {
    const Expression e = gen.expression();
    const Expression n = expr_normalize(e);
    EXPECT_EQ(expr_normalize(n), n) << to_string(e);
    const BigReal before = eval(e);
    const BigReal after = eval(n);
    EXPECT_LE(abs(before - after), ctx.tolerance() * max(BigReal(1), abs(before))) << to_string(e);
  }
}

TEST_F(EulerSum, PrintParseRoundTrip) {
  ExpressionGen gen(707);
  for (int i = 0; i < 50; ++i) {
    const Expression n = expr_normalize(gen.expression());
    const std::string text = to_string(n);
    EXPECT_EQ(parse_expression(text), n) << text;
    EXPECT_EQ(to_string(parse_expression(text)), text);
  }
  for (int p = 1; p <= 6; ++p) {
    for (int qq = 2; p + qq <= 9; ++qq) {
      if ((p + qq) % 2 == 0) continue;
      const Expression e = euler_alternating(p, qq);
      EXPECT_EQ(parse_expression(to_string(e)), e);
    }
  }
}

}  // namespace
}  // namespace harmsum
