#include <gtest/gtest.h>

#include <algorithm>

#include "harmsum/constants.hpp"
#include "harmsum/elementary.hpp"
#include "harmsum/error.hpp"
#include "harmsum/eulersum.hpp"
#include "harmsum/quadrature.hpp"
#include "harmsum/specfun.hpp"
#include "support.hpp"

namespace harmsum {
namespace {

using test::lit;
using test::q;

class Quadrature : public ::testing::Test {
 protected:
  const PrecisionContext ctx = make_context(30);
  ScopedPrecision scope = ctx.activate();
  const int t = ctx.target_digits();

  BigReal family(const char* name, const ParamMap& params = {}) const {
    return integrate_param(name, params, ctx);
  }
  BigReal zeta(long s) const { return riemann_zeta(BigReal(s), ctx); }
  BigReal closed(const char* text) const { return expr_eval(parse_expression(text), ctx); }
};

Integrand on_unit(std::function<BigReal(const BigReal&)> f) { return {std::move(f), BigReal(0), BigReal(1), ""}; }

TEST_F(Quadrature, IntegrateExamples) {
  const BigReal pi = constant(ConstantName::Pi, ctx);
  const BigReal l2 = log(BigReal(2));
  EXPECT_DIGITS(integrate(on_unit([](const BigReal& x) { return log1p(-x * x) / x; }), ctx), -pi * pi / 12, t);
  EXPECT_DIGITS(integrate(on_unit([](const BigReal& x) { return square(log1p(x)) / x; }), ctx), zeta(3) / 4, t);
  EXPECT_DIGITS(integrate(on_unit([](const BigReal& x) { return log1p(x) / (1 + x); }), ctx), l2 * l2 / 2, t);
}

TEST_F(Quadrature, DetailedResultIsHonest) {
  const QuadratureResult r = integrate_detailed(on_unit([](const BigReal& x) { return log(x); }), ctx);
  EXPECT_DIGITS(r.value, BigReal(-1), t);
  EXPECT_LE(r.est_error, ctx.tolerance());
  EXPECT_GT(r.levels, 0);
  EXPECT_GT(r.evaluations, 0);
  EXPECT_LE(abs(r.value + 1), r.est_error);
}

TEST_F(Quadrature, GeneralInterval) {
  Integrand ig{[](const BigReal& x) { return BigReal(1) / x; }, BigReal(1), BigReal(3), "smooth"};
  EXPECT_DIGITS(integrate(ig, ctx), log(BigReal(3)), t);
  Integrand bad{[](const BigReal& x) { return x; }, BigReal(2), BigReal(1), ""};
  EXPECT_THROW(integrate(bad, ctx), DomainError);
}

TEST_F(Quadrature, NonConvergenceReportsEstimates) {
  // 1/√x·sin(1/x) oscillates without bound near 0.
  const Integrand wild = on_unit([](const BigReal& x) { return sin(BigReal(1) / x) / sqrt(x); });
  try {
    integrate_detailed(wild, ctx, 5);
    FAIL() << "converged on an oscillating integrand";
  } catch (const ConvergenceError& e) {
    EXPECT_NE(std::string(e.what()).find("last estimates"), std::string::npos);
  }
}

TEST_F(Quadrature, FamilyExamples) {
  EXPECT_DIGITS(family("harmonic-rep", {{"n", q(5)}}), to_real(q(137, 60)), t);
  EXPECT_DIGITS(family("skew-rep", {{"n", q(2)}}), to_real(q(1, 2)), t);
  EXPECT_DIGITS(family("log-power-plus", {{"q", q(2)}}), zeta(3) / 4, t);
  EXPECT_DIGITS(family("loggamma", {{"z", q(1)}}), log(2 * constant(ConstantName::Pi, ctx)) / 2, t);
}

TEST_F(Quadrature, FamilyErrors) {
  EXPECT_THROW(family("no-such-family"), DomainError);
  EXPECT_THROW(family("harmonic-rep"), DomainError);
  EXPECT_THROW(family("loggamma", {{"z", q(-1)}}), DomainError);
  const auto names = integrand_families();
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  EXPECT_NE(std::find(names.begin(), names.end(), "valean"), names.end());
}

TEST_F(Quadrature, LogSquaredOneMinusX) {
  EXPECT_GE(agree_digits(family("log-power-minus", {{"q", q(2)}}), 2 * zeta(3)), 25);
}

TEST_F(Quadrature, AtanhLemma) {
  const BigReal v = family("atanh-log");
  EXPECT_GE(agree_digits(v, -zeta(3) * 7 / 8), 25);
  EXPECT_GE(agree_digits(v, lit("-1.05179979026464499972477089132251874191936301")), 25);
}

TEST_F(Quadrature, ValeanIntegral) {
  const BigReal v = family("valean");
  EXPECT_GE(agree_digits(v, closed("2/15*log2^5 - 2/3*log2^3*zeta(2) + 7/4*log2^2*zeta(3) - 1/8*zeta(2)*zeta(3) - "
                                   "125/32*zeta(5) + 4*log2*Li(4,1/2) + 4*Li(5,1/2)")),
            25);
  EXPECT_GE(agree_digits(v, lit("-0.162491105149194533172741524719276745297073745")), 25);
}

TEST_F(Quadrature, ZetaFiveLemmas) {
  const BigReal li4 = family("li4-minus");
  EXPECT_GE(agree_digits(li4, closed("17/16*zeta(5) - 3/8*zeta(2)*zeta(3) - 7/8*log2*zeta(4)")), 25);
  EXPECT_GE(agree_digits(li4, lit("-0.296186527185378913872609058940562950260326732")), 25);

  const BigReal log_li3 = family("log-li3");
  EXPECT_GE(agree_digits(log_li3, closed("1/16*zeta(2)*zeta(3) + 125/64*zeta(5) - 1/15*log2^5 + "
                                         "1/3*log2^3*zeta(2) - 5/4*log2^2*zeta(3) - 2*log2*Li(4,1/2) - "
                                         "2*Li(5,1/2)")),
            25);
  EXPECT_GE(agree_digits(log_li3, lit("-0.135328895684480229147360816932260896502697011")), 25);

  const BigReal li2sq = family("li2-squared");
  EXPECT_GE(agree_digits(li2sq, closed("4/15*log2^5 - 4/3*log2^3*zeta(2) + 7/2*log2^2*zeta(3) + "
                                       "5/8*log2*zeta(4) - 125/16*zeta(5) - 1/4*zeta(2)*zeta(3) + "
                                       "8*log2*Li(4,1/2) + 8*Li(5,1/2)")),
            25);
  EXPECT_GE(agree_digits(li2sq, lit("0.143898600889984802422929698950189126755972803")), 25);
}

TEST_F(Quadrature, LogPowerPlusClosedForm) {
  for (int qq = 1; qq <= 4; ++qq) {
    const BigReal v = family("log-power-plus", {{"q", q(qq)}});
    EXPECT_GE(agree_digits(v, expr_eval(log_power_integral_closed(qq), ctx)), 25) << "q = " << qq;
  }
  EXPECT_GE(agree_digits(family("log-power-plus", {{"q", q(3)}}),
                         lit("0.142514197935710915708721501209652160895463411")),
            25);
  EXPECT_GE(agree_digits(family("log-power-plus", {{"q", q(4)}}),
                         lit("0.0752402304403406939500281533338980122529368848")),
            25);
}

}  // namespace
}  // namespace harmsum
