#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "harmsum/bigreal.hpp"
#include "harmsum/context.hpp"
#include "harmsum/rational.hpp"

namespace harmsum {

/// f on the open interval (a, b); f is never called at an endpoint.
struct Integrand {
  std::function<BigReal(const BigReal&)> f;
  BigReal a;
  BigReal b;
  std::string singularity_note;
};

struct QuadratureResult {
  BigReal value;
  BigReal est_error;
  int levels = 0;
  long evaluations = 0;
};

inline constexpr int kDefaultMaxLevels = 12;

/// Tanh-sinh quadrature with step halving until two successive levels agree
/// to target + 5 digits. Throws ConvergenceError with the last two estimates
/// otherwise.
QuadratureResult integrate_detailed(const Integrand& ig, const PrecisionContext& ctx,
                                    int max_levels = kDefaultMaxLevels);

BigReal integrate(const Integrand& ig, const PrecisionContext& ctx);

using ParamMap = std::map<std::string, Rational>;

/// Named integrand families over (0, 1) unless noted:
///   harmonic-rep (n)    (1 − x^n)/(1 − x)
///   skew-rep (n)        (1 − (−x)^n)/(1 + x)
///   log-power-plus (q)  log^q(1 + x)/x
///   log-power-minus (q) log^q(1 − x)/x
///   log-1mx2            log(1 − x²)/x
///   atanh-log           atanh(x)·log(1 − x²)/x
///   log-1px-over-1px    log(1 + x)/(1 + x)
///   li4-minus           Li₄(−x)/(1 + x)
///   valean              log²(1 + x)·Li₂(−x)/x
///   log-li3             log(1 + x)·Li₃(−x)/(1 + x)
///   li2-squared         Li₂(−x)²/(1 + x)
///   loggamma (z)        log Γ(x) over (0, z)
Integrand make_family_integrand(std::string_view family, const ParamMap& params);

/// Names accepted by make_family_integrand, sorted.
std::vector<std::string> integrand_families();

QuadratureResult integrate_param_detailed(std::string_view family, const ParamMap& params,
                                          const PrecisionContext& ctx);
BigReal integrate_param(std::string_view family, const ParamMap& params, const PrecisionContext& ctx);

}  // namespace harmsum
