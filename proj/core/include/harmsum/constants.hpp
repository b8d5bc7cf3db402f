#pragma once

#include <string_view>

#include "harmsum/bigreal.hpp"
#include "harmsum/context.hpp"

namespace harmsum {

enum class ConstantName {
  EulerGamma,     // γ
  Pi,             // π
  LogTwo,         // log 2
  Glaisher,       // A
  Catalan,        // G
  Lemniscate,     // ϖ
  Gieseking,      // κ
  EulerGompertz,  // δ
};

std::string_view constant_label(ConstantName name);
/// Accepts the labels returned by constant_label ("gamma", "pi", ...).
ConstantName parse_constant(std::string_view label);

/// Value under ctx. Cached per (name, precision); safe under concurrent use.
BigReal constant(ConstantName name, const PrecisionContext& ctx);

/// Value at the calling thread's working precision (same cache).
BigReal constant(ConstantName name);

inline BigReal pi() { return constant(ConstantName::Pi); }
inline BigReal euler_gamma() { return constant(ConstantName::EulerGamma); }
inline BigReal log_two() { return constant(ConstantName::LogTwo); }
inline BigReal catalan() { return constant(ConstantName::Catalan); }
/// log A, from the same cache as A.
BigReal log_glaisher();

}  // namespace harmsum
