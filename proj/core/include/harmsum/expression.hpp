#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "harmsum/bigreal.hpp"
#include "harmsum/context.hpp"
#include "harmsum/rational.hpp"

namespace harmsum {

/// One constant of the closed-form basis.
///
/// Text forms: zeta(k), eta(k), log2, pi2, Li(k,1/2), gamma, logpi, logA, G,
/// logG(r), logGamma(r), with r an exact rational.
struct BasisSymbol {
  enum class Kind {
    Zeta,         // ζ(k); k = 1 is a formal symbol that must cancel
    Eta,          // η(k), k ≥ 0
    LogTwo,       // log 2
    Pi2,          // π²
    PolylogHalf,  // Li_k(1/2), k ≥ 1
    EulerGamma,   // γ
    LogPi,        // log π
    GlaisherLog,  // log A
    CatalanG,     // G
    BarnesGLog,   // log G(r)
    GammaLog,     // log Γ(r)
  };

  Kind kind = Kind::Zeta;
  int index = 0;
  Rational arg{0};

  static BasisSymbol zeta(int k) { return {Kind::Zeta, k, Rational(0)}; }
  static BasisSymbol eta(int k) { return {Kind::Eta, k, Rational(0)}; }
  static BasisSymbol polylog_half(int k) { return {Kind::PolylogHalf, k, Rational(0)}; }
  static BasisSymbol simple(Kind kind) { return {kind, 0, Rational(0)}; }
  static BasisSymbol with_arg(Kind kind, Rational r) { return {kind, 0, std::move(r)}; }

  friend bool operator==(const BasisSymbol& a, const BasisSymbol& b) {
    return a.kind == b.kind && a.index == b.index && a.arg == b.arg;
  }
  friend bool operator<(const BasisSymbol& a, const BasisSymbol& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.index != b.index) return a.index < b.index;
    return a.arg < b.arg;
  }
};

std::string to_string(const BasisSymbol& s);

/// Product of symbol powers, sorted by symbol, powers ≥ 1.
using Monomial = std::vector<std::pair<BasisSymbol, int>>;

/// Σ coefficient·monomial with exact rational coefficients.
class Expression {
 public:
  struct Term {
    Rational coefficient;
    Monomial monomial;
  };

  Expression() = default;  // zero

  static Expression constant(const Rational& c);
  static Expression symbol(const BasisSymbol& s, int power = 1);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Appends without combining; expr_normalize produces the canonical form.
  void add_term(Rational coefficient, Monomial monomial);

  Expression& operator+=(const Expression& rhs);
  Expression& operator-=(const Expression& rhs);
  friend Expression operator+(Expression a, const Expression& b) { return a += b; }
  friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
  friend Expression operator*(const Expression& a, const Expression& b);
  friend Expression operator*(const Rational& c, const Expression& e);

  /// Structural equality of the stored term lists.
  friend bool operator==(const Expression& a, const Expression& b);

 private:
  std::vector<Term> terms_;
};

Expression pow(const Expression& e, int n);

/// Canonical form: η(0) → 1/2, η(1) → log 2, η(k≥2) → (1−2^(1−k))ζ(k),
/// π² → 6ζ(2), Li₁..₃(1/2) → closed forms, ζ(2)² → (5/2)ζ(4); like
/// monomials merged, zero terms dropped, terms sorted. Idempotent.
Expression expr_normalize(const Expression& e);

/// Σ coefficient × Π symbol values under ctx. Throws DomainError for ζ(1).
BigReal expr_eval(const Expression& e, const PrecisionContext& ctx);

/// Canonical text, e.g. "193/64*zeta(5) - 2*log2*Li(4,1/2)"; "0" when empty.
std::string to_string(const Expression& e);

/// Inverse of to_string; also accepts unnormalized input and whitespace.
/// Throws ParseError.
Expression parse_expression(std::string_view text);

}  // namespace harmsum
