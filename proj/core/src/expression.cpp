#include "harmsum/expression.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include "harmsum/constants.hpp"
#include "harmsum/elementary.hpp"
#include "harmsum/error.hpp"
#include "harmsum/specfun.hpp"

namespace harmsum {

namespace {

using Kind = BasisSymbol::Kind;

bool monomial_less(const Monomial& a, const Monomial& b) {
  // Constant terms print last.
  if (a.empty() != b.empty()) return b.empty();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first == y.first) return x.second < y.second;
                                        return x.first < y.first;
                                      });
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  std::map<BasisSymbol, int> powers;
  for (const auto& [s, p] : a) powers[s] += p;
  for (const auto& [s, p] : b) powers[s] += p;
  return {powers.begin(), powers.end()};
}

Expression collect(const std::vector<Expression::Term>& terms) {
  std::vector<Expression::Term> sorted = terms;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& x, const auto& y) { return monomial_less(x.monomial, y.monomial); });
  Expression out;
  for (size_t i = 0; i < sorted.size();) {
    Rational c = 0;
    size_t j = i;
    for (; j < sorted.size() && sorted[j].monomial == sorted[i].monomial; ++j) c += sorted[j].coefficient;
    if (c != 0) out.add_term(c, sorted[i].monomial);
    i = j;
  }
  return out;
}

Expression rewrite(const BasisSymbol& s) {
  const Expression log2 = Expression::symbol(BasisSymbol::simple(Kind::LogTwo));
  const Expression zeta2 = Expression::symbol(BasisSymbol::zeta(2));
  switch (s.kind) {
    case Kind::Eta:
      if (s.index == 0) return Expression::constant(Rational(1, 2));
      if (s.index == 1) return log2;
      if (s.index >= 2) {
        const Rational factor = 1 - Rational(1, BigInt(1) << (s.index - 1));
        return factor * Expression::symbol(BasisSymbol::zeta(s.index));
      }
      break;
    case Kind::Pi2:
      return Rational(6) * zeta2;
    case Kind::PolylogHalf:
      if (s.index == 1) return log2;
      if (s.index == 2) return Rational(1, 2) * zeta2 - Rational(1, 2) * pow(log2, 2);
      if (s.index == 3) {
        return Rational(7, 8) * Expression::symbol(BasisSymbol::zeta(3)) +
               Rational(1, 6) * pow(log2, 3) - Rational(1, 2) * zeta2 * log2;
      }
      break;
    default:
      break;
  }
  return Expression::symbol(s);
}

// ζ(2)^(2m+r) → (5/2)^m ζ(4)^m ζ(2)^r.
Expression::Term reduce_zeta2_squares(Expression::Term t) {
  const BasisSymbol z2 = BasisSymbol::zeta(2);
  auto it = std::find_if(t.monomial.begin(), t.monomial.end(), [&](const auto& f) { return f.first == z2; });
  if (it == t.monomial.end() || it->second < 2) return t;
  const int pairs = it->second / 2;
  it->second -= 2 * pairs;
  if (it->second == 0) t.monomial.erase(it);
  for (int i = 0; i < pairs; ++i) t.coefficient *= Rational(5, 2);
  t.monomial = multiply(t.monomial, {{BasisSymbol::zeta(4), pairs}});
  return t;
}

BigReal symbol_value(const BasisSymbol& s) {
  switch (s.kind) {
    case Kind::Zeta:
      if (s.index == 1) throw DomainError("expr_eval", "zeta(1)", "pole");
      return s.index >= 2 ? wp::zeta_int(s.index) : wp::zeta(BigReal(s.index));
    case Kind::Eta:
      if (s.index == 0) return BigReal(1) / 2;
      if (s.index == 1) return log_two();
      return wp::eta(BigReal(s.index));
    case Kind::LogTwo:
      return log_two();
    case Kind::Pi2:
      return square(pi());
    case Kind::PolylogHalf:
      return wp::polylog(s.index, BigReal(1) / 2);
    case Kind::EulerGamma:
      return euler_gamma();
    case Kind::LogPi:
      return log(pi());
    case Kind::GlaisherLog:
      return log_glaisher();
    case Kind::CatalanG:
      return catalan();
    case Kind::BarnesGLog:
      return wp::log_barnes_g(to_real(s.arg));
    case Kind::GammaLog:
      return wp::loggamma(to_real(s.arg));
  }
  throw DomainError("expr_eval", to_string(s), "unknown symbol");
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    skip_space();
    Expression e;
    bool first = true;
    while (true) {
      skip_space();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Expression t = term();
      e += sign < 0 ? Rational(-1) * t : t;
      first = false;
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
    }
    if (!at_end()) fail("trailing input");
    return e;
  }

 private:
  Expression term() {
    Expression t = factor();
    skip_space();
    while (peek() == '*') {
      ++pos_;
      t = t * factor();
      skip_space();
    }
    return t;
  }

  Expression factor() {
    skip_space();
    if (std::isdigit(static_cast<unsigned char>(peek()))) return Expression::constant(rational_literal());
    const std::string name = identifier();
    BasisSymbol s;
    if (name == "zeta" || name == "eta") {
      expect('(');
      const int k = small_integer();
      expect(')');
      if (name == "zeta" && k < 1) fail("zeta index must be >= 1");
      if (name == "eta" && k < 0) fail("eta index must be >= 0");
      s = name == "zeta" ? BasisSymbol::zeta(k) : BasisSymbol::eta(k);
    } else if (name == "Li") {
      expect('(');
      const int k = small_integer();
      expect(',');
      if (rational_literal() != Rational(1, 2)) fail("only Li(k,1/2) is supported");
      expect(')');
      if (k < 1) fail("Li order must be >= 1");
      s = BasisSymbol::polylog_half(k);
    } else if (name == "logG" || name == "logGamma") {
      expect('(');
      const Rational r = rational_literal();
      expect(')');
      if (r <= 0) fail(name + " argument must be > 0");
      s = BasisSymbol::with_arg(name == "logG" ? Kind::BarnesGLog : Kind::GammaLog, r);
    } else if (name == "log2") {
      s = BasisSymbol::simple(Kind::LogTwo);
    } else if (name == "pi2") {
      s = BasisSymbol::simple(Kind::Pi2);
    } else if (name == "gamma") {
      s = BasisSymbol::simple(Kind::EulerGamma);
    } else if (name == "logpi") {
      s = BasisSymbol::simple(Kind::LogPi);
    } else if (name == "logA") {
      s = BasisSymbol::simple(Kind::GlaisherLog);
    } else if (name == "G") {
      s = BasisSymbol::simple(Kind::CatalanG);
    } else {
      fail("unknown symbol '" + name + "'");
    }
    skip_space();
    int power = 1;
    if (peek() == '^') {
      ++pos_;
      power = small_integer();
      if (power < 1) fail("exponent must be >= 1");
    }
    return Expression::symbol(s, power);
  }

  Rational rational_literal() {
    skip_space();
    const size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (pos_ == start) fail("expected a rational");
    return parse_rational(text_.substr(start, pos_ - start));
  }

  int small_integer() {
    skip_space();
    const size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits.size() > 6) fail("expected a small integer");
    return std::stoi(digits);
  }

  std::string identifier() {
    const size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected a symbol");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                     why);
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

std::string to_string(const BasisSymbol& s) {
  switch (s.kind) {
    case Kind::Zeta:
      return "zeta(" + std::to_string(s.index) + ")";
    case Kind::Eta:
      return "eta(" + std::to_string(s.index) + ")";
    case Kind::LogTwo:
      return "log2";
    case Kind::Pi2:
      return "pi2";
    case Kind::PolylogHalf:
      return "Li(" + std::to_string(s.index) + ",1/2)";
    case Kind::EulerGamma:
      return "gamma";
    case Kind::LogPi:
      return "logpi";
    case Kind::GlaisherLog:
      return "logA";
    case Kind::CatalanG:
      return "G";
    case Kind::BarnesGLog:
      return "logG(" + to_string(s.arg) + ")";
    case Kind::GammaLog:
      return "logGamma(" + to_string(s.arg) + ")";
  }
  return "?";
}

Expression Expression::constant(const Rational& c) {
  Expression e;
  if (c != 0) e.add_term(c, {});
  return e;
}

Expression Expression::symbol(const BasisSymbol& s, int power) {
  Expression e;
  e.add_term(Rational(1), {{s, power}});
  return e;
}

void Expression::add_term(Rational coefficient, Monomial monomial) {
  coefficient.canonicalize();
  terms_.push_back({std::move(coefficient), std::move(monomial)});
}

Expression& Expression::operator+=(const Expression& rhs) {
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  return *this;
}

Expression& Expression::operator-=(const Expression& rhs) {
  for (const Term& t : rhs.terms_) terms_.push_back({-t.coefficient, t.monomial});
  return *this;
}

Expression operator*(const Expression& a, const Expression& b) {
  Expression out;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) out.add_term(x.coefficient * y.coefficient, multiply(x.monomial, y.monomial));
  }
  return out;
}

Expression operator*(const Rational& c, const Expression& e) {
  Expression out;
  if (c == 0) return out;
  for (const auto& t : e.terms_) out.add_term(c * t.coefficient, t.monomial);
  return out;
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient || a.terms_[i].monomial != b.terms_[i].monomial) {
      return false;
    }
  }
  return true;
}

Expression pow(const Expression& e, int n) {
  Expression r = Expression::constant(1);
  for (int i = 0; i < n; ++i) r = r * e;
  return r;
}

Expression expr_normalize(const Expression& e) {
  std::vector<Expression::Term> expanded;
  for (const auto& t : e.terms()) {
    Expression product = Expression::constant(t.coefficient);
    for (const auto& [s, p] : t.monomial) product = product * pow(rewrite(s), p);
    for (const auto& u : product.terms()) expanded.push_back(reduce_zeta2_squares(u));
  }
  return collect(expanded);
}

BigReal expr_eval(const Expression& e, const PrecisionContext& ctx) {
  auto p = ctx.activate();
  std::map<BasisSymbol, BigReal> values;
  BigReal sum(0);
  for (const auto& t : e.terms()) {
    BigReal product = to_real(t.coefficient);
    for (const auto& [s, power] : t.monomial) {
      auto it = values.find(s);
      if (it == values.end()) it = values.emplace(s, symbol_value(s)).first;
      product *= pow(it->second, static_cast<long>(power));
    }
    sum += product;
  }
  return sum;
}

std::string to_string(const Expression& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : e.terms()) {
    const bool negative = t.coefficient < 0;
    const Rational magnitude = abs(t.coefficient);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (const auto& [s, p] : t.monomial) {
      if (!body.empty()) body += "*";
      body += to_string(s);
      if (p != 1) body += "^" + std::to_string(p);
    }
    if (body.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += body;
    } else {
      out += to_string(magnitude) + "*" + body;
    }
  }
  return out;
}

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace harmsum
