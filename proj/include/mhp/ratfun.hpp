#pragma once

#include <map>
#include <optional>
#include <string>

#include "mhp/multipoly.hpp"

namespace mhp {

/// Reduced quotient num/den of polynomials over the same VarList.
///
/// Always normalized: gcd(num, den) = 1 and den is integer-primitive with a
/// positive graded-lex leading coefficient, so equal values have equal fields.
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(VarList vars);
  RatFun(MultiPoly num);  // NOLINT(google-explicit-constructor): polynomials embed
  RatFun(MultiPoly num, MultiPoly den);

  static RatFun constant(VarList vars, const Rational& c);
  static RatFun variable(VarList vars, const std::string& name);

  const VarList& vars() const { return num_.vars(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  std::optional<MultiPoly> as_polynomial() const;
  /// Value of a constant RatFun; throws StructuralError otherwise.
  Rational as_constant() const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  RatFun scaled(const Rational& c) const;
  RatFun inverse() const;
  RatFun pow(int k) const;

  std::string to_string() const;

 private:
  struct Reduced {};
  RatFun(MultiPoly num, MultiPoly den, Reduced);
  void fix_unit();

  MultiPoly num_;
  MultiPoly den_;
};

/// Cross-multiplication test a.num*b.den == b.num*a.den (independent of normalization).
bool cross_equal(const RatFun& a, const RatFun& b);

/// Substitutes each variable of f by a RatFun over `target`. Variables of f
/// that f does not actually use may be left unbound.
/// Throws DivisionByZero if the substituted denominator vanishes.
RatFun substitute(const RatFun& f, const std::map<std::string, RatFun>& bindings,
                  const VarList& target);

/// Expression parser: + - * / ^ (integer exponents, negative allowed), parentheses,
/// implicit multiplication ("2z", "z w", "(z-1)(w+1)"), rational literals, and
/// the Unicode minus sign. Throws UsageError on malformed input.
RatFun parse_ratfun(const std::string& text, const VarList& vars);
/// As parse_ratfun but requires a polynomial result.
MultiPoly parse_poly(const std::string& text, const VarList& vars);

}  // namespace mhp
