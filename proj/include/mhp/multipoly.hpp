#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mhp/errors.hpp"
#include "mhp/varlist.hpp"

namespace mhp {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent vector; entries past the ring's variable count are always zero.
using Exponent = std::array<std::uint16_t, kMaxVars>;

struct Term {
  Exponent exp{};
  Rational coeff;
};

/// Strict "a comes before b" in descending graded-lexicographic order
/// (total degree first, then lexicographic with the first variable largest).
bool grlex_greater(const Exponent& a, const Exponent& b);

unsigned total_degree(const Exponent& e);

/// Sparse polynomial with exact rational coefficients over a fixed VarList.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(VarList vars, const Rational& c);
  static MultiPoly variable(VarList vars, const std::string& name);
  static MultiPoly monomial(VarList vars, const Exponent& e, const Rational& c = 1);
  /// Combines duplicate exponents and drops zeros.
  static MultiPoly from_terms(VarList vars, std::vector<Term> terms);

  const VarList& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of the constant monomial.
  Rational constant_term() const;
  Rational coeff(const Exponent& e) const;
  const Term& leading_term() const;
  Rational leading_coeff() const { return leading_term().coeff; }

  int degree(std::size_t var) const;
  int total_degree() const;
  bool uses(std::size_t var) const { return degree(var) > 0; }
  bool all_integer() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned k) const;

  /// Component-wise minimum exponent over all terms (the monomial content).
  Exponent min_exponents() const;
  MultiPoly times_monomial(const Exponent& e) const;
  /// Divide by a monomial that divides every term.
  MultiPoly div_monomial(const Exponent& e) const;

  /// Positive rational c such that this / c has coprime integer coefficients.
  Rational content() const;
  /// Integer-primitive associate with positive leading coefficient.
  MultiPoly primitive() const;

  /// Canonical text: terms in descending graded-lex order, e.g. "z^2 - 2*z*w + w^2".
  std::string to_string() const;

 private:
  void check_same_ring(const MultiPoly& o) const;

  VarList vars_;
  std::vector<Term> terms_;
};

/// Returns q with a == q*b, or nullopt when b does not divide a.
/// Throws DivisionByZero when b is zero.
std::optional<MultiPoly> exact_div(const MultiPoly& a, const MultiPoly& b);

/// Greatest common divisor, normalized to an integer-primitive polynomial with
/// positive leading coefficient (gcd(0,0) = 0).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Re-express p in a ring whose variables are a superset (by name) of p's.
MultiPoly embed(const MultiPoly& p, const VarList& target);

/// Evaluates every variable except `keep` at the given integers; the result is
/// a dense univariate coefficient vector in `keep` (index = exponent).
std::vector<Rational> eval_to_univariate(const MultiPoly& p, std::size_t keep,
                                         const std::vector<Integer>& point);

}  // namespace mhp
