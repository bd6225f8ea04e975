#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mhp/linalg.hpp"
#include "mhp/partitions.hpp"
#include "mhp/ratfun.hpp"

namespace mhp {

enum class Basis {
  monomial,            // m
  complete,            // h
  power,               // p
  schur,               // s
  hall_littlewood,     // P(Z;q); ring must contain q
  modified_hl,         // H̃(Z;q); ring must contain q
  modified_macdonald,  // H(Z;q,t); ring must contain q and t
};

std::string basis_name(Basis b);

/// Homogeneous symmetric function: basis tag plus partition → coefficient.
class SymFunc {
 public:
  SymFunc(Basis basis, VarList vars, int degree);
  /// The basis element b_λ with coefficient c (default 1).
  static SymFunc element(Basis basis, const VarList& vars, const Partition& lambda);
  static SymFunc element(Basis basis, const VarList& vars, const Partition& lambda,
                         const RatFun& c);

  Basis basis() const { return basis_; }
  const VarList& vars() const { return vars_; }
  int degree() const { return degree_; }
  const std::map<Partition, RatFun>& coeffs() const { return coeffs_; }
  RatFun coeff(const Partition& lambda) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c·b_λ; λ must have size degree().
  void add(const Partition& lambda, const RatFun& c);

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  SymFunc scaled(const RatFun& c) const;
  /// Applies fn to every coefficient, re-homing the result in `vars`.
  SymFunc map_coeffs(const std::function<RatFun(const RatFun&)>& fn, const VarList& vars) const;

  /// Equality as symmetric functions (converts o to this basis if needed).
  friend bool operator==(const SymFunc& a, const SymFunc& b);
  friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Basis basis_;
  VarList vars_;
  int degree_;
  std::map<Partition, RatFun> coeffs_;
};

/// χ^λ_τ by the Murnaghan–Nakayama rule.
long sn_character(const Partition& lambda, const Partition& tau);

SymFunc base_change(const SymFunc& f, Basis target);
/// Product, computed in the power-sum basis, returned in f's basis.
SymFunc multiply(const SymFunc& f, const SymFunc& g);
/// Expands a product of basis elements b_{λ_1} b_{λ_2} ... in the basis `out`.
SymFunc product_of(Basis b, const VarList& vars, const std::vector<Partition>& factors, Basis out);

/// Plethystic scaling p_r ↦ c(r)·p_r, result in f's basis.
SymFunc plethys_sub(const SymFunc& f, const std::function<RatFun(int)>& c);
/// c(r) = 1/(1 − q^r): F ↦ F[Z/(1−q)], variable `q` of f's ring.
SymFunc plethys_over_one_minus(const SymFunc& f, const std::string& q = "q");

/// Hall inner product (0 when degrees differ).
RatFun hall_inner(const SymFunc& f, const SymFunc& g);
/// ⟨f, g[(q−1)(1−t)Z]⟩.
RatFun qt_inner(const SymFunc& f, const SymFunc& g, const std::string& q = "q",
                const std::string& t = "t");

/// Structure constants m_λ m_μ = Σ c_ν m_ν (integers).
const std::vector<std::pair<Partition, Integer>>& monomial_product(const Partition& lambda,
                                                                   const Partition& mu);

// ---- Hall–Littlewood layer; coefficients in Q(q), VarList{"q"} ----

const VarList& q_ring();

/// P_λ(Z;q) in the monomial basis.
SymFunc hall_littlewood_P(const Partition& lambda);
/// b_λ(q) = ⟨P_λ, P_λ⟩_q⁻¹ under ⟨p_λ,p_μ⟩_q = δ z_λ ∏(1−q^{λ_i})⁻¹.
RatFun b_factor(const Partition& lambda);
/// K_{λτ}(q) from s_λ = Σ_τ K_{λτ}(q) P_τ.
MultiPoly kostka_foulkes(const Partition& lambda, const Partition& tau);
/// K̃_{λτ}(q) = q^{n(τ)} K_{λτ}(q⁻¹).
MultiPoly modified_kostka_foulkes(const Partition& lambda, const Partition& tau);
/// H̃_λ(Z;q) = Σ_τ K̃_{τλ}(q) s_τ.
SymFunc modified_hl(const Partition& lambda);
/// 𝒬^τ_λ(q) = Σ_ν χ^ν_λ K̃_{ντ}(q).
MultiPoly green_polynomial(const Partition& tau, const Partition& lambda);

// ---- factor-wise extension to types ----

/// Product over the components of ω of the basis elements, in basis `out`.
SymFunc type_product(Basis b, const VarList& vars, const TypeData& omega, Basis out);
/// H̃ of a semisimple class type with multiplicities μ = (m_r): ∏_r H̃_{(1^{m_r})}, Schur basis.
SymFunc modified_hl_semisimple(const Partition& mu);

// ---- transition tables, exposed for tests and the Macdonald layer ----

/// M[i][j] = coefficient of p_{τ_j} in the basis element X_{λ_i} (rows/cols in
/// partitions_of(n) order), for X in {m, h, p, s}.
const QMatrix& to_power_matrix(Basis plain, int n);
/// Inverse direction: coefficient of X_{λ_j} in p_{τ_i}.
const QMatrix& from_power_matrix(Basis plain, int n);
/// Index of λ in partitions_of(|λ|).
std::size_t partition_index(const Partition& lambda);

}  // namespace mhp
