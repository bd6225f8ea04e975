#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhp/partitions.hpp"
#include "mhp/ratfun.hpp"

namespace mhp {

/// Rank n, genus g and one multiplicity partition μ_j ⊢ n per puncture.
struct PunctureSpec {
  int n = 0;
  int g = 1;
  std::vector<Partition> mus;

  int k() const { return int(mus.size()); }
  /// Throws UsageError unless g ≥ 1, k ≥ 1 and every μ_j ⊢ n.
  void validate() const;
  std::string to_string() const;
};

/// n(μ) read over the components (1^{m_r}): Σ m_r(m_r − 1)/2.
int n_multiplicity(const Partition& mu);

/// d = n²(2g+k−2) − kn − Σ_j 2n(μ_j). Throws UsageError if d is odd or negative.
int dimension(const PunctureSpec& spec);

/// A conjecture clause failed (non-polynomial ℍ, odd exponent after substitution, ...).
class PropertyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ℍ is not a polynomial; carries the reduced rational function.
class NotPolynomial : public PropertyFailure {
 public:
  explicit NotPolynomial(RatFun residual);
  const RatFun& residual() const { return residual_; }

 private:
  RatFun residual_;
};

/// Two E-polynomial paths returned different polynomials.
class PathDisagreement : public PropertyFailure {
 public:
  using PropertyFailure::PropertyFailure;
};

/// Series in the k-fold tensor power of Λ whose terms all have the same degree
/// in every factor, truncated above that common degree `trunc`. Coefficients
/// are taken in the monomial basis of each factor.
class DiagonalTensorSeries {
 public:
  using Index = std::vector<Partition>;

  DiagonalTensorSeries(int k, int trunc, VarList vars);
  static DiagonalTensorSeries one(int k, int trunc, const VarList& vars);

  int k() const { return k_; }
  int trunc() const { return trunc_; }
  const VarList& vars() const { return vars_; }
  const std::map<Index, RatFun>& component(int d) const { return data_.at(std::size_t(d)); }
  RatFun coeff(const Index& idx) const;

  /// Adds c·m_{idx_1}⊗…⊗m_{idx_k}; all idx_j must share one size ≤ trunc
  /// (terms of larger degree are dropped).
  void add(const Index& idx, const RatFun& c);

  DiagonalTensorSeries& operator+=(const DiagonalTensorSeries& o);
  DiagonalTensorSeries& operator-=(const DiagonalTensorSeries& o);
  friend DiagonalTensorSeries operator+(DiagonalTensorSeries a, const DiagonalTensorSeries& b) {
    return a += b;
  }
  friend DiagonalTensorSeries operator-(DiagonalTensorSeries a, const DiagonalTensorSeries& b) {
    return a -= b;
  }
  friend DiagonalTensorSeries operator*(const DiagonalTensorSeries& a,
                                        const DiagonalTensorSeries& b);
  friend bool operator==(const DiagonalTensorSeries& a, const DiagonalTensorSeries& b);

  /// Number of stored terms.
  std::size_t size() const;

 private:
  void check_compatible(const DiagonalTensorSeries& o) const;

  int k_;
  int trunc_;
  VarList vars_;
  std::vector<std::map<Index, RatFun>> data_;  // by degree 0..trunc
};

/// Graded inverse up to trunc. Throws StructuralError unless the degree-0 part is 1.
DiagonalTensorSeries series_invert(const DiagonalTensorSeries& s);

enum class OmegaKind { bullet, star };

/// The (z,w) series over Q(z,w), truncated at degree n.
DiagonalTensorSeries omega_zw(const PunctureSpec& spec, OmegaKind which);
/// The q series over Q(q), truncated at degree n.
DiagonalTensorSeries omega_q(const PunctureSpec& spec, OmegaKind which);

const VarList& zw_ring();
const VarList& qt_hodge_ring();

/// ⟨Ω•²/Ω*, ∏ h_{μ_j}⟩ as a reduced rational function in z, w.
RatFun hmu_rational(const PunctureSpec& spec);
/// Throws NotPolynomial if f has a non-trivial denominator.
MultiPoly certify_polynomial(const RatFun& f);
/// hmu_rational followed by certify_polynomial.
MultiPoly hmu(const PunctureSpec& spec);

/// (t s)^d ℍ(−t s, 1/s) with s² = q, over {q, t}. Throws PropertyFailure on an odd s-exponent.
MultiPoly mixed_hodge(const PunctureSpec& spec);
MultiPoly mixed_hodge_from(const MultiPoly& h, int d);

enum class EPath { series_q, series_zw, type_sum };
std::string path_name(EPath p);
EPath parse_path(const std::string& s);

/// E-polynomial over {q}.
MultiPoly e_polynomial(const PunctureSpec& spec, EPath path);
/// s^d ℍ(s, 1/s) with s² = q.
MultiPoly e_from_hmu(const MultiPoly& h, int d);
/// Runs all three paths; throws PathDisagreement naming the first mismatch.
MultiPoly e_polynomial_all_paths(const PunctureSpec& spec);

struct ConjectureReport {
  std::optional<MultiPoly> hmu;
  std::string failure;  // non-empty when hmu is not a polynomial
  int dim_d = 0;
  bool is_polynomial = false;
  bool degree_d_each_var = false;
  bool even_degrees = false;
  bool nonneg_at_minus_z = false;
  bool zw_symmetric = false;
  bool curious_duality_t_minus1 = false;
  std::optional<MultiPoly> epoly;

  bool all_true() const;
};

ConjectureReport verify_conjecture(const PunctureSpec& spec);

/// q^d E(1/q) == E(q).
bool palindromic(const MultiPoly& e, int d);

/// {"schema":1,"vars":[...],"terms":[{"exp":[...],"coeff":"..."}]}, terms in
/// descending graded-lex order.
std::string poly_to_json(const MultiPoly& p);

}  // namespace mhp
