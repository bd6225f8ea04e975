#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mhp/errors.hpp"
#include "mhp/multipoly.hpp"
#include "mhp/partitions.hpp"

namespace mhp {

/// Throws UsageError unless q is an odd prime.
void require_odd_prime(long q);

/// n×n matrix over F_q, n ∈ {1, 2}, entries in [0, q).
class FqMatrix {
 public:
  FqMatrix(int n, long q, std::array<long, 4> entries);
  static FqMatrix identity(int n, long q);
  static FqMatrix scalar(int n, long q, long c);

  int n() const { return n_; }
  long q() const { return q_; }
  long at(int i, int j) const { return a_[std::size_t(i * 2 + j)]; }

  long det() const;
  long trace() const;
  bool invertible() const { return det() != 0; }
  FqMatrix transpose() const;
  /// Throws StructuralError if singular.
  FqMatrix inverse() const;
  FqMatrix operator*(const FqMatrix& o) const;
  friend bool operator==(const FqMatrix& a, const FqMatrix& b) = default;

  std::string to_string() const;

 private:
  int n_;
  long q_;
  std::array<long, 4> a_;
};

long mod_pow(long base, long exp, long q);
long mod_inv(long x, long q);

/// All of GL_n(F_q), in a fixed order.
std::vector<FqMatrix> enumerate_gl(int n, long q);

/// σ(g) = J (gᵀ)⁻¹ J⁻¹, J antidiagonal with alternating signs.
FqMatrix sigma_twist(const FqMatrix& g);

/// Semisimple class given by its eigenvalues (with repetition) in F_q*.
struct ClassSpec {
  long q;
  std::vector<long> eigenvalues;  // sorted ascending

  /// Throws UsageError unless q is an odd prime, every eigenvalue lies in F_q*
  /// and is a square there.
  ClassSpec(long q, std::vector<long> eigenvalues);
  /// Eigenvalues read off a diagonalizable representative with eigenvalues in F_q.
  static ClassSpec from_representative(const FqMatrix& m);

  int n() const { return int(eigenvalues.size()); }
  /// Multiplicity partition μ of the eigenvalues.
  Partition multiplicities() const;
  bool contains(const FqMatrix& m) const;
  std::string to_string() const;
};

struct GenericityResult {
  bool generic = true;
  std::string witness;  // empty when generic
};

/// Exhaustive check over 1 ≤ M ≤ ⌊n/2⌋ and all disjoint (A_j, B_j) with |A_j| = |B_j| = M:
/// the product [A_1]_1⋯[A_k]_k [B_1]_1⁻¹⋯[B_k]_k⁻¹ must avoid 1 (and −1 when strong).
GenericityResult genericity_check(const std::vector<ClassSpec>& classes, bool strong);

/// |GL_n(F_q)| = ∏_{i<n} (q^n − q^i).
Integer gl_order(int n, long q);
/// ∏_r |GL_{m_r}(F_q)| for multiplicities μ = (m_r).
Integer centralizer_order(const Partition& mu, long q);

/// |Rep_C(F_q)| / |GL_n(F_q)| for
///   A_1 σ(B_1) A_1⁻¹ B_1⁻¹ ∏_{i≥2} [A_i, B_i] ∏_j X_j = 1,  X_j ∈ C_j.
/// Requires n ∈ {1,2}, g ≥ 1, a strongly generic class tuple. Throws
/// StructuralError if the quotient is not an integer.
Integer brute_count(int n, int g, const std::vector<ClassSpec>& classes, long q, int workers = 1);

}  // namespace mhp
