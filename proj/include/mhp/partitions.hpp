#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mhp/multipoly.hpp"

namespace mhp {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Throws UsageError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Comma-separated parts, e.g. "2,1"; "" or "0" is the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return int(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// 0-based part access; 0 past the end.
  int part(int i) const { return i < length() ? parts_[std::size_t(i)] : 0; }

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) = default;
  /// Orders by size, then reverse-lexicographically, so that partitions_of(n)
  /// lists partitions in increasing order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Cell {
  int row;  // 1-based
  int col;  // 1-based
};

struct Hook {
  int arm;
  int leg;
  int hook;
};

/// All partitions of n, (n) first and (1^n) last.
const std::vector<Partition>& partitions_of(int n);

std::vector<Cell> cells(const Partition& lambda);
Hook arm_leg_hook(const Partition& lambda, Cell x);
std::vector<Hook> hooks(const Partition& lambda);

/// n(λ) = Σ (i−1) λ_i.
int n_stat(const Partition& lambda);
Partition dual(const Partition& lambda);
/// m_i(λ): multiplicity of part i, indexed 0..λ_1 (index 0 unused).
std::vector<int> multiplicities(const Partition& lambda);
/// z_λ = ∏ i^{m_i} m_i!.
Integer z_factor(const Partition& lambda);
/// Dominance order a ≥ b (same size required).
bool dominates(const Partition& a, const Partition& b);
/// Sorted union of parts.
Partition join(const Partition& a, const Partition& b);

/// 2-core by repeated removal of dominoes (rim hooks of length 2).
Partition two_core(const Partition& lambda);

/// H_λ(q) = ∏_{x∈λ} (1 − q^{h(x)}) as a polynomial in the ring `vars` in variable `var`.
MultiPoly hook_polynomial(const Partition& lambda, const VarList& vars = VarList{"q"},
                          const std::string& var = "q");

/// A type ω = ω₊ ω₋ (ω_i): two partitions and an unordered multiset of
/// nonempty partitions, stored in decreasing order.
struct TypeData {
  Partition plus;
  Partition minus;
  std::vector<Partition> star;

  TypeData() = default;
  TypeData(Partition p, Partition m, std::vector<Partition> s);

  /// |ω| = |ω₊| + |ω₋| + Σ|ω_i|.
  int size() const;
  /// All component partitions: ω₊, ω₋, then the ω_i.
  std::vector<Partition> components() const;

  /// "p:2,1|m:1|s:(2),(1,1)".
  std::string to_string() const;
  static TypeData parse(const std::string& text);

  friend bool operator==(const TypeData& a, const TypeData& b) = default;
};

struct TypeStats {
  Integer N;          // N(ω*) = ∏ m_λ!
  Integer K;          // K(ω*) = (−1)^l l!
  TypeData braces;    // {ω}: multiplicities in ω* doubled
  Partition bracket;  // [ω]: union of all parts of ω
  Integer z;          // z_ω = z_{ω₊} z_{ω₋} ∏ z_{ω_i}
};

TypeStats type_stats(const TypeData& omega);
/// n(ω) = n(ω₊) + n(ω₋) + Σ n(ω_i).
int n_stat(const TypeData& omega);
/// {ω} on its own.
TypeData braces(const TypeData& omega);
/// [ω] on its own.
Partition bracket(const TypeData& omega);
/// H_ω(q) = product of hook polynomials of the components.
MultiPoly hook_polynomial(const TypeData& omega, const VarList& vars = VarList{"q"},
                          const std::string& var = "q");

/// All types ω with |{ω}| = n, i.e. |ω₊| + |ω₋| + 2Σ|ω_i| = n.
std::vector<TypeData> types_with_brace_size(int n);

}  // namespace mhp
