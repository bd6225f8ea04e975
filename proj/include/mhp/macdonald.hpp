#pragma once

#include "mhp/linalg.hpp"
#include "mhp/partitions.hpp"
#include "mhp/symfunc.hpp"

namespace mhp {

/// The ring Q(q,t) that modified Macdonald polynomials live over.
const VarList& qt_ring();

/// H_λ(Z;q,t) in the Schur basis. Determined by
///   H_λ[Z(1−q)] ∈ span{s_ν : ν ≥ λ},  H_λ[Z(1−t)] ∈ span{s_ν : ν ≥ λ*},
///   ⟨H_λ, s_(n)⟩ = 1.
SymFunc modified_macdonald(const Partition& lambda);

/// Row i: coefficients of H_{λ_i} in the Schur basis (partitions_of(n) order).
const RatMatrix& macdonald_to_schur(int n);
const RatMatrix& schur_to_macdonald(int n);

/// ∏_{x∈λ} (z^{a+1} − u w^l)(z^a − u⁻¹ w^{l+1}) with u, z, w given as values
/// in a common ring. With u = 1 this is N_λ(z,w).
/// Throws DivisionByZero if u = 0.
RatFun n_factor(const Partition& lambda, const RatFun& u, const RatFun& z, const RatFun& w);
/// Same product restricted to cells of even hook length.
RatFun n_tilde_factor(const Partition& lambda, const RatFun& u, const RatFun& z, const RatFun& w);

/// N_λ(z,w) over `vars` (which must contain z and w): the u = 1 case.
RatFun n_plain(const Partition& lambda, const VarList& vars, const std::string& z = "z",
               const std::string& w = "w");
RatFun n_tilde_plain(const Partition& lambda, const VarList& vars, const std::string& z = "z",
                     const std::string& w = "w");

}  // namespace mhp
