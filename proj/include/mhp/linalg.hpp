#pragma once

#include <vector>

#include "mhp/ratfun.hpp"

namespace mhp {

using QMatrix = std::vector<std::vector<Rational>>;
using RatMatrix = std::vector<std::vector<RatFun>>;

/// Inverse of a square matrix; throws StructuralError if singular.
QMatrix invert(const QMatrix& a);
RatMatrix invert(const RatMatrix& a);

/// Embeds a rational function into a ring whose variables include its own.
RatFun embed(const RatFun& f, const VarList& target);

}  // namespace mhp

namespace mhp {

/// Solves the (possibly overdetermined) system rows·x = rhs over Q(vars).
/// Throws StructuralError if the system is inconsistent or has no unique solution.
std::vector<RatFun> solve_unique(RatMatrix rows, std::vector<RatFun> rhs);

}  // namespace mhp
