#include "mhp/linalg.hpp"

namespace mhp {
namespace {

bool is_zero(const Rational& x) { return sgn(x) == 0; }
bool is_zero(const RatFun& x) { return x.is_zero(); }

template <class T>
std::vector<std::vector<T>> gauss_jordan(std::vector<std::vector<T>> a, const T& zero,
                                         const T& one) {
  const std::size_t n = a.size();
  std::vector<std::vector<T>> inv(n, std::vector<T>(n, zero));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = one;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(a[pivot][col])) ++pivot;
    if (pivot == n) throw StructuralError("singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    T scale = one / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(a[col][j])) a[col][j] = a[col][j] * scale;
      if (!is_zero(inv[col][j])) inv[col][j] = inv[col][j] * scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      T f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(a[col][j])) a[r][j] = a[r][j] - f * a[col][j];
        if (!is_zero(inv[col][j])) inv[r][j] = inv[r][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

QMatrix invert(const QMatrix& a) { return gauss_jordan<Rational>(a, Rational(0), Rational(1)); }

RatMatrix invert(const RatMatrix& a) {
  if (a.empty()) return {};
  const VarList& v = a[0][0].vars();
  return gauss_jordan<RatFun>(a, RatFun(v), RatFun::constant(v, 1));
}

RatFun embed(const RatFun& f, const VarList& target) {
  if (f.vars() == target) return f;
  return RatFun(embed(f.num(), target), embed(f.den(), target));
}

}  // namespace mhp

namespace mhp {

std::vector<RatFun> solve_unique(RatMatrix rows, std::vector<RatFun> rhs) {
  if (rows.empty()) throw StructuralError("empty linear system");
  const std::size_t m = rows.size(), n = rows[0].size();
  const VarList& v = rows[0][0].vars();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t p = r;
    while (p < m && rows[p][col].is_zero()) ++p;
    if (p == m) throw StructuralError("linear system has no unique solution");
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    RatFun inv = rows[r][col].inverse();
    for (std::size_t j = col; j < n; ++j) {
      if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    }
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      RatFun f = rows[i][col];
      for (std::size_t j = col; j < n; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      }
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  if (pivot_col.size() != n) throw StructuralError("linear system has no unique solution");
  for (std::size_t i = r; i < m; ++i) {
    if (!rhs[i].is_zero()) throw StructuralError("inconsistent linear system");
  }
  std::vector<RatFun> x(n, RatFun(v));
  for (std::size_t i = 0; i < n; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

}  // namespace mhp
