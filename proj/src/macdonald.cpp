#include "mhp/macdonald.hpp"

#include "mhp/memo.hpp"

namespace mhp {
namespace {

struct MacTables {
  RatMatrix to_s;
  RatMatrix from_s;
};

// A[i][j]: coefficient of s_{ν_j} in s_{ν_i}[Z(1 − x)], x a variable of qt_ring().
RatMatrix schur_plethysm_one_minus(int n, std::size_t var) {
  const VarList& R = qt_ring();
  const auto& parts = partitions_of(n);
  RatMatrix a(parts.size(), std::vector<RatFun>(parts.size(), RatFun(R)));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    SymFunc s = SymFunc::element(Basis::schur, R, parts[i]);
    SymFunc t = plethys_sub(s, [&](int r) {
      Exponent e{};
      e[var] = static_cast<std::uint16_t>(r);
      return RatFun(MultiPoly::constant(R, 1) - MultiPoly::monomial(R, e));
    });
    for (const auto& [nu, c] : t.coeffs()) a[i][partition_index(nu)] = c;
  }
  return a;
}

MacTables build(int n) {
  const VarList& R = qt_ring();
  const auto& parts = partitions_of(n);
  const std::size_t N = parts.size();
  RatMatrix aq = schur_plethysm_one_minus(n, 0);
  RatMatrix at = schur_plethysm_one_minus(n, 1);

  MacTables t;
  t.to_s.assign(N, std::vector<RatFun>(N, RatFun(R)));
  for (std::size_t m = 0; m < N; ++m) {
    const Partition& mu = parts[m];
    const Partition mu_dual = dual(mu);
    RatMatrix rows;
    std::vector<RatFun> rhs;
    for (std::size_t j = 0; j < N; ++j) {
      if (!dominates(parts[j], mu)) {
        std::vector<RatFun> row(N, RatFun(R));
        for (std::size_t i = 0; i < N; ++i) row[i] = aq[i][j];
        rows.push_back(std::move(row));
        rhs.emplace_back(R);
      }
      if (!dominates(parts[j], mu_dual)) {
        std::vector<RatFun> row(N, RatFun(R));
        for (std::size_t i = 0; i < N; ++i) row[i] = at[i][j];
        rows.push_back(std::move(row));
        rhs.emplace_back(R);
      }
    }
    // Normalization: coefficient of s_(n) (index 0) is 1.
    std::vector<RatFun> norm(N, RatFun(R));
    norm[0] = RatFun::constant(R, 1);
    rows.push_back(std::move(norm));
    rhs.push_back(RatFun::constant(R, 1));
    t.to_s[m] = solve_unique(std::move(rows), std::move(rhs));
  }
  t.from_s = invert(t.to_s);
  return t;
}

const MacTables& tables(int n) {
  static Memo<int, MacTables> memo;
  return memo.get(n, [n] { return build(n); });
}

RatFun cell_product(const Partition& lambda, const RatFun& u, const RatFun& z, const RatFun& w,
                    bool even_only) {
  if (u.is_zero()) throw DivisionByZero("n_factor: u = 0");
  RatFun num = RatFun::constant(z.vars(), 1);
  int count = 0;
  for (const auto& h : hooks(lambda)) {
    if (even_only && h.hook % 2 != 0) continue;
    // (z^a − u⁻¹ w^{l+1}) = (u z^a − w^{l+1}) / u
    num *= (z.pow(h.arm + 1) - u * w.pow(h.leg)) * (u * z.pow(h.arm) - w.pow(h.leg + 1));
    ++count;
  }
  return num / u.pow(count);
}

RatFun var(const VarList& vars, const std::string& name) { return RatFun::variable(vars, name); }

}  // namespace

const VarList& qt_ring() {
  static const VarList R{"q", "t"};
  return R;
}

SymFunc modified_macdonald(const Partition& lambda) {
  const auto& parts = partitions_of(lambda.size());
  const auto& row = tables(lambda.size()).to_s[partition_index(lambda)];
  SymFunc f(Basis::schur, qt_ring(), lambda.size());
  for (std::size_t j = 0; j < parts.size(); ++j) f.add(parts[j], row[j]);
  return f;
}

const RatMatrix& macdonald_to_schur(int n) { return tables(n).to_s; }
const RatMatrix& schur_to_macdonald(int n) { return tables(n).from_s; }

RatFun n_factor(const Partition& lambda, const RatFun& u, const RatFun& z, const RatFun& w) {
  return cell_product(lambda, u, z, w, false);
}

RatFun n_tilde_factor(const Partition& lambda, const RatFun& u, const RatFun& z,
                      const RatFun& w) {
  return cell_product(lambda, u, z, w, true);
}

RatFun n_plain(const Partition& lambda, const VarList& vars, const std::string& z,
               const std::string& w) {
  return n_factor(lambda, RatFun::constant(vars, 1), var(vars, z), var(vars, w));
}

RatFun n_tilde_plain(const Partition& lambda, const VarList& vars, const std::string& z,
                     const std::string& w) {
  return n_tilde_factor(lambda, RatFun::constant(vars, 1), var(vars, z), var(vars, w));
}

}  // namespace mhp
