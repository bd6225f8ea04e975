#include "mhp/symfunc.hpp"

#include <algorithm>

#include "mhp/macdonald.hpp"
#include "mhp/memo.hpp"

namespace mhp {
namespace {

using PowerVec = std::map<Partition, RatFun>;
using QVec = std::map<Partition, Rational>;

bool is_plain(Basis b) {
  return b == Basis::monomial || b == Basis::complete || b == Basis::power || b == Basis::schur;
}

int plain_slot(Basis b) {
  switch (b) {
    case Basis::monomial: return 0;
    case Basis::complete: return 1;
    case Basis::power: return 2;
    case Basis::schur: return 3;
    default: throw StructuralError("not a parameter-free basis");
  }
}

void require_params(Basis b, const VarList& vars) {
  if ((b == Basis::hall_littlewood || b == Basis::modified_hl) && !vars.contains("q")) {
    throw StructuralError(basis_name(b) + " basis needs a ring containing q");
  }
  if (b == Basis::modified_macdonald && (!vars.contains("q") || !vars.contains("t"))) {
    throw StructuralError("modified Macdonald basis needs a ring containing q and t");
  }
}

// ---- characters ----

long mn_character(const std::vector<int>& lambda, const std::vector<int>& tau, std::size_t k,
                  std::map<std::pair<std::vector<int>, std::size_t>, long>& memo) {
  if (k == tau.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const int r = tau[k];
  const int L = int(lambda.size());
  std::vector<int> beta(static_cast<std::size_t>(L));
  for (int i = 0; i < L; ++i) beta[std::size_t(i)] = lambda[std::size_t(i)] + (L - 1 - i);
  long total = 0;
  for (int i = 0; i < L; ++i) {
    int b = beta[std::size_t(i)] - r;
    if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
    int between = 0;
    for (int x : beta) {
      if (x > b && x < beta[std::size_t(i)]) ++between;
    }
    std::vector<int> nb = beta;
    nb[std::size_t(i)] = b;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> next;
    for (int j = 0; j < L; ++j) {
      int part = nb[std::size_t(j)] - (L - 1 - j);
      if (part > 0) next.push_back(part);
    }
    long v = mn_character(next, tau, k + 1, memo);
    total += (between % 2 ? -v : v);
  }
  memo.emplace(std::move(key), total);
  return total;
}

// ---- parameter-free tables ----

struct PlainTables {
  std::vector<std::vector<long>> chi;  // chi[i][j] = χ^{λ_i}_{λ_j}
  QMatrix to_p[4];
  QMatrix from_p[4];
};

// Number of ways to distribute the parts of tau into len(mu) boxes with box sums mu.
long count_distributions(const std::vector<int>& tau, std::size_t k, std::vector<int>& room) {
  if (k == tau.size()) {
    return std::all_of(room.begin(), room.end(), [](int x) { return x == 0; }) ? 1 : 0;
  }
  long total = 0;
  for (auto& r : room) {
    if (r >= tau[k]) {
      r -= tau[k];
      total += count_distributions(tau, k + 1, room);
      r += tau[k];
    }
  }
  return total;
}

QVec h_single_in_p(int n) {
  QVec out;
  for (const auto& t : partitions_of(n)) out[t] = Rational(1) / Rational(z_factor(t));
  return out;
}

QVec multiply_q(const QVec& a, const QVec& b) {
  QVec out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) out[join(x, y)] += cx * cy;
  }
  return out;
}

PlainTables build_plain(int n) {
  const auto& parts = partitions_of(n);
  const std::size_t N = parts.size();
  PlainTables t;
  std::map<std::pair<std::vector<int>, std::size_t>, long> memo;
  t.chi.assign(N, std::vector<long>(N));
  for (std::size_t j = 0; j < N; ++j) {
    memo.clear();  // keys omit τ
    for (std::size_t i = 0; i < N; ++i) {
      t.chi[i][j] = mn_character(parts[i].parts(), parts[j].parts(), 0, memo);
    }
  }
  auto zero = [&] { return QMatrix(N, std::vector<Rational>(N)); };

  QMatrix& sp = t.to_p[plain_slot(Basis::schur)] = zero();
  QMatrix& ps = t.from_p[plain_slot(Basis::schur)] = zero();
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      sp[i][j] = Rational(t.chi[i][j]) / Rational(z_factor(parts[j]));
      ps[i][j] = Rational(t.chi[j][i]);
    }
  }

  QMatrix id = zero();
  for (std::size_t i = 0; i < N; ++i) id[i][i] = 1;
  t.to_p[plain_slot(Basis::power)] = id;
  t.from_p[plain_slot(Basis::power)] = id;

  QMatrix pm = zero();
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      std::vector<int> room = parts[j].parts();
      pm[i][j] = count_distributions(parts[i].parts(), 0, room);
    }
  }
  t.from_p[plain_slot(Basis::monomial)] = pm;
  t.to_p[plain_slot(Basis::monomial)] = invert(pm);

  QMatrix hp = zero();
  for (std::size_t i = 0; i < N; ++i) {
    QVec acc{{Partition(), Rational(1)}};
    for (int part : parts[i].parts()) acc = multiply_q(acc, h_single_in_p(part));
    for (const auto& [tau, c] : acc) hp[i][partition_index(tau)] = c;
  }
  t.to_p[plain_slot(Basis::complete)] = hp;
  t.from_p[plain_slot(Basis::complete)] = invert(hp);
  return t;
}

const PlainTables& plain_tables(int n) {
  static Memo<int, PlainTables> memo;
  return memo.get(n, [n] { return build_plain(n); });
}

// ---- Hall–Littlewood tables over Q(q) ----

struct HLTables {
  RatMatrix P_in_m;      // P_in_m[i][k]: coefficient of m_k in P_{λ_i}
  std::vector<RatFun> b;
  std::vector<std::vector<MultiPoly>> K;   // K[i][j] = K_{λ_i λ_j}
  std::vector<std::vector<MultiPoly>> Kt;  // modified
  RatMatrix P_to_s, s_to_P, Ht_to_s, s_to_Ht;
};

MultiPoly q_power(int e) {
  Exponent x{};
  x[0] = static_cast<std::uint16_t>(e);
  return MultiPoly::monomial(q_ring(), x);
}

HLTables build_hl(int n) {
  const VarList& Q = q_ring();
  const auto& parts = partitions_of(n);
  const std::size_t N = parts.size();
  const QMatrix& mp = to_power_matrix(Basis::monomial, n);
  const RatFun one = RatFun::constant(Q, 1);
  const RatFun zero(Q);

  // Weight of p_τ under ⟨,⟩_q.
  std::vector<RatFun> weight(N);
  for (std::size_t j = 0; j < N; ++j) {
    RatFun w = RatFun::constant(Q, Rational(z_factor(parts[j])));
    for (int r : parts[j].parts()) w = w / RatFun(MultiPoly::constant(Q, 1) - q_power(r));
    weight[j] = w;
  }
  RatMatrix gram(N, std::vector<RatFun>(N, zero));
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = a; b < N; ++b) {
      RatFun acc = zero;
      for (std::size_t j = 0; j < N; ++j) {
        Rational c = mp[a][j] * mp[b][j];
        if (sgn(c) != 0) acc += weight[j].scaled(c);
      }
      gram[a][b] = gram[b][a] = acc;
    }
  }

  HLTables t;
  t.P_in_m.assign(N, std::vector<RatFun>(N, zero));
  t.b.assign(N, zero);
  std::vector<RatFun> norm(N, zero);
  // Gram–Schmidt from (1^n) (last index) up to (n).
  for (std::size_t ii = N; ii-- > 0;) {
    std::vector<RatFun> v(N, zero);
    v[ii] = one;
    for (std::size_t jj = N - 1; jj > ii; --jj) {
      RatFun ip = zero;
      for (std::size_t k = 0; k < N; ++k) {
        if (!t.P_in_m[jj][k].is_zero()) ip += t.P_in_m[jj][k] * gram[ii][k];
      }
      if (ip.is_zero()) continue;
      RatFun f = ip / norm[jj];
      for (std::size_t k = 0; k < N; ++k) {
        if (!t.P_in_m[jj][k].is_zero()) v[k] -= f * t.P_in_m[jj][k];
      }
    }
    RatFun nn = zero;
    for (std::size_t k = 0; k < N; ++k) {
      if (!v[k].is_zero()) nn += v[k] * gram[ii][k];
    }
    t.P_in_m[ii] = v;
    norm[ii] = nn;
    t.b[ii] = nn.inverse();
  }

  // s in m basis: s → p → m.
  const QMatrix& sp = to_power_matrix(Basis::schur, n);
  const QMatrix& pm = from_power_matrix(Basis::monomial, n);
  RatMatrix s_in_m(N, std::vector<RatFun>(N, zero));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t k = 0; k < N; ++k) {
      Rational c = 0;
      for (std::size_t j = 0; j < N; ++j) c += sp[i][j] * pm[j][k];
      if (sgn(c) != 0) s_in_m[i][k] = RatFun::constant(Q, c);
    }
  }
  RatMatrix m_to_P = invert(t.P_in_m);
  t.s_to_P.assign(N, std::vector<RatFun>(N, zero));
  t.K.assign(N, std::vector<MultiPoly>(N, MultiPoly(Q)));
  t.Kt.assign(N, std::vector<MultiPoly>(N, MultiPoly(Q)));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      RatFun acc = zero;
      for (std::size_t k = 0; k < N; ++k) {
        if (!s_in_m[i][k].is_zero() && !m_to_P[k][j].is_zero()) acc += s_in_m[i][k] * m_to_P[k][j];
      }
      t.s_to_P[i][j] = acc;
      auto poly = acc.as_polynomial();
      if (!poly) throw StructuralError("Kostka-Foulkes entry is not a polynomial");
      t.K[i][j] = *poly;
      const int nt = n_stat(parts[j]);
      std::vector<Term> rev;
      for (const auto& term : poly->terms()) {
        if (term.exp[0] > nt) throw StructuralError("Kostka-Foulkes degree exceeds n(τ)");
        Term r = term;
        r.exp[0] = static_cast<std::uint16_t>(nt - term.exp[0]);
        rev.push_back(r);
      }
      t.Kt[i][j] = MultiPoly::from_terms(Q, rev);
    }
  }
  t.P_to_s = invert(t.s_to_P);
  t.Ht_to_s.assign(N, std::vector<RatFun>(N, zero));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) t.Ht_to_s[i][j] = RatFun(t.Kt[j][i]);
  }
  t.s_to_Ht = invert(t.Ht_to_s);
  return t;
}

const HLTables& hl_tables(int n) {
  static Memo<int, HLTables> memo;
  return memo.get(n, [n] { return build_hl(n); });
}

// Param-basis → Schur matrix (rows: basis elements) and its inverse, over the native ring.
const RatMatrix& param_to_schur(Basis b, int n) {
  switch (b) {
    case Basis::hall_littlewood: return hl_tables(n).P_to_s;
    case Basis::modified_hl: return hl_tables(n).Ht_to_s;
    case Basis::modified_macdonald: return macdonald_to_schur(n);
    default: throw StructuralError("not a parameterized basis");
  }
}

const RatMatrix& schur_to_param(Basis b, int n) {
  switch (b) {
    case Basis::hall_littlewood: return hl_tables(n).s_to_P;
    case Basis::modified_hl: return hl_tables(n).s_to_Ht;
    case Basis::modified_macdonald: return schur_to_macdonald(n);
    default: throw StructuralError("not a parameterized basis");
  }
}

// Applies a coefficient vector (indexed by partition) to matrix rows.
template <class Entry, class Scale>
PowerVec apply(const std::map<Partition, RatFun>& v, const std::vector<std::vector<Entry>>& m,
               int n, const VarList& vars, Scale scale) {
  const auto& parts = partitions_of(n);
  std::vector<RatFun> acc(parts.size(), RatFun(vars));
  for (const auto& [lambda, c] : v) {
    const auto& row = m[partition_index(lambda)];
    for (std::size_t j = 0; j < parts.size(); ++j) scale(acc[j], c, row[j]);
  }
  PowerVec out;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (!acc[j].is_zero()) out.emplace(parts[j], std::move(acc[j]));
  }
  return out;
}

PowerVec apply_q(const std::map<Partition, RatFun>& v, const QMatrix& m, int n,
                 const VarList& vars) {
  return apply(v, m, n, vars, [](RatFun& acc, const RatFun& c, const Rational& e) {
    if (sgn(e) != 0) acc += c.scaled(e);
  });
}

PowerVec apply_r(const std::map<Partition, RatFun>& v, const RatMatrix& m, int n,
                 const VarList& vars) {
  return apply(v, m, n, vars, [&vars](RatFun& acc, const RatFun& c, const RatFun& e) {
    if (!e.is_zero()) acc += c * embed(e, vars);
  });
}

PowerVec to_power(const SymFunc& f) {
  const int n = f.degree();
  if (f.basis() == Basis::power) return f.coeffs();
  if (is_plain(f.basis())) return apply_q(f.coeffs(), to_power_matrix(f.basis(), n), n, f.vars());
  PowerVec s = apply_r(f.coeffs(), param_to_schur(f.basis(), n), n, f.vars());
  return apply_q(s, to_power_matrix(Basis::schur, n), n, f.vars());
}

SymFunc from_power(const PowerVec& v, Basis target, const VarList& vars, int n) {
  SymFunc out(target, vars, n);
  PowerVec r;
  if (target == Basis::power) {
    r = v;
  } else if (is_plain(target)) {
    r = apply_q(v, from_power_matrix(target, n), n, vars);
  } else {
    PowerVec s = apply_q(v, from_power_matrix(Basis::schur, n), n, vars);
    r = apply_r(s, schur_to_param(target, n), n, vars);
  }
  for (auto& [lambda, c] : r) out.add(lambda, c);
  return out;
}

PowerVec multiply_power(const PowerVec& a, const PowerVec& b) {
  PowerVec out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) {
      Partition key = join(x, y);
      auto it = out.find(key);
      if (it == out.end()) {
        out.emplace(key, cx * cy);
      } else {
        it->second += cx * cy;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::monomial: return "m";
    case Basis::complete: return "h";
    case Basis::power: return "p";
    case Basis::schur: return "s";
    case Basis::hall_littlewood: return "P";
    case Basis::modified_hl: return "Ht";
    case Basis::modified_macdonald: return "H";
  }
  return "?";
}

std::size_t partition_index(const Partition& lambda) {
  const auto& parts = partitions_of(lambda.size());
  auto it = std::lower_bound(parts.begin(), parts.end(), lambda);
  if (it == parts.end() || *it != lambda) throw StructuralError("partition index lookup failed");
  return std::size_t(it - parts.begin());
}

const QMatrix& to_power_matrix(Basis plain, int n) { return plain_tables(n).to_p[plain_slot(plain)]; }

const QMatrix& from_power_matrix(Basis plain, int n) {
  return plain_tables(n).from_p[plain_slot(plain)];
}

long sn_character(const Partition& lambda, const Partition& tau) {
  if (lambda.size() != tau.size()) throw UsageError("character needs |λ| = |τ|");
  return plain_tables(lambda.size()).chi[partition_index(lambda)][partition_index(tau)];
}

// ---- SymFunc ----

SymFunc::SymFunc(Basis basis, VarList vars, int degree)
    : basis_(basis), vars_(std::move(vars)), degree_(degree) {
  if (degree < 0) throw StructuralError("negative degree");
  require_params(basis_, vars_);
}

SymFunc SymFunc::element(Basis basis, const VarList& vars, const Partition& lambda) {
  return element(basis, vars, lambda, RatFun::constant(vars, 1));
}

SymFunc SymFunc::element(Basis basis, const VarList& vars, const Partition& lambda,
                         const RatFun& c) {
  SymFunc f(basis, vars, lambda.size());
  f.add(lambda, c);
  return f;
}

RatFun SymFunc::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? RatFun(vars_) : it->second;
}

void SymFunc::add(const Partition& lambda, const RatFun& c) {
  if (lambda.size() != degree_) throw StructuralError("inhomogeneous term in symmetric function");
  if (c.vars() != vars_) throw StructuralError("coefficient over a different ring");
  if (c.is_zero()) return;
  auto it = coeffs_.find(lambda);
  if (it == coeffs_.end()) {
    coeffs_.emplace(lambda, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& [l, c] : r.coeffs_) c = -c;
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.is_zero()) return *this;
  if (o.degree_ != degree_) {
    if (is_zero()) return *this = o;
    throw StructuralError("adding symmetric functions of different degree");
  }
  const SymFunc& same = o.basis_ == basis_ ? o : base_change(o, basis_);
  for (const auto& [l, c] : same.coeffs_) add(l, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc SymFunc::scaled(const RatFun& c) const {
  SymFunc r(basis_, vars_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [l, x] : coeffs_) r.coeffs_.emplace(l, x * c);
  return r;
}

SymFunc SymFunc::map_coeffs(const std::function<RatFun(const RatFun&)>& fn,
                            const VarList& vars) const {
  SymFunc r(basis_, vars, degree_);
  for (const auto& [l, x] : coeffs_) r.add(l, fn(x));
  return r;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.vars_ != b.vars_) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree_ != b.degree_) return false;
  if (a.basis_ == b.basis_) return a.coeffs_ == b.coeffs_;
  return a.coeffs_ == base_change(b, a.basis_).coeffs_;
}

std::string SymFunc::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [l, c] : coeffs_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*" + basis_name(basis_) + "[" + l.to_string() + "]";
  }
  return s;
}

SymFunc base_change(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  return from_power(to_power(f), target, f.vars(), f.degree());
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  if (f.vars() != g.vars()) throw StructuralError("multiplying over different rings");
  PowerVec prod = multiply_power(to_power(f), to_power(g));
  return from_power(prod, f.basis(), f.vars(), f.degree() + g.degree());
}

SymFunc product_of(Basis b, const VarList& vars, const std::vector<Partition>& factors,
                   Basis out) {
  PowerVec acc{{Partition(), RatFun::constant(vars, 1)}};
  int deg = 0;
  for (const auto& f : factors) {
    if (f.empty()) continue;
    acc = multiply_power(acc, to_power(SymFunc::element(b, vars, f)));
    deg += f.size();
  }
  return from_power(acc, out, vars, deg);
}

SymFunc plethys_sub(const SymFunc& f, const std::function<RatFun(int)>& c) {
  std::map<int, RatFun> cache;
  auto factor = [&](int r) -> const RatFun& {
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, c(r)).first;
    return it->second;
  };
  PowerVec v = to_power(f);
  for (auto& [tau, coeff] : v) {
    for (int r : tau.parts()) coeff *= factor(r);
  }
  for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
  return from_power(v, f.basis(), f.vars(), f.degree());
}

SymFunc plethys_over_one_minus(const SymFunc& f, const std::string& q) {
  const VarList& vars = f.vars();
  auto idx = vars.index(q);
  if (!idx) throw StructuralError("plethysm variable '" + q + "' not in ring");
  return plethys_sub(f, [&](int r) {
    Exponent e{};
    e[*idx] = static_cast<std::uint16_t>(r);
    MultiPoly d = MultiPoly::constant(vars, 1) - MultiPoly::monomial(vars, e);
    return RatFun(MultiPoly::constant(vars, 1), d);
  });
}

RatFun hall_inner(const SymFunc& f, const SymFunc& g) {
  if (f.vars() != g.vars()) throw StructuralError("inner product over different rings");
  RatFun acc(f.vars());
  if (f.degree() != g.degree()) return acc;
  PowerVec a = to_power(f);
  PowerVec b = to_power(g);
  for (const auto& [tau, c] : a) {
    auto it = b.find(tau);
    if (it != b.end()) acc += (c * it->second).scaled(Rational(z_factor(tau)));
  }
  return acc;
}

RatFun qt_inner(const SymFunc& f, const SymFunc& g, const std::string& q, const std::string& t) {
  const VarList& vars = g.vars();
  auto iq = vars.index(q), it = vars.index(t);
  if (!iq || !it) throw StructuralError("qt_inner needs variables q and t in the ring");
  SymFunc twisted = plethys_sub(g, [&](int r) {
    Exponent eq{}, et{};
    eq[*iq] = static_cast<std::uint16_t>(r);
    et[*it] = static_cast<std::uint16_t>(r);
    MultiPoly one = MultiPoly::constant(vars, 1);
    return RatFun((MultiPoly::monomial(vars, eq) - one) * (one - MultiPoly::monomial(vars, et)));
  });
  return hall_inner(f, twisted);
}

const std::vector<std::pair<Partition, Integer>>& monomial_product(const Partition& lambda,
                                                                   const Partition& mu) {
  static Memo<std::pair<Partition, Partition>, std::vector<std::pair<Partition, Integer>>> memo;
  return memo.get({lambda, mu}, [&] {
    const QMatrix& a = to_power_matrix(Basis::monomial, lambda.size());
    const QMatrix& b = to_power_matrix(Basis::monomial, mu.size());
    const auto& pa = partitions_of(lambda.size());
    const auto& pb = partitions_of(mu.size());
    const std::size_t ia = partition_index(lambda), ib = partition_index(mu);
    QVec prod;
    for (std::size_t i = 0; i < pa.size(); ++i) {
      if (sgn(a[ia][i]) == 0) continue;
      for (std::size_t j = 0; j < pb.size(); ++j) {
        if (sgn(b[ib][j]) == 0) continue;
        prod[join(pa[i], pb[j])] += a[ia][i] * b[ib][j];
      }
    }
    const int n = lambda.size() + mu.size();
    const QMatrix& pm = from_power_matrix(Basis::monomial, n);
    const auto& pn = partitions_of(n);
    std::vector<Rational> acc(pn.size());
    for (const auto& [tau, c] : prod) {
      const auto& row = pm[partition_index(tau)];
      for (std::size_t k = 0; k < pn.size(); ++k) acc[k] += c * row[k];
    }
    std::vector<std::pair<Partition, Integer>> out;
    for (std::size_t k = 0; k < pn.size(); ++k) {
      if (sgn(acc[k]) == 0) continue;
      if (acc[k].get_den() != 1) throw StructuralError("non-integral monomial structure constant");
      out.emplace_back(pn[k], acc[k].get_num());
    }
    return out;
  });
}

// ---- Hall–Littlewood ----

const VarList& q_ring() {
  static const VarList Q{"q"};
  return Q;
}

SymFunc hall_littlewood_P(const Partition& lambda) {
  const auto& t = hl_tables(lambda.size());
  const auto& parts = partitions_of(lambda.size());
  SymFunc f(Basis::monomial, q_ring(), lambda.size());
  const auto& row = t.P_in_m[partition_index(lambda)];
  for (std::size_t k = 0; k < parts.size(); ++k) f.add(parts[k], row[k]);
  return f;
}

RatFun b_factor(const Partition& lambda) {
  return hl_tables(lambda.size()).b[partition_index(lambda)];
}

MultiPoly kostka_foulkes(const Partition& lambda, const Partition& tau) {
  if (lambda.size() != tau.size()) throw UsageError("Kostka-Foulkes needs |λ| = |τ|");
  return hl_tables(lambda.size()).K[partition_index(lambda)][partition_index(tau)];
}

MultiPoly modified_kostka_foulkes(const Partition& lambda, const Partition& tau) {
  if (lambda.size() != tau.size()) throw UsageError("Kostka-Foulkes needs |λ| = |τ|");
  return hl_tables(lambda.size()).Kt[partition_index(lambda)][partition_index(tau)];
}

SymFunc modified_hl(const Partition& lambda) {
  const auto& parts = partitions_of(lambda.size());
  SymFunc f(Basis::schur, q_ring(), lambda.size());
  for (const auto& tau : parts) f.add(tau, RatFun(modified_kostka_foulkes(tau, lambda)));
  return f;
}

MultiPoly green_polynomial(const Partition& tau, const Partition& lambda) {
  if (lambda.size() != tau.size()) throw UsageError("Green polynomial needs |τ| = |λ|");
  MultiPoly acc(q_ring());
  for (const auto& nu : partitions_of(tau.size())) {
    long c = sn_character(nu, lambda);
    if (c != 0) acc += modified_kostka_foulkes(nu, tau).scaled(c);
  }
  return acc;
}

SymFunc type_product(Basis b, const VarList& vars, const TypeData& omega, Basis out) {
  return product_of(b, vars, omega.components(), out);
}

SymFunc modified_hl_semisimple(const Partition& mu) {
  SymFunc acc = SymFunc::element(Basis::schur, q_ring(), Partition());
  for (int m : mu.parts()) acc = multiply(acc, modified_hl(Partition(std::vector<int>(std::size_t(m), 1))));
  return acc;
}

}  // namespace mhp
