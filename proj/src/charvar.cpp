#include "mhp/charvar.hpp"

#include "json.hpp"

#include "mhp/macdonald.hpp"
#include "mhp/memo.hpp"
#include "mhp/symfunc.hpp"

namespace mhp {
namespace {

using Index = DiagonalTensorSeries::Index;

int index_degree(const Index& idx) {
  if (idx.empty()) throw StructuralError("empty tensor index");
  const int d = idx[0].size();
  for (const auto& p : idx) {
    if (p.size() != d) throw StructuralError("tensor index is not diagonal");
  }
  return d;
}

// m_a m_b as a list of (ν, c), with m_∅ = 1.
const std::vector<std::pair<Partition, Integer>>& mono_product(const Partition& a,
                                                               const Partition& b) {
  static Memo<std::pair<Partition, Partition>, std::vector<std::pair<Partition, Integer>>> memo;
  return memo.get({a, b}, [&] {
    if (a.size() == 0) return std::vector<std::pair<Partition, Integer>>{{b, 1}};
    if (b.size() == 0) return std::vector<std::pair<Partition, Integer>>{{a, 1}};
    return monomial_product(a, b);
  });
}

// Calls fn(index, integer) for every term of ⊗_j m_{a_j} m_{b_j}.
template <class Fn>
void expand_product(const Index& a, const Index& b, Fn&& fn) {
  const std::size_t k = a.size();
  std::vector<const std::vector<std::pair<Partition, Integer>>*> lists(k);
  for (std::size_t j = 0; j < k; ++j) lists[j] = &mono_product(a[j], b[j]);
  Index idx(k);
  std::function<void(std::size_t, const Integer&)> rec = [&](std::size_t j, const Integer& c) {
    if (j == k) {
      fn(idx, c);
      return;
    }
    for (const auto& [nu, m] : *lists[j]) {
      idx[j] = nu;
      rec(j + 1, c * m);
    }
  };
  rec(0, Integer(1));
}

// Coefficient of m_{target} in A·B (all of A, B's terms whose degrees sum to the target's).
RatFun pair_with_index(const DiagonalTensorSeries& A, const DiagonalTensorSeries& B,
                       const Index& target) {
  const int n = index_degree(target);
  const std::size_t k = target.size();
  RatFun total(A.vars());
  for (int e = 0; e <= n; ++e) {
    if (e > A.trunc() || n - e > B.trunc()) continue;
    for (const auto& [a, ca] : A.component(e)) {
      for (const auto& [b, cb] : B.component(n - e)) {
        Integer mult = 1;
        for (std::size_t j = 0; j < k && mult != 0; ++j) {
          Integer found = 0;
          for (const auto& [nu, m] : mono_product(a[j], b[j])) {
            if (nu == target[j]) {
              found = m;
              break;
            }
          }
          mult *= found;
        }
        if (mult == 0) continue;
        total += (ca * cb).scaled(Rational(mult));
      }
    }
  }
  return total;
}

// Adds c · F^{⊗k} to the series, F given in the monomial basis.
void add_tensor_power(DiagonalTensorSeries& s, const SymFunc& f, const RatFun& c) {
  const int k = s.k();
  std::vector<std::pair<Partition, RatFun>> terms(f.coeffs().begin(), f.coeffs().end());
  if (f.degree() == 0) {
    s.add(Index(static_cast<std::size_t>(k)), c * f.coeff(Partition()));
    return;
  }
  Index idx(static_cast<std::size_t>(k));
  std::function<void(int, const RatFun&)> rec = [&](int j, const RatFun& acc) {
    if (j == k) {
      s.add(idx, acc);
      return;
    }
    for (const auto& [nu, fc] : terms) {
      idx[std::size_t(j)] = nu;
      rec(j + 1, acc * fc);
    }
  };
  rec(0, c);
}

const SymFunc& macdonald_zw_monomial(const Partition& lambda) {
  static Memo<Partition, SymFunc> memo;
  return memo.get(lambda, [&] {
    const VarList& ZW = zw_ring();
    RatFun z2 = RatFun::variable(ZW, "z").pow(2), w2 = RatFun::variable(ZW, "w").pow(2);
    SymFunc h = base_change(modified_macdonald(lambda), Basis::monomial);
    return h.map_coeffs(
        [&](const RatFun& c) { return substitute(c, {{"q", z2}, {"t", w2}}, ZW); }, ZW);
  });
}

const SymFunc& macdonald_zw_square(const Partition& lambda) {
  static Memo<Partition, SymFunc> memo;
  return memo.get(lambda, [&] {
    const SymFunc& h = macdonald_zw_monomial(lambda);
    return multiply(h, h);
  });
}

const SymFunc& schur_over_one_minus_q(const Partition& lambda) {
  static Memo<Partition, SymFunc> memo;
  return memo.get(lambda, [&] {
    SymFunc s = SymFunc::element(Basis::schur, q_ring(), lambda);
    return base_change(plethys_over_one_minus(s), Basis::monomial);
  });
}

const SymFunc& schur_over_one_minus_q_square(const Partition& lambda) {
  static Memo<Partition, SymFunc> memo;
  return memo.get(lambda, [&] {
    const SymFunc& s = schur_over_one_minus_q(lambda);
    return multiply(s, s);
  });
}

RatFun qvar() { return RatFun::variable(q_ring(), "q"); }

// q^{−2n(μ)−n} b_μ(q⁻¹)⁻¹ = |C|/|GL_n(q)| for a semisimple class with multiplicities μ.
RatFun class_size_factor(const Partition& mu) {
  RatFun b = RatFun::constant(q_ring(), 1);
  for (int m : mu.parts()) b *= b_factor(Partition(std::vector<int>(std::size_t(m), 1)));
  RatFun b_inv_q = substitute(b, {{"q", qvar().inverse()}}, q_ring());
  return qvar().pow(-2 * n_multiplicity(mu) - mu.size()) * b_inv_q.inverse();
}

MultiPoly require_polynomial(const RatFun& f, const std::string& what) {
  if (!f.is_polynomial()) throw PropertyFailure(what + " is not a polynomial: " + f.to_string());
  return f.num();
}

Index target_index(const PunctureSpec& spec) { return spec.mus; }

}  // namespace

// ---- PunctureSpec / dimension ----

void PunctureSpec::validate() const {
  if (n < 1) throw UsageError("n must be at least 1");
  if (g < 1) throw UsageError("g must be at least 1");
  if (mus.empty()) throw UsageError("at least one puncture (--mu) is required");
  for (const auto& mu : mus) {
    if (mu.size() != n) {
      throw UsageError("multiplicity partition " + mu.to_string() + " is not a partition of " +
                       std::to_string(n));
    }
  }
}

std::string PunctureSpec::to_string() const {
  std::string s = "n=" + std::to_string(n) + " g=" + std::to_string(g) + " mu=";
  for (std::size_t j = 0; j < mus.size(); ++j) {
    if (j) s += ";";
    s += mus[j].to_string();
  }
  return s;
}

int n_multiplicity(const Partition& mu) {
  int s = 0;
  for (int m : mu.parts()) s += m * (m - 1) / 2;
  return s;
}

int dimension(const PunctureSpec& spec) {
  spec.validate();
  const int n = spec.n, k = spec.k();
  int d = n * n * (2 * spec.g + k - 2) - k * n;
  for (const auto& mu : spec.mus) d -= 2 * n_multiplicity(mu);
  if (d < 0) throw UsageError("negative dimension " + std::to_string(d) + " for " + spec.to_string());
  if (d % 2) throw UsageError("odd dimension " + std::to_string(d) + " for " + spec.to_string());
  return d;
}

NotPolynomial::NotPolynomial(RatFun residual)
    : PropertyFailure("H_mu is not a polynomial: " + residual.to_string()),
      residual_(std::move(residual)) {}

// ---- DiagonalTensorSeries ----

DiagonalTensorSeries::DiagonalTensorSeries(int k, int trunc, VarList vars)
    : k_(k), trunc_(trunc), vars_(std::move(vars)), data_(std::size_t(trunc + 1)) {
  if (k < 1 || trunc < 0) throw StructuralError("bad tensor series shape");
}

DiagonalTensorSeries DiagonalTensorSeries::one(int k, int trunc, const VarList& vars) {
  DiagonalTensorSeries s(k, trunc, vars);
  s.add(Index(static_cast<std::size_t>(k)), RatFun::constant(vars, 1));
  return s;
}

RatFun DiagonalTensorSeries::coeff(const Index& idx) const {
  const int d = index_degree(idx);
  if (d > trunc_) return RatFun(vars_);
  auto it = data_[std::size_t(d)].find(idx);
  return it == data_[std::size_t(d)].end() ? RatFun(vars_) : it->second;
}

void DiagonalTensorSeries::add(const Index& idx, const RatFun& c) {
  if (int(idx.size()) != k_) throw StructuralError("tensor index has the wrong length");
  if (c.vars() != vars_) throw StructuralError("tensor series coefficient ring mismatch");
  const int d = index_degree(idx);
  if (d > trunc_ || c.is_zero()) return;
  auto& comp = data_[std::size_t(d)];
  auto [it, inserted] = comp.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) comp.erase(it);
  }
}

void DiagonalTensorSeries::check_compatible(const DiagonalTensorSeries& o) const {
  if (k_ != o.k_ || trunc_ != o.trunc_ || vars_ != o.vars_) {
    throw StructuralError("tensor series shapes differ");
  }
}

DiagonalTensorSeries& DiagonalTensorSeries::operator+=(const DiagonalTensorSeries& o) {
  check_compatible(o);
  for (const auto& comp : o.data_) {
    for (const auto& [idx, c] : comp) add(idx, c);
  }
  return *this;
}

DiagonalTensorSeries& DiagonalTensorSeries::operator-=(const DiagonalTensorSeries& o) {
  check_compatible(o);
  for (const auto& comp : o.data_) {
    for (const auto& [idx, c] : comp) add(idx, -c);
  }
  return *this;
}

DiagonalTensorSeries operator*(const DiagonalTensorSeries& a, const DiagonalTensorSeries& b) {
  a.check_compatible(b);
  DiagonalTensorSeries r(a.k_, a.trunc_, a.vars_);
  for (int d1 = 0; d1 <= a.trunc_; ++d1) {
    for (int d2 = 0; d1 + d2 <= a.trunc_; ++d2) {
      for (const auto& [ia, ca] : a.data_[std::size_t(d1)]) {
        for (const auto& [ib, cb] : b.data_[std::size_t(d2)]) {
          RatFun c = ca * cb;
          expand_product(ia, ib, [&](const Index& idx, const Integer& m) {
            if (index_degree(idx) != d1 + d2) throw StructuralError("product left the diagonal");
            r.add(idx, c.scaled(Rational(m)));
          });
        }
      }
    }
  }
  return r;
}

bool operator==(const DiagonalTensorSeries& a, const DiagonalTensorSeries& b) {
  return a.k_ == b.k_ && a.trunc_ == b.trunc_ && a.vars_ == b.vars_ && a.data_ == b.data_;
}

std::size_t DiagonalTensorSeries::size() const {
  std::size_t s = 0;
  for (const auto& comp : data_) s += comp.size();
  return s;
}

DiagonalTensorSeries series_invert(const DiagonalTensorSeries& s) {
  const auto& c0 = s.component(0);
  if (c0.size() != 1 || !c0.begin()->second.is_one()) {
    throw StructuralError("series_invert: degree-0 component is not 1");
  }
  // r_d = −Σ_{e=1..d} s_e r_{d−e}
  DiagonalTensorSeries r = DiagonalTensorSeries::one(s.k(), s.trunc(), s.vars());
  for (int d = 1; d <= s.trunc(); ++d) {
    DiagonalTensorSeries part(s.k(), s.trunc(), s.vars());
    for (int e = 1; e <= d; ++e) {
      for (const auto& [ia, ca] : s.component(e)) {
        for (const auto& [ib, cb] : r.component(d - e)) {
          RatFun c = ca * cb;
          expand_product(ia, ib, [&](const Index& idx, const Integer& m) {
            part.add(idx, c.scaled(Rational(m)));
          });
        }
      }
    }
    r -= part;
  }
  return r;
}

// ---- Ω series ----

const VarList& zw_ring() {
  static const VarList R{"z", "w"};
  return R;
}

const VarList& qt_hodge_ring() {
  static const VarList R{"q", "t"};
  return R;
}

DiagonalTensorSeries omega_zw(const PunctureSpec& spec, OmegaKind which) {
  spec.validate();
  const VarList& ZW = zw_ring();
  const int n = spec.n, k = spec.k(), g = spec.g;
  RatFun z = RatFun::variable(ZW, "z"), w = RatFun::variable(ZW, "w");
  RatFun zw = z * w, z2 = z * z, w2 = w * w, one = RatFun::constant(ZW, 1);
  DiagonalTensorSeries s(k, n, ZW);
  for (int m = 0; m <= n; ++m) {
    const int deg = which == OmegaKind::bullet ? m : 2 * m;
    if (deg > n) break;
    for (const auto& lambda : partitions_of(m)) {
      RatFun c = one;
      if (m > 0) {
        RatFun nd = n_factor(lambda, zw, z2, w2);
        if (which == OmegaKind::bullet) {
          c = nd.pow(g - 1) * n_tilde_factor(lambda, zw, z2, w2) /
              n_tilde_factor(lambda, one, z2, w2);
        } else {
          c = nd.pow(2 * g - 1) / n_factor(lambda, one, z2, w2);
        }
      }
      const SymFunc& f = which == OmegaKind::bullet ? macdonald_zw_monomial(lambda)
                                                    : macdonald_zw_square(lambda);
      add_tensor_power(s, f, c);
    }
  }
  return s;
}

DiagonalTensorSeries omega_q(const PunctureSpec& spec, OmegaKind which) {
  spec.validate();
  const VarList& Q = q_ring();
  const int n = spec.n, k = spec.k(), g = spec.g;
  const RatFun q = qvar();
  DiagonalTensorSeries s(k, n, Q);
  for (int m = 0; m <= n; ++m) {
    const int deg = which == OmegaKind::bullet ? m : 2 * m;
    if (deg > n) break;
    for (const auto& lambda : partitions_of(m)) {
      RatFun h = q.pow(-n_stat(lambda)) * RatFun(hook_polynomial(lambda, Q, "q"));
      RatFun c = which == OmegaKind::bullet ? q.pow(m * (1 - g)) * h.pow(2 * g + k - 2)
                                            : q.pow(m * (2 - 2 * g)) * h.pow(4 * g + 2 * k - 4);
      const SymFunc& f = which == OmegaKind::bullet ? schur_over_one_minus_q(lambda)
                                                    : schur_over_one_minus_q_square(lambda);
      add_tensor_power(s, f, c);
    }
  }
  return s;
}

// ---- ℍ, mixed Hodge, E ----

RatFun hmu_rational(const PunctureSpec& spec) {
  DiagonalTensorSeries b = omega_zw(spec, OmegaKind::bullet);
  DiagonalTensorSeries inv = series_invert(omega_zw(spec, OmegaKind::star));
  return pair_with_index(b * b, inv, target_index(spec));
}

MultiPoly certify_polynomial(const RatFun& f) {
  if (!f.is_polynomial()) throw NotPolynomial(f);
  return f.num();
}

MultiPoly hmu(const PunctureSpec& spec) { return certify_polynomial(hmu_rational(spec)); }

MultiPoly mixed_hodge_from(const MultiPoly& h, int d) {
  const VarList ST{"s", "t"};
  RatFun s = RatFun::variable(ST, "s"), t = RatFun::variable(ST, "t");
  RatFun sub = substitute(RatFun(h), {{"z", -(t * s)}, {"w", s.inverse()}}, ST);
  MultiPoly p = require_polynomial(sub * (t * s).pow(d), "(ts)^d H(-ts, 1/s)");
  std::vector<Term> out;
  for (const auto& term : p.terms()) {
    if (term.exp[0] % 2) {
      throw PropertyFailure("odd power of sqrt(q) in the mixed Hodge polynomial: " +
                            p.to_string());
    }
    Term r;
    r.exp[0] = static_cast<std::uint16_t>(term.exp[0] / 2);
    r.exp[1] = term.exp[1];
    r.coeff = term.coeff;
    out.push_back(r);
  }
  return MultiPoly::from_terms(qt_hodge_ring(), std::move(out));
}

MultiPoly mixed_hodge(const PunctureSpec& spec) { return mixed_hodge_from(hmu(spec), dimension(spec)); }

MultiPoly e_from_hmu(const MultiPoly& h, int d) {
  const VarList S{"s"};
  RatFun s = RatFun::variable(S, "s");
  RatFun sub = substitute(RatFun(h), {{"z", s}, {"w", s.inverse()}}, S);
  MultiPoly p = require_polynomial(sub * s.pow(d), "s^d H(s, 1/s)");
  std::vector<Term> out;
  for (const auto& term : p.terms()) {
    if (term.exp[0] % 2) {
      throw PropertyFailure("odd power of sqrt(q) in the E-polynomial: " + p.to_string());
    }
    Term r;
    r.exp[0] = static_cast<std::uint16_t>(term.exp[0] / 2);
    r.coeff = term.coeff;
    out.push_back(r);
  }
  return MultiPoly::from_terms(q_ring(), std::move(out));
}

std::string path_name(EPath p) {
  switch (p) {
    case EPath::series_q: return "series_q";
    case EPath::series_zw: return "series_zw";
    case EPath::type_sum: return "type_sum";
  }
  return "?";
}

EPath parse_path(const std::string& s) {
  if (s == "series_q") return EPath::series_q;
  if (s == "series_zw") return EPath::series_zw;
  if (s == "type_sum") return EPath::type_sum;
  throw UsageError("unknown path '" + s + "'");
}

MultiPoly e_polynomial(const PunctureSpec& spec, EPath path) {
  const int d = dimension(spec);
  const RatFun q = qvar();
  switch (path) {
    case EPath::series_zw:
      return e_from_hmu(hmu(spec), d);
    case EPath::series_q: {
      DiagonalTensorSeries b = omega_q(spec, OmegaKind::bullet);
      DiagonalTensorSeries inv = series_invert(omega_q(spec, OmegaKind::star));
      RatFun c = pair_with_index(b * b, inv, target_index(spec));
      return require_polynomial(q.pow(d / 2) * c, "E-polynomial (series_q)");
    }
    case EPath::type_sum: {
      const int n = spec.n, k = spec.k(), g = spec.g;
      std::vector<RatFun> class_factor;
      std::vector<SymFunc> ht;
      for (const auto& mu : spec.mus) {
        class_factor.push_back(class_size_factor(mu));
        ht.push_back(modified_hl_semisimple(mu));
      }
      RatFun total(q_ring());
      for (const auto& omega : types_with_brace_size(n)) {
        TypeStats st = type_stats(omega);
        RatFun term = RatFun::constant(q_ring(), Rational(st.K, st.N));
        RatFun deg = q.pow(n * (n - 1) / 2 - n_stat(st.braces)) *
                     RatFun(hook_polynomial(st.braces, q_ring(), "q"));
        if (n % 2) deg = -deg;
        term *= deg.pow(2 * g + k - 2);
        SymFunc s = type_product(Basis::schur, q_ring(), st.braces, Basis::schur);
        for (int j = 0; j < k; ++j) term *= class_factor[std::size_t(j)] * hall_inner(s, ht[std::size_t(j)]);
        total += term;
      }
      return require_polynomial(total, "E-polynomial (type_sum)");
    }
  }
  throw StructuralError("unknown path");
}

MultiPoly e_polynomial_all_paths(const PunctureSpec& spec) {
  MultiPoly first = e_polynomial(spec, EPath::series_q);
  for (EPath p : {EPath::series_zw, EPath::type_sum}) {
    MultiPoly other = e_polynomial(spec, p);
    if (other != first) {
      throw PathDisagreement("E-polynomial paths disagree for " + spec.to_string() +
                             ": series_q = " + first.to_string() + ", " + path_name(p) + " = " +
                             other.to_string());
    }
  }
  return first;
}

// ---- conjecture checks ----

bool palindromic(const MultiPoly& e, int d) {
  if (e.is_zero()) return true;
  if (e.degree(0) > d) return false;
  for (const auto& term : e.terms()) {
    Exponent mirror{};
    mirror[0] = static_cast<std::uint16_t>(d - term.exp[0]);
    if (e.coeff(mirror) != term.coeff) return false;
  }
  return true;
}

bool ConjectureReport::all_true() const {
  return is_polynomial && degree_d_each_var && even_degrees && nonneg_at_minus_z &&
         zw_symmetric && curious_duality_t_minus1;
}

ConjectureReport verify_conjecture(const PunctureSpec& spec) {
  ConjectureReport r;
  r.dim_d = dimension(spec);
  RatFun raw = hmu_rational(spec);
  if (!raw.is_polynomial()) {
    r.failure = NotPolynomial(raw).what();
    try {
      r.epoly = e_polynomial(spec, EPath::series_q);
    } catch (const PropertyFailure&) {
    }
    return r;
  }
  const MultiPoly& h = raw.num();
  r.hmu = h;
  r.is_polynomial = true;
  r.degree_d_each_var = h.degree(0) == r.dim_d && h.degree(1) == r.dim_d;
  r.even_degrees = true;
  r.nonneg_at_minus_z = true;
  std::vector<Term> swapped;
  for (const auto& term : h.terms()) {
    if (total_degree(term.exp) % 2) r.even_degrees = false;
    Rational c = term.exp[0] % 2 ? Rational(-term.coeff) : term.coeff;
    if (c.get_den() != 1 || sgn(c) < 0) r.nonneg_at_minus_z = false;
    Term t = term;
    std::swap(t.exp[0], t.exp[1]);
    swapped.push_back(t);
  }
  r.zw_symmetric = MultiPoly::from_terms(h.vars(), std::move(swapped)) == h;
  try {
    MultiPoly e = e_from_hmu(h, r.dim_d);
    r.curious_duality_t_minus1 = palindromic(e, r.dim_d);
    r.epoly = e;
  } catch (const PropertyFailure& ex) {
    r.failure = ex.what();
  }
  return r;
}

std::string poly_to_json(const MultiPoly& p) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["vars"] = p.vars().names();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) {
    std::vector<int> e(t.exp.begin(), t.exp.begin() + long(p.vars().size()));
    terms.push_back({{"exp", e}, {"coeff", t.coeff.get_str()}});
  }
  j["terms"] = terms;
  return j.dump();
}

}  // namespace mhp
