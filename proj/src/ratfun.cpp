#include "mhp/ratfun.hpp"

#include <algorithm>

namespace mhp {
namespace {

MultiPoly one(const VarList& vars) { return MultiPoly::constant(vars, 1); }

MultiPoly quotient(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_one()) return a;
  auto q = exact_div(a, b);
  if (!q) throw StructuralError("internal error: gcd does not divide");
  return *q;
}

}  // namespace

RatFun::RatFun(VarList vars) : num_(vars), den_(one(vars)) {}

RatFun::RatFun(MultiPoly num) : num_(std::move(num)), den_(one(num_.vars())) {}

RatFun::RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.vars() != den_.vars()) throw StructuralError("numerator and denominator rings differ");
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = one(num_.vars());
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = quotient(num_, g);
      den_ = quotient(den_, g);
    }
  }
  fix_unit();
}

RatFun::RatFun(MultiPoly num, MultiPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) {
    den_ = one(num_.vars());
    return;
  }
  fix_unit();
}

void RatFun::fix_unit() {
  Rational c = den_.content();
  if (sgn(den_.leading_coeff()) < 0) c = -c;
  if (c != 1) {
    Rational inv = 1 / c;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFun RatFun::constant(VarList vars, const Rational& c) {
  return RatFun(MultiPoly::constant(std::move(vars), c));
}

RatFun RatFun::variable(VarList vars, const std::string& name) {
  return RatFun(MultiPoly::variable(std::move(vars), name));
}

std::optional<MultiPoly> RatFun::as_polynomial() const {
  if (!is_polynomial()) return std::nullopt;
  return num_;
}

Rational RatFun::as_constant() const {
  if (!is_constant()) throw StructuralError("rational function is not constant: " + to_string());
  return num_.constant_term();
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (vars() != o.vars()) throw StructuralError("rational functions over different rings");
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = RatFun(num_ + o.num_, den_);
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    if (num_.is_zero()) den_ = one(vars());
    return *this;
  }
  if (den_.is_one()) {
    *this = RatFun(num_ * o.den_ + o.num_, o.den_, Reduced{});
    return *this;
  }
  MultiPoly g = gcd(den_, o.den_);
  if (g.is_one()) {
    *this = RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_, Reduced{});
    return *this;
  }
  MultiPoly b1 = quotient(den_, g);
  MultiPoly d1 = quotient(o.den_, g);
  MultiPoly t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return *this = RatFun(vars());
  MultiPoly g2 = gcd(t, g);
  *this = RatFun(quotient(t, g2), b1 * quotient(o.den_, g2), Reduced{});
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (vars() != o.vars()) throw StructuralError("rational functions over different rings");
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFun(vars());
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  MultiPoly g1 = gcd(num_, o.den_);
  MultiPoly g2 = gcd(o.num_, den_);
  MultiPoly n = quotient(num_, g1) * quotient(o.num_, g2);
  MultiPoly d = quotient(den_, g2) * quotient(o.den_, g1);
  *this = RatFun(std::move(n), std::move(d), Reduced{});
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::scaled(const Rational& c) const {
  if (sgn(c) == 0) return RatFun(vars());
  RatFun r = *this;
  r.num_ = r.num_.scaled(c);
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatFun(den_, num_, Reduced{});
}

RatFun RatFun::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  // Powers of a reduced fraction stay reduced.
  return RatFun(num_.pow(unsigned(k)), den_.pow(unsigned(k)), Reduced{});
}

std::string RatFun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool cross_equal(const RatFun& a, const RatFun& b) {
  return a.num() * b.den() == b.num() * a.den();
}

namespace {

struct LaurentBinding {
  Rational coeff;
  std::array<int, kMaxVars> exp{};
};

std::optional<LaurentBinding> as_laurent_monomial(const RatFun& r) {
  if (!r.num().is_monomial() || !r.den().is_monomial()) return std::nullopt;
  LaurentBinding b;
  const Term& n = r.num().leading_term();
  const Term& d = r.den().leading_term();
  b.coeff = n.coeff / d.coeff;
  for (std::size_t i = 0; i < kMaxVars; ++i) b.exp[i] = int(n.exp[i]) - int(d.exp[i]);
  return b;
}

struct LaurentPoly {
  MultiPoly poly;                    // all exponents shifted to be non-negative
  std::array<int, kMaxVars> shift{};  // value = poly * x^shift
};

LaurentPoly substitute_monomial(const MultiPoly& p, const std::vector<LaurentBinding>& binds,
                                const VarList& target) {
  std::vector<std::array<int, kMaxVars>> exps;
  std::vector<Rational> coeffs;
  std::array<int, kMaxVars> lo{};
  lo.fill(0);
  bool first = true;
  for (const auto& t : p.terms()) {
    std::array<int, kMaxVars> e{};
    Rational c = t.coeff;
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
      if (t.exp[i] == 0) continue;
      Rational f;
      mpz_pow_ui(f.get_num_mpz_t(), binds[i].coeff.get_num_mpz_t(), t.exp[i]);
      mpz_pow_ui(f.get_den_mpz_t(), binds[i].coeff.get_den_mpz_t(), t.exp[i]);
      c *= f;
      for (std::size_t j = 0; j < kMaxVars; ++j) e[j] += binds[i].exp[j] * t.exp[i];
    }
    for (std::size_t j = 0; j < kMaxVars; ++j) lo[j] = first ? e[j] : std::min(lo[j], e[j]);
    first = false;
    exps.push_back(e);
    coeffs.push_back(std::move(c));
  }
  std::vector<Term> terms;
  terms.reserve(exps.size());
  for (std::size_t k = 0; k < exps.size(); ++k) {
    Term t;
    for (std::size_t j = 0; j < kMaxVars; ++j) {
      int v = exps[k][j] - lo[j];
      if (v > 0xFFFF) throw StructuralError("exponent overflow in substitution");
      t.exp[j] = static_cast<std::uint16_t>(v);
    }
    t.coeff = std::move(coeffs[k]);
    terms.push_back(std::move(t));
  }
  return LaurentPoly{MultiPoly::from_terms(target, std::move(terms)), lo};
}

// Returns p(bindings) * prod_i den_i^{deg_i p} as a polynomial, together with
// the per-variable degrees used.
MultiPoly substitute_cleared(const MultiPoly& p, const std::vector<RatFun>& binds,
                             const std::vector<int>& degs, const VarList& target) {
  const std::size_t n = binds.size();
  std::vector<std::vector<MultiPoly>> num_pow(n), den_pow(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (degs[i] <= 0) continue;
    num_pow[i].push_back(one(target));
    den_pow[i].push_back(one(target));
    for (int k = 1; k <= degs[i]; ++k) {
      num_pow[i].push_back(num_pow[i].back() * binds[i].num());
      den_pow[i].push_back(den_pow[i].back() * binds[i].den());
    }
  }
  MultiPoly sum(target);
  for (const auto& t : p.terms()) {
    MultiPoly term = MultiPoly::constant(target, t.coeff);
    for (std::size_t i = 0; i < n; ++i) {
      if (degs[i] <= 0) continue;
      const MultiPoly& a = num_pow[i][t.exp[i]];
      const MultiPoly& b = den_pow[i][std::size_t(degs[i] - t.exp[i])];
      if (!a.is_one()) term = term * a;
      if (!b.is_one()) term = term * b;
    }
    sum += term;
  }
  return sum;
}

}  // namespace

RatFun substitute(const RatFun& f, const std::map<std::string, RatFun>& bindings,
                  const VarList& target) {
  const VarList& src = f.vars();
  std::vector<RatFun> binds;
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = bindings.find(src.name(i));
    const bool used = f.num().uses(i) || f.den().uses(i);
    if (it == bindings.end()) {
      if (used) throw StructuralError("no binding for variable '" + src.name(i) + "'");
      binds.push_back(RatFun::constant(target, 0));
      continue;
    }
    if (it->second.vars() != target) throw StructuralError("binding not over target ring");
    binds.push_back(it->second);
  }

  std::vector<LaurentBinding> mono;
  for (std::size_t i = 0; i < binds.size(); ++i) {
    const bool used = f.num().uses(i) || f.den().uses(i);
    auto m = used ? as_laurent_monomial(binds[i]) : std::optional<LaurentBinding>(LaurentBinding{});
    if (!m) break;
    mono.push_back(*m);
  }
  if (mono.size() == binds.size()) {
    LaurentPoly n = substitute_monomial(f.num(), mono, target);
    LaurentPoly d = substitute_monomial(f.den(), mono, target);
    if (d.poly.is_zero()) throw DivisionByZero("substitution makes the denominator vanish");
    Exponent up{}, down{};
    for (std::size_t j = 0; j < kMaxVars; ++j) {
      int s = n.shift[j] - d.shift[j];
      (s >= 0 ? up : down)[j] = static_cast<std::uint16_t>(std::abs(s));
    }
    return RatFun(n.poly.times_monomial(up), d.poly.times_monomial(down));
  }

  std::vector<int> dn(binds.size()), dd(binds.size());
  for (std::size_t i = 0; i < binds.size(); ++i) {
    dn[i] = std::max(f.num().degree(i), 0);
    dd[i] = std::max(f.den().degree(i), 0);
  }
  MultiPoly pn = substitute_cleared(f.num(), binds, dn, target);
  MultiPoly pd = substitute_cleared(f.den(), binds, dd, target);
  if (pd.is_zero()) throw DivisionByZero("substitution makes the denominator vanish");
  // f = (pn / D^dn) / (pd / D^dd) with D_i the binding denominators.
  MultiPoly cn = one(target), cd = one(target);
  for (std::size_t i = 0; i < binds.size(); ++i) {
    int e = dd[i] - dn[i];
    if (e > 0) cn = cn * binds[i].den().pow(unsigned(e));
    if (e < 0) cd = cd * binds[i].den().pow(unsigned(-e));
  }
  return RatFun(pn * cn, pd * cd);
}

}  // namespace mhp
