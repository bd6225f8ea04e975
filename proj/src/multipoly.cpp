#include "mhp/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace mhp {
namespace {

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : e) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const { return grlex_greater(a, b); }
};

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a[i]) + unsigned(b[i]);
    if (s > 0xFFFFu) throw StructuralError("exponent overflow");
    r[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

bool divides(const Exponent& small, const Exponent& big) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

Exponent sub_exponents(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_greater(x.exp, y.exp); });
}

// Dense accumulation is used when the exponent box of the product is small.
constexpr std::size_t kDenseLimit = std::size_t{1} << 18;

template <class Scalar, class MulAdd>
std::vector<Term> multiply_dense(const MultiPoly& a, const MultiPoly& b, std::size_t nvars,
                                 MulAdd muladd) {
  std::array<std::size_t, kMaxVars> stride{};
  std::array<int, kMaxVars> bound{};
  std::size_t box = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    bound[i] = a.degree(i) + b.degree(i) + 1;
    stride[i] = box;
    box *= static_cast<std::size_t>(bound[i]);
  }
  std::vector<Scalar> acc(box);
  std::vector<char> used(box, 0);
  for (const auto& ta : a.terms()) {
    std::size_t base = 0;
    for (std::size_t i = 0; i < nvars; ++i) base += ta.exp[i] * stride[i];
    for (const auto& tb : b.terms()) {
      std::size_t idx = base;
      for (std::size_t i = 0; i < nvars; ++i) idx += tb.exp[i] * stride[i];
      muladd(acc[idx], ta.coeff, tb.coeff);
      used[idx] = 1;
    }
  }
  std::vector<Term> out;
  for (std::size_t idx = 0; idx < box; ++idx) {
    if (!used[idx] || sgn(acc[idx]) == 0) continue;
    Term t;
    std::size_t rest = idx;
    for (std::size_t i = 0; i < nvars; ++i) {
      t.exp[i] = static_cast<std::uint16_t>(rest % static_cast<std::size_t>(bound[i]));
      rest /= static_cast<std::size_t>(bound[i]);
    }
    t.coeff = Rational(acc[idx]);
    out.push_back(std::move(t));
  }
  sort_terms(out);
  return out;
}

std::string exponent_text(const VarList& vars, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars.name(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool grlex_greater(const Exponent& a, const Exponent& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

MultiPoly MultiPoly::constant(VarList vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (sgn(c) != 0) p.terms_.push_back(Term{Exponent{}, c});
  return p;
}

MultiPoly MultiPoly::variable(VarList vars, const std::string& name) {
  auto idx = vars.index(name);
  if (!idx) throw StructuralError("variable '" + name + "' not in ring");
  Exponent e{};
  e[*idx] = 1;
  return monomial(std::move(vars), e, 1);
}

MultiPoly MultiPoly::monomial(VarList vars, const Exponent& e, const Rational& c) {
  for (std::size_t i = vars.size(); i < kMaxVars; ++i) {
    if (e[i] != 0) throw StructuralError("exponent outside ring");
  }
  MultiPoly p(std::move(vars));
  if (sgn(c) != 0) p.terms_.push_back(Term{e, c});
  return p;
}

MultiPoly MultiPoly::from_terms(VarList vars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    for (std::size_t i = vars.size(); i < kMaxVars; ++i) {
      if (t.exp[i] != 0) throw StructuralError("exponent outside ring");
    }
  }
  sort_terms(terms);
  MultiPoly p(std::move(vars));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
      if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mhp::total_degree(terms_[0].exp) == 0);
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && mhp::total_degree(terms_[0].exp) == 0 && terms_[0].coeff == 1;
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && mhp::total_degree(terms_.back().exp) == 0) return terms_.back().coeff;
  return 0;
}

Rational MultiPoly::coeff(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const Exponent& x) {
    return grlex_greater(t.exp, x);
  });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw StructuralError("leading term of zero polynomial");
  return terms_.front();
}

int MultiPoly::degree(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, int(t.exp[var]));
  return d;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : int(mhp::total_degree(terms_.front().exp));
}

bool MultiPoly::all_integer() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coeff.get_den() == 1; });
}

void MultiPoly::check_same_ring(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw StructuralError("polynomials over different variable lists");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_ring(o);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    if (i->exp == j->exp) {
      Rational c = i->coeff + j->coeff;
      if (sgn(c) != 0) out.push_back(Term{i->exp, std::move(c)});
      ++i;
      ++j;
    } else if (grlex_greater(i->exp, j->exp)) {
      out.push_back(std::move(*i++));
    } else {
      out.push_back(*j++);
    }
  }
  for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
  for (; j != o.terms_.end(); ++j) out.push_back(*j);
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.vars());
  if (a.size() == 1) return b.times_monomial(a.terms_[0].exp).scaled(a.terms_[0].coeff);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].exp).scaled(b.terms_[0].coeff);

  const std::size_t nvars = a.vars().size();
  std::size_t box = 1;
  for (std::size_t i = 0; i < nvars && box <= kDenseLimit; ++i) {
    box *= static_cast<std::size_t>(a.degree(i) + b.degree(i) + 1);
  }

  MultiPoly r(a.vars());
  const bool integral = a.all_integer() && b.all_integer();
  if (box <= kDenseLimit) {
    if (integral) {
      r.terms_ = multiply_dense<Integer>(a, b, nvars, [](Integer& acc, const Rational& x,
                                                         const Rational& y) {
        mpz_addmul(acc.get_mpz_t(), x.get_num_mpz_t(), y.get_num_mpz_t());
      });
    } else {
      Rational tmp;
      r.terms_ = multiply_dense<Rational>(a, b, nvars, [&tmp](Rational& acc, const Rational& x,
                                                              const Rational& y) {
        mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        acc += tmp;
      });
    }
    return r;
  }

  std::unordered_map<Exponent, Rational, ExponentHash> acc;
  acc.reserve(a.size() + b.size());
  Rational tmp;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      mpq_mul(tmp.get_mpq_t(), ta.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
      acc[add_exponents(ta.exp, tb.exp)] += tmp;
    }
  }
  for (auto& [e, c] : acc) {
    if (sgn(c) != 0) r.terms_.push_back(Term{e, std::move(c)});
  }
  sort_terms(r.terms_);
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return MultiPoly(vars_);
  MultiPoly r = *this;
  if (c == 1) return r;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Exponent MultiPoly::min_exponents() const {
  Exponent m{};
  if (terms_.empty()) return m;
  m = terms_[0].exp;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxVars; ++i) m[i] = std::min(m[i], t.exp[i]);
  }
  return m;
}

MultiPoly MultiPoly::times_monomial(const Exponent& e) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.exp = add_exponents(t.exp, e);
  return r;
}

MultiPoly MultiPoly::div_monomial(const Exponent& e) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) {
    if (!divides(e, t.exp)) throw StructuralError("monomial does not divide polynomial");
    t.exp = sub_exponents(t.exp, e);
  }
  return r;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 0;
  Integer g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  return abs(c);
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (sgn(leading_coeff()) < 0) c = -c;
  return scaled(1 / c);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    Rational a = abs(t.coeff);
    std::string mono = exponent_text(vars_, t.exp);
    if (mono.empty()) {
      out << a.get_str();
    } else if (a == 1) {
      out << mono;
    } else {
      out << a.get_str() << '*' << mono;
    }
  }
  return out.str();
}

std::optional<MultiPoly> exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() != b.vars()) throw StructuralError("polynomials over different variable lists");
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return MultiPoly(a.vars());
  const Term& lb = b.leading_term();
  if (b.size() == 1) {
    for (const auto& t : a.terms()) {
      if (!divides(lb.exp, t.exp)) return std::nullopt;
    }
    return a.div_monomial(lb.exp).scaled(1 / lb.coeff);
  }
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  for (std::size_t i = 0; i < a.vars().size(); ++i) {
    if (a.degree(i) < b.degree(i)) return std::nullopt;
  }

  std::map<Exponent, Rational, GrlexGreater> rem;
  for (const auto& t : a.terms()) rem.emplace(t.exp, t.coeff);
  std::vector<Term> quotient;
  Rational inv_lc = 1 / lb.coeff;
  Rational tmp;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!divides(lb.exp, top->first)) return std::nullopt;
    Term qt{sub_exponents(top->first, lb.exp), top->second * inv_lc};
    rem.erase(top);
    for (std::size_t k = 1; k < b.terms().size(); ++k) {
      const auto& tb = b.terms()[k];
      Exponent e = add_exponents(qt.exp, tb.exp);
      mpq_mul(tmp.get_mpq_t(), qt.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
      auto [it, inserted] = rem.try_emplace(e);
      it->second -= tmp;
      if (sgn(it->second) == 0) rem.erase(it);
    }
    quotient.push_back(std::move(qt));
  }
  // Quotient terms are produced in descending order already.
  MultiPoly q = MultiPoly::from_terms(a.vars(), std::move(quotient));
  return q;
}

MultiPoly embed(const MultiPoly& p, const VarList& target) {
  if (p.vars() == target) return p;
  std::vector<std::size_t> map(p.vars().size());
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    auto idx = target.index(p.vars().name(i));
    if (!idx) {
      if (p.degree(i) > 0) {
        throw StructuralError("cannot embed: variable '" + p.vars().name(i) + "' missing");
      }
      map[i] = kMaxVars;
    } else {
      map[i] = *idx;
    }
  }
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term n;
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
      if (map[i] < kMaxVars) n.exp[map[i]] = t.exp[i];
    }
    n.coeff = t.coeff;
    terms.push_back(std::move(n));
  }
  return MultiPoly::from_terms(target, std::move(terms));
}

std::vector<Rational> eval_to_univariate(const MultiPoly& p, std::size_t keep,
                                         const std::vector<Integer>& point) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(p.degree(keep), 0)) + 1);
  Integer v, pw;
  for (const auto& t : p.terms()) {
    v = 1;
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
      if (i == keep || t.exp[i] == 0) continue;
      mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), t.exp[i]);
      v *= pw;
    }
    out[t.exp[keep]] += t.coeff * Rational(v);
  }
  while (out.size() > 1 && sgn(out.back()) == 0) out.pop_back();
  return out;
}

}  // namespace mhp
