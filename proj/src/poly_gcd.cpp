#include <algorithm>
#include <cstdint>
#include <random>

#include "mhp/multipoly.hpp"

namespace mhp {
namespace {

constexpr std::uint64_t kPrime = 2147483647u;

using Dense = std::vector<Rational>;
using DenseMod = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return (a * b) % kPrime; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

void trim(DenseMod& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Degree of gcd over Z/p; -1 for gcd(0,0).
int gcd_degree_mod(DenseMod a, DenseMod b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::uint64_t inv = invmod(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t f = mulmod(a.back(), inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = (a[shift + i] + kPrime - mulmod(f, b[i])) % kPrime;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return int(a.size()) - 1;
}

void trim(Dense& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

Dense gcd_dense(Dense a, Dense b) {
  trim(a);
  trim(b);
  Rational f, tmp;
  while (!b.empty()) {
    Rational inv = 1 / b.back();
    for (auto& c : b) c *= inv;
    while (a.size() >= b.size()) {
      f = a.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), b[i].get_mpq_t());
        a[shift + i] -= tmp;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

std::vector<MultiPoly> coeffs_in(const MultiPoly& p, std::size_t var) {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(p.degree(var), 0)) + 1);
  for (const auto& t : p.terms()) {
    Term c = t;
    c.exp[var] = 0;
    buckets[t.exp[var]].push_back(std::move(c));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(p.vars(), std::move(b)));
  return out;
}

MultiPoly leading_coeff_in(const MultiPoly& p, std::size_t var) {
  int d = p.degree(var);
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.exp[var] == d) {
      Term c = t;
      c.exp[var] = 0;
      terms.push_back(std::move(c));
    }
  }
  return MultiPoly::from_terms(p.vars(), std::move(terms));
}

MultiPoly gcd_core(const MultiPoly& a, const MultiPoly& b);

MultiPoly normalized_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.vars(), 1);
  Exponent ea = a.min_exponents();
  Exponent eb = b.min_exponents();
  Exponent m{};
  for (std::size_t i = 0; i < kMaxVars; ++i) m[i] = std::min(ea[i], eb[i]);
  MultiPoly g = gcd_core(a.div_monomial(ea).primitive(), b.div_monomial(eb).primitive());
  return g.times_monomial(m);
}

MultiPoly gcd_list(MultiPoly g, const std::vector<MultiPoly>& polys) {
  for (const auto& p : polys) {
    if (g.is_one()) break;
    g = normalized_gcd(g, p);
  }
  return g;
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  auto cs = coeffs_in(p, var);
  std::sort(cs.begin(), cs.end(),
            [](const MultiPoly& x, const MultiPoly& y) { return x.size() < y.size(); });
  MultiPoly g(p.vars());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    if (g.is_zero()) {
      g = c.primitive();
      continue;
    }
    g = normalized_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = exact_div(a, b);
  if (!q) throw StructuralError("internal gcd error: inexact division");
  return *q;
}

MultiPoly pseudo_remainder(MultiPoly r, const MultiPoly& b, std::size_t var) {
  const int db = b.degree(var);
  MultiPoly lcb = leading_coeff_in(b, var);
  const bool field_division = lcb.is_constant();
  Rational inv = field_division ? 1 / lcb.constant_term() : Rational(0);
  while (!r.is_zero() && r.degree(var) >= db) {
    Exponent shift{};
    shift[var] = static_cast<std::uint16_t>(r.degree(var) - db);
    MultiPoly lcr = leading_coeff_in(r, var);
    if (field_division) {
      r -= (b * lcr.scaled(inv)).times_monomial(shift);
    } else {
      r = r * lcb - (b * lcr).times_monomial(shift);
    }
  }
  return r;
}

// Upper bound on deg_var gcd(a,b), computed by reducing modulo a prime and
// evaluating the other variables at pseudo-random residues.  Returns -1 if no
// good evaluation point was found.
int gcd_degree_bound(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  static thread_local std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> dist(2, kPrime - 1);
  const std::size_t n = a.vars().size();
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<std::uint64_t> pt(n);
    for (auto& x : pt) x = dist(rng);
    auto reduce = [&](const MultiPoly& p, DenseMod& out) {
      out.assign(static_cast<std::size_t>(p.degree(var)) + 1, 0);
      for (const auto& t : p.terms()) {
        std::uint64_t v = mpz_fdiv_ui(t.coeff.get_num_mpz_t(), kPrime);
        std::uint64_t den = mpz_fdiv_ui(t.coeff.get_den_mpz_t(), kPrime);
        if (den == 0) return false;
        v = mulmod(v, invmod(den));
        for (std::size_t i = 0; i < n; ++i) {
          if (i != var && t.exp[i]) v = mulmod(v, powmod(pt[i], t.exp[i]));
        }
        out[t.exp[var]] = (out[t.exp[var]] + v) % kPrime;
      }
      return out.back() != 0;
    };
    DenseMod ua, ub;
    if (!reduce(a, ua) || !reduce(b, ub)) continue;
    return gcd_degree_mod(std::move(ua), std::move(ub));
  }
  return -1;
}

MultiPoly from_dense(const VarList& vars, std::size_t var, const Dense& d) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (sgn(d[i]) == 0) continue;
    Term t;
    t.exp[var] = static_cast<std::uint16_t>(i);
    t.coeff = d[i];
    terms.push_back(std::move(t));
  }
  return MultiPoly::from_terms(vars, std::move(terms));
}

// a, b: nonzero, non-constant, free of monomial content.
MultiPoly gcd_core(const MultiPoly& a, const MultiPoly& b) {
  const VarList& vars = a.vars();
  const std::size_t n = vars.size();
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(vars, 1);
  if (a.primitive() == b.primitive()) return a.primitive();

  for (std::size_t v = 0; v < n; ++v) {
    const bool in_a = a.uses(v), in_b = b.uses(v);
    if (in_a && !in_b) return gcd_list(b.primitive(), coeffs_in(a, v));
    if (in_b && !in_a) return gcd_list(a.primitive(), coeffs_in(b, v));
  }

  std::vector<std::size_t> used;
  for (std::size_t v = 0; v < n; ++v) {
    if (a.uses(v)) used.push_back(v);
  }

  if (used.size() == 1) {
    std::size_t v = used[0];
    auto dense = [&](const MultiPoly& p) {
      Dense d(static_cast<std::size_t>(p.degree(v)) + 1);
      for (const auto& t : p.terms()) d[t.exp[v]] = t.coeff;
      return d;
    };
    return from_dense(vars, v, gcd_dense(dense(a), dense(b))).primitive();
  }

  // Main variable: smallest degree, preferring constant leading coefficients.
  std::size_t x = used[0];
  auto rank = [&](std::size_t v) {
    int d = std::max(a.degree(v), b.degree(v));
    bool lc_const = leading_coeff_in(a, v).is_constant() || leading_coeff_in(b, v).is_constant();
    return std::pair<int, int>(lc_const ? 0 : 1, d);
  };
  for (std::size_t v : used) {
    if (rank(v) < rank(x)) x = v;
  }

  int bound = gcd_degree_bound(a, b, x);
  MultiPoly ca = content_in(a, x);
  MultiPoly cb = content_in(b, x);
  MultiPoly c = normalized_gcd(ca, cb);
  if (bound == 0) return c;

  MultiPoly pa = ca.is_one() ? a : divide_exact(a, ca);
  MultiPoly pb = cb.is_one() ? b : divide_exact(b, cb);
  if (pa.degree(x) < pb.degree(x)) std::swap(pa, pb);

  if (bound == pb.degree(x)) {
    if (exact_div(pa, pb)) return (c * pb).primitive();
  }

  while (true) {
    MultiPoly r = pseudo_remainder(pa, pb, x);
    if (r.is_zero()) break;
    if (r.degree(x) == 0) {
      pb = MultiPoly::constant(vars, 1);
      break;
    }
    MultiPoly cr = content_in(r, x);
    pa = std::move(pb);
    pb = cr.is_one() ? r.primitive() : divide_exact(r, cr).primitive();
  }
  MultiPoly cg = content_in(pb, x);
  if (!cg.is_one()) pb = divide_exact(pb, cg);
  return (c * pb).primitive();
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() != b.vars()) throw StructuralError("polynomials over different variable lists");
  if (a.is_zero() && b.is_zero()) return MultiPoly(a.vars());
  return normalized_gcd(a, b);
}

}  // namespace mhp
