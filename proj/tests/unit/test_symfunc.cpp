#include <random>

#include "doctest.h"
#include "mhp/symfunc.hpp"

using namespace mhp;

namespace {

const VarList& Q = q_ring();
const VarList QT{"q", "t"};
const VarList NONE{};

RatFun Rq(const std::string& s) { return parse_ratfun(s, Q); }
MultiPoly Pq(const std::string& s) { return parse_poly(s, Q); }

Partition ones(int n) { return Partition(std::vector<int>(std::size_t(n), 1)); }

SymFunc el(Basis b, const Partition& l, const VarList& v = NONE) {
  return SymFunc::element(b, v, l);
}

// Semistandard tableaux of shape lambda and content mu.
long count_ssyt(const Partition& lambda, const Partition& mu) {
  // Fill values 1..l(mu) one at a time as horizontal strips.
  std::function<long(std::vector<int>, std::size_t)> go = [&](std::vector<int> shape,
                                                             std::size_t k) -> long {
    if (k == std::size_t(mu.length())) {
      for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] != lambda.part(int(i))) return 0;
      }
      return 1;
    }
    long total = 0;
    const int need = mu.part(int(k));
    std::vector<int> next = shape;
    // Distribute `need` cells as a horizontal strip added to `shape`.
    std::function<void(std::size_t, int)> place = [&](std::size_t row, int left) {
      if (row == next.size()) {
        if (left == 0) total += go(next, k + 1);
        return;
      }
      int cap = lambda.part(int(row)) - shape[row];
      if (row > 0) cap = std::min(cap, shape[row - 1] - shape[row]);
      for (int add = 0; add <= std::min(cap, left); ++add) {
        next[row] = shape[row] + add;
        place(row + 1, left - add);
      }
      next[row] = shape[row];
    };
    place(0, need);
    return total;
  };
  return go(std::vector<int>(std::size_t(lambda.length()), 0), 0);
}

RatFun eval_q(const MultiPoly& p, long x) {
  return substitute(RatFun(p), {{"q", RatFun::constant(NONE, x)}}, NONE);
}

RatFun invert_q(const RatFun& f) {
  return substitute(f, {{"q", Rq("1/q")}}, Q);
}

void compositions(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = 1; k <= n; ++k) {
    cur.push_back(k);
    compositions(n - k, cur, out);
    cur.pop_back();
  }
}

// All sequences of partitions with the given sizes.
std::vector<std::vector<Partition>> fill_shapes(const std::vector<int>& sizes) {
  std::vector<std::vector<Partition>> out{{}};
  for (int s : sizes) {
    std::vector<std::vector<Partition>> next;
    for (const auto& prefix : out) {
      for (const auto& p : partitions_of(s)) {
        auto v = prefix;
        v.push_back(p);
        next.push_back(v);
      }
    }
    out = next;
  }
  return out;
}

Partition join_all(const std::vector<Partition>& ps) {
  Partition r;
  for (const auto& p : ps) r = join(r, p);
  return r;
}

}  // namespace

TEST_CASE("symmetric group characters") {
  CHECK(sn_character(Partition{1, 1}, Partition{2}) == -1);
  CHECK(sn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(sn_character(Partition{2, 1}, Partition{3}) == -1);
  CHECK(sn_character(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK_THROWS_AS(sn_character(Partition{2}, Partition{1}), UsageError);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : partitions_of(n)) {
      for (const auto& r : partitions_of(n)) {
        long s = 0;
        for (const auto& l : partitions_of(n)) s += sn_character(l, t) * sn_character(l, r);
        CHECK(Integer(s) == (t == r ? z_factor(t) : Integer(0)));
      }
    }
  }
}

TEST_CASE("base change examples") {
  SymFunc p11 = base_change(el(Basis::power, Partition{1, 1}), Basis::schur);
  SymFunc expect = el(Basis::schur, Partition{2}) + el(Basis::schur, Partition{1, 1});
  CHECK(p11 == expect);

  SymFunc s2 = base_change(el(Basis::schur, Partition{2}), Basis::power);
  CHECK(s2.coeff(Partition{1, 1}) == RatFun::constant(NONE, Rational(1, 2)));
  CHECK(s2.coeff(Partition{2}) == RatFun::constant(NONE, Rational(1, 2)));

  SymFunc h21 = base_change(el(Basis::complete, Partition{2, 1}), Basis::monomial);
  CHECK(h21.coeff(Partition{1, 1, 1}) == RatFun::constant(NONE, 3));
  CHECK(h21.coeff(Partition{3}) == RatFun::constant(NONE, 1));
  CHECK(h21.coeff(Partition{2, 1}) == RatFun::constant(NONE, 2));
}

TEST_CASE("transition round trips and h/m duality") {
  const Basis plain[] = {Basis::monomial, Basis::complete, Basis::power, Basis::schur};
  for (int n = 0; n <= 6; ++n) {
    for (const auto& l : partitions_of(n)) {
      for (Basis a : plain) {
        for (Basis b : plain) {
          SymFunc f = el(a, l);
          CHECK(base_change(base_change(f, b), a) == f);
        }
      }
      for (const auto& m : partitions_of(n)) {
        RatFun ip = hall_inner(el(Basis::complete, l), el(Basis::monomial, m));
        CHECK(ip == RatFun::constant(NONE, l == m ? 1 : 0));
        RatFun ss = hall_inner(el(Basis::schur, l), el(Basis::schur, m));
        CHECK(ss == RatFun::constant(NONE, l == m ? 1 : 0));
      }
    }
  }
}

TEST_CASE("products") {
  SymFunc h1 = el(Basis::complete, Partition{1});
  CHECK(multiply(h1, h1) == el(Basis::complete, Partition{1, 1}));
  SymFunc s1 = el(Basis::schur, Partition{1});
  CHECK(multiply(s1, s1) == el(Basis::schur, Partition{2}) + el(Basis::schur, Partition{1, 1}));
  CHECK(multiply(el(Basis::power, Partition{2}), el(Basis::power, Partition{1})) ==
        el(Basis::power, Partition{2, 1}));
  // m_1 m_1 = m_2 + 2 m_11
  const auto& c = monomial_product(Partition{1}, Partition{1});
  REQUIRE(c.size() == 2);
  CHECK(c[0].first == Partition{2});
  CHECK(c[0].second == 1);
  CHECK(c[1].first == Partition{1, 1});
  CHECK(c[1].second == 2);
}

TEST_CASE("products agree with monomial structure constants") {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (const auto& l : partitions_of(a)) {
        for (const auto& m : partitions_of(b)) {
          SymFunc direct = multiply(el(Basis::monomial, l), el(Basis::monomial, m));
          SymFunc from_table(Basis::monomial, NONE, a + b);
          for (const auto& [nu, k] : monomial_product(l, m)) {
            from_table.add(nu, RatFun::constant(NONE, Rational(k)));
          }
          CHECK(direct == from_table);
        }
      }
    }
  }
}

TEST_CASE("Hall-Littlewood P and b") {
  CHECK(hall_littlewood_P(Partition{1}) == SymFunc::element(Basis::monomial, Q, Partition{1}));
  CHECK(hall_littlewood_P(Partition{1, 1}) ==
        SymFunc::element(Basis::monomial, Q, Partition{1, 1}));
  SymFunc p2 = SymFunc::element(Basis::monomial, Q, Partition{2}) +
               SymFunc::element(Basis::monomial, Q, Partition{1, 1}, Rq("1-q"));
  CHECK(hall_littlewood_P(Partition{2}) == p2);
  CHECK(b_factor(Partition{1, 1}) == Rq("(1-q)(1-q^2)"));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& l : partitions_of(n)) {
      RatFun expect = RatFun::constant(Q, 1);
      auto m = multiplicities(l);
      for (std::size_t i = 1; i < m.size(); ++i) {
        for (int k = 1; k <= m[i]; ++k) expect *= Rq("1-q^" + std::to_string(k));
      }
      CHECK(b_factor(l) == expect);
      // P_λ = m_λ + lower terms in dominance order.
      SymFunc P = hall_littlewood_P(l);
      CHECK(P.coeff(l).is_one());
      for (const auto& [mu, c] : P.coeffs()) CHECK(dominates(l, mu));
    }
  }
}

TEST_CASE("1/|GL_n(q)| from b_(1^n)") {
  for (int n = 1; n <= 4; ++n) {
    MultiPoly gl = Pq("1");
    for (int i = 0; i < n; ++i) {
      gl *= Pq("q^" + std::to_string(n) + " - q^" + std::to_string(i));
    }
    RatFun rhs = Rq("q").pow(-2 * n_stat(ones(n)) - n) * invert_q(b_factor(ones(n))).inverse();
    CHECK(RatFun(Pq("1"), gl) == rhs);
  }
}

TEST_CASE("Kostka-Foulkes") {
  CHECK(kostka_foulkes(Partition{2}, Partition{1, 1}) == Pq("q"));
  CHECK(modified_kostka_foulkes(Partition{1, 1}, Partition{1, 1}) == Pq("q"));
  CHECK(modified_kostka_foulkes(Partition{2}, Partition{1, 1}) == Pq("1"));
  CHECK(modified_kostka_foulkes(Partition{1, 1}, Partition{2}).is_zero());
  CHECK_THROWS_AS(kostka_foulkes(Partition{2}, Partition{1}), UsageError);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& l : partitions_of(n)) {
      CHECK(kostka_foulkes(l, l).is_one());
      for (const auto& t : partitions_of(n)) {
        MultiPoly k = kostka_foulkes(l, t);
        CHECK(eval_q(k, 1) == RatFun::constant(NONE, count_ssyt(l, t)));
        for (const auto& term : k.terms()) CHECK(sgn(term.coeff) > 0);
        if (!dominates(l, t)) CHECK(k.is_zero());
      }
    }
  }
}

TEST_CASE("modified Hall-Littlewood and Green polynomials") {
  CHECK(modified_hl(Partition{1}) == SymFunc::element(Basis::schur, Q, Partition{1}));
  SymFunc h11 = SymFunc::element(Basis::schur, Q, Partition{2}) +
                SymFunc::element(Basis::schur, Q, Partition{1, 1}, Rq("q"));
  CHECK(modified_hl(Partition{1, 1}) == h11);
  CHECK(modified_hl(Partition{2}) == SymFunc::element(Basis::schur, Q, Partition{2}));
  CHECK(green_polynomial(Partition{1}, Partition{1}) == Pq("1"));
  CHECK(green_polynomial(Partition{1, 1}, Partition{1, 1}) == Pq("1+q"));
  CHECK(green_polynomial(Partition{2}, Partition{1, 1}) == Pq("1"));
  // 𝒬^τ_(1^n)(q) at q = 1 is the number of standard tableaux weighted by Kostka numbers,
  // i.e. Σ_ν χ^ν_(1^n) K_{ν,τ} = n!/∏τ_i! (the permutation module dimension).
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : partitions_of(n)) {
      Integer expect = 1;
      for (int i = 2; i <= n; ++i) expect *= i;
      for (int p : t.parts()) {
        for (int i = 2; i <= p; ++i) expect /= i;
      }
      CHECK(eval_q(green_polynomial(t, ones(n)), 1) ==
            RatFun::constant(NONE, Rational(expect)));
    }
  }
}

TEST_CASE("plethysm and inner products") {
  SymFunc p2 = SymFunc::element(Basis::power, Q, Partition{2});
  CHECK(plethys_over_one_minus(p2) ==
        SymFunc::element(Basis::power, Q, Partition{2}, Rq("1/(1-q^2)")));
  SymFunc p1 = SymFunc::element(Basis::power, QT, Partition{1});
  SymFunc h1 = SymFunc::element(Basis::complete, QT, Partition{1});
  SymFunc tw = plethys_sub(h1, [](int r) {
    std::string e = std::to_string(r);
    return parse_ratfun("(q^" + e + "-1)(1-t^" + e + ")", QT);
  });
  CHECK(tw == p1.scaled(parse_ratfun("(q-1)(1-t)", QT)));
  CHECK(hall_inner(el(Basis::power, Partition{2}), el(Basis::power, Partition{2})) ==
        RatFun::constant(NONE, 2));
  CHECK(qt_inner(p1, p1) == parse_ratfun("(q-1)(1-t)", QT));
  CHECK(hall_inner(el(Basis::power, Partition{2}), el(Basis::power, Partition{1})).is_zero());
}

TEST_CASE("plethysm moves across the Hall pairing") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      SymFunc u(Basis::schur, Q, n), v(Basis::monomial, Q, n);
      for (const auto& l : partitions_of(n)) {
        u.add(l, RatFun::constant(Q, coef(rng)));
        v.add(l, Rq(std::to_string(coef(rng)) + "+q"));
      }
      CHECK(hall_inner(plethys_over_one_minus(u), v) == hall_inner(u, plethys_over_one_minus(v)));
    }
  }
}

TEST_CASE("h_{mu*}[Z/(1-q)] identity for semisimple types") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(n, cur, comps);
    for (const auto& sizes : comps) {
      SymFunc lhs = SymFunc::element(Basis::schur, Q, Partition());
      SymFunc ht = SymFunc::element(Basis::schur, Q, Partition());
      RatFun b = RatFun::constant(Q, 1);
      int nmu = 0;
      for (int a : sizes) {
        lhs = multiply(lhs, SymFunc::element(Basis::complete, Q, Partition{a}));
        ht = multiply(ht, modified_hl(ones(a)));
        b *= b_factor(ones(a));
        nmu += n_stat(ones(a));
      }
      lhs = plethys_over_one_minus(lhs);
      RatFun scalar = Rq("q").pow(-nmu - n) * invert_q(b).inverse();
      if (n % 2) scalar = -scalar;
      CHECK(lhs == ht.scaled(scalar));
    }
  }
}

TEST_CASE("<s_alpha, Ht_beta> equals the Green-polynomial sum") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(n, cur, comps);
    for (const auto& alpha_sizes : comps) {
      for (const auto& alpha : fill_shapes(alpha_sizes)) {
        for (const auto& beta_sizes : comps) {
          SymFunc s = SymFunc::element(Basis::schur, Q, Partition());
          for (const auto& a : alpha) s = multiply(s, SymFunc::element(Basis::schur, Q, a));
          SymFunc ht = SymFunc::element(Basis::schur, Q, Partition());
          for (int b : beta_sizes) ht = multiply(ht, modified_hl(ones(b)));
          RatFun lhs = hall_inner(s, ht);

          RatFun rhs(Q);
          for (const auto& tau : fill_shapes(alpha_sizes)) {
            Rational weight = Rational(z_factor(join_all(tau)));
            long chi = 1;
            for (std::size_t c = 0; c < tau.size(); ++c) {
              chi *= sn_character(alpha[c], tau[c]);
              weight /= Rational(z_factor(tau[c]));
            }
            if (chi == 0) continue;
            RatFun inner(Q);
            for (const auto& nu : fill_shapes(beta_sizes)) {
              if (join_all(nu) != join_all(tau)) continue;
              MultiPoly g = MultiPoly::constant(Q, 1);
              Rational zn = 1;
              for (std::size_t c = 0; c < nu.size(); ++c) {
                g *= green_polynomial(ones(beta_sizes[c]), nu[c]);
                zn *= Rational(z_factor(nu[c]));
              }
              inner += RatFun(g).scaled(1 / zn);
            }
            rhs += inner.scaled(weight * chi);
          }
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("parameterized bases round trip") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& l : partitions_of(n)) {
      for (Basis b : {Basis::hall_littlewood, Basis::modified_hl}) {
        SymFunc f = SymFunc::element(b, Q, l);
        CHECK(base_change(base_change(f, Basis::schur), b) == f);
        CHECK(base_change(base_change(f, Basis::monomial), b) == f);
      }
    }
  }
  CHECK(base_change(SymFunc::element(Basis::hall_littlewood, Q, Partition{2}), Basis::monomial) ==
        hall_littlewood_P(Partition{2}));
  CHECK_THROWS_AS(SymFunc(Basis::modified_hl, NONE, 1), StructuralError);
}
