#include <algorithm>

#include "doctest.h"
#include "mhp/macdonald.hpp"

using namespace mhp;

namespace {

const VarList& QT = qt_ring();
const VarList ZW{"z", "w"};
const VarList UZW{"u", "z", "w"};

RatFun Rqt(const std::string& s) { return parse_ratfun(s, QT); }
RatFun Rzw(const std::string& s) { return parse_ratfun(s, ZW); }

SymFunc s(const Partition& l, const std::string& c = "1") {
  return SymFunc::element(Basis::schur, QT, l, Rqt(c));
}

// ∏ (q^{a+1} − t^l)(q^a − t^{l+1}) over the cells of λ.
RatFun norm_qt(const Partition& lambda) {
  RatFun r = RatFun::constant(QT, 1);
  for (const auto& h : hooks(lambda)) {
    r *= Rqt("q^" + std::to_string(h.arm + 1) + " - t^" + std::to_string(h.leg)) *
         Rqt("q^" + std::to_string(h.arm) + " - t^" + std::to_string(h.leg + 1));
  }
  return r;
}

}  // namespace

TEST_CASE("small modified Macdonald polynomials") {
  CHECK(modified_macdonald(Partition{1}) == s(Partition{1}));
  CHECK(modified_macdonald(Partition{2}) == s(Partition{2}) + s(Partition{1, 1}, "q"));
  CHECK(modified_macdonald(Partition{1, 1}) == s(Partition{2}) + s(Partition{1, 1}, "t"));
  CHECK(modified_macdonald(Partition{2, 1}) ==
        s(Partition{3}) + s(Partition{2, 1}, "q+t") + s(Partition{1, 1, 1}, "q*t"));
}

TEST_CASE("q,t symmetry and specializations") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& l : partitions_of(n)) {
      SymFunc h = modified_macdonald(l);
      SymFunc swapped = h.map_coeffs(
          [](const RatFun& c) { return substitute(c, {{"q", Rqt("t")}, {"t", Rqt("q")}}, QT); },
          QT);
      CHECK(swapped == modified_macdonald(dual(l)));
      for (const auto& [nu, c] : h.coeffs()) {
        REQUIRE(c.is_polynomial());
        for (const auto& term : c.num().terms()) CHECK(sgn(term.coeff) > 0);
      }
      // At q = t = 1 the Schur coefficients are f^ν, so H_λ(Z;1,1) = p_1^n.
      SymFunc at_one = h.map_coeffs(
          [](const RatFun& c) {
            return substitute(c, {{"q", RatFun::constant(QT, 1)}, {"t", RatFun::constant(QT, 1)}},
                              QT);
          },
          QT);
      CHECK(at_one == SymFunc::element(Basis::power, QT, Partition(std::vector<int>(n, 1))));
    }
  }
}

TEST_CASE("qt-orthogonality with norms N_lambda(q,t)") {
  for (int n = 1; n <= 5; ++n) {
    const auto& parts = partitions_of(n);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        RatFun ip = qt_inner(modified_macdonald(a), modified_macdonald(b));
        if (a == b) {
          CHECK(ip == norm_qt(a));
        } else {
          CHECK(ip.is_zero());
        }
      }
    }
  }
}

TEST_CASE("Macdonald basis round trip") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& l : partitions_of(n)) {
      SymFunc f = SymFunc::element(Basis::modified_macdonald, QT, l);
      CHECK(base_change(f, Basis::schur) == modified_macdonald(l));
      CHECK(base_change(base_change(f, Basis::power), Basis::modified_macdonald) == f);
    }
  }
}

TEST_CASE("N factor examples") {
  RatFun z = RatFun::variable(ZW, "z"), w = RatFun::variable(ZW, "w");
  CHECK(n_factor(Partition{1}, z * w, z * z, w * w) == Rzw("(z-w)^2"));
  CHECK(n_plain(Partition{2}, ZW) == Rzw("(z^2-1)(z-w)(z-1)(1-w)"));
  CHECK(n_tilde_plain(Partition{2}, ZW) == Rzw("(z^2-1)(z-w)"));
  CHECK(n_tilde_plain(Partition{2, 1}, ZW) == Rzw("1"));
  CHECK(n_tilde_plain(Partition(), ZW) == Rzw("1"));
  CHECK_THROWS_AS(n_factor(Partition{1}, RatFun(ZW), z, w), DivisionByZero);
}

TEST_CASE("N tilde divides N and detects 2-cores") {
  RatFun u = RatFun::variable(UZW, "u"), z = RatFun::variable(UZW, "z"),
         w = RatFun::variable(UZW, "w");
  for (int n = 0; n <= 7; ++n) {
    for (const auto& l : partitions_of(n)) {
      RatFun nt = n_tilde_factor(l, u, z, w);
      RatFun ratio = n_factor(l, u, z, w) / nt;
      // Both are Laurent in u; multiply through by u^{|λ|}.
      CHECK((ratio * u.pow(n)).is_polynomial());
      CHECK((nt.is_one()) == (two_core(l) == l));
    }
  }
}

TEST_CASE("N under conjugation") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& l : partitions_of(n)) {
      std::vector<std::pair<int, int>> a, b;
      for (const auto& h : hooks(l)) a.emplace_back(h.arm, h.leg);
      for (const auto& h : hooks(dual(l))) b.emplace_back(h.leg, h.arm);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
      RatFun n1 = n_plain(l, ZW), n2 = n_plain(dual(l), ZW);
      // N_λ*(z,w) = N_λ(w,z)
      CHECK(n1 == substitute(n2, {{"z", Rzw("w")}, {"w", Rzw("z")}}, ZW));
    }
  }
}
