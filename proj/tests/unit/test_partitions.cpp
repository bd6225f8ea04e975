#include <algorithm>
#include <set>

#include "doctest.h"
#include "mhp/partitions.hpp"
#include "mhp/ratfun.hpp"

using namespace mhp;

namespace {

const VarList Q{"q"};

// Abacus computation of the 2-core: beta numbers on two runners, beads slid up.
Partition core_by_abacus(const Partition& lambda) {
  int L = lambda.length() + (lambda.length() % 2);
  std::vector<int> beta;
  for (int i = 0; i < L; ++i) beta.push_back(lambda.part(i) + (L - 1 - i));
  int runner[2] = {0, 0};
  for (int b : beta) ++runner[b % 2];
  std::vector<int> slid;
  for (int r = 0; r < 2; ++r) {
    for (int k = 0; k < runner[r]; ++k) slid.push_back(2 * k + r);
  }
  std::sort(slid.begin(), slid.end(), std::greater<>());
  std::vector<int> parts;
  for (int i = 0; i < L; ++i) {
    int p = slid[std::size_t(i)] - (L - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(parts);
}

// All partitions reachable by removing one domino.
std::vector<Partition> remove_one_domino(const Partition& lambda) {
  std::vector<Partition> out;
  for (const auto& c : cells(lambda)) {
    if (arm_leg_hook(lambda, c).hook != 2) continue;
    std::vector<int> p = lambda.parts();
    Hook h = arm_leg_hook(lambda, c);
    if (h.arm == 1) {
      p[std::size_t(c.row - 1)] -= 2;
    } else {
      p[std::size_t(c.row - 1)] -= 1;
      p[std::size_t(c.row)] -= 1;
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    out.emplace_back(p);
  }
  return out;
}

void all_terminal_cores(const Partition& lambda, std::set<std::vector<int>>& cores) {
  auto next = remove_one_domino(lambda);
  if (next.empty()) {
    cores.insert(lambda.parts());
    return;
  }
  for (const auto& p : next) all_terminal_cores(p, cores);
}

bool is_staircase(const Partition& p) {
  for (int i = 0; i < p.length(); ++i) {
    if (p.part(i) != p.length() - i) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("partitions_of") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0)[0].empty());
  const auto& p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Partition{3});
  CHECK(p3[1] == Partition{2, 1});
  CHECK(p3[2] == Partition{1, 1, 1});
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    const auto& ps = partitions_of(n);
    CHECK(int(ps.size()) == counts[n]);
    CHECK(std::is_sorted(ps.begin(), ps.end()));
    CHECK(std::adjacent_find(ps.begin(), ps.end()) == ps.end());
  }
}

TEST_CASE("partition validation and text") {
  CHECK_THROWS_AS(Partition({1, 2}), UsageError);
  CHECK_THROWS_AS(Partition({2, 0}), UsageError);
  CHECK_THROWS_AS(Partition::parse("2,x"), UsageError);
  CHECK(Partition::parse("2,1") == Partition{2, 1});
  CHECK(Partition::parse(" 3 , 1 ,1").to_string() == "3,1,1");
  CHECK(Partition::parse("").empty());
}

TEST_CASE("arm leg hook") {
  auto h = arm_leg_hook(Partition{2}, Cell{1, 1});
  CHECK(h.arm == 1);
  CHECK(h.leg == 0);
  CHECK(h.hook == 2);
  h = arm_leg_hook(Partition{2, 1}, Cell{1, 1});
  CHECK((h.arm == 1 && h.leg == 1 && h.hook == 3));
  h = arm_leg_hook(Partition{3, 2}, Cell{1, 2});
  CHECK((h.arm == 1 && h.leg == 1 && h.hook == 3));
  CHECK_THROWS_AS(arm_leg_hook(Partition{2}, Cell{2, 1}), UsageError);
  CHECK_THROWS_AS(arm_leg_hook(Partition{2}, Cell{1, 3}), UsageError);
}

TEST_CASE("n statistic and dual") {
  CHECK(n_stat(Partition{1, 1, 1}) == 3);
  CHECK(n_stat(Partition{3}) == 0);
  CHECK(n_stat(Partition{2, 2, 1}) == 4);
  CHECK(dual(Partition{2, 1}) == Partition{2, 1});
  CHECK(dual(Partition{3}) == Partition{1, 1, 1});
  CHECK(dual(Partition{2, 2}) == Partition{2, 2});
  for (int n = 0; n <= 12; ++n) {
    for (const auto& l : partitions_of(n)) {
      CHECK(dual(dual(l)) == l);
      int hook_sum = 0;
      for (const auto& h : hooks(l)) hook_sum += h.hook;
      CHECK(hook_sum == n + n_stat(l) + n_stat(dual(l)));
    }
  }
}

TEST_CASE("two cores") {
  CHECK(two_core(Partition{2}).empty());
  CHECK(two_core(Partition{2, 1}) == Partition{2, 1});
  std::set<std::vector<int>> c31;
  all_terminal_cores(Partition{3, 1}, c31);
  CHECK(c31.size() == 1);
  CHECK(two_core(Partition{3, 1}).parts() == *c31.begin());
  for (int n = 0; n <= 10; ++n) {
    for (const auto& l : partitions_of(n)) {
      Partition c = two_core(l);
      CHECK(c == core_by_abacus(l));
      CHECK(two_core(c) == c);
      CHECK((l.size() - c.size()) % 2 == 0);
      CHECK(is_staircase(c));
      for (const auto& h : hooks(c)) CHECK(h.hook % 2 == 1);
      if (n <= 8) {
        std::set<std::vector<int>> all;
        all_terminal_cores(l, all);
        CHECK(all.size() == 1);
      }
    }
  }
}

TEST_CASE("hook polynomial") {
  CHECK(hook_polynomial(Partition{1}) == parse_poly("1-q", Q));
  CHECK(hook_polynomial(Partition{2}) == parse_poly("(1-q)(1-q^2)", Q));
  CHECK(hook_polynomial(Partition{2, 1}) == parse_poly("(1-q)^2(1-q^3)", Q));
  for (int n = 0; n <= 12; ++n) {
    for (const auto& l : partitions_of(n)) {
      CHECK(hook_polynomial(l).total_degree() == n + n_stat(l) + n_stat(dual(l)));
    }
  }
}

TEST_CASE("type statistics") {
  TypeData two_ones(Partition(), Partition(), {Partition{1}, Partition{1}});
  auto st = type_stats(two_ones);
  CHECK(st.N == 2);
  CHECK(st.K == 2);

  auto s2 = type_stats(TypeData(Partition(), Partition(), {Partition{2}}));
  CHECK(s2.N == 1);
  CHECK(s2.K == -1);

  TypeData w(Partition{1}, Partition(), {Partition{1}});
  auto sw = type_stats(w);
  CHECK(sw.braces.star == std::vector<Partition>{Partition{1}, Partition{1}});
  CHECK(sw.braces.size() == 3);
  CHECK(bracket(sw.braces) == Partition{1, 1, 1});
  CHECK(sw.bracket == Partition{1, 1});
  CHECK(sw.z == 1);

  CHECK(z_factor(Partition{2, 1, 1}) == 4);
  CHECK(z_factor(Partition{2, 2}) == 8);
}

TEST_CASE("type text round trip") {
  TypeData t = TypeData::parse("p:2,1|m:1|s:(2),(1,1)");
  CHECK(t.plus == Partition{2, 1});
  CHECK(t.minus == Partition{1});
  CHECK(t.star.size() == 2);
  CHECK(t.size() == 8);
  CHECK(TypeData::parse(t.to_string()) == t);
  CHECK(TypeData::parse("p:|m:|s:(1,1),(2)") == TypeData::parse("p:|m:|s:(2),(1,1)"));
  CHECK_THROWS_AS(TypeData::parse("p:1|m:"), UsageError);
  CHECK_THROWS_AS(TypeData::parse("p:1|m:|s:()"), UsageError);
}

TEST_CASE("type enumeration by brace size") {
  // n = 1: (1)(∅)(), (∅)(1)().
  CHECK(types_with_brace_size(1).size() == 2);
  // n = 2: five with ω* empty, plus ω* = {(1)}.
  CHECK(types_with_brace_size(2).size() == 6);
  for (int n = 0; n <= 6; ++n) {
    auto ts = types_with_brace_size(n);
    std::set<std::string> seen;
    for (const auto& t : ts) {
      CHECK(braces(t).size() == n);
      seen.insert(t.to_string());
    }
    CHECK(seen.size() == ts.size());
  }
}
