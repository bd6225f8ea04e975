#include "mhp/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace mhp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw UsageError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw UsageError("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.empty() || t == "0") return Partition();
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw UsageError("bad partition '" + text + "'");
    }
    parts.push_back(std::stoi(item));
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // Reverse lexicographic: larger leading parts come first.
  return b.parts_ <=> a.parts_;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw UsageError("partitions_of: negative size");
  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> cur;
  generate(n, n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Cell> cells(const Partition& lambda) {
  std::vector<Cell> out;
  out.reserve(std::size_t(lambda.size()));
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) out.push_back(Cell{i + 1, j + 1});
  }
  return out;
}

Hook arm_leg_hook(const Partition& lambda, Cell x) {
  if (x.row < 1 || x.col < 1 || x.row > lambda.length() || x.col > lambda.part(x.row - 1)) {
    throw UsageError("cell (" + std::to_string(x.row) + "," + std::to_string(x.col) +
                     ") outside diagram of " + lambda.to_string());
  }
  int arm = lambda.part(x.row - 1) - x.col;
  int leg = 0;
  while (lambda.part(x.row - 1 + leg + 1) >= x.col) ++leg;
  return Hook{arm, leg, arm + leg + 1};
}

std::vector<Hook> hooks(const Partition& lambda) {
  std::vector<Hook> out;
  for (const auto& c : cells(lambda)) out.push_back(arm_leg_hook(lambda, c));
  return out;
}

int n_stat(const Partition& lambda) {
  int s = 0;
  for (int i = 0; i < lambda.length(); ++i) s += i * lambda.part(i);
  return s;
}

Partition dual(const Partition& lambda) {
  std::vector<int> parts;
  for (int j = 1; j <= lambda.part(0); ++j) {
    int c = 0;
    while (lambda.part(c) >= j) ++c;
    parts.push_back(c);
  }
  return Partition(std::move(parts));
}

std::vector<int> multiplicities(const Partition& lambda) {
  std::vector<int> m(std::size_t(lambda.part(0)) + 1, 0);
  for (int p : lambda.parts()) ++m[std::size_t(p)];
  return m;
}

Integer z_factor(const Partition& lambda) {
  Integer z = 1;
  auto m = multiplicities(lambda);
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (int k = 1; k <= m[i]; ++k) z *= Integer(long(i)) * k;
  }
  return z;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw UsageError("dominance needs equal sizes");
  int sa = 0, sb = 0;
  for (int i = 0; i < std::max(a.length(), b.length()); ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
  }
  return true;
}

Partition join(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition two_core(const Partition& lambda) {
  std::vector<int> p = lambda.parts();
  auto at = [&](std::size_t i) { return i < p.size() ? p[i] : 0; };
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t i = 0; i < p.size() && !removed; ++i) {
      // Horizontal domino at the end of row i.
      if (p[i] >= 2 && at(i + 1) <= p[i] - 2) {
        p[i] -= 2;
        removed = true;
      } else if (at(i + 1) == p[i] && at(i + 2) < p[i]) {
        // Vertical domino at the end of rows i and i+1.
        p[i] -= 1;
        p[i + 1] -= 1;
        removed = true;
      }
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
  }
  return Partition(std::move(p));
}

MultiPoly hook_polynomial(const Partition& lambda, const VarList& vars, const std::string& var) {
  auto idx = vars.index(var);
  if (!idx) throw StructuralError("hook_polynomial: variable '" + var + "' not in ring");
  MultiPoly one = MultiPoly::constant(vars, 1);
  MultiPoly result = one;
  for (const auto& h : hooks(lambda)) {
    Exponent e{};
    e[*idx] = static_cast<std::uint16_t>(h.hook);
    result *= one - MultiPoly::monomial(vars, e);
  }
  return result;
}

// ---- types ----

TypeData::TypeData(Partition p, Partition m, std::vector<Partition> s)
    : plus(std::move(p)), minus(std::move(m)), star(std::move(s)) {
  for (const auto& x : star) {
    if (x.empty()) throw UsageError("type components ω_i must be nonempty");
  }
  std::sort(star.begin(), star.end(), std::greater<>());
}

int TypeData::size() const {
  int s = plus.size() + minus.size();
  for (const auto& x : star) s += x.size();
  return s;
}

std::vector<Partition> TypeData::components() const {
  std::vector<Partition> out{plus, minus};
  out.insert(out.end(), star.begin(), star.end());
  return out;
}

std::string TypeData::to_string() const {
  std::string s = "p:" + plus.to_string() + "|m:" + minus.to_string() + "|s:";
  for (std::size_t i = 0; i < star.size(); ++i) {
    if (i) s += ',';
    s += "(" + star[i].to_string() + ")";
  }
  return s;
}

TypeData TypeData::parse(const std::string& text) {
  Partition p, m;
  std::vector<Partition> s;
  std::stringstream ss(text);
  std::string field;
  bool seen_p = false, seen_m = false, seen_s = false;
  while (std::getline(ss, field, '|')) {
    if (field.size() < 2 || field[1] != ':') throw UsageError("bad type '" + text + "'");
    std::string body = field.substr(2);
    switch (field[0]) {
      case 'p':
        p = Partition::parse(body);
        seen_p = true;
        break;
      case 'm':
        m = Partition::parse(body);
        seen_m = true;
        break;
      case 's': {
        seen_s = true;
        std::size_t pos = 0;
        while (pos < body.size()) {
          if (body[pos] == ',') {
            ++pos;
            continue;
          }
          if (body[pos] != '(') throw UsageError("bad type '" + text + "'");
          std::size_t close = body.find(')', pos);
          if (close == std::string::npos) throw UsageError("bad type '" + text + "'");
          s.push_back(Partition::parse(body.substr(pos + 1, close - pos - 1)));
          pos = close + 1;
        }
        break;
      }
      default:
        throw UsageError("bad type '" + text + "'");
    }
  }
  if (!seen_p || !seen_m || !seen_s) throw UsageError("bad type '" + text + "'");
  return TypeData(std::move(p), std::move(m), std::move(s));
}

TypeData braces(const TypeData& omega) {
  std::vector<Partition> doubled;
  for (const auto& x : omega.star) {
    doubled.push_back(x);
    doubled.push_back(x);
  }
  return TypeData(omega.plus, omega.minus, std::move(doubled));
}

Partition bracket(const TypeData& omega) {
  Partition b = join(omega.plus, omega.minus);
  for (const auto& x : omega.star) b = join(b, x);
  return b;
}

TypeStats type_stats(const TypeData& omega) {
  TypeStats st;
  st.N = 1;
  for (std::size_t i = 0; i < omega.star.size();) {
    std::size_t j = i;
    while (j < omega.star.size() && omega.star[j] == omega.star[i]) ++j;
    for (std::size_t k = 1; k <= j - i; ++k) st.N *= long(k);
    i = j;
  }
  const long l = long(omega.star.size());
  st.K = 1;
  for (long k = 1; k <= l; ++k) st.K *= k;
  if (l % 2) st.K = -st.K;
  st.braces = braces(omega);
  st.bracket = bracket(omega);
  st.z = z_factor(omega.plus) * z_factor(omega.minus);
  for (const auto& x : omega.star) st.z *= z_factor(x);
  return st;
}

int n_stat(const TypeData& omega) {
  int s = 0;
  for (const auto& x : omega.components()) s += n_stat(x);
  return s;
}

MultiPoly hook_polynomial(const TypeData& omega, const VarList& vars, const std::string& var) {
  MultiPoly r = MultiPoly::constant(vars, 1);
  for (const auto& x : omega.components()) r *= hook_polynomial(x, vars, var);
  return r;
}

namespace {

// Multisets of nonempty partitions of total size `remaining`, drawn from
// pool[start..] in nondecreasing index order.
void star_multisets(int remaining, std::size_t start, const std::vector<Partition>& pool,
                    std::vector<Partition>& cur, std::vector<std::vector<Partition>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (pool[i].size() > remaining) continue;
    cur.push_back(pool[i]);
    star_multisets(remaining - pool[i].size(), i, pool, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<TypeData> types_with_brace_size(int n) {
  std::vector<TypeData> out;
  for (int b = 0; 2 * b <= n; ++b) {
    std::vector<Partition> pool;
    for (int s = 1; s <= b; ++s) {
      for (const auto& p : partitions_of(s)) pool.push_back(p);
    }
    std::vector<std::vector<Partition>> stars;
    std::vector<Partition> cur;
    star_multisets(b, 0, pool, cur, stars);
    for (int ap = 0; ap <= n - 2 * b; ++ap) {
      int am = n - 2 * b - ap;
      for (const auto& p : partitions_of(ap)) {
        for (const auto& m : partitions_of(am)) {
          for (const auto& s : stars) out.emplace_back(p, m, s);
        }
      }
    }
  }
  return out;
}

}  // namespace mhp
