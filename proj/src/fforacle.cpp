#include "mhp/fforacle.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace mhp {
namespace {

long md(long x, long q) {
  x %= q;
  return x < 0 ? x + q : x;
}

bool is_square(long x, long q) { return mod_pow(x, (q - 1) / 2, q) == 1; }

// Tuples (A_j, B_j) of disjoint M-subsets of {0..n-1}, as bitmasks.
void subset_pairs(int n, int M, std::vector<std::pair<unsigned, unsigned>>& out) {
  for (unsigned a = 0; a < (1u << n); ++a) {
    if (__builtin_popcount(a) != M) continue;
    for (unsigned b = 0; b < (1u << n); ++b) {
      if (__builtin_popcount(b) == M && (a & b) == 0) out.emplace_back(a, b);
    }
  }
}

std::string mask_string(unsigned m, int n) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (m & (1u << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  }
  return s + "}";
}

}  // namespace

void require_odd_prime(long q) {
  if (q < 3 || q % 2 == 0) throw UsageError("q must be an odd prime, got " + std::to_string(q));
  for (long d = 3; d * d <= q; d += 2) {
    if (q % d == 0) throw UsageError("q must be an odd prime, got " + std::to_string(q));
  }
}

long mod_pow(long base, long exp, long q) {
  long r = 1 % q, b = md(base, q);
  while (exp > 0) {
    if (exp & 1) r = r * b % q;
    b = b * b % q;
    exp >>= 1;
  }
  return r;
}

long mod_inv(long x, long q) {
  x = md(x, q);
  if (x == 0) throw StructuralError("inverse of 0 in F_" + std::to_string(q));
  return mod_pow(x, q - 2, q);
}

// ---- FqMatrix ----

FqMatrix::FqMatrix(int n, long q, std::array<long, 4> entries) : n_(n), q_(q), a_(entries) {
  if (n != 1 && n != 2) throw UsageError("only n = 1, 2 are supported over F_q");
  for (auto& x : a_) x = md(x, q);
  if (n == 1) a_[1] = a_[2] = a_[3] = 0;
}

FqMatrix FqMatrix::identity(int n, long q) { return scalar(n, q, 1); }

FqMatrix FqMatrix::scalar(int n, long q, long c) { return FqMatrix(n, q, {c, 0, 0, n == 2 ? c : 0}); }

long FqMatrix::det() const {
  if (n_ == 1) return a_[0];
  return md(a_[0] * a_[3] - a_[1] * a_[2], q_);
}

long FqMatrix::trace() const { return n_ == 1 ? a_[0] : md(a_[0] + a_[3], q_); }

FqMatrix FqMatrix::transpose() const { return FqMatrix(n_, q_, {a_[0], a_[2], a_[1], a_[3]}); }

FqMatrix FqMatrix::inverse() const {
  const long d = det();
  if (d == 0) throw StructuralError("singular matrix over F_" + std::to_string(q_));
  const long di = mod_inv(d, q_);
  if (n_ == 1) return FqMatrix(1, q_, {di, 0, 0, 0});
  return FqMatrix(2, q_, {a_[3] * di, -a_[1] * di, -a_[2] * di, a_[0] * di});
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (n_ != o.n_ || q_ != o.q_) throw StructuralError("matrix shape mismatch");
  if (n_ == 1) return FqMatrix(1, q_, {a_[0] * o.a_[0], 0, 0, 0});
  return FqMatrix(2, q_,
                  {a_[0] * o.a_[0] + a_[1] * o.a_[2], a_[0] * o.a_[1] + a_[1] * o.a_[3],
                   a_[2] * o.a_[0] + a_[3] * o.a_[2], a_[2] * o.a_[1] + a_[3] * o.a_[3]});
}

std::string FqMatrix::to_string() const {
  if (n_ == 1) return "[" + std::to_string(a_[0]) + "]";
  return "[[" + std::to_string(a_[0]) + "," + std::to_string(a_[1]) + "],[" +
         std::to_string(a_[2]) + "," + std::to_string(a_[3]) + "]]";
}

std::vector<FqMatrix> enumerate_gl(int n, long q) {
  require_odd_prime(q);
  std::vector<FqMatrix> out;
  if (n == 1) {
    for (long a = 1; a < q; ++a) out.emplace_back(1, q, std::array<long, 4>{a, 0, 0, 0});
    return out;
  }
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b)
      for (long c = 0; c < q; ++c)
        for (long d = 0; d < q; ++d) {
          if (md(a * d - b * c, q) != 0) out.emplace_back(2, q, std::array<long, 4>{a, b, c, d});
        }
  return out;
}

FqMatrix sigma_twist(const FqMatrix& g) {
  const int n = g.n();
  const long q = g.q();
  // J = antidiag(1, −1, ...) read from the top-right corner.
  FqMatrix J = n == 1 ? FqMatrix::identity(1, q) : FqMatrix(2, q, {0, 1, -1, 0});
  return J * g.transpose().inverse() * J.inverse();
}

// ---- ClassSpec ----

ClassSpec::ClassSpec(long q_, std::vector<long> ev) : q(q_), eigenvalues(std::move(ev)) {
  require_odd_prime(q);
  if (eigenvalues.empty()) throw UsageError("class needs at least one eigenvalue");
  for (auto& e : eigenvalues) {
    if (md(e, q) == 0) throw UsageError("eigenvalue 0 is not in F_q*");
    e = md(e, q);
    if (!is_square(e, q)) {
      throw UsageError("eigenvalue " + std::to_string(e) + " is not a square in F_" +
                       std::to_string(q));
    }
  }
  std::sort(eigenvalues.begin(), eigenvalues.end());
}

ClassSpec ClassSpec::from_representative(const FqMatrix& m) {
  const long q = m.q();
  std::vector<long> ev;
  if (m.n() == 1) {
    ev.push_back(m.at(0, 0));
  } else {
    for (long x = 1; x < q; ++x) {
      // x² − tr·x + det
      if (md(x * x - m.trace() * x + m.det(), q) == 0) ev.push_back(x);
    }
    if (ev.size() == 1) {
      if (!(m == FqMatrix::scalar(2, q, ev[0]))) {
        throw UsageError("representative is not semisimple: " + m.to_string());
      }
      ev.push_back(ev[0]);
    }
    if (ev.size() != 2) throw UsageError("representative is not split over F_q: " + m.to_string());
  }
  return ClassSpec(q, ev);
}

Partition ClassSpec::multiplicities() const {
  std::vector<int> m;
  for (std::size_t i = 0; i < eigenvalues.size();) {
    std::size_t j = i;
    while (j < eigenvalues.size() && eigenvalues[j] == eigenvalues[i]) ++j;
    m.push_back(int(j - i));
    i = j;
  }
  std::sort(m.rbegin(), m.rend());
  return Partition(m);
}

bool ClassSpec::contains(const FqMatrix& m) const {
  if (m.n() != n() || m.q() != q) return false;
  if (n() == 1) return m.at(0, 0) == eigenvalues[0];
  const long e1 = eigenvalues[0], e2 = eigenvalues[1];
  if (e1 == e2) return m == FqMatrix::scalar(2, q, e1);
  return m.trace() == md(e1 + e2, q) && m.det() == md(e1 * e2, q);
}

std::string ClassSpec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(eigenvalues[i]);
  }
  return s + ")";
}

// ---- genericity ----

GenericityResult genericity_check(const std::vector<ClassSpec>& classes, bool strong) {
  GenericityResult r;
  if (classes.empty()) return r;
  const int n = classes[0].n();
  const long q = classes[0].q;
  for (const auto& c : classes) {
    if (c.n() != n || c.q != q) throw UsageError("classes must share n and q");
  }
  const std::size_t k = classes.size();
  for (int M = 1; M <= n / 2; ++M) {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    subset_pairs(n, M, pairs);
    std::vector<std::size_t> choice(k, 0);
    while (true) {
      long prod = 1;
      for (std::size_t j = 0; j < k; ++j) {
        auto [a, b] = pairs[choice[j]];
        for (int i = 0; i < n; ++i) {
          if (a & (1u << i)) prod = prod * classes[j].eigenvalues[std::size_t(i)] % q;
          if (b & (1u << i)) prod = prod * mod_inv(classes[j].eigenvalues[std::size_t(i)], q) % q;
        }
      }
      if (prod == 1 || (strong && prod == q - 1)) {
        r.generic = false;
        for (std::size_t j = 0; j < k; ++j) {
          auto [a, b] = pairs[choice[j]];
          if (j) r.witness += " ";
          r.witness += "A" + std::to_string(j + 1) + "=" + mask_string(a, n) + " B" +
                       std::to_string(j + 1) + "=" + mask_string(b, n);
        }
        r.witness += " product=" + std::to_string(prod);
        return r;
      }
      std::size_t j = 0;
      while (j < k && ++choice[j] == pairs.size()) choice[j++] = 0;
      if (j == k) break;
    }
  }
  return r;
}

// ---- orders ----

Integer gl_order(int n, long q) {
  Integer r = 1, qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
  for (int i = 0; i < n; ++i) {
    Integer qi;
    mpz_ui_pow_ui(qi.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(i));
    r *= qn - qi;
  }
  return r;
}

Integer centralizer_order(const Partition& mu, long q) {
  Integer r = 1;
  for (int m : mu.parts()) r *= gl_order(m, q);
  return r;
}

// ---- brute force ----

Integer brute_count(int n, int g, const std::vector<ClassSpec>& classes, long q, int workers) {
  require_odd_prime(q);
  if (n != 1 && n != 2) throw UsageError("brute force supports n = 1, 2 only");
  if (g < 1) throw UsageError("g must be at least 1");
  if (classes.empty()) throw UsageError("at least one class is required");
  for (const auto& c : classes) {
    if (c.n() != n || c.q != q) throw UsageError("class " + c.to_string() + " does not match n, q");
  }
  GenericityResult gen = genericity_check(classes, true);
  if (!gen.generic) throw UsageError("classes are not strongly generic: " + gen.witness);

  const std::vector<FqMatrix> G = enumerate_gl(n, q);
  std::vector<FqMatrix> inv, sig;
  for (const auto& m : G) {
    inv.push_back(m.inverse());
    sig.push_back(sigma_twist(m));
  }
  // Elements of C_2..C_k.
  std::vector<std::vector<FqMatrix>> others;
  for (std::size_t j = 1; j < classes.size(); ++j) {
    std::vector<FqMatrix> cj;
    for (const auto& m : G) {
      if (classes[j].contains(m)) cj.push_back(m);
    }
    others.push_back(std::move(cj));
  }
  // Cost guard: |G|^{2g} ∏_{j≥2} |C_j|.
  long double cost = 1;
  for (int i = 0; i < 2 * g; ++i) cost *= (long double)G.size();
  for (const auto& c : others) cost *= (long double)c.size();
  if (cost > 2e9L) throw UsageError("brute force too expensive (" + std::to_string(double(cost)) + " iterations)");

  // All products Y = X_2⋯X_k, inverted.
  std::vector<FqMatrix> y_inv{FqMatrix::identity(n, q)};
  for (const auto& cj : others) {
    std::vector<FqMatrix> next;
    for (const auto& y : y_inv) {
      for (const auto& x : cj) next.push_back(x.inverse() * y);  // (Y X)⁻¹ = X⁻¹ Y⁻¹
    }
    y_inv = std::move(next);
  }
  const ClassSpec& c1 = classes[0];
  const std::size_t N = G.size();

  auto count_for_a1 = [&](std::size_t a1) -> unsigned long long {
    unsigned long long cnt = 0;
    std::function<void(int, const FqMatrix&)> rec = [&](int i, const FqMatrix& P) {
      if (i > g) {
        const FqMatrix pinv = P.inverse();
        for (const auto& yi : y_inv) {
          if (c1.contains(pinv * yi)) ++cnt;
        }
        return;
      }
      for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
          rec(i + 1, P * G[a] * G[b] * inv[a] * inv[b]);
        }
      }
    };
    const FqMatrix A = G[a1], Ai = inv[a1];
    for (std::size_t b = 0; b < N; ++b) rec(2, A * sig[b] * Ai * inv[b]);
    return cnt;
  };

  const int w = std::max(1, workers);
  std::vector<unsigned long long> partial(std::size_t(w), 0);
  auto run = [&](int id) {
    for (std::size_t a = std::size_t(id); a < N; a += std::size_t(w)) partial[std::size_t(id)] += count_for_a1(a);
  };
  if (w == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int id = 0; id < w; ++id) threads.emplace_back(run, id);
    for (auto& t : threads) t.join();
  }
  Integer total = 0;
  for (auto p : partial) total += Integer(std::to_string(p));
  const Integer order = gl_order(n, q);
  if (total % order != 0) {
    throw StructuralError("|Rep| = " + total.get_str() + " is not divisible by |GL_n(q)| = " +
                          order.get_str());
  }
  return total / order;
}

}  // namespace mhp
