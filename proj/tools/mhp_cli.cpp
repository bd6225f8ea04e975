// mhp: command-line front end for the character-variety engine.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mhp/charvar.hpp"
#include "mhp/fforacle.hpp"
#include "mhp/macdonald.hpp"
#include "mhp/symfunc.hpp"

using namespace mhp;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Job {
  int n = 0;
  int g = 1;
  std::vector<std::string> mus;
  std::vector<long> qs;
  std::vector<std::string> classes;
  std::string path = "all";
  std::string output = "text";
  int workers = 1;
  bool no_timing = false;
};

PunctureSpec make_spec(const Job& job) {
  PunctureSpec s;
  s.n = job.n;
  s.g = job.g;
  for (const auto& m : job.mus) {
    Partition p;
    try {
      p = Partition::parse(m);
    } catch (const std::exception& e) {
      throw UsageError("bad --mu '" + m + "': " + e.what());
    }
    s.mus.push_back(p);
  }
  s.validate();
  return s;
}

ojson poly_json(const MultiPoly& p) { return ojson::parse(poly_to_json(p)); }

void emit(const Job& job, const ojson& j, const std::string& text) {
  if (job.output == "json") {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

ojson header(const char* command, const PunctureSpec& s) {
  ojson j;
  j["schema"] = 1;
  j["command"] = command;
  j["n"] = s.n;
  j["g"] = s.g;
  ojson mus = ojson::array();
  for (const auto& m : s.mus) mus.push_back(m.parts());
  j["mu"] = mus;
  return j;
}

int cmd_hmu(const Job& job) {
  PunctureSpec s = make_spec(job);
  MultiPoly h = hmu(s);
  ojson j = header("hmu", s);
  j["d"] = dimension(s);
  j["hmu"] = poly_json(h);
  emit(job, j, h.to_string());
  return kExitPass;
}

int cmd_epoly(const Job& job) {
  PunctureSpec s = make_spec(job);
  MultiPoly e = job.path == "all" ? e_polynomial_all_paths(s) : e_polynomial(s, parse_path(job.path));
  ojson j = header("epoly", s);
  j["path"] = job.path;
  j["epoly"] = poly_json(e);
  emit(job, j, e.to_string());
  return kExitPass;
}

int cmd_mhp(const Job& job) {
  PunctureSpec s = make_spec(job);
  MultiPoly m = mixed_hodge(s);
  ojson j = header("mhp", s);
  j["d"] = dimension(s);
  j["mixed_hodge"] = poly_json(m);
  emit(job, j, m.to_string());
  return kExitPass;
}

int cmd_verify(const Job& job) {
  PunctureSpec s = make_spec(job);
  ConjectureReport r = verify_conjecture(s);
  ojson j = header("verify", s);
  j["d"] = r.dim_d;
  j["is_polynomial"] = r.is_polynomial;
  j["degree_d_each_var"] = r.degree_d_each_var;
  j["even_degrees"] = r.even_degrees;
  j["nonneg_at_minus_z"] = r.nonneg_at_minus_z;
  j["zw_symmetric"] = r.zw_symmetric;
  j["curious_duality_t_minus1"] = r.curious_duality_t_minus1;
  j["all_true"] = r.all_true();
  if (!r.failure.empty()) j["failure"] = r.failure;
  if (r.hmu) j["hmu"] = poly_json(*r.hmu);
  if (r.epoly) j["epoly"] = poly_json(*r.epoly);

  std::ostringstream t;
  auto line = [&](const char* name, bool v) { t << name << ": " << (v ? "true" : "false") << "\n"; };
  t << s.to_string() << "  d=" << r.dim_d << "\n";
  line("is_polynomial", r.is_polynomial);
  line("degree_d_each_var", r.degree_d_each_var);
  line("even_degrees", r.even_degrees);
  line("nonneg_at_minus_z", r.nonneg_at_minus_z);
  line("zw_symmetric", r.zw_symmetric);
  line("curious_duality_t_minus1", r.curious_duality_t_minus1);
  if (!r.failure.empty()) t << "failure: " << r.failure << "\n";
  t << "all_true: " << (r.all_true() ? "true" : "false");
  emit(job, j, t.str());
  return r.all_true() ? kExitPass : kExitFail;
}

std::vector<long> parse_eigenvalues(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stol(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad --class '" + text + "'");
    }
  }
  return out;
}

int cmd_oracle(const Job& job) {
  if (job.qs.empty()) throw UsageError("oracle needs at least one --q");
  if (job.classes.empty()) throw UsageError("oracle needs at least one --class");
  ojson results = ojson::array();
  std::ostringstream t;
  bool all_match = true;
  for (long q : job.qs) {
    require_odd_prime(q);
    std::vector<ClassSpec> classes;
    for (const auto& c : job.classes) classes.emplace_back(q, parse_eigenvalues(c));
    PunctureSpec s;
    s.n = classes[0].n();
    s.g = job.g;
    if (job.n != 0 && job.n != s.n) throw UsageError("--n does not match the class size");
    for (const auto& c : classes) s.mus.push_back(c.multiplicities());
    s.validate();

    auto t0 = std::chrono::steady_clock::now();
    Integer count = brute_count(s.n, s.g, classes, q, job.workers);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    MultiPoly e = e_polynomial(s, EPath::series_q);
    Rational fv = substitute(RatFun(e), {{"q", RatFun::constant(q_ring(), q)}}, q_ring()).as_constant();
    const bool match = Rational(count) == fv;
    all_match = all_match && match;

    ojson r;
    r["q"] = q;
    r["count"] = count.get_str();
    r["formula_value"] = fv.get_str();
    r["match"] = match;
    if (!job.no_timing) r["elapsed"] = elapsed;
    results.push_back(r);
    t << "q=" << q << " count=" << count.get_str() << " formula_value=" << fv.get_str()
      << " match=" << (match ? "true" : "false");
    if (!job.no_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", elapsed);
      t << " elapsed=" << buf << "s";
    }
    t << "\n";
  }
  ojson j;
  j["schema"] = 1;
  j["command"] = "oracle";
  j["g"] = job.g;
  j["classes"] = job.classes;
  j["results"] = results;
  std::string text = t.str();
  text.pop_back();
  emit(job, j, text);
  return all_match ? kExitPass : kExitFail;
}

// Quick versions of the module property suites; the full ones live in ctest.
int cmd_selftest(const Job& job) {
  ojson checks = ojson::array();
  std::ostringstream t;
  bool ok_all = true;
  auto run = [&](const std::string& name, const std::function<bool()>& fn) {
    bool ok = false;
    std::string err;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      err = e.what();
    }
    ok_all = ok_all && ok;
    ojson c;
    c["name"] = name;
    c["pass"] = ok;
    if (!err.empty()) c["error"] = err;
    checks.push_back(c);
    t << (ok ? "PASS " : "FAIL ") << name << (err.empty() ? "" : "  (" + err + ")") << "\n";
  };
  auto spec = [](int n, int g, std::vector<Partition> mus) {
    PunctureSpec s;
    s.n = n;
    s.g = g;
    s.mus = std::move(mus);
    return s;
  };

  run("character orthogonality n<=5", [] {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& a : partitions_of(n)) {
        for (const auto& b : partitions_of(n)) {
          Integer sum = 0;
          for (const auto& tau : partitions_of(n)) {
            Integer size = 1;
            for (int i = 2; i <= n; ++i) size *= i;
            size /= z_factor(tau);
            sum += size * sn_character(a, tau) * sn_character(b, tau);
          }
          Integer fact = 1;
          for (int i = 2; i <= n; ++i) fact *= i;
          if (sum != (a == b ? fact : Integer(0))) return false;
        }
      }
    }
    return true;
  });
  run("macdonald qt-orthogonality |lambda|<=4", [] {
    const VarList& QT = qt_ring();
    RatFun q = RatFun::variable(QT, "q"), tt = RatFun::variable(QT, "t");
    for (int n = 1; n <= 4; ++n) {
      for (const auto& a : partitions_of(n)) {
        for (const auto& b : partitions_of(n)) {
          RatFun ip = qt_inner(modified_macdonald(a), modified_macdonald(b));
          RatFun expect = RatFun::constant(QT, a == b ? 1 : 0);
          if (a == b) {
            for (const auto& h : hooks(a)) {
              expect *= (q.pow(h.arm + 1) - tt.pow(h.leg)) * (q.pow(h.arm) - tt.pow(h.leg + 1));
            }
          }
          if (ip != expect) return false;
        }
      }
    }
    return true;
  });
  run("n=1 closed forms g<=3", [&] {
    for (int g = 1; g <= 3; ++g) {
      const std::string e = std::to_string(2 * g - 2);
      PunctureSpec s = spec(1, g, {Partition{1}});
      if (hmu(s) != parse_poly("2(z-w)^" + e, zw_ring())) return false;
      if (mixed_hodge(s) != parse_poly("2(t+q*t^2)^" + e, qt_hodge_ring())) return false;
    }
    return true;
  });
  run("three E paths agree n<=2 g<=2 k<=2", [&] {
    for (int g = 1; g <= 2; ++g) {
      for (const auto& mus : std::vector<std::vector<Partition>>{
               {Partition{1}}, {Partition{1, 1}}, {Partition{1, 1}, Partition{1, 1}}, {Partition{1, 1}, Partition{2}}}) {
        e_polynomial_all_paths(spec(mus[0].size(), g, mus));
      }
    }
    return true;
  });
  run("conjecture properties n=3 g=1", [&] {
    return verify_conjecture(spec(3, 1, {Partition{1, 1, 1}})).all_true() &&
           verify_conjecture(spec(3, 1, {Partition{1, 1, 1}, Partition{2, 1}})).all_true();
  });
  run("oracle n=1 q in {5,7} g in {1,2}", [&] {
    for (long q : {5L, 7L}) {
      for (int g = 1; g <= 2; ++g) {
        Integer want = 2;
        for (int i = 0; i < 2 * g - 2; ++i) want *= q - 1;
        if (brute_count(1, g, {ClassSpec(q, {4})}, q, job.workers) != want) return false;
      }
    }
    return true;
  });

  ojson j;
  j["schema"] = 1;
  j["command"] = "selftest";
  j["checks"] = checks;
  j["pass"] = ok_all;
  std::string text = t.str() + (ok_all ? "selftest: PASS" : "selftest: FAIL");
  emit(job, j, text);
  return ok_all ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed Hodge and E-polynomials of twisted GL_n character varieties"};
  app.require_subcommand(1);
  Job job;

  auto add_common = [&](CLI::App* sub, bool spec_flags) {
    if (spec_flags) {
      sub->add_option("--n", job.n, "rank")->required()->check(CLI::PositiveNumber);
      sub->add_option("--mu", job.mus, "multiplicities of one puncture, e.g. 2,1 (repeat per puncture)")
          ->required();
    }
    sub->add_option("--g", job.g, "genus (>= 1)")->check(CLI::PositiveNumber);
    sub->add_option("--output", job.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--workers", job.workers, "worker threads")->check(CLI::PositiveNumber);
  };

  CLI::App* hmu_cmd = app.add_subcommand("hmu", "the polynomial H_mu(z,w)");
  add_common(hmu_cmd, true);
  CLI::App* epoly_cmd = app.add_subcommand("epoly", "the E-polynomial");
  add_common(epoly_cmd, true);
  epoly_cmd->add_option("--path", job.path, "series_q, series_zw, type_sum or all")
      ->check(CLI::IsMember({"series_q", "series_zw", "type_sum", "all"}));
  CLI::App* mhp_cmd = app.add_subcommand("mhp", "the mixed Hodge polynomial in q, t");
  add_common(mhp_cmd, true);
  CLI::App* verify_cmd = app.add_subcommand("verify", "check the conjectured properties");
  add_common(verify_cmd, true);
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force count over F_q (n <= 2)");
  add_common(oracle_cmd, false);
  oracle_cmd->add_option("--n", job.n, "rank (optional, checked against --class)");
  oracle_cmd->add_option("--q", job.qs, "odd prime (repeatable)")->required();
  oracle_cmd->add_option("--class", job.classes, "eigenvalues of one class, e.g. 2,4 (repeat per puncture)")
      ->required();
  oracle_cmd->add_flag("--no-timing", job.no_timing, "omit elapsed time");
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "quick property suites");
  add_common(selftest_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*hmu_cmd) return cmd_hmu(job);
    if (*epoly_cmd) return cmd_epoly(job);
    if (*mhp_cmd) return cmd_mhp(job);
    if (*verify_cmd) return cmd_verify(job);
    if (*oracle_cmd) return cmd_oracle(job);
    if (*selftest_cmd) return cmd_selftest(job);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotPolynomial& e) {
    std::cerr << "not a polynomial: " << e.residual().to_string() << "\n";
    return kExitFail;
  } catch (const PropertyFailure& e) {
    std::cerr << "property failure: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
