// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lacver/harness.hpp"
#include "lacver/identities.hpp"
#include "lacver/specfun.hpp"

#ifndef LACVER_CLI_PATH
#error "LACVER_CLI_PATH must name the lacver executable"
#endif

namespace {

using namespace lacver;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

bool is_egf(IdentityId id) { return descriptor(id).kind == GeneratingKind::exponential; }

ParamGrid base_grid(IdentityId id) {
  ParamGrid g;
  g.x_values = {0.25, 0.5, 1.0, 2.0, 4.0};
  if (is_egf(id) || id == IdentityId::eq12) {
    g.x_values.push_back(-1.0);
    g.x_values.push_back(-2.0);
  }
  g.t_values = {0.05, 0.1, 0.2, 0.4};
  g.alpha_values = std::vector<double>{0.0, 1.0, 2.5};
  g.k_values = std::vector<int>{0, 1, 3};
  g.m_values = std::vector<int>{0, 1, 3};
  return g;
}

void check_records(const std::vector<VerificationRecord>& recs, Outcome& out) {
  for (const auto& r : recs) {
    if (r.pass && r.lhs.terms_used <= 400 && r.rhs.terms_used <= 400) continue;
    std::ostringstream os;
    os << to_string(r.id) << " x=" << r.params.x << " t=" << r.params.t;
    if (r.error) {
      os << " error: " << *r.error;
    } else {
      os << " rel_err=" << r.rel_err << " converged=" << r.lhs.converged << '/'
         << r.rhs.converged;
    }
    out.fail(os.str());
  }
}

Outcome criterion1() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::size_t count = 0;
  for (IdentityId id : kAllIdentities) {
    const auto recs = sweep(id, base_grid(id), 1e-8);
    count += recs.size();
    check_records(recs, out);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 10.0) out.fail("runtime " + std::to_string(secs) + " s");
  if (out.ok) {
    std::ostringstream os;
    os << count << " records, " << secs << " s";
    out.detail = os.str();
  }
  return out;
}

Outcome criterion2() {
  Outcome out;
  std::size_t count = 0;
  for (IdentityId id : kAllIdentities) {
    if (!is_egf(id)) continue;
    ParamGrid g = base_grid(id);
    g.t_values = {1.0, 2.0};
    const auto recs = sweep(id, g, 1e-8);
    count += recs.size();
    check_records(recs, out);
  }
  if (out.ok) out.detail = std::to_string(count) + " records";
  return out;
}

Outcome criterion3() {
  Outcome out;
  std::mt19937_64 rng(0x1a9e77e);
  std::uniform_real_distribution<double> alpha_dist(-5.0, 5.0);
  std::uniform_real_distribution<double> x_dist(-10.0, 10.0);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const double alpha = alpha_dist(rng);
    const double x = x_dist(rng);
    for (int n = 0; n <= 30; ++n) {
      const double ref = laguerre_sum(n, alpha, x);
      const double err = std::abs(laguerre(n, alpha, x) - ref) / std::max(1.0, std::abs(ref));
      worst = std::max(worst, err);
      if (err > 1e-10) {
        std::ostringstream os;
        os << "n=" << n << " alpha=" << alpha << " x=" << x << " rel_err=" << err;
        out.fail(os.str());
      }
    }
  }
  if (out.ok) {
    std::ostringstream os;
    os << "worst rel_err " << worst;
    out.detail = os.str();
  }
  return out;
}

Outcome criterion4() {
  Outcome out;
  std::size_t count = 0;
  for (const auto& r : cross_checks()) {
    // The Taylor records belong to criterion 5.
    if (r.check.find("coefficient") != std::string::npos) continue;
    ++count;
    if (!r.pass) out.fail(r.check + " x=" + std::to_string(r.params.x) + " t=" +
                          std::to_string(r.params.t) + " rel_err=" + std::to_string(r.rel_err));
  }
  if (count != 4 * reduction_points().size()) {
    out.fail("expected " + std::to_string(4 * reduction_points().size()) + " reduction records, got " +
             std::to_string(count));
  }
  if (reduction_points().size() != 10) out.fail("reduction sample is not 10 points");
  if (out.ok) out.detail = std::to_string(count) + " checks at 10 points";
  return out;
}

Outcome criterion5() {
  Outcome out;
  double worst = 0.0;
  for (double alpha : {0.0, 1.0, 2.5}) {
    for (double x : {0.5, 1.0, 3.0}) {
      const auto c = eq12_taylor_coefficients(x, alpha, 4);
      for (int n = 0; n < 4; ++n) {
        const double ref = laguerre_sum(2 * n, alpha - 2.0 * n, x);
        const double err = std::abs(c[n] - ref) / std::max(1.0, std::abs(ref));
        worst = std::max(worst, err);
        if (err > 1e-8) {
          std::ostringstream os;
          os << "alpha=" << alpha << " x=" << x << " n=" << n << " rel_err=" << err;
          out.fail(os.str());
        }
      }
      if (alpha == 0.0) {
        const double exact = x * x / 2.0;
        if (laguerre_sum(2, -2.0, x) != exact) out.fail("L_2^(-2)(x) != x^2/2 at x=" + std::to_string(x));
        if (std::abs(c[1] - exact) > 1e-8 * std::max(1.0, exact)) {
          out.fail("t^1 coefficient at alpha=0 is not x^2/2");
        }
      }
    }
  }
  if (out.ok) {
    std::ostringstream os;
    os << "36 coefficients, worst rel_err " << worst;
    out.detail = os.str();
  }
  return out;
}

Outcome criterion6() {
  Outcome out;
  for (double x : {-2.0, 0.0, 0.5, 3.0}) {
    if (p2(0, x, 0.0) != 6.0) out.fail("p2(0;x,0) != 6");
    if (p4(0, x, 0.0) != 720.0) out.fail("p4(0;x,0) != 720");
    if (q3(0, x, 0.0) != 24.0) out.fail("q3(0;x,0) != 24");
    for (IdentityId id : {IdentityId::eq2, IdentityId::eq3, IdentityId::eq6}) {
      const EvalParams p{x, 0.0, {}, {}, {}};
      const double rhs = sum_adaptive(rhs_terms(id, p), TruncationPolicy{}).value;
      if (std::abs(rhs - 1.0) > 1e-14) {
        out.fail(to_string(id) + " RHS at t=0 is " + std::to_string(rhs));
      }
    }
  }
  if (out.ok) out.detail = "p2/p4/q3 constants exact, t=0 RHS of eq2/eq3/eq6 equal 1";
  return out;
}

struct Run {
  int code = -1;
  std::string out;
};

Run shell(const std::string& args) {
  const std::string cmd = std::string("\"") + LACVER_CLI_PATH + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome criterion7() {
  Outcome out;
  struct Case {
    const char* args;
    int code;
  };
  const std::vector<Case> cases = {
      {"list", 0},
      {"list --format json", 0},
      {"verify --id eq1 --x 1 --t 0.3", 0},
      {"verify --id eq8 --x 1 --t 0.2", 2},
      {"verify --id eq10 --x 2 --t 0.999 --max-terms 50", 1},
      {"verify --id eq8 --x 1 --t 1.2 --m 1", 2},
      {"sweep --id eq12 --x-grid 0:0:1 --t-grid 0:0:1", 0},
      {"sweep --id eq9 --x-grid 1:1:1 --t-grid 0.1:0.1:1", 2},
      {"sweep --id eq1 --x-grid 1:2 --t-grid 0:1:2", 2},
      {"terms --id eq1 --x 0 --t 0.5 --side rhs", 0},
      {"bogus", 2},
  };
  for (const auto& c : cases) {
    const Run r = shell(c.args);
    if (r.code != c.code) {
      out.fail(std::string(c.args) + " -> exit " + std::to_string(r.code) + ", want " +
               std::to_string(c.code));
    }
  }

  const auto dir = std::filesystem::temp_directory_path() / "lacver_acceptance";
  std::filesystem::create_directories(dir);
  const std::string grid =
      "sweep --id all --x-grid 0.25:4:5 --t-grid 0.05:0.45:5 --alpha-grid 0:2.5:3 "
      "--k-set 0,1,3 --m-set 0,1,3";
  for (const char* ext : {"csv", "json"}) {
    std::string bodies[2];
    for (int i = 0; i < 2; ++i) {
      const auto path = dir / ("report" + std::to_string(i) + "." + ext);
      const Run r = shell(grid + " --out \"" + path.string() + "\"");
      if (r.code != 0) out.fail(std::string(ext) + " sweep exit " + std::to_string(r.code));
      bodies[i] = slurp(path);
    }
    if (bodies[0].empty() || bodies[0] != bodies[1]) {
      out.fail(std::string(ext) + " output differs between runs");
    }
    if (std::string(ext) == "csv" &&
        bodies[0].rfind("identity,x,t,alpha,k,m,lhs,rhs,abs_err,rel_err,lhs_terms,rhs_terms,pass\n",
                        0) != 0) {
      out.fail("csv header mismatch");
    }
    if (std::string(ext) == "json") {
      try {
        const auto doc = nlohmann::ordered_json::parse(bodies[0]);
        if (doc.dump(2) + "\n" != bodies[0]) out.fail("json does not round-trip");
      } catch (const std::exception& e) {
        out.fail(std::string("json parse: ") + e.what());
      }
    }
  }
  // Same bytes on stdout too.
  const Run a = shell(grid + " --format csv");
  const Run b = shell(grid + " --format csv");
  if (a.code != 0 || a.out != b.out) out.fail("stdout csv differs between runs");
  std::filesystem::remove_all(dir);

  if (out.ok) out.detail = std::to_string(cases.size()) + " exit-code cases, csv/json byte-stable";
  return out;
}

Outcome criterion8() {
  Outcome out;
  TruncationPolicy policy;
  policy.max_terms = 50;
  const VerificationRecord r =
      verify(IdentityId::eq10, EvalParams{2.0, 0.999, {}, {}, {}}, kDefaultVerifyTol, policy);
  if (r.pass) out.fail("reported PASS");
  if (r.lhs.converged && r.rhs.converged) out.fail("reported converged=true on both sides");
  if (out.ok) {
    out.detail = std::string("FAIL with converged=") + (r.lhs.converged ? "true" : "false") +
                 "/" + (r.rhs.converged ? "true" : "false") + " (lhs/rhs)";
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"full identity sweep", criterion1},
      {"EGF extended t", criterion2},
      {"Laguerre oracle equivalence", criterion3},
      {"reduction suite", criterion4},
      {"eq12 Taylor coefficients", criterion5},
      {"coefficient polynomials", criterion6},
      {"CLI contract", criterion7},
      {"non-convergence honesty", criterion8},
  };
  int failures = 0;
  int index = 1;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << index++ << ": " << c.name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ')';
    std::cout << '\n';
    if (!o.ok) ++failures;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
