// One pass/fail line per acceptance criterion.  A criterion passes when every case
// passes and it finishes within its time budget.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"

using namespace macbax;
using cli::Family;
using cli::JobSpec;
using cli::Regime;

namespace {

int g_jobs = 1;

struct Tally {
  long cases = 0, failures = 0;
  std::string witness;
  void add(const Report& r, const std::string& where) {
    cases += r.cases;
    if (r.failures && !failures) witness = where + " " + r.name + ": " + r.witness;
    failures += r.failures;
  }
};

JobSpec spec(const std::string& suite, Family f, int rank, int W) {
  JobSpec s;
  s.command = "verify";
  s.suite = suite;
  s.family = f;
  s.rank = rank;
  s.max_weight = W;
  s.jobs = g_jobs;
  return s;
}

std::string where_of(const JobSpec& s) {
  std::string w = s.suite + "/" + cli::family_name(s.family) + " n=" + std::to_string(s.rank);
  if (s.regime == Regime::t_power) w += " k=" + std::to_string(s.k);
  if (s.regime == Regime::kappa) w += " kappa=" + std::to_string(s.kappa);
  return w;
}

// Run a suite, keeping only the cases whose key passes the filter.
void run(Tally& t, const JobSpec& s, const std::function<bool(const std::string&)>& keep = {}) {
  auto cases = cli::build_suite(s);
  if (keep) std::erase_if(cases, [&](const cli::Case& c) { return !keep(c.key); });
  for (const auto& r : cli::run_cases(cases, s.jobs)) t.add(r, where_of(s));
}

JobSpec with_k(JobSpec s, int k) {
  s.regime = Regime::t_power;
  s.k = k;
  return s;
}
JobSpec with_kappa(JobSpec s, long kap) {
  s.regime = Regime::kappa;
  s.kappa = kap;
  return s;
}

const Family kFamilies[] = {Family::macdonald, Family::qwhittaker, Family::jack};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Tally&)> body;
};

std::vector<Criterion> criteria() {
  return {
      {1, "Macdonald orthogonality and norms, n<=4, |lambda|<=5", 120,
       [](Tally& t) {
         for (int n = 1; n <= 4; ++n) run(t, spec("orthogonality", Family::macdonald, n, 5));
       }},
      {2, "Gram-Schmidt equals branching, |lambda|<=6, n<=4", 120,
       [](Tally& t) {
         for (int n = 1; n <= 4; ++n) run(t, spec("branching", Family::macdonald, n, 6));
       }},
      {3, "eigenfunction suites, n<=3, |lambda|<=4", 300,
       [](Tally& t) {
         auto not_commute = [](const std::string& k) { return k != "commute"; };
         for (int n = 1; n <= 3; ++n)
           for (Family f : kFamilies) {
             run(t, spec("eigen", f, n, 4), not_commute);
             run(t, spec("dual-eigen", f, n, 4));
           }
       }},
      {4, "commutativity of M_r and of the dual Toda operators, n=3, degree<=4", 60,
       [](Tally& t) {
         auto only = [](const std::string& k) { return k == "commute"; };
         for (Family f : {Family::macdonald, Family::qwhittaker}) run(t, spec("eigen", f, 3, 4), only);
       }},
      {5, "Pieri rules, m<=3, |lambda|<=4, n<=3, all families", 120,
       [](Tally& t) {
         for (int n = 1; n <= 3; ++n)
           for (Family f : kFamilies) run(t, spec("pieri", f, n, 4));
       }},
      {6, "Cauchy identities through degree 4, (n,m) in {(2,1),(2,2),(3,2)}", 180,
       [](Tally& t) {
         auto pairs = [](const std::string& k) { return k == "(2,1)" || k == "(2,2)" || k == "(3,2)"; };
         for (Family f : kFamilies) {
           JobSpec s = spec("cauchy", f, 3, 0);
           s.max_degree = 4;
           if (f == Family::jack)
             for (long kap : {1L, 2L}) run(t, with_kappa(s, kap), pairs);
           else
             run(t, s, pairs);
         }
       }},
      {7, "Baxter spectral suites", 600,
       [](Tally& t) {
         for (int n = 1; n <= 3; ++n) {
           for (int k = 1; k <= 2; ++k) run(t, with_k(spec("baxter", Family::macdonald, n, 4), k));
           JobSpec d = spec("dual-baxter", Family::macdonald, n, 4);
           d.z_order = 4;
           run(t, d);
           JobSpec qb = spec("baxter", Family::qwhittaker, n, 4);
           qb.z_order = 4;
           run(t, qb);
           JobSpec qd = spec("dual-baxter", Family::qwhittaker, n, n == 3 ? 3 : 4);
           qd.q_order = 6;
           run(t, qd);
           for (long kap = 1; kap <= 3; ++kap) run(t, with_kappa(spec("baxter", Family::jack, n, 4), kap));
           JobSpec jd = spec("dual-baxter", Family::jack, n, 4);
           jd.z_order = 4;
           run(t, jd);
         }
       }},
      {8, "the six Baxter difference equations", 120,
       [](Tally& t) {
         for (int n = 1; n <= 3; ++n) {
           for (int k = 1; k <= 2; ++k) {
             run(t, with_k(spec("baxter-equation", Family::macdonald, n, 3), k));
             JobSpec d = with_k(spec("dual-baxter-equation", Family::macdonald, n, n == 3 ? 2 : 3), k);
             d.z_order = 3;
             run(t, d);
           }
           JobSpec qb = spec("baxter-equation", Family::qwhittaker, n, n == 1 ? 4 : n == 2 ? 3 : 2);
           qb.z_order = n == 3 ? 3 : 4;
           run(t, qb);
           JobSpec qd = spec("dual-baxter-equation", Family::qwhittaker, n, n == 3 ? 2 : 3);
           qd.q_order = n == 3 ? 3 : 4;
           run(t, qd);
           for (long kap = 1; kap <= (n == 3 ? 2 : 3); ++kap)
             run(t, with_kappa(spec("baxter-equation", Family::jack, n, n == 3 ? 3 : 4), kap));
           JobSpec jd = spec("dual-baxter-equation", Family::jack, n, 3);
           jd.z_order = n == 3 ? 3 : 4;
           run(t, jd);
         }
       }},
      {9, "mixed representations, n=3, lambda=(2,1,0)", 180,
       [](Tally& t) {
         for (Family f : kFamilies) {
           JobSpec s = spec("mixed", f, 3, 3);
           s.partition = Partition{2, 1};
           if (f == Family::macdonald) s = with_k(s, 1);
           if (f == Family::qwhittaker) s.q_order = 6;
           if (f == Family::jack) s = with_kappa(s, 1);
           run(t, s);
         }
       }},
      {10, "self-duality, k in {1,2}, n=2, |lambda|,|mu|<=3", 60,
       [](Tally& t) {
         for (int k = 1; k <= 2; ++k) run(t, with_k(spec("duality", Family::macdonald, 2, 3), k));
       }},
      {11, "Gamma toolkit: reflection to q-order 5, Euler pairs for indices <=6", 30,
       [](Tally& t) {
         JobSpec s = spec("gamma", Family::macdonald, 1, 0);
         s.q_order = 5;
         run(t, s);
       }},
      {12, "degenerations: error ratios 2.0 +- 0.2, Jack limit of Macdonald coefficients", 30,
       [](Tally& t) { run(t, spec("limits", Family::jack, 2, 3)); }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  g_jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));
  int failed = 0;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Tally t;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(t);
    } catch (const std::exception& e) {
      t.failures++;
      t.witness = std::string("error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < c.budget_s;
    bool ok = t.failures == 0 && t.cases > 0 && in_time;
    if (!ok) ++failed;
    std::printf("%s  %2d  %s  (%ld cases, %.1fs of %.0fs)", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), t.cases, secs,
                c.budget_s);
    if (t.failures) std::printf("  first failure: %s", t.witness.c_str());
    else if (!in_time) std::printf("  over budget");
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
