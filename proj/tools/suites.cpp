#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "macbax/baxter.hpp"
#include "macbax/jack.hpp"
#include "macbax/macdonald.hpp"
#include "macbax/qwhittaker.hpp"

namespace macbax::cli {

const std::vector<std::string> kSuites = {"orthogonality", "norms",  "eigen",   "dual-eigen",
                                          "pieri",         "cauchy", "baxter",  "dual-baxter",
                                          "baxter-equation", "dual-baxter-equation", "branching",
                                          "mixed",         "duality", "gamma",  "limits"};

namespace {

const RatFunc one(1);

Field field_of(Family f) {
  switch (f) {
    case Family::macdonald: return Field::qt;
    case Family::qwhittaker: return Field::q;
    case Family::jack: return Field::kappa;
  }
  return Field::qt;
}

SymFunc family_P(Family f, const Partition& lam, int n) {
  switch (f) {
    case Family::macdonald: return macdonald_P(lam, n);
    case Family::qwhittaker: return qwhit_P(lam, n);
    case Family::jack: return jack_P(lam, n);
  }
  return SymFunc();
}

// Ask for a flag the suite cannot do without.
void need(bool ok, const std::string& what, const JobSpec& s) {
  if (!ok) throw SpecError("suite " + s.suite + " (" + family_name(s.family) + ") needs " + what);
}

std::string key_of(const Partition& lam) { return lam.to_string(); }

// Partitions the sweep visits: the one given, or all with |lambda| <= W, l <= n.
std::vector<Partition> sweep(const JobSpec& s) {
  if (s.partition) return {*s.partition};
  return partitions_up_to(s.max_weight, s.rank);
}

std::string stages_key(const std::vector<Stage>& eps) {
  std::string r;
  for (Stage e : eps) r += e == Stage::I ? "I" : "II";
  return r.empty() ? "-" : r;
}

std::vector<std::vector<Stage>> all_stage_arrays(int n) {
  std::vector<std::vector<Stage>> out;
  int len = std::max(n - 1, 0);
  for (int mask = 0; mask < (1 << len); ++mask) {
    std::vector<Stage> e(len);
    for (int i = 0; i < len; ++i) e[i] = (mask >> i) & 1 ? Stage::I : Stage::II;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<int> gammas_around(const JobSpec& s, int last, int lo, int hi) {
  if (s.gamma) return {*s.gamma};
  std::vector<int> g;
  for (int x = last + lo; x <= last + hi; ++x) g.push_back(x);
  return g;
}

// A random symmetric polynomial of degree <= D at rank n, fixed seed.
SymFunc random_sym(int n, int D, Field field, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> c(-3, 3);
  RatFunc p = field == Field::kappa ? RatFunc::var(kKappa) : RatFunc::q_pow(1);
  SymFunc f(n, field);
  for (const auto& lam : partitions_up_to(D, n)) f.set(lam, RatFunc(c(rng)) + p * RatFunc(c(rng)));
  return f;
}

// Compare and, on mismatch, name the first monomial where the coefficients differ.
void check_eq(Report& rep, const SymFunc& got, const SymFunc& want, const std::string& label) {
  rep.check(got == want, [&] {
    std::set<Partition> keys;
    for (const auto& [p, c] : got.coeffs()) keys.insert(p);
    for (const auto& [p, c] : want.coeffs()) keys.insert(p);
    for (const auto& p : keys)
      if (got.coeff(p) != want.coeff(p))
        return label + ": m" + p.to_string() + " coefficient " + got.coeff(p).to_string() + ", expected " +
               want.coeff(p).to_string();
    return label + ": rank differs";
  });
}

class Builder {
 public:
  explicit Builder(const JobSpec& s) : s_(s), bump_(s.perturb ? 1 : 0) {}

  std::vector<Case> build() {
    const std::string& x = s_.suite;
    if (x == "orthogonality") orthogonality();
    else if (x == "norms") norms();
    else if (x == "eigen") eigen();
    else if (x == "dual-eigen") dual_eigen();
    else if (x == "pieri") pieri();
    else if (x == "cauchy") cauchy();
    else if (x == "baxter") baxter();
    else if (x == "dual-baxter") dual_baxter();
    else if (x == "baxter-equation") baxter_equation();
    else if (x == "dual-baxter-equation") dual_baxter_equation();
    else if (x == "branching") branching();
    else if (x == "mixed") mixed();
    else if (x == "duality") duality();
    else if (x == "gamma") gamma();
    else if (x == "limits") limits();
    else throw SpecError("unknown suite '" + x + "'");
    return std::move(cases_);
  }

 private:
  const JobSpec s_;
  RatFunc bump_;
  std::vector<Case> cases_;

  Family fam() const { return s_.family; }
  int n() const { return s_.rank; }
  void add(std::string key, std::function<Report()> run) { cases_.push_back({std::move(key), std::move(run)}); }
  // The suites below without an explicit expected value cannot be perturbed.
  void no_perturb() const {
    if (s_.perturb) throw SpecError("--debug-perturb is not supported by suite " + s_.suite + " for " + family_name(fam()));
  }
  SymFunc bumped(const SymFunc& want) const {
    if (!s_.perturb) return want;
    return want + SymFunc::constant(bump_, want.rank(), want.field());
  }
  void symbolic_only() const {
    if (s_.regime != Regime::symbolic) throw SpecError("suite " + s_.suite + " (" + family_name(fam()) + ") is symbolic");
  }

  void orthogonality() {
    symbolic_only();
    for (const auto& lam : sweep(s_)) {
      add(key_of(lam), [this, lam] {
        Report rep;
        int w = lam.weight(), N = std::max({w, n(), 1});
        SymFunc p = family_P(fam(), lam, N);
        for (const auto& mu : partitions_of(w, n())) {
          SymFunc pm = family_P(fam(), mu, N);
          RatFunc v, want;
          switch (fam()) {
            case Family::macdonald:
              v = sp_qt(p, pm);
              want = mu == lam ? one / b_norm(lam) : RatFunc(0);
              break;
            case Family::qwhittaker:
              v = sp_q(p, pm);
              want = mu == lam ? qwhit_norms(lam, N).sp : RatFunc(0);
              break;
            case Family::jack:
              v = sp_kappa(p, pm);
              want = mu == lam ? one / jack_b(lam) : RatFunc(0);
              break;
          }
          rep.check(v == want + bump_, [&] { return "<P" + lam.to_string() + ", P" + mu.to_string() + "> = " + v.to_string() + ", expected " + (want + bump_).to_string(); });
        }
        return rep;
      });
    }
  }

  void norms() {
    switch (fam()) {
      case Family::macdonald: {
        need(s_.regime == Regime::t_power, "--t-spec q^k", s_);
        int k = s_.k;
        for (const auto& lam : sweep(s_))
          add(key_of(lam), [this, lam, k] {
            Report rep;
            SymFunc p = specialize_t(macdonald_P(lam, n()), k);
            RatFunc ct = sp_torus(p, p, {WeightKind::macdonald, k, n()});
            auto loc = torus_norm(lam, n()).at_t_power(k);
            rep.check(loc.order == 0 && loc.lead + bump_ == ct,
                      [&] { return "constant term " + ct.to_string() + ", formula " + (loc.lead + bump_).to_string(); });
            return rep;
          });
        break;
      }
      case Family::qwhittaker: {
        no_perturb();
        symbolic_only();
        need(s_.q_order.has_value(), "--q-order", s_);
        int K = *s_.q_order;
        for (const auto& lam : sweep(s_)) add(key_of(lam), [this, lam, K] { return qwhit_norm_check(lam, n(), K); });
        break;
      }
      case Family::jack: {
        no_perturb();
        need(s_.regime == Regime::kappa, "--kappa", s_);
        long kap = s_.kappa;
        for (const auto& lam : sweep(s_)) add(key_of(lam), [this, lam, kap] { return jack_torus_norm_check(lam, n(), kap); });
        break;
      }
    }
  }

  void eigen() {
    symbolic_only();
    for (const auto& lam : sweep(s_)) {
      add(key_of(lam), [this, lam] {
        Report rep;
        SymFunc p = family_P(fam(), lam, n());
        if (fam() == Family::jack) {
          SymFunc got = sekiguchi_apply(p);
          check_eq(rep, got, bumped(p.scaled(sekiguchi_eigenvalue(lam, n()))), "D(X) P");
          return rep;
        }
        for (int r = 1; r <= n(); ++r) {
          SymFunc got = fam() == Family::macdonald ? apply_macdonald_op(r, p) : apply_toda_dual(r, p);
          RatFunc ev = fam() == Family::macdonald ? macdonald_eigenvalue(lam, r, n()) : toda_dual_eigenvalue(lam, r, n());
          check_eq(rep, got, bumped(p.scaled(ev)), "r=" + std::to_string(r));
        }
        return rep;
      });
    }
    if (fam() == Family::jack || s_.partition) return;
    add("commute", [this] {
      Report rep;
      SymFunc f = random_sym(n(), s_.max_weight, field_of(fam()), 11);
      auto op = [&](int r, const SymFunc& g) {
        return fam() == Family::macdonald ? apply_macdonald_op(r, g) : apply_toda_dual(r, g);
      };
      for (int r = 1; r <= n(); ++r)
        for (int t = r + 1; t <= n(); ++t)
          check_eq(rep, op(r, op(t, f)), bumped(op(t, op(r, f))), "[" + std::to_string(r) + "," + std::to_string(t) + "] != 0");
      return rep;
    });
  }

  void dual_eigen() {
    symbolic_only();
    const int W = s_.partition ? s_.partition->weight() : s_.max_weight;
    // table of P_mu up to weight W + n: every shift lands inside it
    auto table = std::make_shared<PartitionFunction<SymFunc>>();
    for (const auto& mu : partitions_up_to(W + n(), n())) table->emplace(mu.padded(n()), family_P(fam(), mu, n()));
    for (int r = 1; r <= n(); ++r) {
      add("r=" + std::to_string(r), [this, r, table] {
        Report rep;
        PartitionFunction<SymFunc> out;
        switch (fam()) {
          case Family::macdonald: out = apply_dual_op(r, n(), *table); break;
          case Family::qwhittaker: out = apply_toda(r, n(), *table); break;
          case Family::jack: out = apply_jack_dual_conjugated(r, n(), *table); break;
        }
        SymFunc er = elementary(r, n(), field_of(fam()));
        for (const auto& lam : sweep(s_)) {
          auto it = out.find(lam.padded(n()));
          SymFunc got = it == out.end() ? SymFunc(n(), field_of(fam())) : it->second;
          check_eq(rep, got, bumped(er * table->at(lam.padded(n()))), "at " + lam.to_string());
        }
        return rep;
      });
    }
  }

  void pieri() {
    symbolic_only();
    for (const auto& lam : sweep(s_)) {
      add(key_of(lam), [this, lam] {
        Report rep;
        auto lv = lam.padded(n());
        SymFunc p = family_P(fam(), lam, n());
        for (int m = 1; m <= 3; ++m) {
          SymFunc sum(n(), field_of(fam()));
          for (const auto& mu : horizontal_strips_above(lv, m)) {
            RatFunc phi = fam() == Family::macdonald    ? pieri_phi(mu, lv)
                          : fam() == Family::qwhittaker ? qwhit_pieri_phi(mu, lv)
                                                        : jack_pieri_phi(mu, lv);
            sum += family_P(fam(), Partition(mu), n()).scaled(phi);
          }
          // the qW coefficients expand [z^m] prod Gamma_q(z x_i) P (equal to P_(m) P from rank 2)
          SymFunc prod = fam() == Family::macdonald    ? (macdonald_P({m}, n()) * p).scaled(b_norm({m}))
                         : fam() == Family::qwhittaker ? gamma_q_row(m, n()) * p
                                                       : (jack_P({m}, n()) * p).scaled(jack_b({m}));
          check_eq(rep, sum, bumped(prod), "m=" + std::to_string(m));
        }
        return rep;
      });
    }
  }

  void cauchy() {
    need(s_.max_degree.has_value(), "--max-degree", s_);
    int D = *s_.max_degree;
    if (fam() == Family::jack) need(s_.regime == Regime::kappa, "--kappa", s_);
    else symbolic_only();
    for (int n1 = 1; n1 <= n(); ++n1)
      for (int m = 1; m <= n1; ++m)
        add("(" + std::to_string(n1) + "," + std::to_string(m) + ")", [this, n1, m, D] {
          switch (fam()) {
            case Family::macdonald: return cauchy_check(n1, m, D, s_.perturb);
            case Family::qwhittaker: return qwhit_cauchy_check(n1, m, D, s_.perturb);
            case Family::jack: return jack_cauchy_check(n1, m, D, s_.kappa, s_.perturb);
          }
          return Report();
        });
  }

  void baxter() {
    switch (fam()) {
      case Family::macdonald: {
        need(s_.regime == Regime::t_power, "--t-spec q^k", s_);
        int k = s_.k, cap = std::max(8, s_.max_weight);
        for (const auto& lam : sweep(s_))
          add(key_of(lam), [this, lam, k, cap] {
            Report rep;
            SymFunc p = specialize_t(macdonald_P(lam, n()), k);
            for (int g : gammas_around(s_, 0, -1, 1)) {
              SymFunc out = apply_baxter(p, {g, k, cap, 0});
              SymFunc want(n(), Field::q);
              if (lam.padded(n()).back() >= g) {
                auto loc = baxter_eigenvalue(lam, g, n()).at_t_power(k);
                if (!rep.check(loc.order == 0, "eigenvalue singular at t = q^k")) continue;
                want = p.scaled(loc.lead);
              }
              check_eq(rep, out, bumped(want), "gamma=" + std::to_string(g));
            }
            return rep;
          });
        break;
      }
      case Family::qwhittaker: {
        symbolic_only();
        need(s_.z_order.has_value(), "--z-order", s_);
        int M = *s_.z_order;
        for (const auto& lam : sweep(s_))
          add(key_of(lam), [this, lam, M] {
            Report rep;
            SymFunc p = qwhit_P(lam, n());
            auto got = qwhit_baxter_apply(lam, n(), M);
            for (int m = 0; m <= M; ++m)
              check_eq(rep, got.at(m), bumped(gamma_q_row(m, n()) * p), "z^" + std::to_string(m));
            return rep;
          });
        break;
      }
      case Family::jack: {
        need(s_.regime == Regime::kappa, "--kappa", s_);
        long kap = s_.kappa;
        for (const auto& lam : sweep(s_))
          add(key_of(lam), [this, lam, kap] {
            Report rep;
            SymFunc p = at_kappa(jack_P(lam, n()), kap);
            for (int g : gammas_around(s_, 0, -1, 1)) {
              SymFunc out = jack_baxter_apply(p, g, kap);
              SymFunc want = p.scaled(RatFunc(jack_baxter_eigenvalue(lam, g, n(), kap)));
              check_eq(rep, out, bumped(want), "gamma=" + std::to_string(g));
            }
            return rep;
          });
        break;
      }
    }
  }

  void dual_baxter() {
    switch (fam()) {
      case Family::macdonald:
      case Family::jack: {
        symbolic_only();
        need(s_.z_order.has_value(), "--z-order", s_);
        int M = *s_.z_order;
        for (const auto& lam : sweep(s_))
          add(key_of(lam), [this, lam, M] {
            Report rep;
            bool mac = fam() == Family::macdonald;
            SymFunc p = family_P(fam(), lam, n());
            auto got = mac ? dual_baxter_apply(lam, n(), M) : jack_dual_baxter_apply(lam, n(), M);
            for (int m = 0; m <= M; ++m) {
              SymFunc row = mac ? gamma_row(m, n()) : gamma_kappa_row(m, n());
              check_eq(rep, got.at(m), bumped(row * p), "z^" + std::to_string(m));
            }
            return rep;
          });
        break;
      }
      case Family::qwhittaker: {
        symbolic_only();
        need(s_.q_order.has_value(), "--q-order", s_);
        int K = *s_.q_order;
        for (const auto& lam : sweep(s_))
          add(key_of(lam), [this, lam, K] {
            Report rep;
            SymFunc p = qwhit_P(lam, n());
            for (int g : gammas_around(s_, lam.padded(n()).back(), -2, 1)) {
              SymFunc got = qwhit_dual_baxter_apply(p, g, K);
              SymFunc want = truncate_q(p.scaled(qwhit_dual_baxter_eigenvalue(lam, g, n())), K);
              check_eq(rep, got, bumped(want), "gamma=" + std::to_string(g));
            }
            return rep;
          });
        break;
      }
    }
  }

  void baxter_equation() {
    no_perturb();
    switch (fam()) {
      case Family::macdonald: {
        need(s_.regime == Regime::t_power, "--t-spec q^k", s_);
        for (const auto& lam : sweep(s_))
          add(key_of(lam), [this, lam] {
            Report rep;
            for (int g : gammas_around(s_, 0, -1, 1)) rep.absorb(baxter_equation_check(lam, g, s_.k, n()));
            return rep;
          });
        break;
      }
      case Family::qwhittaker: {
        symbolic_only();
        need(s_.z_order.has_value(), "--z-order", s_);
        if (s_.partition) throw SpecError("suite baxter-equation (qwhittaker) sweeps all partitions up to --max-weight");
        add("W=" + std::to_string(s_.max_weight), [this] { return qwhit_baxter_equation_check(n(), s_.max_weight, *s_.z_order); });
        break;
      }
      case Family::jack: {
        need(s_.regime == Regime::kappa, "--kappa", s_);
        for (const auto& lam : sweep(s_))
          add(key_of(lam), [this, lam] {
            Report rep;
            for (int g : gammas_around(s_, lam.padded(n()).back(), -1, 1))
              rep.absorb(jack_baxter_equation_check(lam, n(), g, s_.kappa));
            return rep;
          });
        break;
      }
    }
  }

  void dual_baxter_equation() {
    no_perturb();
    switch (fam()) {
      case Family::macdonald: {
        need(s_.regime == Regime::t_power, "--t-spec q^k", s_);
        need(s_.z_order.has_value(), "--z-order", s_);
        for (const auto& lam : sweep(s_))
          add(key_of(lam), [this, lam] { return dual_baxter_equation_check(lam, n(), s_.k, *s_.z_order); });
        break;
      }
      case Family::qwhittaker: {
        symbolic_only();
        need(s_.q_order.has_value(), "--q-order", s_);
        for (const auto& lam : sweep(s_))
          add(key_of(lam), [this, lam] {
            Report rep;
            for (int g : gammas_around(s_, lam.padded(n()).back(), -2, 1))
              rep.absorb(qwhit_dual_baxter_equation_check(lam, n(), g, *s_.q_order));
            return rep;
          });
        break;
      }
      case Family::jack: {
        symbolic_only();
        need(s_.z_order.has_value(), "--z-order", s_);
        for (const auto& lam : sweep(s_))
          add(key_of(lam), [this, lam] { return jack_dual_baxter_equation_check(lam, n(), *s_.z_order); });
        break;
      }
    }
  }

  void branching() {
    if (fam() != Family::jack) symbolic_only();
    for (const auto& lam : sweep(s_)) {
      add(key_of(lam), [this, lam] {
        Report rep;
        switch (fam()) {
          case Family::macdonald:
            check_eq(rep, macdonald_branch(lam, n()).poly, bumped(macdonald_gs(lam, n()).poly), "branching vs Gram-Schmidt");
            break;
          case Family::qwhittaker: {
            SymFunc p = qwhit_P(lam, n());
            check_eq(rep, qwhit_recursion(lam, n(), RecursionMode::sum, 0), bumped(p), "sum recursion");
            if (s_.q_order)
              check_eq(rep, qwhit_recursion(lam, n(), RecursionMode::torus, *s_.q_order), bumped(truncate_q(p, *s_.q_order)),
                        "torus recursion");
            break;
          }
          case Family::jack: {
            SymFunc p = jack_P(lam, n());
            check_eq(rep, jack_recursion(lam, n(), JackRecursionMode::sum), bumped(p), "sum recursion");
            if (s_.regime == Regime::kappa)
              check_eq(rep, jack_recursion(lam, n(), JackRecursionMode::integral, s_.kappa), bumped(at_kappa(p, s_.kappa)),
                        "integral recursion");
            break;
          }
        }
        return rep;
      });
    }
  }

  void mixed() {
    switch (fam()) {
      case Family::macdonald: need(s_.regime == Regime::t_power, "--t-spec q^k", s_); break;
      case Family::qwhittaker: symbolic_only(); need(s_.q_order.has_value(), "--q-order", s_); break;
      case Family::jack: need(s_.regime == Regime::kappa, "--kappa", s_); break;
    }
    for (const auto& lam : sweep(s_))
      for (const auto& eps : all_stage_arrays(n()))
        add(key_of(lam) + "/" + stages_key(eps), [this, lam, eps] {
          Report rep;
          SymFunc got, want;
          switch (fam()) {
            case Family::macdonald:
              got = mixed_representation(lam, n(), eps, s_.k);
              want = specialize_t(macdonald_P(lam, n()), s_.k);
              break;
            case Family::qwhittaker:
              got = truncate_q(qwhit_mixed(lam, n(), eps, *s_.q_order), *s_.q_order);
              want = truncate_q(qwhit_P(lam, n()), *s_.q_order);
              break;
            case Family::jack:
              got = jack_mixed(lam, n(), eps, s_.kappa);
              want = at_kappa(jack_P(lam, n()), s_.kappa);
              break;
          }
          check_eq(rep, got, bumped(want), "stages " + stages_key(eps));
          return rep;
        });
  }

  void duality() {
    no_perturb();
    if (fam() != Family::macdonald) throw SpecError("suite duality is defined for the macdonald family");
    need(s_.regime == Regime::t_power, "--t-spec q^k", s_);
    auto lams = sweep(s_);
    for (const auto& lam : lams)
      add(key_of(lam), [this, lam] {
        Report rep;
        for (const auto& mu : partitions_up_to(s_.max_weight, n())) rep.absorb(self_duality_check(lam, mu, s_.k, n()));
        return rep;
      });
  }

  void gamma() {
    need(s_.q_order.has_value(), "--q-order", s_);
    int K = *s_.q_order;
    add("reflection", [this, K] { return reflection_check(K, 3, s_.perturb); });
    add("euler", [this, K] { return euler_check(6, K, s_.perturb); });
  }

  void limits() {
    no_perturb();
    std::vector<long> kaps = {1, 2, 3};
    if (s_.regime == Regime::kappa) kaps = {s_.kappa};
    else if (s_.regime != Regime::symbolic) throw SpecError("suite limits takes --kappa or no parameter flag");
    for (long kap : kaps) {
      add("gamma/kappa=" + std::to_string(kap), [kap] {
        auto r = jack_limit_check(0.5, static_cast<int>(kap), {1e-2, 5e-3, 2.5e-3, 1.25e-3});
        Report rep = r.report;
        for (double x : r.ratios) {
          std::ostringstream os;
          os << "error ratio " << x;
          rep.check(std::abs(x - 2.0) <= 0.2, os.str());
        }
        return rep;
      });
      add("coefficients/kappa=" + std::to_string(kap), [this, kap] {
        auto r = jack_macdonald_limit_check(s_.max_weight, n(), kap, 1e-4, 1e-3);
        Report rep = r.report;
        std::ostringstream os;
        os << "max relative error " << r.max_rel_error;
        rep.check(r.max_rel_error < 1e-3, os.str());
        return rep;
      });
    }
  }
};

}  // namespace

std::vector<Case> build_suite(const JobSpec& spec) {
  // the closures point into the builder, which must outlive them
  auto b = std::make_shared<Builder>(spec);
  auto cases = b->build();
  for (auto& c : cases) c.run = [b, f = std::move(c.run)] { return f(); };
  return cases;
}

std::vector<Report> run_cases(const std::vector<Case>& cases, int jobs) {
  std::vector<Report> out(cases.size());
  auto run_one = [&](std::size_t i) {
    try {
      out[i] = cases[i].run();
    } catch (const std::exception& e) {
      out[i] = Report();
      out[i].check(false, std::string("error: ") + e.what());
    }
    out[i].name = cases[i].key;
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(cases.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) run_one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < cases.size();) run_one(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace macbax::cli
