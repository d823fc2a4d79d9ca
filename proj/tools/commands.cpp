#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "macbax/baxter.hpp"
#include "macbax/jack.hpp"
#include "macbax/macdonald.hpp"
#include "macbax/qwhittaker.hpp"

namespace macbax::cli {

namespace {

const RatFunc one(1);

SymFunc family_P(Family f, const Partition& lam, int n) {
  switch (f) {
    case Family::macdonald: return macdonald_P(lam, n);
    case Family::qwhittaker: return qwhit_P(lam, n);
    case Family::jack: return jack_P(lam, n);
  }
  return SymFunc();
}

// Parameter flags as they apply to the family; rejects combinations that do not.
void check_regime(const JobSpec& s) {
  if (s.regime == Regime::t_power && s.family != Family::macdonald)
    throw SpecError("--t-spec applies to the macdonald family only");
  if (s.regime == Regime::kappa && s.family != Family::jack) throw SpecError("--kappa applies to the jack family only");
}

// P_lambda in the requested regime.
SymFunc specialized_P(const JobSpec& s, const Partition& lam) {
  SymFunc p = family_P(s.family, lam, s.rank);
  if (s.regime == Regime::t_power) return specialize_t(p, s.k);
  if (s.regime == Regime::kappa) return at_kappa(p, s.kappa);
  return p;
}

RatFunc specialized(const JobSpec& s, const RatFunc& c) {
  if (s.regime == Regime::t_power) return specialize_t(c, s.k);
  if (s.regime == Regime::kappa) return RatFunc(at_kappa(c, s.kappa));
  return c;
}

Partition require_partition(const JobSpec& s) {
  if (!s.partition) throw SpecError(s.command + " needs --partition");
  return *s.partition;
}

std::vector<Partition> table_range(const JobSpec& s) {
  if (s.partition) return {*s.partition};
  return partitions_up_to(s.max_weight, s.rank);
}

json params_of(const JobSpec& s) {
  json p;
  p["family"] = family_name(s.family);
  p["rank"] = s.rank;
  if (s.partition) p["partition"] = s.partition->parts();
  switch (s.regime) {
    case Regime::symbolic: p["regime"] = "symbolic"; break;
    case Regime::t_power: p["regime"] = "t=q^" + std::to_string(s.k); break;
    case Regime::kappa: p["regime"] = "kappa=" + std::to_string(s.kappa); break;
  }
  if (s.gamma) p["gamma"] = *s.gamma;
  if (s.q_order) p["q_order"] = *s.q_order;
  if (s.z_order) p["z_order"] = *s.z_order;
  if (s.max_degree) p["max_degree"] = *s.max_degree;
  p["max_weight"] = s.max_weight;
  if (s.perturb) p["debug_perturb"] = true;
  return p;
}

json witness_value(const LocalValue& v) {
  json j;
  j["order"] = v.order;
  j["lead"] = encode_coeff(v.lead);
  return j;
}

}  // namespace

int cmd_expand(const JobSpec& s, json& doc) {
  check_regime(s);
  Partition lam = require_partition(s);
  SymFunc p = specialized_P(s, lam);
  doc["poly"] = encode_poly(p);
  doc["terms"] = p.coeffs().size();
  return 0;
}

int cmd_table(const JobSpec& s, json& doc) {
  check_regime(s);
  json rows = json::array();
  const int n = s.rank;
  if (s.kind == "eigen" && s.family != Family::jack) {
    // one row per (lambda, r)
    for (const auto& lam : table_range(s))
      for (int r = 1; r <= n; ++r) {
        RatFunc ev = s.family == Family::macdonald ? macdonald_eigenvalue(lam, r, n) : toda_dual_eigenvalue(lam, r, n);
        json row;
        row["partition"] = lam.parts();
        row["r"] = r;
        row["eigenvalue"] = encode_coeff(specialized(s, ev));
        rows.push_back(std::move(row));
      }
  } else if (s.kind == "sekiguchi" || (s.kind == "eigen" && s.family == Family::jack)) {
    if (s.family != Family::jack) throw SpecError("--kind sekiguchi needs --family jack");
    for (const auto& lam : table_range(s)) {
      json row;
      row["partition"] = lam.parts();
      RatFunc ev = sekiguchi_eigenvalue(lam, n);
      if (s.regime == Regime::kappa) {
        // kappa -> integer, X kept
        RatFunc acc;
        for (const auto& [e, c] : ev.num().coeffs_in(kSpec))
          acc += RatFunc(at_kappa(RatFunc(c), s.kappa)) * RatFunc::var(kSpec, e);
        ev = acc;
      }
      row["eigenvalue"] = encode_coeff(ev);
      rows.push_back(std::move(row));
    }
  } else if (s.kind == "baxter") {
    if (!s.gamma) throw SpecError("table --kind baxter needs --gamma");
    int g = *s.gamma;
    for (const auto& lam : table_range(s)) {
      json row;
      row["partition"] = lam.parts();
      row["gamma"] = g;
      switch (s.family) {
        case Family::macdonald: {
          auto L = baxter_eigenvalue(lam, g, n);
          if (s.regime == Regime::t_power) {
            row["L"] = witness_value(L.at_t_power(s.k));
          } else {
            auto red = L.reduce();
            if (!red.rational()) throw SpecError("L is not rational for " + lam.to_string() + "; pass --t-spec");
            row["L"] = encode_coeff(red.scalar);
          }
          break;
        }
        case Family::qwhittaker:
          row["L"] = encode_coeff(qwhit_dual_baxter_eigenvalue(lam, g, n));
          break;
        case Family::jack:
          if (s.regime != Regime::kappa) throw SpecError("jack Baxter table needs --kappa");
          row["L"] = encode_coeff(RatFunc(jack_baxter_eigenvalue(lam, g, n, s.kappa)));
          break;
      }
      rows.push_back(std::move(row));
    }
  } else {
    throw SpecError("unknown table kind '" + s.kind + "'");
  }
  doc["kind"] = s.kind;
  doc["rows"] = std::move(rows);
  return 0;
}

int cmd_verify(const JobSpec& s, json& doc) {
  if (s.suite.empty()) throw SpecError("verify needs --suite");
  check_regime(s);
  auto cases = build_suite(s);
  auto reports = run_cases(cases, s.jobs);
  json results = json::array();
  long total = 0, failed = 0;
  std::string witness;
  for (const auto& r : reports) {
    json c;
    c["key"] = r.name;
    c["status"] = r.pass() ? "pass" : "fail";
    c["cases"] = r.cases;
    c["failures"] = r.failures;
    if (!r.pass()) {
      c["witness"] = r.witness;
      if (witness.empty()) witness = r.name + ": " + r.witness;
    }
    total += r.cases;
    failed += r.failures;
    results.push_back(std::move(c));
  }
  doc["suite"] = s.suite;
  doc["status"] = failed == 0 ? "pass" : "fail";
  doc["cases"] = total;
  doc["failures"] = failed;
  if (failed) doc["witness"] = witness;
  doc["results"] = std::move(results);
  return failed == 0 ? 0 : 1;
}

int cmd_baxter(const JobSpec& s, json& doc) {
  check_regime(s);
  Partition lam = require_partition(s);
  const int n = s.rank;
  bool match = true;
  if (!s.dual) {
    switch (s.family) {
      case Family::macdonald: {
        if (s.regime != Regime::t_power) throw SpecError("macdonald baxter needs --t-spec");
        if (!s.gamma) throw SpecError("baxter needs --gamma");
        SymFunc p = specialize_t(macdonald_P(lam, n), s.k);
        SymFunc out = apply_baxter(p, {*s.gamma, s.k, std::max(8, lam.weight()), 0});
        SymFunc want(n, Field::q);
        if (lam.padded(n).back() >= *s.gamma) {
          auto loc = baxter_eigenvalue(lam, *s.gamma, n).at_t_power(s.k);
          doc["eigenvalue"] = witness_value(loc);
          if (loc.order == 0) want = p.scaled(loc.lead);
          else match = false;
        } else {
          doc["eigenvalue"] = encode_coeff(RatFunc(0));
        }
        doc["result"] = encode_poly(out);
        match = match && out == want;
        break;
      }
      case Family::jack: {
        if (s.regime != Regime::kappa) throw SpecError("jack baxter needs --kappa");
        if (!s.gamma) throw SpecError("baxter needs --gamma");
        SymFunc p = at_kappa(jack_P(lam, n), s.kappa);
        SymFunc out = jack_baxter_apply(p, *s.gamma, s.kappa);
        RatFunc ev(jack_baxter_eigenvalue(lam, *s.gamma, n, s.kappa));
        doc["eigenvalue"] = encode_coeff(ev);
        doc["result"] = encode_poly(out);
        match = out == p.scaled(ev);
        break;
      }
      case Family::qwhittaker: {
        if (!s.z_order) throw SpecError("qwhittaker baxter needs --z-order");
        auto got = qwhit_baxter_apply(lam, n, *s.z_order);
        SymFunc p = qwhit_P(lam, n);
        json zs = json::array();
        for (int m = 0; m <= *s.z_order; ++m) {
          zs.push_back(encode_poly(got.at(m)));
          match = match && got.at(m) == gamma_q_row(m, n) * p;
        }
        doc["z_coefficients"] = std::move(zs);
        break;
      }
    }
  } else {
    switch (s.family) {
      case Family::macdonald:
      case Family::jack: {
        if (s.regime != Regime::symbolic) throw SpecError("the dual Baxter operator is symbolic");
        if (!s.z_order) throw SpecError("dual baxter needs --z-order");
        bool mac = s.family == Family::macdonald;
        auto got = mac ? dual_baxter_apply(lam, n, *s.z_order) : jack_dual_baxter_apply(lam, n, *s.z_order);
        SymFunc p = family_P(s.family, lam, n);
        json zs = json::array();
        for (int m = 0; m <= *s.z_order; ++m) {
          zs.push_back(encode_poly(got.at(m)));
          match = match && got.at(m) == (mac ? gamma_row(m, n) : gamma_kappa_row(m, n)) * p;
        }
        doc["z_coefficients"] = std::move(zs);
        break;
      }
      case Family::qwhittaker: {
        if (!s.q_order) throw SpecError("qwhittaker dual baxter needs --q-order");
        if (!s.gamma) throw SpecError("baxter needs --gamma");
        SymFunc p = qwhit_P(lam, n);
        SymFunc out = qwhit_dual_baxter_apply(p, *s.gamma, *s.q_order);
        RatFunc ev = qwhit_dual_baxter_eigenvalue(lam, *s.gamma, n);
        doc["eigenvalue"] = encode_coeff(ev);
        doc["result"] = encode_poly(out);
        match = out == truncate_q(p.scaled(ev), *s.q_order);
        break;
      }
    }
  }
  doc["match"] = match;
  return match ? 0 : 1;
}

namespace {

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw SpecError("empty entry in --partition");
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw SpecError("bad entry '" + item + "' in --partition");
    parts.push_back(v);
  }
  if (!Partition::is_partition(parts)) throw SpecError("--partition " + text + " is not a partition");
  return Partition(parts);
}

void validate(JobSpec& s, const std::string& partition_text, const std::string& t_spec, bool kappa_given, bool symbolic) {
  if (!partition_text.empty()) s.partition = parse_partition(partition_text);
  if (s.rank < 1 || s.rank > 6) throw SpecError("--rank must lie in 1..6");
  if (s.partition && s.partition->length() > s.rank) throw SpecError("partition longer than --rank");
  if (s.max_weight < 0 || s.max_weight > 8) throw SpecError("--max-weight must lie in 0..8");
  if (s.jobs < 1) throw SpecError("--jobs must be positive");
  if (s.q_order && (*s.q_order < 0 || *s.q_order > 40)) throw SpecError("--q-order must lie in 0..40");
  if (s.z_order && (*s.z_order < 0 || *s.z_order > 12)) throw SpecError("--z-order must lie in 0..12");
  if (s.max_degree && (*s.max_degree < 0 || *s.max_degree > 10)) throw SpecError("--max-degree must lie in 0..10");
  int chosen = !t_spec.empty() + kappa_given + symbolic;
  if (chosen > 1) throw SpecError("--t-spec, --kappa and --symbolic are exclusive");
  if (!t_spec.empty()) {
    std::smatch m;
    static const std::regex re(R"(q\^(-?\d+))");
    if (!std::regex_match(t_spec, m, re)) throw SpecError("--t-spec must read q^k");
    s.regime = Regime::t_power;
    s.k = std::stoi(m[1]);
    if (s.k < 1 || s.k > 4) throw SpecError("--t-spec needs 1 <= k <= 4");
  }
  if (kappa_given) {
    if (s.kappa < 1 || s.kappa > 6) throw SpecError("--kappa needs an integer in 1..6");
    s.regime = Regime::kappa;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"macbax: Macdonald, q-Whittaker and Jack polynomials with their Baxter operators"};
  app.require_subcommand(1);
  JobSpec s;
  std::string family = "macdonald", partition_text, t_spec;
  bool symbolic = false;
  std::vector<CLI::Option*> kappa_opts;

  auto common = [&](CLI::App* c) {
    c->add_option("--family", family, "macdonald | qwhittaker | jack");
    c->add_option("--partition", partition_text, "comma separated parts, e.g. 2,1");
    c->add_option("--rank", s.rank, "number of variables n");
    c->add_option("--t-spec", t_spec, "t = q^k");
    kappa_opts.push_back(c->add_option("--kappa", s.kappa, "integer kappa"));
    c->add_flag("--symbolic", symbolic, "symbolic parameters (default)");
    c->add_option("--gamma", s.gamma, "Baxter parameter");
    c->add_option("--q-order", s.q_order, "q-series truncation K");
    c->add_option("--z-order", s.z_order, "z-series truncation M");
    c->add_option("--max-degree", s.max_degree, "degree truncation D");
    c->add_option("--max-weight", s.max_weight, "sweep partitions up to this weight");
    c->add_option("--jobs", s.jobs, "worker threads");
    c->add_option("--out", s.out, "write the JSON document here instead of stdout");
  };
  auto* expand = app.add_subcommand("expand", "expand P_lambda in the monomial basis");
  auto* table = app.add_subcommand("table", "eigenvalue tables");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  auto* baxter = app.add_subcommand("baxter", "apply a Baxter operator to P_lambda");
  for (auto* c : {expand, table, verify, baxter}) common(c);
  table->add_option("--kind", s.kind, "eigen | sekiguchi | baxter");
  verify->add_option("--suite", s.suite, "suite name")->check(CLI::IsMember(kSuites));
  verify->add_flag("--debug-perturb", s.perturb, "perturb expected values (negative control)");
  baxter->add_flag("--dual", s.dual, "the dual operator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  json doc;
  int code = 0;
  auto t0 = std::chrono::steady_clock::now();
  try {
    s.family = parse_family(family);
    bool kappa_given = std::any_of(kappa_opts.begin(), kappa_opts.end(), [](CLI::Option* o) { return o->count() > 0; });
    validate(s, partition_text, t_spec, kappa_given, symbolic);
    s.command = app.get_subcommands().front()->get_name();
    doc["command"] = s.command;
    doc["params"] = params_of(s);
    if (s.command == "expand") code = cmd_expand(s, doc);
    else if (s.command == "table") code = cmd_table(s, doc);
    else if (s.command == "verify") code = cmd_verify(s, doc);
    else code = cmd_baxter(s, doc);
  } catch (const SpecError& e) {
    err << "macbax: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "macbax: " << e.what() << "\n";
    return 2;
  }
  doc["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::string text = doc.dump(2) + "\n";
  if (s.out.empty()) {
    out << text;
  } else {
    std::ofstream f(s.out);
    if (!f) {
      err << "macbax: cannot write " << s.out << "\n";
      return 2;
    }
    f << text;
  }
  if (code == 1) err << "macbax: " << doc.value("witness", std::string("verification failed")) << "\n";
  return code;
}

}  // namespace macbax::cli
