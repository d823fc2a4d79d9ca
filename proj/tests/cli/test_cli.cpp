#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "cli.hpp"
#include "macbax/jack.hpp"
#include "macbax/macdonald.hpp"
#include "macbax/qwhittaker.hpp"

using namespace macbax;
using macbax::cli::json;

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out call(std::vector<std::string> args) {
  args.insert(args.begin(), "macbax");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  return {code, o.str(), e.str()};
}

// Document with the timing field removed.
json stable(const std::string& text) {
  json d = json::parse(text);
  d.erase("timing_ms");
  return d;
}

RatFunc q() { return RatFunc::q_pow(1); }
RatFunc t() { return RatFunc::t_pow(1); }
const RatFunc one(1);

}  // namespace

TEST_CASE("half-lattice exponents") {
  CHECK(cli::half_exponent(4) == json(2));
  CHECK(cli::half_exponent(-3) == json("-3/2"));
  CHECK(cli::parse_half_exponent(json("5/2")) == 5);
  CHECK(cli::parse_half_exponent(json(-2)) == -4);
  CHECK_THROWS_AS(cli::parse_half_exponent(json("5/3")), cli::SpecError);
}

TEST_CASE("coefficient encoding") {
  // 1/(1-q) as printed: num [[-1,0,0]], den [[1,1,0],[-1,0,0]] up to the canonical sign
  RatFunc c = one / (one - q());
  json j = cli::encode_coeff(c);
  CHECK(cli::decode_coeff(j) == c);
  CHECK(j["den"].size() == 2);
  for (const auto& term : j["num"]) CHECK(term.size() == 3);
  // kappa and X widen the terms
  RatFunc k = RatFunc::var(kKappa), X = RatFunc::var(kSpec);
  CHECK(cli::encode_coeff(k)["num"][0].size() == 4);
  CHECK(cli::encode_coeff(X * k)["num"][0].size() == 5);
  CHECK(cli::encode_coeff(RatFunc::var(kQ, 1))["num"][0][1] == json("1/2"));
}

TEST_CASE("polynomial round trip") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-5, 5), e(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 3;
    SymFunc f(n, Field::qt);
    for (const auto& lam : partitions_up_to(3, n)) {
      RatFunc num = RatFunc(c(rng)) + RatFunc::var(kQ, e(rng)) * RatFunc(c(rng)) + RatFunc::var(kT, e(rng));
      RatFunc den = one + RatFunc::var(kKappa, 1 + trial % 2) * RatFunc(c(rng)) + q() * t();
      f.set(lam, num / den);
    }
    json j = cli::encode_poly(f);
    CHECK(cli::decode_poly(j, n, Field::qt) == f);
    // the text form parses back to the same document
    CHECK(json::parse(j.dump()) == j);
  }
  for (auto fam : {"macdonald", "qwhittaker", "jack"}) {
    auto r = call({"expand", "--family", fam, "--partition", "2,1", "--rank", "3"});
    REQUIRE(r.code == 0);
    json d = json::parse(r.out);
    SymFunc in_memory = std::string(fam) == "macdonald" ? macdonald_P({2, 1}, 3)
                        : std::string(fam) == "jack"    ? jack_P({2, 1}, 3)
                                                        : qwhit_P({2, 1}, 3);
    CHECK(cli::decode_poly(d["poly"], 3, in_memory.field()) == in_memory);
  }
}

TEST_CASE("graded-lex term order") {
  auto r = call({"expand", "--family", "jack", "--partition", "3", "--rank", "3"});
  REQUIRE(r.code == 0);
  std::vector<Partition> seen;
  json d = json::parse(r.out);
  for (const auto& e : d["poly"]) seen.emplace_back(e["partition"].get<std::vector<int>>());
  CHECK(seen.size() == 3);
  CHECK(std::is_sorted(seen.begin(), seen.end(), graded_lex_less));
}

TEST_CASE("expand examples") {
  {
    auto d = json::parse(call({"expand", "--family", "macdonald", "--partition", "2", "--rank", "2"}).out);
    SymFunc got = cli::decode_poly(d["poly"], 2, Field::qt);
    CHECK(d["poly"].size() == 2);
    CHECK(got.coeff({1, 1}) == (one + q()) * (one - t()) / (one - q() * t()));
    // Gram-Schmidt is an independent construction
    CHECK(got == macdonald_gs({2}, 2).poly);
  }
  {
    auto d = json::parse(call({"expand", "--family", "jack", "--partition", "1,1", "--rank", "2"}).out);
    CHECK(d["poly"].size() == 1);
    CHECK(cli::decode_poly(d["poly"], 2, Field::kappa) == SymFunc::monomial({1, 1}, 2, Field::kappa));
  }
  {
    auto d = json::parse(call({"expand", "--family", "qwhittaker", "--partition", "1,0", "--rank", "2"}).out);
    CHECK(cli::decode_poly(d["poly"], 2, Field::q) == SymFunc::monomial({1}, 2, Field::q).scaled(one / (one - q())));
  }
}

TEST_CASE("table examples") {
  auto d = json::parse(call({"table", "--family", "macdonald", "--rank", "2", "--max-weight", "2"}).out);
  // one row per (lambda, r) over the four partitions
  CHECK(d["rows"].size() == 8);
  // rank 1, gamma = 0: L_0((m)) = b_(m)
  auto b = json::parse(call({"table", "--family", "macdonald", "--kind", "baxter", "--rank", "1", "--gamma", "0",
                             "--max-weight", "4"}).out);
  REQUIRE(b["rows"].size() == 5);
  for (int m = 0; m <= 4; ++m) CHECK(cli::decode_coeff(b["rows"][m]["L"]) == b_norm({m}));
  auto s = json::parse(call({"table", "--family", "jack", "--kind", "sekiguchi", "--rank", "3", "--partition", "0"}).out);
  RatFunc X = RatFunc::var(kSpec), k = RatFunc::var(kKappa);
  CHECK(cli::decode_coeff(s["rows"][0]["eigenvalue"]) == X * (X + k) * (X + RatFunc(2) * k));
}

TEST_CASE("determinism") {
  std::vector<std::vector<std::string>> jobs = {
      {"verify", "--suite", "pieri", "--family", "macdonald", "--rank", "3", "--max-weight", "3"},
      {"verify", "--suite", "mixed", "--family", "jack", "--rank", "3", "--partition", "2,1", "--kappa", "1"},
      {"expand", "--family", "qwhittaker", "--partition", "3,1", "--rank", "3"},
      {"table", "--family", "jack", "--kind", "baxter", "--rank", "2", "--gamma", "0", "--kappa", "2"},
  };
  for (const auto& args : jobs) {
    auto a = call(args), b = call(args);
    CHECK(stable(a.out) == stable(b.out));
    CHECK(stable(a.out).dump() == stable(b.out).dump());
  }
  // sharded runs merge in case order
  auto base = jobs[0];
  auto one_job = call(base);
  base.insert(base.end(), {"--jobs", "4"});
  auto four = call(base);
  json x = stable(one_job.out), y = stable(four.out);
  x.erase("params");
  y.erase("params");
  CHECK(x.dump() == y.dump());
}

TEST_CASE("exit codes") {
  CHECK(call({"verify", "--suite", "gamma", "--q-order", "5"}).code == 0);
  auto bad = call({"verify", "--suite", "gamma", "--q-order", "3", "--debug-perturb"});
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["witness"].get<std::string>().find("reflection") != std::string::npos);
  // invalid specs
  CHECK(call({"verify", "--suite", "gamma"}).code == 2);                          // truncation missing
  CHECK(call({"verify", "--suite", "cauchy", "--family", "macdonald"}).code == 2);  // --max-degree missing
  CHECK(call({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(call({"expand", "--family", "jack", "--partition", "1", "--t-spec", "q^1"}).code == 2);
  CHECK(call({"expand", "--family", "macdonald", "--partition", "1,2"}).code == 2);
  CHECK(call({"expand", "--family", "macdonald", "--partition", "1,1,1", "--rank", "2"}).code == 2);
  CHECK(call({"expand", "--family", "macdonald"}).code == 2);
  CHECK(call({"verify", "--suite", "limits", "--debug-perturb"}).code == 2);
  CHECK(call({"expand", "--family", "macdonald", "--partition", "1", "--kappa", "1", "--symbolic"}).code == 2);
}

TEST_CASE("baxter command") {
  auto r = call({"baxter", "--family", "jack", "--partition", "2,1", "--rank", "2", "--kappa", "2", "--gamma", "1"});
  CHECK(r.code == 0);
  auto d = json::parse(r.out);
  CHECK(d["match"] == true);
  // Gamma(2 - 1 + 4)/Gamma(2 - 1 + 2 + 1) * Gamma(1 - 1 + 2)/Gamma(1 - 1 + 1) = 4
  CHECK(cli::decode_coeff(d["eigenvalue"]) == RatFunc(4));
  auto z = call({"baxter", "--family", "macdonald", "--dual", "--partition", "1", "--rank", "2", "--z-order", "2"});
  CHECK(z.code == 0);
  CHECK(json::parse(z.out)["z_coefficients"].size() == 3);
}
