#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "macbax/report.hpp"
#include "macbax/symfunc.hpp"

namespace macbax::cli {

using json = nlohmann::ordered_json;

enum class Family { macdonald, qwhittaker, jack };
enum class Regime { symbolic, t_power, kappa };

// One invocation, after flag parsing.
struct JobSpec {
  std::string command;
  Family family = Family::macdonald;
  std::string suite;
  std::string kind = "eigen";  // table kind
  std::optional<Partition> partition;
  int rank = 2;
  Regime regime = Regime::symbolic;
  int k = 0;       // t = q^k
  long kappa = 0;  // integer kappa
  std::optional<int> gamma, q_order, z_order, max_degree;
  int max_weight = 3;
  int jobs = 1;
  std::string out;
  bool perturb = false;
  bool dual = false;
};

// Invalid flag combination; exit code 2.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string family_name(Family f);
Family parse_family(const std::string& s);

// ---- canonical JSON
// Exponent on the half lattice: an integer, or "n/2".
json half_exponent(int half_units);
int parse_half_exponent(const json& j);
// {"num": [[c, eq, et(, ek(, eX))]...], "den": [...]}; terms in graded-lex order, c a decimal
// string.  The term length is the shortest covering the slots in use.
json encode_coeff(const RatFunc& c);
RatFunc decode_coeff(const json& j);
// [{"partition": [...], "coeff": ...}] sorted graded-lex.
json encode_poly(const SymFunc& f);
SymFunc decode_poly(const json& j, int rank, Field field);

// ---- suites
struct Case {
  std::string key;
  std::function<Report()> run;
};
extern const std::vector<std::string> kSuites;
// Cases for spec.suite; throws SpecError for unsupported combinations.
std::vector<Case> build_suite(const JobSpec& spec);
// Runs cases on spec.jobs threads; results in case order.
std::vector<Report> run_cases(const std::vector<Case>& cases, int jobs);

// ---- commands; each returns the exit code and fills doc
int cmd_expand(const JobSpec& spec, json& doc);
int cmd_table(const JobSpec& spec, json& doc);
int cmd_verify(const JobSpec& spec, json& doc);
int cmd_baxter(const JobSpec& spec, json& doc);

// Full command line driver.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace macbax::cli
