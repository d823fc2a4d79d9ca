#include <algorithm>

#include "cli.hpp"

namespace macbax::cli {

std::string family_name(Family f) {
  switch (f) {
    case Family::macdonald: return "macdonald";
    case Family::qwhittaker: return "qwhittaker";
    case Family::jack: return "jack";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "macdonald") return Family::macdonald;
  if (s == "qwhittaker") return Family::qwhittaker;
  if (s == "jack") return Family::jack;
  throw SpecError("unknown family '" + s + "'");
}

json half_exponent(int h) {
  if (h % 2 == 0) return h / 2;
  return std::to_string(h) + "/2";
}

int parse_half_exponent(const json& j) {
  if (j.is_number_integer()) return 2 * j.get<int>();
  if (!j.is_string()) throw SpecError("exponent must be an integer or \"n/2\"");
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos || s.substr(slash + 1) != "2") throw SpecError("bad half exponent '" + s + "'");
  return std::stoi(s.substr(0, slash));
}

namespace {

// slots in term order after the coefficient
constexpr int kSlots[] = {kQ, kT, kKappa, kSpec};

json encode_terms(const Poly& p, int width) {
  json arr = json::array();
  for (const auto& t : p.terms()) {
    json term = json::array({t.coeff.get_str()});
    for (int i = 0; i < width; ++i) {
      int v = kSlots[i];
      term.push_back(half_lattice(v) ? half_exponent(t.mono[v]) : json(t.mono[v]));
    }
    arr.push_back(std::move(term));
  }
  return arr;
}

int width_of(const Poly& p) {
  int w = 2;
  for (const auto& t : p.terms())
    for (int i = 2; i < 4; ++i)
      if (t.mono[kSlots[i]] != 0) w = std::max(w, i + 1);
  return w;
}

Poly decode_terms(const json& arr) {
  if (!arr.is_array()) throw SpecError("coefficient terms must be an array");
  std::vector<Poly::Term> ts;
  for (const auto& term : arr) {
    if (!term.is_array() || term.size() < 3 || term.size() > 5) throw SpecError("bad coefficient term");
    Poly::Term t{Monomial(), mpz_class(term[0].get<std::string>())};
    for (std::size_t i = 1; i < term.size(); ++i) {
      int v = kSlots[i - 1];
      t.mono.set(v, half_lattice(v) ? parse_half_exponent(term[i]) : term[i].get<int>());
    }
    ts.push_back(std::move(t));
  }
  return Poly::from_terms(std::move(ts));
}

}  // namespace

json encode_coeff(const RatFunc& c) {
  int w = std::max(width_of(c.num()), width_of(c.den()));
  json j;
  j["num"] = encode_terms(c.num(), w);
  j["den"] = encode_terms(c.den(), w);
  return j;
}

RatFunc decode_coeff(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw SpecError("coefficient needs num and den");
  return RatFunc(decode_terms(j["num"]), decode_terms(j["den"]));
}

json encode_poly(const SymFunc& f) {
  std::vector<Partition> keys;
  for (const auto& [p, c] : f.coeffs()) keys.push_back(p);
  std::sort(keys.begin(), keys.end(), graded_lex_less);
  json arr = json::array();
  for (const auto& p : keys) {
    json e;
    e["partition"] = p.parts();
    e["coeff"] = encode_coeff(f.coeff(p));
    arr.push_back(std::move(e));
  }
  return arr;
}

SymFunc decode_poly(const json& j, int rank, Field field) {
  if (!j.is_array()) throw SpecError("polynomial must be an array");
  SymFunc f(rank, field);
  for (const auto& e : j) f.add(Partition(e.at("partition").get<std::vector<int>>()), decode_coeff(e.at("coeff")));
  return f;
}

}  // namespace macbax::cli
