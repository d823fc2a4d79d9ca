#include "macbax/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace macbax {

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Poly: terms separated by ';', each "coeff:e0,e1,...,e15"
std::string serialize(const Poly& p) {
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += ';';
    out += t.coeff.get_str() + ':';
    for (int v = 0; v < kMaxVars; ++v) {
      if (v) out += ',';
      out += std::to_string(t.mono[v]);
    }
  }
  return out;
}

Poly deserialize_poly(const std::string& s) {
  std::vector<Poly::Term> terms;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad serialized term");
    Poly::Term t;
    t.coeff = mpz_class(item.substr(0, colon));
    std::stringstream es(item.substr(colon + 1));
    std::string e;
    int v = 0;
    while (std::getline(es, e, ',')) {
      if (v >= kMaxVars) throw std::invalid_argument("bad serialized monomial");
      t.mono.set(v++, std::stoi(e));
    }
    terms.push_back(std::move(t));
  }
  return Poly::from_terms(std::move(terms));
}

// SymFunc: header "rank field", then one line per term "parts|num|den"
std::string serialize(const SymFunc& f) {
  std::string out = std::to_string(f.rank()) + " " + field_name(f.field()) + "\n";
  for (const auto& [p, c] : f.coeffs()) {
    std::string parts;
    for (int x : p.parts()) parts += (parts.empty() ? "" : ",") + std::to_string(x);
    out += parts + "|" + serialize(c.num()) + "|" + serialize(c.den()) + "\n";
  }
  return out;
}

SymFunc deserialize_symfunc(const std::string& s) {
  std::stringstream ss(s);
  int rank;
  std::string fname;
  if (!(ss >> rank >> fname)) throw std::invalid_argument("bad serialized SymFunc header");
  Field field = fname == "q" ? Field::q : fname == "kappa" ? Field::kappa : Field::qt;
  SymFunc f(rank, field);
  std::string line;
  std::getline(ss, line);
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    auto a = line.find('|'), b = line.rfind('|');
    if (a == std::string::npos || a == b) throw std::invalid_argument("bad serialized SymFunc term");
    std::vector<int> parts;
    std::stringstream ps(line.substr(0, a));
    std::string x;
    while (std::getline(ps, x, ',')) parts.push_back(std::stoi(x));
    f.set(Partition(parts),
          RatFunc(deserialize_poly(line.substr(a + 1, b - a - 1)), deserialize_poly(line.substr(b + 1))));
  }
  return f;
}

PolyTable::PolyTable(std::string family) : family_(std::move(family)) {}

std::string PolyTable::key(const std::string& params, int rank, const Partition& lambda) const {
  return family_ + "|" + params + "|" + std::to_string(rank) + "|" + lambda.to_string();
}

namespace {

std::optional<std::filesystem::path> cache_dir() {
  const char* d = std::getenv("MACBAX_CACHE_DIR");
  if (!d || !*d) return std::nullopt;
  return std::filesystem::path(d);
}

}  // namespace

std::optional<SymFunc> PolyTable::find(const std::string& params, int rank,
                                       const Partition& lambda) const {
  std::string k = key(params, rank, lambda);
  {
    std::shared_lock lock(mu_);
    if (auto it = table_.find(k); it != table_.end()) return it->second;
  }
  if (auto dir = cache_dir()) {
    std::ifstream in(*dir / (fnv1a_hex(k) + ".txt"));
    std::string stored_key;
    if (in && std::getline(in, stored_key) && stored_key == k) {
      std::stringstream body;
      body << in.rdbuf();
      SymFunc f = deserialize_symfunc(body.str());
      std::unique_lock lock(mu_);
      return table_.emplace(k, std::move(f)).first->second;
    }
  }
  return std::nullopt;
}

SymFunc PolyTable::insert(const std::string& params, int rank, const Partition& lambda, SymFunc value) {
  std::string k = key(params, rank, lambda);
  std::unique_lock lock(mu_);
  auto [it, fresh] = table_.emplace(k, std::move(value));
  if (fresh) {
    if (auto dir = cache_dir()) {
      std::error_code ec;
      std::filesystem::create_directories(*dir, ec);
      auto final_path = *dir / (fnv1a_hex(k) + ".txt");
      if (!std::filesystem::exists(final_path)) {
        // write then rename so readers never see a partial file
        auto tmp = final_path;
        tmp += ".tmp" + fnv1a_hex(k + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        {
          std::ofstream out(tmp);
          out << k << "\n" << serialize(it->second);
        }
        std::filesystem::rename(tmp, final_path, ec);
        if (ec) std::filesystem::remove(tmp, ec);
      }
    }
  }
  return it->second;
}

SymFunc PolyTable::get(const std::string& params, int rank, const Partition& lambda,
                       const std::function<SymFunc()>& compute) {
  if (auto hit = find(params, rank, lambda)) return *hit;
  return insert(params, rank, lambda, compute());
}

std::size_t PolyTable::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

}  // namespace macbax
