#include "macbax/orthogonal.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace macbax {

std::vector<Partition> extension_order(int w, Extension ext) {
  std::vector<Partition> ps = partitions_of(w);
  if (ext == Extension::lex) {
    std::sort(ps.begin(), ps.end());
  } else {
    std::sort(ps.begin(), ps.end(), [](const Partition& a, const Partition& b) {
      return a.conjugate() > b.conjugate();
    });
  }
  return ps;
}

namespace {

RatFunc weight_of(const Partition& rho, Field field) {
  Poly num(z_lambda(rho)), den(1);
  for (int r : rho.parts()) {
    switch (field) {
      case Field::qt:
        num *= Poly(1) - Poly::var(kQ, 2 * r);
        den *= Poly(1) - Poly::var(kT, 2 * r);
        break;
      case Field::q: num *= Poly(1) - Poly::var(kQ, 2 * r); break;
      case Field::kappa: den *= Poly::var(kKappa); break;
    }
  }
  return RatFunc(num, den);
}

// <m_a, m_b> for all partitions of w
std::map<std::pair<Partition, Partition>, RatFunc> gram_matrix(int w, Field field) {
  auto ps = partitions_of(w);
  std::map<Partition, std::map<Partition, RatFunc>> power;
  for (const auto& p : ps) power[p] = to_power_basis(SymFunc::monomial(p, w, field));
  std::map<Partition, RatFunc> wt;
  for (const auto& rho : ps) wt[rho] = weight_of(rho, field);
  std::map<std::pair<Partition, Partition>, RatFunc> g;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i; j < ps.size(); ++j) {
      RatFunc acc;
      for (const auto& [rho, c] : power[ps[i]]) {
        auto it = power[ps[j]].find(rho);
        if (it != power[ps[j]].end()) acc += c * it->second * wt[rho];
      }
      g[{ps[i], ps[j]}] = acc;
      g[{ps[j], ps[i]}] = acc;
    }
  return g;
}

}  // namespace

const std::map<Partition, SymFunc>& gram_schmidt_family(int w, Field field, Extension ext) {
  static std::mutex mu;
  static std::map<std::tuple<int, Field, Extension>, std::map<Partition, SymFunc>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(w, field, ext);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  int rank = std::max(w, 1);
  auto order = extension_order(w, ext);
  auto g = gram_matrix(w, field);
  std::vector<std::map<Partition, RatFunc>> basis;
  std::vector<RatFunc> norms;
  for (const auto& lam : order) {
    std::map<Partition, RatFunc> v{{lam, RatFunc(1)}};
    for (std::size_t j = 0; j < basis.size(); ++j) {
      RatFunc ip;  // <m_lam, P_j>
      for (const auto& [nu, c] : basis[j]) ip += c * g.at({lam, nu});
      if (ip.is_zero()) continue;
      RatFunc f = ip / norms[j];
      for (const auto& [nu, c] : basis[j]) {
        RatFunc& slot = v[nu];
        slot -= f * c;
      }
    }
    for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
    RatFunc nrm;
    for (const auto& [a, ca] : v)
      for (const auto& [b, cb] : v) nrm += ca * cb * g.at({a, b});
    if (nrm.is_zero()) throw std::logic_error("gram_schmidt: degenerate Gram matrix");
    basis.push_back(std::move(v));
    norms.push_back(nrm);
  }
  std::map<Partition, SymFunc> fam;
  for (std::size_t i = 0; i < order.size(); ++i) {
    SymFunc s(rank, field);
    for (const auto& [p, c] : basis[i]) s.set(p, c);
    fam.emplace(order[i], std::move(s));
  }
  return cache.emplace(key, std::move(fam)).first->second;
}

SymFunc gram_schmidt(const Partition& lambda, int n, Field field, Extension ext) {
  if (lambda.length() > n) throw std::invalid_argument("gram_schmidt: partition longer than rank");
  if (lambda.weight() == 0) return SymFunc::constant(RatFunc(1), n, field);
  return gram_schmidt_family(lambda.weight(), field, ext).at(lambda).with_rank(n);
}

}  // namespace macbax
