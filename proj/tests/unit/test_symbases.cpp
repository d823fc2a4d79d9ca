#include <doctest.h>

#include <random>

#include "macbax/symfunc.hpp"

using namespace macbax;

namespace {

const RatFunc q = RatFunc::q_pow(1);
const RatFunc t = RatFunc::t_pow(1);
const RatFunc kappa = RatFunc::var(kKappa);

SymFunc random_sym(std::mt19937& rng, int n, int maxdeg) {
  SymFunc f(n);
  std::uniform_int_distribution<int> c(-3, 3);
  for (const auto& p : partitions_up_to(maxdeg, n)) f.set(p, RatFunc(c(rng)));
  return f;
}

// Complete homogeneous h_r expanded in n variables by brute force.
LaurentSeries h_poly(int r, int n) {
  std::vector<int> vars = x_vars(n);
  PolyBuilder b;
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == n - 1) {
      e[i] = rem;
      Monomial m;
      for (int k = 0; k < n; ++k) m.set(vars[k], e[k]);
      b.add(m, 1);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      e[i] = v;
      rec(i + 1, rem - v);
    }
  };
  rec(0, r);
  return LaurentSeries(b.build());
}

}  // namespace

TEST_CASE("partition basics") {
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
  CHECK(Partition().conjugate() == Partition());
  CHECK(Partition({2, 0}).dominates(Partition({1, 1})));
  CHECK_THROWS_AS(Partition({3, 0, 1}), std::invalid_argument);
  CHECK(interlaces({2, 1}, {1}));
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(5, 2).size() == 3);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> w(0, 12);
  for (int i = 0; i < 1000; ++i) {
    auto ps = partitions_of(w(rng));
    const auto& p = ps[rng() % ps.size()];
    CHECK(p.conjugate().conjugate() == p);
  }
  auto all = partitions_of(8);
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.dominates(b) && b.dominates(a)) CHECK(a == b);
      for (const auto& c : partitions_of(8, 3))
        if (a.dominates(b) && b.dominates(c)) CHECK(a.dominates(c));
    }
}

TEST_CASE("monomial and power sums") {
  CHECK(power_sum({1, 1}, 2) == monomial_sym({2}, 2) + monomial_sym({1, 1}, 2).scaled(2));
  CHECK(power_sum({2}, 2) == monomial_sym({2}, 2));
  auto pb = to_power_basis(monomial_sym({1, 1}, 2));
  CHECK(pb.at(Partition({1, 1})) == RatFunc(mpq_class(1, 2)));
  CHECK(pb.at(Partition({2})) == RatFunc(mpq_class(-1, 2)));
  CHECK_THROWS_AS(to_power_basis(monomial_sym({3}, 2)), std::domain_error);
  std::mt19937 rng(5);
  SymFunc f = random_sym(rng, 4, 4);
  SymFunc back(4);
  for (const auto& [rho, c] : to_power_basis(f)) back += power_sum(rho, 4).scaled(c);
  CHECK(back == f);
}

TEST_CASE("scalar products") {
  SymFunc p1 = power_sum({1}, 2), p2 = power_sum({2}, 2);
  CHECK(sp_qt(p1, p1) == (1 - q) / (1 - t));
  CHECK(sp_qt(p1, p2).is_zero());
  CHECK(sp_qt(p2, p2) == RatFunc(2) * (1 - q * q) / (1 - t * t));
  CHECK(sp_q(p1, p1) == 1 - q);
  CHECK(sp_kappa(p1, p1) == RatFunc(1) / kappa);
  CHECK(sp_kappa(power_sum({1, 1}, 2), power_sum({1, 1}, 2)) == RatFunc(2) / (kappa * kappa));
  std::mt19937 rng(9);
  for (int i = 0; i < 20; ++i) {
    SymFunc f = random_sym(rng, 4, 3), g = random_sym(rng, 4, 3), h = random_sym(rng, 4, 3);
    CHECK(sp_qt(f, g) == sp_qt(g, f));
    CHECK(sp_qt(f + h, g) == sp_qt(f, g) + sp_qt(h, g));
    CHECK(sp_kappa(f, g) == sp_kappa(g, f));
    CHECK(sp_q(f, g) == sp_qt(f, g).eval(kT, 0));
  }
}

TEST_CASE("sp_qt at t=q is the Hall product") {
  for (int w = 1; w <= 4; ++w) {
    auto parts = partitions_of(w);
    std::size_t N = parts.size();
    // H[lambda][mu]: h_lambda = sum_mu H m_mu, computed by brute-force expansion
    std::vector<std::vector<mpq_class>> a(N, std::vector<mpq_class>(2 * N));
    for (std::size_t i = 0; i < N; ++i) {
      LaurentSeries h(Poly(1));
      for (int r : parts[i].parts()) h *= h_poly(r, w);
      SymFunc hs = SymFunc::collect(h, x_vars(w), Field::qt);
      for (std::size_t j = 0; j < N; ++j) a[i][j] = hs.coeff(parts[j]).constant_value();
      a[i][N + i] = 1;
    }
    for (std::size_t c = 0; c < N; ++c) {
      std::size_t p = c;
      while (a[p][c] == 0) ++p;
      std::swap(a[p], a[c]);
      mpq_class d = a[c][c];
      for (auto& v : a[c]) v /= d;
      for (std::size_t r = 0; r < N; ++r)
        if (r != c && a[r][c] != 0) {
          mpq_class f = a[r][c];
          for (std::size_t k = 0; k < 2 * N; ++k) a[r][k] -= f * a[c][k];
        }
    }
    // <m_i, m_j> = (H^{-1})_{ij}
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        RatFunc g = sp_qt(monomial_sym(parts[i], w), monomial_sym(parts[j], w));
        CHECK(specialize_t(g, 1) == RatFunc(a[i][N + j]));
      }
  }
}

TEST_CASE("torus weights and products") {
  auto d = weight_delta({WeightKind::macdonald, 1, 2});
  CHECK(d.constant_term(x_vars(2)) == RatFunc(2));
  CHECK(weight_delta({WeightKind::jack, 1, 2}) == d);
  SymFunc one = SymFunc::constant(1, 1);
  CHECK(sp_torus(one, one, {WeightKind::macdonald, 1, 1}) == RatFunc(1));
  SymFunc one2 = SymFunc::constant(1, 2);
  CHECK(sp_torus(one2, one2, {WeightKind::macdonald, 1, 2}) == RatFunc(1));
  SymFunc f = monomial_sym({2, 1}, 2) + monomial_sym({3}, 2).scaled(q);
  SymFunc g = monomial_sym({3}, 2) + monomial_sym({1, 1}, 2);
  for (auto w : {WeightKind{WeightKind::macdonald, 2, 2}, WeightKind{WeightKind::jack, 2, 2}})
    CHECK(sp_torus(f, g, w) == sp_torus(g, f, w));
  auto dq = weight_delta({WeightKind::qwhittaker, 1, 2});
  // through q^1: (1 - z2/z1)(1 - z1/z2)(1 - q z2/z1)(1 - q z1/z2)
  Poly z12 = Poly::monomial(Monomial::unit(x_var(0)) * Monomial::unit(x_var(1), -1));
  Poly z21 = Poly::monomial(Monomial::unit(x_var(1)) * Monomial::unit(x_var(0), -1));
  Poly qq = Poly::var(kQ, 2);
  Poly full = (1 - z12) * (1 - z21) * (1 - qq * z12) * (1 - qq * z21);
  CHECK(dq.numer() == full.truncate_above(kQ, 2));
}
