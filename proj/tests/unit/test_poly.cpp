#include <doctest.h>

#include <random>

#include "macbax/poly.hpp"
#include "macbax/ratfunc.hpp"

using namespace macbax;

namespace {

Poly random_poly(std::mt19937& rng, std::initializer_list<int> vars, int terms, int maxdeg) {
  std::uniform_int_distribution<int> e(0, maxdeg), c(-9, 9);
  std::vector<Poly::Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (int v : vars) m.set(v, e(rng));
    ts.push_back({m, c(rng)});
  }
  return Poly::from_terms(ts);
}

const Poly q = Poly::var(kQ, 2);
const Poly t = Poly::var(kT, 2);

}  // namespace

TEST_CASE("poly arithmetic basics") {
  Poly a = q + 1, b = q - 1;
  CHECK(a * b == q * q - 1);
  CHECK((a * b).div_exact(a) == b);
  CHECK(!(q * q + 1).divide_exact(a).has_value());
  CHECK((a - a).is_zero());
  CHECK(Poly::var(kQ, -2).to_string() == "q^(-1)");
  CHECK(Poly::var(kQ, 1).to_string() == "q^(1/2)");
}

TEST_CASE("laurent division") {
  Poly a = Poly::var(kQ, -4) * (q + t);
  Poly b = Poly::var(kT, 6) * (q + t);
  CHECK(a.div_exact(b) == Poly::monomial(Monomial::unit(kQ, -4) * Monomial::unit(kT, -6)));
}

TEST_CASE("heuristic gcd agrees with PRS gcd") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Poly a = random_poly(rng, {kQ, kT}, 4, 3);
    Poly b = random_poly(rng, {kQ, kT}, 4, 3);
    Poly c = random_poly(rng, {kQ, kT}, 3, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    Poly g1 = gcd(a * c, b * c);
    Poly g2 = gcd_prs(a * c, b * c);
    CHECK(g1 == g2);
    CHECK((a * c).divide_exact(g1).has_value());
    CHECK((b * c).divide_exact(g1).has_value());
    CHECK((g1.divide_exact(c.shifted(c.min_exponents().inverse()))).has_value());
  }
}

TEST_CASE("trivariate gcd") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Poly a = random_poly(rng, {kQ, kT, kX1}, 4, 2);
    Poly b = random_poly(rng, {kQ, kT, kX1}, 4, 2);
    Poly c = random_poly(rng, {kQ, kT, kX1}, 3, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    CHECK(gcd(a * c, b * c) == gcd_prs(a * c, b * c));
  }
}

TEST_CASE("ratfunc canonical form") {
  RatFunc a(q * q - 1, q - 1);
  CHECK(a == RatFunc(q + 1));
  RatFunc b(Poly(-2), Poly(4) * q);
  CHECK(b.den() == Poly(2));
  CHECK(b.num() == -Poly::var(kQ, -2));
  RatFunc one_minus_t(1 - t), one_minus_q(1 - q);
  RatFunc r = one_minus_t / one_minus_q;
  CHECK(r * one_minus_q == one_minus_t);
  CHECK(r.den().leading().coeff > 0);
  CHECK(r + r - r == r);
  CHECK((r - r).is_zero());
}

TEST_CASE("q series expansion") {
  RatFunc f(Poly(1), 1 - q);
  Poly s = f.q_series(5);
  CHECK(s == 1 + q + q.pow(2) + q.pow(3) + q.pow(4) + q.pow(5));
  RatFunc g(Poly::var(kQ, 1), 1 - q);  // q^{1/2}/(1-q)
  CHECK(g.q_series(1) == Poly::var(kQ, 1));
  CHECK(g.q_series(2) == Poly::var(kQ, 1) + Poly::var(kQ, 3));
}
