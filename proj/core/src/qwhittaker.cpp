#include "macbax/qwhittaker.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace macbax {

namespace {

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

int weight_of(const std::vector<int>& v) {
  int w = 0;
  for (int x : v) w += x;
  return w;
}

std::vector<int> pad(const std::vector<int>& v, std::size_t n) {
  std::vector<int> r = v;
  r.resize(std::max(n, v.size()), 0);
  return r;
}

// f * prod x_i^c, f in n variables
SymFunc times_x_power(const SymFunc& f, int c) {
  if (c == 0) return f;
  int n = f.rank();
  LaurentSeries e = f.expand(x_vars(n));
  Monomial shift;
  for (int i = 0; i < n; ++i) shift.set(x_var(i), c);
  return SymFunc::collect(LaurentSeries(e.numer().shifted(shift), e.denom()), x_vars(n), f.field());
}

// (q;q)_inf^e / n! modulo q^{K+1}: the inverse mass of the rank n torus weight
RatFunc torus_mass_inverse(int n, int K) {
  return RatFunc(qq_infinity_series(n - 1, K)) * RatFunc(mpq_class(1, factorial(n)));
}

}  // namespace

RatFunc qfact(int n) {
  if (n < 0) throw std::domain_error("qfact: negative argument");
  return RatFunc(q_factorial(n));
}

RatFunc inv_qfact(int n) {
  if (n < 0) return RatFunc();
  return RatFunc(Poly(1), q_factorial(n));
}

RatFunc delta_q(const std::vector<int>& lambda) {
  RatFunc d(1);
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i) d *= qfact(lambda[i] - lambda[i + 1]);
  return d;
}

SymFunc at_t_zero(const SymFunc& f) {
  SymFunc r = f.map_coeffs([](const RatFunc& c) {
    auto v = c.try_eval(kT, 0);
    if (!v) throw std::domain_error("at_t_zero: pole at t = 0");
    return *v;
  });
  r.set_field(Field::q);
  return r;
}

QWhittakerEntry qwhit(const Partition& lambda, int n) {
  if (lambda.length() > n) throw std::invalid_argument("qwhit: partition longer than rank");
  QWhittakerEntry e;
  e.lambda = lambda;
  e.rank = n;
  e.delta = delta_q(lambda, n);
  e.poly = at_t_zero(macdonald_P(lambda, n)).scaled(e.delta.inverse());
  return e;
}

SymFunc truncate_q(const SymFunc& f, int K) {
  return f.map_coeffs([K](const RatFunc& c) { return RatFunc(c.q_series(K)); });
}

Poly qq_infinity_series(int e, int K) {
  Poly base(1);
  for (int j = 1; j <= K; ++j) base = mul_truncated(base, Poly(1) - Poly::monomial(qh(2 * j)), kQ, 2 * K);
  if (e < 0) base = RatFunc(Poly(1), base).q_series(K);
  Poly r(1);
  for (int i = 0; i < std::abs(e); ++i) r = mul_truncated(r, base, kQ, 2 * K);
  return r;
}

Poly QWhitNorms::torus_series(int K) const {
  Poly d = delta.inverse().q_series(K);
  return mul_truncated(d, qq_infinity_series(-ell, K), kQ, 2 * K);
}

QWhitNorms qwhit_norms(const Partition& lambda, int n) {
  auto lam = lambda.padded(n);
  QWhitNorms r;
  r.delta = delta_q(lam);
  r.sp = qfact(n > 0 ? lam[n - 1] : 0) / r.delta;
  r.ell = std::max(n - 1, 0);
  return r;
}

Report qwhit_norm_check(const Partition& lambda, int n, int K) {
  Report rep("qwhit-norms");
  rep.param("lambda", lambda.to_string());
  rep.param("n", std::to_string(n));
  rep.param("K", std::to_string(K));
  QWhitNorms nm = qwhit_norms(lambda, n);
  // sp_q is non-degenerate only for degree <= rank: use the stable lift
  int N = std::max({n, lambda.weight(), 1});
  SymFunc lift = at_t_zero(macdonald_P(lambda, N)).scaled(nm.delta.inverse());
  RatFunc sp = sp_q(lift, lift);
  rep.check(sp == nm.sp, [&] { return "sp_q gives " + sp.to_string() + ", expected " + nm.sp.to_string(); });
  SymFunc p = qwhit_P(lambda, n);
  RatFunc tor = sp_torus(p, p, {WeightKind::qwhittaker, K, n});
  Poly got = tor.q_series(K), want = nm.torus_series(K);
  rep.check(got == want, [&] { return "torus norm " + got.to_string() + " vs " + want.to_string(); });
  return rep;
}

RatFunc toda_coefficient(const std::vector<int>& I, const std::vector<int>& lam) {
  int n = static_cast<int>(lam.size());
  RatFunc c(1);
  for (std::size_t k = 0; k < I.size(); ++k) {
    int next = k + 1 < I.size() ? I[k + 1] : n;
    if (next - I[k] == 1) continue;
    c *= RatFunc(Poly(1) - Poly::monomial(qh(2 * (lam[I[k]] - lam[I[k] + 1] + 1))));
  }
  return c;
}

SymFunc apply_toda_dual(int r, const SymFunc& f) {
  // x_j/(x_j - x_i) = -x_j/(x_i - x_j)
  return apply_difference_operator(r, f, [](int, int j) { return -Poly::var(x_var(j)); });
}

RatFunc toda_dual_eigenvalue(const Partition& lambda, int r, int n) {
  auto lam = lambda.padded(n);
  int e = 0;
  for (int i = n - r; i < n; ++i) e += lam[i];
  return RatFunc::q_pow(e);
}

RatFunc qwhit_baxter_kernel(const std::vector<int>& mu_in, const std::vector<int>& lambda_in) {
  std::size_t n = std::max(mu_in.size(), lambda_in.size());
  if (n == 0) return RatFunc(1);
  auto mu = pad(mu_in, n), lam = pad(lambda_in, n);
  RatFunc r = inv_qfact(mu[0] - lam[0]);
  for (std::size_t i = 0; i + 1 < n && !r.is_zero(); ++i)
    r *= inv_qfact(lam[i] - mu[i + 1]) * inv_qfact(mu[i + 1] - lam[i + 1]);
  return r;
}

RatFunc qwhit_pieri_phi(const std::vector<int>& mu_in, const std::vector<int>& lambda_in) {
  std::size_t n = std::max(mu_in.size(), lambda_in.size());
  RatFunc k = qwhit_baxter_kernel(mu_in, lambda_in);
  if (k.is_zero()) return k;
  return delta_q(pad(mu_in, n)) * k;
}

RatFunc qwhit_cauchy_coeff(const Partition& lambda, int n, int m) {
  RatFunc full(1);  // prod over all i of (lambda_i - lambda_{i+1})_q!
  for (int i = 1; i <= lambda.length(); ++i) full *= qfact(lambda(i) - lambda(i + 1));
  return delta_q(lambda, n) * delta_q(lambda, m) / full;
}

Report qwhit_cauchy_check(int n, int m, int D, bool perturb) {
  Report rep("cauchy");
  rep.param("family", "qwhittaker");
  return cauchy_compare(
      rep, n, m, D, gamma_q_coeff,
      [&](const Partition& lam) {
        return (qwhit_P(lam, n).expand(x_vars(n)) * qwhit_P(lam, m).expand(y_vars(m)))
            .scaled(qwhit_cauchy_coeff(lam, n, m));
      },
      perturb);
}

SymFunc gamma_q_row(int m, int n) {
  SymFunc s(n, Field::q);
  for (const auto& nu : partitions_of(m, n)) {
    RatFunc c(1);
    for (int p : nu.parts()) c *= gamma_q_coeff(p);
    s.set(nu, c);
  }
  return s;
}

std::vector<SymFunc> qwhit_baxter_apply(const Partition& lambda, int n, int M) {
  auto lam = lambda.padded(n);
  std::vector<SymFunc> out;
  for (int m = 0; m <= M; ++m) {
    SymFunc s(n, Field::q);
    for (const auto& mu : horizontal_strips_above(lam, m))
      s += qwhit_P(Partition(mu), n).scaled(delta_q(mu) * qwhit_baxter_kernel(mu, lam));
    out.push_back(std::move(s));
  }
  return out;
}

Report qwhit_baxter_equation_check(int n, int W, int M) {
  Report rep("qwhit-baxter");
  rep.param("n", std::to_string(n));
  rep.param("W", std::to_string(W));
  rep.param("M", std::to_string(M));
  std::vector<SymFunc> e, g;
  for (int r = 0; r <= n; ++r) e.push_back(r == 0 ? SymFunc::constant(RatFunc(1), n, Field::q) : elementary(r, n, Field::q));
  for (int m = 0; m <= M; ++m) g.push_back(gamma_q_row(m, n));
  auto sign = [](int r) { return RatFunc(r % 2 ? -1 : 1); };

  // prod (1 - z x_i) prod Gamma_q(z x_i) = prod Gamma_q(q z x_i)
  for (int m = 0; m <= M; ++m) {
    SymFunc lhs(n, Field::q);
    for (int r = 0; r <= std::min(m, n); ++r) lhs += (e[r] * g[m - r]).scaled(sign(r));
    rep.check(lhs == g[m].scaled(RatFunc::q_pow(m)),
              [&] { return "eigenvalue identity fails at z^" + std::to_string(m); });
  }

  // action on P^{qW}, and the lambda-space functions F_a(lambda) = [z^a] (Q_z P^{qW})(lambda)
  std::vector<PartitionFunction<SymFunc>> F(M + 1);
  for (const auto& lam : partitions_up_to(W, n)) {
    auto d = qwhit_baxter_apply(lam, n, M);
    SymFunc p = qwhit_P(lam, n);
    for (int m = 0; m <= M; ++m) {
      rep.check(d[m] == g[m] * p,
                [&] { return "Q_z on P_" + lam.to_string() + " differs at z^" + std::to_string(m); });
      F[m].emplace(lam.padded(n), d[m]);
    }
  }

  // D(-z) Q_z = Q_{qz} with D(X) = sum_r X^r H_r acting on lambda
  std::vector<std::vector<PartitionFunction<SymFunc>>> HF(n + 1, std::vector<PartitionFunction<SymFunc>>(M + 1));
  for (int r = 1; r <= n; ++r)
    for (int a = 0; a + r <= M; ++a) HF[r][a] = apply_toda(r, n, F[a]);
  for (int m = 0; m <= M; ++m) {
    int top = std::min(m, n);
    for (const auto& lam : partitions_up_to(W - top, n)) {
      auto key = lam.padded(n);
      SymFunc lhs = F[m].at(key);
      for (int r = 1; r <= top; ++r) {
        auto it = HF[r][m - r].find(key);
        if (it != HF[r][m - r].end()) lhs += it->second.scaled(sign(r));
      }
      rep.check(lhs == F[m].at(key).scaled(RatFunc::q_pow(m)), [&] {
        return "D(-z) Q_z = Q_qz fails at lambda " + lam.to_string() + ", z^" + std::to_string(m);
      });
    }
  }
  return rep;
}

SymFunc qwhit_dual_baxter_apply(const SymFunc& f, int gamma, int K) {
  int n = f.rank();
  LaurentSeries w = weight_delta({WeightKind::qwhittaker, K, n});
  SymFunc g = pairing_integral(f, n, gamma, w, [n](int m) { return gamma_q_row(m, n); });
  // only orders <= K of g are exact; drop the rest before dividing by x^|gamma|
  return times_x_power(truncate_q(g.scaled(torus_mass_inverse(n, K)), K), gamma);
}

RatFunc qwhit_dual_baxter_eigenvalue(const Partition& lambda, int gamma, int n) {
  return inv_qfact(lambda.padded(n)[n - 1] - gamma);
}

Report qwhit_dual_baxter_equation_check(const Partition& lambda, int n, int gamma, int K) {
  Report rep("qwhit-dual-baxter");
  rep.param("lambda", lambda.to_string());
  rep.param("n", std::to_string(n));
  rep.param("gamma", std::to_string(gamma));
  rep.param("K", std::to_string(K));
  int last = lambda.padded(n)[n - 1];
  RatFunc L0 = qwhit_dual_baxter_eigenvalue(lambda, gamma, n);
  RatFunc L1 = qwhit_dual_baxter_eigenvalue(lambda, gamma + 1, n);
  RatFunc lhs = (RatFunc(1) - RatFunc::q_pow(last - gamma)) * L0;
  rep.check(lhs == L1, [&] { return "(1 - q^(l_n - gamma)) L_gamma = " + lhs.to_string() + " vs " + L1.to_string(); });

  SymFunc p = qwhit_P(lambda, n);
  SymFunc g0 = qwhit_dual_baxter_apply(p, gamma, K);
  SymFunc g1 = qwhit_dual_baxter_apply(p, gamma + 1, K);
  rep.check(g0 == truncate_q(p.scaled(L0), K), [&] { return "dual Baxter action differs at gamma " + std::to_string(gamma); });
  rep.check(g1 == truncate_q(p.scaled(L1), K), [&] { return "dual Baxter action differs at gamma " + std::to_string(gamma + 1); });
  // {1 - q^{-gamma} H^vee_1} Q_gamma = Q_{gamma+1}; q^{-gamma} costs gamma orders
  int K2 = K - std::max(gamma, 0);
  if (K2 >= 0) {
    SymFunc op = g0 - apply_toda_dual(1, g0).scaled(RatFunc::q_pow(-gamma));
    rep.check(truncate_q(op, K2) == truncate_q(g1, K2), "operator form of the dual Baxter equation fails");
  }
  return rep;
}

SymFunc qwhit_mixed(const Partition& lambda, int n, const std::vector<Stage>& eps, int K) {
  if (static_cast<int>(eps.size()) != std::max(n - 1, 0)) throw std::invalid_argument("qwhit_mixed: need n-1 stages");
  if (lambda.length() > n) throw std::invalid_argument("qwhit_mixed: partition longer than rank");
  bool truncated = std::find(eps.begin(), eps.end(), Stage::I) != eps.end();
  std::map<std::vector<int>, SymFunc> memo;
  std::function<SymFunc(const std::vector<int>&)> build = [&](const std::vector<int>& lam) -> SymFunc {
    int j = static_cast<int>(lam.size());
    if (auto it = memo.find(lam); it != memo.end()) return it->second;
    SymFunc out(j, Field::q);
    if (j == 1) {
      out.set(Partition(lam), RatFunc(1));
    } else if (eps[j - 2] == Stage::II) {
      LaurentSeries acc;
      int w = weight_of(lam);
      for (const auto& mu : interlacing_below(lam)) {
        RatFunc c = delta_q(mu);
        for (int i = 0; i + 1 < j; ++i) c *= inv_qfact(lam[i] - mu[i]) * inv_qfact(mu[i] - lam[i + 1]);
        if (c.is_zero()) continue;
        LaurentSeries lower = build(mu).expand(x_vars(j - 1));
        acc += LaurentSeries(lower.numer().shifted(Monomial::unit(x_var(j - 1), w - weight_of(mu))), lower.denom())
                   .scaled(c);
      }
      // above a torus stage only orders <= K are symmetric
      if (truncated) acc.truncate_q(K);
      out = SymFunc::collect(acc.reduced(), x_vars(j), Field::q);
    } else {
      std::vector<int> head(lam.begin(), lam.end() - 1);
      int last = lam.back();
      LaurentSeries w = weight_delta({WeightKind::qwhittaker, K, j - 1});
      SymFunc g = pairing_integral(build(head), j, last, w, [j](int m) { return gamma_q_row(m, j); });
      out = times_x_power(truncate_q(g.scaled(torus_mass_inverse(j - 1, K)), K), last);
    }
    memo.emplace(lam, out);
    return out;
  };
  SymFunc r = build(lambda.padded(std::max(n, 1)));
  return truncated ? truncate_q(r, K) : r;
}

SymFunc qwhit_recursion(const Partition& lambda, int n, RecursionMode mode, int K) {
  std::vector<Stage> eps(std::max(n - 1, 0), mode == RecursionMode::sum ? Stage::II : Stage::I);
  return qwhit_mixed(lambda, n, eps, K);
}

}  // namespace macbax
