#include "macbax/baxter.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace macbax {

SymFunc specialize_t(const SymFunc& f, int k) {
  return f.map_coeffs([k](const RatFunc& c) { return specialize_t(c, k); });
}

QGammaProduct baxter_eigenvalue(const Partition& lambda, int gamma, int n) {
  auto lam = lambda.padded(n);
  if (lam[n - 1] < gamma) return QGammaProduct(RatFunc());
  std::vector<int> shifted(lam);
  for (int& x : shifted) x -= gamma;
  return QGammaProduct(b_norm(Partition(shifted))) * torus_norm(lambda, n);
}

QGammaProduct baxter_eigenvalue_compact(const std::vector<int>& lambda, int gamma) {
  int n = static_cast<int>(lambda.size());
  QGammaProduct g;
  for (int i = 0; i < n; ++i) {
    g *= QGammaProduct::gamma(t_over_q(), qh(2));
    g *= QGammaProduct::gamma(t_over_q(), th(2 * (n - 1 - i)) * qh(2 * (lambda[i] - gamma + 1)), -1);
  }
  return g;
}

namespace {

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// number of distinct rearrangements of a multiset
mpz_class arrangements(const std::vector<int>& a) {
  std::map<int, int> mult;
  for (int x : a) ++mult[x];
  mpz_class r = factorial(static_cast<int>(a.size()));
  for (auto [v, m] : mult) r /= factorial(m);
  return r;
}

}  // namespace

SymFunc pairing_integral(const SymFunc& f, int nx, int c, const LaurentSeries& weight,
                         const std::function<SymFunc(int)>& row_of) {
  int ny = f.rank();
  auto yv = x_vars(ny);  // torus variables live in the x slots here
  LaurentSeries a = f.expand(yv).invert(yv);
  if (weight.q_order()) a.truncate_q(*weight.q_order());
  if (ny > 0) a = a * weight;
  Monomial shift;
  for (int v : yv) shift.set(v, c);
  a = LaurentSeries(a.numer().shifted(shift), a.denom());

  // y-coefficients of the kernel: [y^alpha] prod K(x_i y_j) = prod_j g_{alpha_j}(x)
  std::map<int, LaurentSeries> rows;
  auto row = [&](int m) -> const LaurentSeries& {
    auto it = rows.find(m);
    if (it != rows.end()) return it->second;
    return rows.emplace(m, row_of(m).expand(x_vars(nx))).first->second;
  };
  LaurentSeries out;
  for (const auto& [e, coeff] : a.terms(yv)) {
    bool sorted_nonpos = true;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] > 0) sorted_nonpos = false;
      if (j + 1 < e.size() && e[j] > e[j + 1]) sorted_nonpos = false;  // -e weakly decreasing
    }
    if (!sorted_nonpos) continue;
    std::vector<int> alpha;
    for (int x : e) alpha.push_back(-x);
    LaurentSeries prod(Poly(1));
    for (int m : alpha) prod = prod * row(m);
    out += prod.scaled(coeff * RatFunc(arrangements(alpha)));
  }
  return SymFunc::collect(out.reduced(), x_vars(nx), Field::q);
}

SymFunc kernel_integral(const SymFunc& f, int nx, int c, int k) {
  LaurentSeries w = f.rank() > 0 ? weight_delta({WeightKind::macdonald, k, f.rank()}) : LaurentSeries(Poly(1));
  return pairing_integral(f, nx, c, w, [&](int m) { return specialize_t(gamma_row(m, nx), k); });
}

SymFunc apply_baxter(const SymFunc& f, const BaxterParams& p) {
  if (p.k < 1) throw std::invalid_argument("apply_baxter: needs t = q^k with k >= 1");
  if (f.degree() > p.max_degree) throw std::domain_error("apply_baxter: degree cap exceeded");
  int n = f.rank();
  SymFunc g = kernel_integral(f, n, p.gamma, p.k);
  LaurentSeries e = g.expand(x_vars(n));
  Monomial shift;
  for (int i = 0; i < n; ++i) shift.set(x_var(i), p.gamma);
  e = LaurentSeries(e.numer().shifted(shift), e.denom() * Poly(factorial(n)));
  return SymFunc::collect(e.reduced(), x_vars(n), Field::q);
}

Report baxter_equation_check(const Partition& lambda, int gamma, int k, int n) {
  Report rep("baxter-equation");
  rep.param("lambda", lambda.to_string());
  rep.param("gamma", std::to_string(gamma));
  rep.param("k", std::to_string(k));
  auto lam = lambda.padded(n);
  std::vector<int> big(n), mid(n);  // lambda + k rho, lambda + (k-1) rho
  for (int i = 0; i < n; ++i) {
    big[i] = lam[i] + k * (n - 1 - i);
    mid[i] = lam[i] + (k - 1) * (n - 1 - i);
  }
  // c(Lambda; -q^{-gamma}) L_gamma(Lambda) at t = q^{-k}
  LocalValue lhs{0, RatFunc()};
  if (lam[n - 1] > gamma) {
    QGammaProduct c(RatFunc(1) / (RatFunc(1) - RatFunc::t_pow(1)).pow(n));
    for (int i = 0; i < n; ++i) c *= QGammaProduct::linear(th(2 * (n - 1 - i)) * qh(2 * (big[i] - gamma)));
    lhs = (c * baxter_eigenvalue(Partition(big), gamma, n)).at_t_power(-k);
  }
  // L_{gamma+1}(Lambda - rho) at t = q^{1-k}
  LocalValue rhs{0, RatFunc()};
  if (lam[n - 1] >= gamma + 1) rhs = baxter_eigenvalue(Partition(mid), gamma + 1, n).at_t_power(1 - k);
  rep.check(lhs == rhs, [&] {
    return "lhs " + lhs.lead.to_string() + " (order " + std::to_string(lhs.order) + ") vs rhs " +
           rhs.lead.to_string() + " (order " + std::to_string(rhs.order) + ")";
  });
  return rep;
}

std::vector<SymFunc> dual_baxter_apply(const Partition& lambda, int n, int M) {
  std::vector<SymFunc> out;
  auto lam = lambda.padded(n);
  for (int m = 0; m <= M; ++m) {
    SymFunc s(n, Field::qt);
    for (const auto& mu : horizontal_strips_above(lam, m))
      s += macdonald_P(Partition(mu), n).scaled(pieri_phi(mu, lam));
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

RatFunc t_to_t_over_q(const RatFunc& c) { return c.substitute(kT, th(1) * qh(-1)); }

}  // namespace

Report dual_baxter_equation_check(const Partition& lambda, int n, int k, int M) {
  Report rep("dual-baxter-equation");
  rep.param("lambda", lambda.to_string());
  rep.param("n", std::to_string(n));
  rep.param("k", std::to_string(k));
  rep.param("M", std::to_string(M));
  auto D = dual_baxter_apply(lambda, n, M);
  SymFunc p = macdonald_P(lambda, n);
  std::vector<SymFunc> e;
  for (int r = 0; r <= n; ++r) e.push_back(r == 0 ? SymFunc::constant(RatFunc(1), n) : elementary(r, n));
  for (int m = 0; m <= M; ++m) {
    // eigenvalue identity: prod(1 - z x_i) L_z(x; q, t) = L_{qz}(x; q, t/q)
    SymFunc lhs_eig(n), lhs_op(n);
    for (int r = 0; r <= std::min(m, n); ++r) {
      RatFunc sign(r % 2 ? -1 : 1);
      lhs_eig += (e[r] * gamma_row(m - r, n)).scaled(sign);
      lhs_op += (e[r] * D[m - r]).scaled(sign);
    }
    SymFunc rhs_eig = gamma_row(m, n).map_coeffs(t_to_t_over_q).scaled(RatFunc::q_pow(m));
    rep.check(lhs_eig == rhs_eig, [&] { return "eigenvalue identity fails at z^" + std::to_string(m); });
    rep.check(specialize_t(lhs_eig, -k) == specialize_t(rhs_eig, -k),
              [&] { return "eigenvalue identity at t=q^-k fails at z^" + std::to_string(m); });
    // operator form on P_lambda
    rep.check(lhs_op == rhs_eig * p, [&] { return "operator identity fails at z^" + std::to_string(m); });
  }
  return rep;
}

SymFunc recursion_I_apply(int last, const SymFunc& f, int k) {
  int l = f.rank();
  SymFunc g = kernel_integral(f, l + 1, last, k);
  LaurentSeries e = g.expand(x_vars(l + 1));
  Monomial shift;
  for (int i = 0; i <= l; ++i) shift.set(x_var(i), last);
  return SymFunc::collect(LaurentSeries(e.numer().shifted(shift), e.denom()), x_vars(l + 1), Field::q);
}

RatFunc recursion_I_constant(const Partition& nu, int l, int k) {
  if (l == 0) return RatFunc(1);
  auto loc = (QGammaProduct(b_norm(nu)) * torus_norm(nu, l)).at_t_power(k);
  if (loc.order != 0) throw std::logic_error("recursion_I_constant: singular norm");
  return loc.lead * RatFunc(factorial(l));
}

SymFunc mixed_representation(const Partition& lambda, int n, const std::vector<Stage>& eps, int k) {
  if (static_cast<int>(eps.size()) != n - 1) throw std::invalid_argument("mixed_representation: need n-1 stages");
  if (lambda.length() > n) throw std::invalid_argument("mixed_representation: partition longer than rank");
  std::map<std::vector<int>, SymFunc> memo;
  std::function<SymFunc(const std::vector<int>&)> build = [&](const std::vector<int>& lam) -> SymFunc {
    int j = static_cast<int>(lam.size());
    if (auto it = memo.find(lam); it != memo.end()) return it->second;
    SymFunc out(j, Field::q);
    if (j == 1) {
      out.set(Partition(lam), RatFunc(1));
    } else if (eps[j - 2] == Stage::II) {
      LaurentSeries acc;
      int w = 0;
      for (int x : lam) w += x;
      for (const auto& mu : interlacing_below(lam)) {
        RatFunc psi = branching_psi(lam, mu);
        if (psi.is_zero()) continue;
        int wm = 0;
        for (int x : mu) wm += x;
        LaurentSeries lower = build(mu).expand(x_vars(j - 1));
        acc += LaurentSeries(lower.numer().shifted(Monomial::unit(x_var(j - 1), w - wm)), lower.denom())
                   .scaled(specialize_t(psi, k));
      }
      out = SymFunc::collect(acc.reduced(), x_vars(j), Field::q);
    } else {
      std::vector<int> head(lam.begin(), lam.end() - 1), nu(head);
      for (int& x : nu) x -= lam.back();
      SymFunc raw = recursion_I_apply(lam.back(), build(head), k);
      out = raw.scaled(RatFunc(1) / recursion_I_constant(Partition(nu), j - 1, k));
    }
    memo.emplace(lam, out);
    return out;
  };
  return build(lambda.padded(n));
}

}  // namespace macbax
