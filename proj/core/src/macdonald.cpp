#include "macbax/macdonald.hpp"

#include <algorithm>
#include <stdexcept>

#include "macbax/cache.hpp"

namespace macbax {

std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > n) return out;
  std::vector<int> cur(r);
  for (int i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Monomial x_monomial(const std::vector<int>& a) {
  Monomial m;
  for (std::size_t i = 0; i < a.size(); ++i) m.set(x_var(static_cast<int>(i)), a[i]);
  return m;
}

RatFunc evaluate_at(const SymFunc& f, const std::vector<Monomial>& point) {
  if (static_cast<int>(point.size()) != f.rank()) throw std::invalid_argument("evaluate_at: point size");
  LaurentSeries s = f.expand();
  for (int i = 0; i < f.rank(); ++i) s = s.substitute(x_var(i), point[i]);
  return RatFunc(s.numer(), s.denom());
}

RatFunc elementary_value(int r, const std::vector<RatFunc>& y) {
  std::vector<RatFunc> e(r + 1);
  e[0] = RatFunc(1);
  for (const auto& v : y)
    for (int j = r; j >= 1; --j) e[j] += e[j - 1] * v;
  return e[r];
}

namespace {

RatFunc one_minus(const Monomial& m) { return RatFunc(Poly(1) - Poly::monomial(m)); }

// Gamma_{q,t/q}(t^a q^{b + n}) / Gamma_{q,t/q}(t^a q^b)
RatFunc ratio(int a, int b, int n) { return gamma_finite_ratio(t_over_q(), th(2 * a) * qh(2 * b), n); }

std::vector<int> pad(const std::vector<int>& v, std::size_t n) {
  std::vector<int> r = v;
  r.resize(std::max(n, v.size()), 0);
  return r;
}

}  // namespace

BasisEntry macdonald_gs(const Partition& lambda, int n, Extension ext) {
  return {lambda, n, gram_schmidt(lambda, n, Field::qt, ext), Construction::gram_schmidt};
}

RatFunc branching_psi(const std::vector<int>& lambda, const std::vector<int>& mu) {
  int l = static_cast<int>(mu.size());
  if (static_cast<int>(lambda.size()) != l + 1) throw std::invalid_argument("branching_psi: lengths");
  for (int i = 0; i < l; ++i)
    if (!(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1])) return RatFunc();
  if (lambda[l] < 0) return RatFunc();
  RatFunc r(1);
  // 0-based i <= j < l
  for (int i = 0; i < l; ++i)
    for (int j = i; j < l; ++j) {
      int d = j - i;
      r *= ratio(d, lambda[i] - mu[j] + 1, mu[i] - lambda[i]);
      r *= ratio(d, mu[i] - lambda[j + 1] + 1, lambda[i] - mu[i]);
    }
  return r;
}

namespace {

PolyTable& macdonald_table() {
  static PolyTable table("macdonald");
  return table;
}

SymFunc branch_poly(const Partition& lambda, int n) {
  if (lambda.length() > n) throw std::invalid_argument("macdonald_branch: partition longer than rank");
  if (n <= 1) {
    SymFunc s(n, Field::qt);
    s.set(lambda, RatFunc(1));
    return s;
  }
  return macdonald_table().get("qt", n, lambda, [&] {
    std::vector<int> lam = lambda.padded(n);
    std::vector<std::pair<std::vector<int>, RatFunc>> below;
    for (auto& mu : interlacing_below(lam)) {
      RatFunc psi = branching_psi(lam, mu);
      if (!psi.is_zero()) below.emplace_back(std::move(mu), std::move(psi));
    }
    std::map<std::vector<int>, SymFunc> lower;
    for (const auto& [mu, psi] : below) lower.emplace(mu, branch_poly(Partition(mu), n - 1));
    SymFunc out(n, Field::qt);
    for (const auto& nu : partitions_of(lambda.weight(), n)) {
      std::vector<int> v = nu.padded(n);
      int last = v.back();
      v.pop_back();
      Partition head(v);
      RatFunc c;
      for (const auto& [mu, psi] : below) {
        int w = 0;
        for (int x : mu) w += x;
        if (lambda.weight() - w != last) continue;
        c += psi * lower.at(mu).coeff(head);
      }
      out.set(nu, c);
    }
    return out;
  });
}

}  // namespace

BasisEntry macdonald_branch(const Partition& lambda, int n) {
  return {lambda, n, branch_poly(lambda, n), Construction::branching};
}

RatFunc b_norm(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  RatFunc r(1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda(i); ++j) {
      int arm = lambda(i) - j, leg = conj(j) - i;
      r *= one_minus(th(2 * (leg + 1)) * qh(2 * arm)) / one_minus(th(2 * leg) * qh(2 * (arm + 1)));
    }
  return r;
}

RatFunc b_norm_factored(const Partition& lambda) {
  int L = lambda.length();
  RatFunc r(1);
  for (int i = 1; i <= L; ++i) r /= ratio(0, 1, lambda(i) - lambda(i + 1));
  for (int i = 1; i <= L; ++i)
    for (int j = i + 1; j <= L; ++j)
      r *= ratio(j - i, lambda(i) - lambda(j + 1) + 1, lambda(j + 1) - lambda(j));
  return r;
}

QGammaProduct torus_norm(const Partition& lambda, int n) {
  std::vector<int> lam = lambda.padded(n);
  QGammaProduct g;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Monomial qpart = qh(2 * (lam[i] - lam[j] + 1));
      g *= QGammaProduct::gamma(t_over_q(), th(2 * (j - i - 1)) * qpart, 1);
      g *= QGammaProduct::gamma(t_over_q(), th(2 * (j - i)) * qpart, -1);
    }
  return g;
}

SymFunc apply_difference_operator(int r, const SymFunc& f, const CrossFactor& cross) {
  int n = f.rank();
  if (r < 1 || r > n) throw std::invalid_argument("apply_difference_operator: r out of range");
  LaurentSeries F = f.expand(x_vars(n));
  auto X = [](int i) { return Poly::var(x_var(i)); };
  Poly sum;
  for (const auto& I : subsets(n, r)) {
    std::vector<bool> in(n, false);
    for (int i : I) in[i] = true;
    Poly term = F.numer();
    for (int i : I) term = term.substitute(x_var(i), Monomial::unit(x_var(i)) * qh(2));
    Poly factor(1);
    int sign = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (in[a] == in[b]) factor *= X(a) - X(b);
        else if (in[a]) factor *= cross(a, b);
        else {
          factor *= cross(b, a);
          ++sign;
        }
      }
    if (sign % 2) factor = -factor;
    sum += factor * term;
  }
  Poly vdm(1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) vdm *= X(a) - X(b);
  auto q = sum.divide_exact(vdm);
  if (!q) throw std::logic_error("apply_difference_operator: Vandermonde division left a remainder");
  return SymFunc::collect(LaurentSeries(*q, F.denom()), x_vars(n), f.field());
}

SymFunc apply_macdonald_op(int r, const SymFunc& f) {
  SymFunc g = apply_difference_operator(r, f, [](int i, int j) {
    return Poly::monomial(Monomial::unit(x_var(i)) * th(2)) - Poly::var(x_var(j));
  });
  return g.scaled(RatFunc::monomial(th(r * (r - 1))));
}

RatFunc macdonald_eigenvalue(const Partition& lambda, int r, int n) {
  std::vector<int> lam = lambda.padded(n);
  std::vector<RatFunc> y;
  for (int i = 0; i < n; ++i) y.push_back(RatFunc::monomial(th(2 * (n - 1 - i)) * qh(2 * lam[i])));
  return elementary_value(r, y);
}

RatFunc macdonald_generating_eigenvalue(const std::vector<int>& lambda) {
  int n = static_cast<int>(lambda.size());
  RatFunc c = RatFunc(1) / (RatFunc(1) - RatFunc::t_pow(1)).pow(n);
  for (int i = 0; i < n; ++i)
    c *= RatFunc(1) + RatFunc::monomial(th(2 * (n - 1 - i)) * qh(2 * lambda[i]) * Monomial::unit(kSpec));
  return c;
}

RatFunc dual_op_coefficient(const std::vector<int>& I, const std::vector<int>& lam) {
  int n = static_cast<int>(lam.size());
  std::vector<bool> in(n, false);
  for (int i : I) in[i] = true;
  RatFunc c(1);
  for (int i : I)
    for (int j = 0; j < i; ++j) {
      if (in[j]) continue;
      int d = i - j, g = lam[j] - lam[i];
      c *= one_minus(th(2 * (d + 1)) * qh(2 * (g - 1))) / one_minus(th(2 * d) * qh(2 * (g - 1)));
      c *= one_minus(th(2 * (d - 1)) * qh(2 * g)) / one_minus(th(2 * d) * qh(2 * g));
      if (c.is_zero()) return c;
    }
  return c;
}

RatFunc pieri_phi(const std::vector<int>& mu_in, const std::vector<int>& lambda_in) {
  std::size_t n = std::max(mu_in.size(), lambda_in.size());
  auto mu = pad(mu_in, n), lam = pad(lambda_in, n);
  if (n == 0) return RatFunc(1);
  if (mu[0] < lam[0]) return RatFunc();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (lam[i] < mu[i + 1] || mu[i + 1] < lam[i + 1]) return RatFunc();
  RatFunc r(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      int d = static_cast<int>(j - i);
      r *= ratio(d, mu[i] - lam[j] + 1, lam[j] - mu[j]);
      if (j + 1 < n) r *= ratio(d, lam[i] - mu[j + 1] + 1, mu[j + 1] - lam[j + 1]);
    }
  return r;
}

SymFunc gamma_row(int m, int n) {
  SymFunc s(n, Field::qt);
  for (const auto& nu : partitions_of(m, n)) {
    RatFunc c(1);
    for (int p : nu.parts()) c *= gamma_qt_coeff(p);
    s.set(nu, c);
  }
  return s;
}

namespace {

LaurentSeries graded(const LaurentSeries& s, int d) {
  return s * LaurentSeries(Poly::var(kAux, d));
}

}  // namespace

LaurentSeries cauchy_kernel(int n, int m, int D, const std::function<RatFunc(int)>& coeff) {
  auto xv = x_vars(n), yv = y_vars(m);
  LaurentSeries kernel(Poly(1));
  kernel.truncate_aux(kAux, D);
  std::vector<RatFunc> c;
  for (int a = 0; a <= D; ++a) c.push_back(coeff(a));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      LaurentSeries factor;
      for (int a = 0; a <= D; ++a) {
        Monomial mono = Monomial::unit(xv[i], a) * Monomial::unit(yv[j], a) * Monomial::unit(kAux, a);
        factor += LaurentSeries(c[a].num().shifted(mono), c[a].den());
      }
      factor.truncate_aux(kAux, D);
      kernel = kernel * factor;
    }
  return kernel;
}

Report cauchy_compare(Report rep, int n, int m, int D, const std::function<RatFunc(int)>& coeff,
                      const std::function<LaurentSeries(const Partition&)>& term, bool perturb) {
  rep.param("n", std::to_string(n));
  rep.param("m", std::to_string(m));
  rep.param("D", std::to_string(D));
  LaurentSeries kernel = cauchy_kernel(n, m, D, coeff);
  LaurentSeries sum;
  for (const auto& lam : partitions_up_to(D, std::min(n, m))) sum += graded(term(lam), lam.weight());
  if (perturb && D >= 1)
    sum += LaurentSeries(Poly::monomial(Monomial::unit(x_var(0), D) * Monomial::unit(y_var(0), D) *
                                        Monomial::unit(kAux, D) * qh(2)));
  LaurentSeries diff = (sum - kernel).reduced();
  auto by_degree = diff.numer().coeffs_in(kAux);
  for (int d = 0; d <= D; ++d) {
    auto it = by_degree.find(d);
    bool ok = it == by_degree.end() || it->second.is_zero();
    rep.check(ok, [&] { return "bidegree (" + std::to_string(d) + "," + std::to_string(d) + ") differs"; });
  }
  return rep;
}

Report cauchy_check(int n, int m, int D, bool perturb) {
  Report rep("cauchy");
  rep.param("family", "macdonald");
  return cauchy_compare(
      rep, n, m, D, gamma_qt_coeff,
      [&](const Partition& lam) {
        return (macdonald_P(lam, n).expand(x_vars(n)) * macdonald_P(lam, m).expand(y_vars(m))).scaled(b_norm(lam));
      },
      perturb);
}

namespace {

// t^{rho(lambda)} prod_{a<b} Gamma_{q,t}(t^{b-a} q^{la-lb}) / Gamma_{q,t}(t^{b-a}) P_lambda(q^mu t^rho)
RatFunc dual_side(const Partition& lambda, const Partition& mu, int n) {
  auto lam = lambda.padded(n), mv = mu.padded(n);
  int rho_half = 0;  // t exponent in half units
  for (int i = 0; i < n; ++i) rho_half += (n + 1 - 2 * (i + 1)) * lam[i];
  RatFunc r = RatFunc::monomial(th(rho_half));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) r *= gamma_finite_ratio(th(2), th(2 * (b - a)), lam[a] - lam[b]);
  std::vector<Monomial> point;
  for (int i = 0; i < n; ++i) point.push_back(qh(2 * mv[i]) * th(n + 1 - 2 * (i + 1)));
  return r * evaluate_at(macdonald_P(lambda, n), point);
}

}  // namespace

Report self_duality_check(const Partition& lambda, const Partition& mu, int k, int n) {
  Report rep("duality");
  rep.param("lambda", lambda.to_string());
  rep.param("mu", mu.to_string());
  rep.param("k", std::to_string(k));
  RatFunc a = dual_side(lambda, mu, n), b = dual_side(mu, lambda, n);
  rep.check(a == b, [&] { return "generic: " + a.to_string() + " vs " + b.to_string(); });
  LocalValue la = local_at_t_power(a, -k), lb = local_at_t_power(b, -k);
  rep.check(la == lb, [&] {
    return "t=q^-" + std::to_string(k) + ": " + la.lead.to_string() + " (order " +
           std::to_string(la.order) + ") vs " + lb.lead.to_string() + " (order " +
           std::to_string(lb.order) + ")";
  });
  return rep;
}

}  // namespace macbax
