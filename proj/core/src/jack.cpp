#include "macbax/jack.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "macbax/macdonald.hpp"
#include "macbax/orthogonal.hpp"

namespace macbax {

namespace {

Poly kappa_lin(int a, int c) { return Poly::var(kKappa).scaled(a) + Poly(c); }

int weight_of(const std::vector<int>& v) {
  int w = 0;
  for (int x : v) w += x;
  return w;
}

mpz_class fact(long n) {
  mpz_class r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// Gamma product to a rational function; a leftover Gamma(a kappa) power means the slopes did not pair.
RatFunc paired(const KappaGammaProduct& g, const char* where) {
  auto r = g.reduce();
  if (!r.formal.empty()) throw std::logic_error(std::string(where) + ": unpaired Gamma slope");
  return r.scalar;
}

mpq_class regular_value(const KappaGammaProduct& g, long kappa, const char* where) {
  auto loc = g.at_kappa(kappa);
  if (loc.lead == 0) return 0;
  if (loc.order != 0) throw std::domain_error(std::string(where) + ": Gamma product singular at this kappa");
  return loc.lead;
}

SymFunc times_x_power(const SymFunc& f, int c) {
  int n = f.rank();
  LaurentSeries e = f.expand(x_vars(n));
  Monomial shift;
  for (int i = 0; i < n; ++i) shift.set(x_var(i), c);
  return SymFunc::collect(LaurentSeries(e.numer().shifted(shift), e.denom()), x_vars(n), f.field());
}

// x_i d/dx_i on a polynomial: multiply by the x_i exponent
Poly euler(const Poly& p, int i) {
  std::vector<Poly::Term> ts;
  for (const auto& t : p.terms()) ts.push_back({t.mono, t.coeff * t.mono[x_var(i)]});
  return Poly::from_terms(std::move(ts));
}

SymFunc jack_row_at(int m, int n, long kappa) { return at_kappa(gamma_kappa_row(m, n), kappa); }

}  // namespace

SymFunc jack_gs(const Partition& lambda, int n) { return gram_schmidt(lambda, n, Field::kappa); }

mpq_class at_kappa(const RatFunc& c, long kappa) {
  auto v = c.try_eval(kKappa, kappa);
  if (!v) throw std::domain_error("at_kappa: pole at kappa = " + std::to_string(kappa));
  return v->constant_value();
}

SymFunc at_kappa(const SymFunc& f, long kappa) {
  return f.map_coeffs([&](const RatFunc& c) { return RatFunc(at_kappa(c, kappa)); });
}

RatFunc jack_b(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  RatFunc r(1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda(i); ++j) {
      int lc = conj(j);
      r *= RatFunc(kappa_lin(lc + 1 - i, lambda(i) - j)) / RatFunc(kappa_lin(lc - i, lambda(i) + 1 - j));
    }
  return r;
}

KappaGammaProduct jack_torus_norm(const Partition& lambda, int n) {
  auto lam = lambda.padded(n);
  KappaGammaProduct g;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int gap = lam[i] - lam[j], d = j - i;
      g *= KappaGammaProduct::gamma(gap, d + 1) * KappaGammaProduct::gamma(gap + 1, d - 1) *
           KappaGammaProduct::gamma(gap, d, -1) * KappaGammaProduct::gamma(gap + 1, d, -1);
    }
  return g;
}

Report jack_torus_norm_check(const Partition& lambda, int n, long kappa) {
  Report rep("jack-torus-norm");
  rep.param("lambda", lambda.to_string());
  rep.param("kappa", std::to_string(kappa));
  SymFunc p = at_kappa(jack_gs(lambda, n), kappa);
  mpq_class direct = sp_torus(p, p, {WeightKind::jack, static_cast<int>(kappa), n}).constant_value();
  mpq_class formula = regular_value(jack_torus_norm(lambda, n), kappa, "jack_torus_norm");
  rep.check(direct == formula, [&] { return "CT " + direct.get_str() + " vs formula " + formula.get_str(); });
  return rep;
}

// ---- Sekiguchi

SymFunc sekiguchi_apply(const SymFunc& f) {
  int n = f.rank();
  auto xv = x_vars(n);
  LaurentSeries F = f.expand(xv);
  auto parts = split_by(F.numer(), xv);
  std::vector<int> rho(n);
  for (int i = 0; i < n; ++i) rho[i] = n - 1 - i;
  Poly sum;
  std::vector<int> a = rho;
  std::sort(a.begin(), a.end());
  do {
    // sign of the permutation a of rho (rho is strictly decreasing)
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (a[i] < a[j]) ++inv;
    for (const auto& [beta, c] : parts) {
      Poly term = c;
      Monomial m;
      for (int i = 0; i < n; ++i) {
        term *= Poly::var(kSpec) + kappa_lin(a[i], beta[i]);
        m.set(x_var(i), beta[i] + a[i]);
      }
      term = term.shifted(m);
      if (inv % 2) sum -= term;
      else sum += term;
    }
  } while (std::next_permutation(a.begin(), a.end()));
  Poly vdm(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) vdm *= Poly::var(x_var(i)) - Poly::var(x_var(j));
  auto q = sum.divide_exact(vdm);
  if (!q) throw std::logic_error("sekiguchi_apply: Vandermonde division left a remainder");
  return SymFunc::collect(LaurentSeries(*q, F.denom()), xv, Field::kappa);
}

SymFunc sekiguchi_hamiltonian(int r, const SymFunc& f) {
  int n = f.rank();
  SymFunc g = sekiguchi_apply(f);
  return g.map_coeffs([&](const RatFunc& c) {
    auto cs = c.num().coeffs_in(kSpec);
    auto it = cs.find(n - r);
    return it == cs.end() ? RatFunc() : RatFunc(it->second, c.den());
  });
}

RatFunc sekiguchi_eigenvalue(const Partition& lambda, int n) {
  auto lam = lambda.padded(n);
  Poly r(1);
  for (int i = 0; i < n; ++i) r *= Poly::var(kSpec) + kappa_lin(n - 1 - i, lam[i]);
  return RatFunc(r);
}

SymFunc jack_H1(const SymFunc& f) {
  int n = f.rank();
  auto xv = x_vars(n);
  LaurentSeries F = f.expand(xv);
  Poly s;
  for (int i = 0; i < n; ++i) s += euler(F.numer(), i) + F.numer() * kappa_lin(n - 1 - i, 0);
  return SymFunc::collect(LaurentSeries(s, F.denom()), xv, Field::kappa);
}

SymFunc jack_H2(const SymFunc& f) {
  int n = f.rank();
  auto xv = x_vars(n);
  LaurentSeries F = f.expand(xv);
  const Poly& p = F.numer();
  auto shifted_D = [&](const Poly& g, int i) { return euler(g, i) + g * kappa_lin(n - 1 - i, 0); };
  Poly s;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += shifted_D(shifted_D(p, j), i);
  Poly k = Poly::var(kKappa);
  for (int i = 0; i < n; ++i) s += k * euler(p, i).scaled(n - 1 - i);
  // sum_{j != i} x_i/(x_j - x_i) D_i, paired over i < j
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly num = Poly::var(x_var(i)) * euler(p, i) - Poly::var(x_var(j)) * euler(p, j);
      auto q = num.divide_exact(Poly::var(x_var(j)) - Poly::var(x_var(i)));
      if (!q) throw std::logic_error("jack_H2: pair term not divisible");
      s += k * *q;
    }
  return SymFunc::collect(LaurentSeries(s, F.denom()), xv, Field::kappa);
}

// ---- dual Hamiltonians

RatFunc jack_dual_coefficient(const std::vector<int>& I, const std::vector<int>& lam) {
  int n = static_cast<int>(lam.size());
  std::vector<bool> in(n, false);
  for (int i : I) in[i] = true;
  RatFunc c(1);
  for (int i : I)
    for (int j = 0; j < n; ++j) {
      if (in[j]) continue;
      int g = lam[j] - lam[i] - 1;
      c *= RatFunc(kappa_lin(i - j + 1, g)) / RatFunc(kappa_lin(i - j, g));
    }
  return c;
}

KappaGammaProduct jack_dual_normalization(const std::vector<int>& lam) {
  int n = static_cast<int>(lam.size());
  KappaGammaProduct g;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int gap = lam[i] - lam[j], d = j - i;
      g *= KappaGammaProduct::gamma(gap + 1, d) * KappaGammaProduct::gamma(gap + 1, d - 1, -1);
    }
  return g;
}

RatFunc jack_dual_conjugated_coefficient(const std::vector<int>& I, const std::vector<int>& lam) {
  std::vector<int> up = lam;
  for (int i : I) ++up[i];
  KappaGammaProduct g(jack_dual_coefficient(I, lam));
  g *= jack_dual_normalization(up) * jack_dual_normalization(lam).inverse();
  return paired(g, "jack_dual_conjugated_coefficient");
}

// ---- Pieri and Cauchy

RatFunc jack_pieri_phi(const std::vector<int>& mu_in, const std::vector<int>& lambda_in) {
  std::size_t n = std::max(mu_in.size(), lambda_in.size());
  std::vector<int> mu = mu_in, lam = lambda_in;
  mu.resize(n, 0);
  lam.resize(n, 0);
  if (n == 0) return RatFunc(1);
  if (mu[0] < lam[0]) return RatFunc();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (lam[i] < mu[i + 1] || mu[i + 1] < lam[i + 1]) return RatFunc();
  KappaGammaProduct g;
  using G = KappaGammaProduct;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      int d = static_cast<int>(j - i);
      g *= G::gamma(mu[i] - mu[j] + 1, d) * G::gamma(mu[i] - mu[j], d + 1, -1);
      g *= G::gamma(mu[i] - lam[j], d + 1) * G::gamma(mu[i] - lam[j] + 1, d, -1);
      if (j + 1 < n) {
        g *= G::gamma(lam[i] - lam[j + 1] + 1, d) * G::gamma(lam[i] - lam[j + 1], d + 1, -1);
        g *= G::gamma(lam[i] - mu[j + 1], d + 1) * G::gamma(lam[i] - mu[j + 1] + 1, d, -1);
      }
    }
  return paired(g, "jack_pieri_phi");
}

SymFunc gamma_kappa_row(int m, int n) {
  SymFunc r(n, Field::kappa);
  for (const auto& nu : partitions_of(m, n)) {
    RatFunc c(1);
    for (int part : nu.parts()) c *= gamma_kappa_coeff(part);
    r.set(nu, c);
  }
  return r;
}

Report jack_cauchy_check(int n, int m, int D, long kappa, bool perturb) {
  Report rep("cauchy");
  rep.param("family", "jack");
  rep.param("kappa", std::to_string(kappa));
  return cauchy_compare(
      rep, n, m, D, [kappa](int a) { return RatFunc(gamma_kappa_coeff(a, kappa)); },
      [&](const Partition& lam) {
        return (at_kappa(jack_gs(lam, n), kappa).expand(x_vars(n)) *
                at_kappa(jack_gs(lam, m), kappa).expand(y_vars(m)))
            .scaled(RatFunc(at_kappa(jack_b(lam), kappa)));
      },
      perturb);
}

// ---- Baxter operators

SymFunc jack_baxter_apply(const SymFunc& f, int gamma, long kappa) {
  if (kappa < 1) throw std::invalid_argument("jack_baxter_apply: kappa must be a positive integer");
  int n = f.rank();
  LaurentSeries w = n > 0 ? weight_delta({WeightKind::jack, static_cast<int>(kappa), n}) : LaurentSeries(Poly(1));
  SymFunc g = pairing_integral(f, n, gamma, w, [&](int m) { return jack_row_at(m, n, kappa); });
  g.set_field(Field::kappa);
  // measure Gamma(kappa)^n / n!
  mpz_class cn = 1;
  for (int i = 0; i < n; ++i) cn *= fact(kappa - 1);
  return times_x_power(g, gamma).scaled(RatFunc(mpq_class(cn, fact(n))));
}

mpq_class jack_baxter_eigenvalue(const Partition& lambda, int gamma, int n, long kappa) {
  auto lam = lambda.padded(n);
  if (n > 0 && gamma > lam[n - 1]) return 0;
  KappaGammaProduct g;
  for (int i = 0; i < n; ++i) {
    int rho = n - 1 - i;
    g *= KappaGammaProduct::gamma(lam[i] - gamma, rho + 1) * KappaGammaProduct::gamma(lam[i] - gamma + 1, rho, -1);
  }
  return regular_value(g, kappa, "jack_baxter_eigenvalue");
}

Report jack_baxter_equation_check(const Partition& lambda, int n, int gamma, long kappa) {
  Report rep("jack-baxter-equation");
  rep.param("lambda", lambda.to_string());
  rep.param("gamma", std::to_string(gamma));
  rep.param("kappa", std::to_string(kappa));
  auto lam = lambda.padded(n);
  mpq_class L0 = jack_baxter_eigenvalue(lambda, gamma, n, kappa);
  mpq_class L1 = jack_baxter_eigenvalue(lambda, gamma - 1, n, kappa);
  mpq_class lhs = L0, rhs = L1;
  for (int i = 0; i < n; ++i) {
    long rk = (n - 1 - i) * kappa;
    lhs *= kappa - gamma + lam[i] + rk;
    rhs *= 1 - gamma + lam[i] + rk;
  }
  rep.check(lhs == rhs, [&] { return "spectral: " + lhs.get_str() + " vs " + rhs.get_str(); });

  SymFunc p = at_kappa(jack_gs(lambda, n), kappa);
  SymFunc q0 = jack_baxter_apply(p, gamma, kappa), q1 = jack_baxter_apply(p, gamma - 1, kappa);
  rep.check(q0 == p.scaled(RatFunc(L0)), [&] { return "action at gamma: " + q0.to_string(); });
  rep.check(q1 == p.scaled(RatFunc(L1)), [&] { return "action at gamma-1: " + q1.to_string(); });
  // D(kappa - gamma) Q_gamma P = D(1 - gamma) Q_{gamma-1} P, with the differential operator itself
  auto D_at = [&](const SymFunc& f, long X) {
    return sekiguchi_apply(f).map_coeffs([&](const RatFunc& c) { return c.eval(kSpec, X).eval(kKappa, kappa); });
  };
  SymFunc a = D_at(q0, kappa - gamma), b = D_at(q1, 1 - gamma);
  rep.check(a == b, [&] { return "operator form: " + a.to_string() + " vs " + b.to_string(); });
  return rep;
}

std::vector<SymFunc> jack_dual_baxter_apply(const Partition& lambda, int n, int M) {
  auto lam = lambda.padded(n);
  std::vector<SymFunc> out;
  for (int m = 0; m <= M; ++m) {
    SymFunc s(n, Field::kappa);
    for (const auto& mu : horizontal_strips_above(lam, m)) s += jack_gs(Partition(mu), n).scaled(jack_pieri_phi(mu, lam));
    out.push_back(std::move(s));
  }
  return out;
}

Report jack_dual_baxter_equation_check(const Partition& lambda, int n, int M) {
  Report rep("jack-dual-baxter-equation");
  rep.param("lambda", lambda.to_string());
  rep.param("M", std::to_string(M));
  SymFunc p = jack_gs(lambda, n);
  auto D = jack_dual_baxter_apply(lambda, n, M);
  // kappa -> kappa - 1 on coefficients
  auto minus_one = [](const SymFunc& f) {
    auto shift = [](const Poly& p) {
      Poly r;
      for (const auto& [e, c] : p.coeffs_in(kKappa)) r += c * (Poly::var(kKappa) - Poly(1)).pow(e);
      return r;
    };
    return f.map_coeffs([&](const RatFunc& c) { return RatFunc(shift(c.num()), shift(c.den())); });
  };
  for (int m = 0; m <= M; ++m) {
    SymFunc g = gamma_kappa_row(m, n);
    // action: z^m of prod (1 - z x_i)^{-kappa} P_lambda
    rep.check(D[m] == g * p, [&] { return "action z^" + std::to_string(m) + ": " + D[m].to_string(); });
    // eigenvalue equation: sum_r (-1)^r e_r g^{(kappa)}_{m-r} = g^{(kappa-1)}_m
    SymFunc lhs(n, Field::kappa), op(n, Field::kappa);
    for (int r = 0; r <= std::min(m, n); ++r) {
      SymFunc er = r == 0 ? SymFunc::constant(RatFunc(1), n, Field::kappa) : elementary(r, n, Field::kappa);
      SymFunc t = er * gamma_kappa_row(m - r, n), u = er * D[m - r];
      if (r % 2) {
        lhs -= t;
        op -= u;
      } else {
        lhs += t;
        op += u;
      }
    }
    SymFunc g1 = minus_one(g);
    rep.check(lhs == g1, [&] { return "eigenvalue z^" + std::to_string(m) + ": " + lhs.to_string(); });
    rep.check(op == g1 * p, [&] { return "operator z^" + std::to_string(m) + ": " + op.to_string(); });
  }
  return rep;
}

// ---- recursions

KappaGammaProduct jack_branch_kernel(const std::vector<int>& big, const std::vector<int>& small) {
  std::size_t l = small.size();
  if (big.size() != l + 1) throw std::invalid_argument("jack_branch_kernel: ranks must differ by one");
  if (!interlaces(big, small)) return KappaGammaProduct(RatFunc());
  using G = KappaGammaProduct;
  G g;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i; j < l; ++j) {
      int d = static_cast<int>(j - i);
      g *= G::gamma(big[i] - big[j] + 1, d) * G::gamma(big[i] - big[j], d + 1, -1);
      g *= G::gamma(big[i] - small[j], d + 1) * G::gamma(big[i] - small[j] + 1, d, -1);
      // terms with small_{l+1} are left out
      if (j + 1 < l) g *= G::gamma(small[i] - small[j + 1] + 1, d) * G::gamma(small[i] - small[j + 1], d + 1, -1);
      g *= G::gamma(small[i] - big[j + 1], d + 1) * G::gamma(small[i] - big[j + 1] + 1, d, -1);
    }
  return g;
}

RatFunc jack_branch_psi(const std::vector<int>& big, const std::vector<int>& small) {
  std::size_t l = small.size();
  if (big.size() != l + 1) throw std::invalid_argument("jack_branch_psi: ranks must differ by one");
  if (!interlaces(big, small)) return RatFunc();
  using G = KappaGammaProduct;
  G g;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i; j < l; ++j) {
      int d = static_cast<int>(j - i);
      // Gamma(a + 1 + d kappa) / Gamma(a + (d + 1) kappa), the limit of (t u; q)/(q u; q) at u = q^a t^d
      auto F = [d](int a, int e) { return G::gamma(a + 1, d, e) * G::gamma(a, d + 1, -e); };
      g *= F(small[i] - small[j], 1) * F(big[i] - big[j + 1], 1) * F(big[i] - small[j], -1) *
           F(small[i] - big[j + 1], -1);
    }
  return paired(g, "jack_branch_psi");
}

SymFunc jack_mixed(const Partition& lambda, int n, const std::vector<Stage>& eps, long kappa) {
  if (static_cast<int>(eps.size()) != std::max(n - 1, 0)) throw std::invalid_argument("jack_mixed: need n-1 stages");
  if (lambda.length() > n) throw std::invalid_argument("jack_mixed: partition longer than rank");
  bool numeric = kappa >= 1;
  if (!numeric && std::find(eps.begin(), eps.end(), Stage::I) != eps.end())
    throw std::invalid_argument("jack_mixed: integral stages need a positive integer kappa");
  auto coeff = [&](const RatFunc& c) { return numeric ? RatFunc(at_kappa(c, kappa)) : c; };
  std::map<std::vector<int>, SymFunc> memo;
  std::function<SymFunc(const std::vector<int>&)> build = [&](const std::vector<int>& lam) -> SymFunc {
    int j = static_cast<int>(lam.size());
    if (auto it = memo.find(lam); it != memo.end()) return it->second;
    SymFunc out(j, Field::kappa);
    if (j == 1) {
      out.set(Partition(lam), RatFunc(1));
    } else if (eps[j - 2] == Stage::II) {
      LaurentSeries acc;
      int w = weight_of(lam);
      for (const auto& mu : interlacing_below(lam)) {
        RatFunc c = coeff(jack_branch_psi(lam, mu));
        if (c.is_zero()) continue;
        LaurentSeries lower = build(mu).expand(x_vars(j - 1));
        acc += LaurentSeries(lower.numer().shifted(Monomial::unit(x_var(j - 1), w - weight_of(mu))), lower.denom())
                   .scaled(c);
      }
      out = SymFunc::collect(acc.reduced(), x_vars(j), Field::kappa);
    } else {
      std::vector<int> head(lam.begin(), lam.end() - 1), nu(head);
      int last = lam.back();
      for (int& x : nu) x -= last;
      LaurentSeries w = j - 1 > 0 ? weight_delta({WeightKind::jack, static_cast<int>(kappa), j - 1}) : LaurentSeries(Poly(1));
      SymFunc g = pairing_integral(build(head), j, last, w, [&](int m) { return jack_row_at(m, j, kappa); });
      g.set_field(Field::kappa);
      // raw integral on P_{nu + last} is l! b_nu <P_nu, P_nu>'_l times P
      mpq_class c = regular_value(jack_torus_norm(Partition(nu), j - 1), kappa, "jack_mixed");
      c *= at_kappa(jack_b(Partition(nu)), kappa) * mpq_class(fact(j - 1));
      out = times_x_power(g, last).scaled(RatFunc(mpq_class(1) / c));
    }
    memo.emplace(lam, out);
    return out;
  };
  return build(lambda.padded(std::max(n, 1)));
}

SymFunc jack_recursion(const Partition& lambda, int n, JackRecursionMode mode, long kappa) {
  std::vector<Stage> eps(std::max(n - 1, 0), mode == JackRecursionMode::sum ? Stage::II : Stage::I);
  return jack_mixed(lambda, n, eps, mode == JackRecursionMode::sum ? 0 : kappa);
}

SymFunc gl2_example(int l1, int l2) {
  if (l1 < l2 || l2 < 0) throw std::invalid_argument("gl2_example: need l1 >= l2 >= 0");
  using G = KappaGammaProduct;
  LaurentSeries acc;
  for (int mu = l2; mu <= l1; ++mu) {
    G g = G::gamma(l1 - mu, 1) * G::gamma(mu - l2, 1) * G::gamma(l1 - l2, 1, -1);
    g *= G::gamma(l1 - l2 + 1, 0) * G::gamma(l1 - mu + 1, 0, -1) * G::gamma(mu - l2 + 1, 0, -1);
    g *= G::gamma(0, 1, -1);  // divided by Gamma(kappa)
    Monomial m;
    m.set(x_var(0), mu);
    m.set(x_var(1), l1 + l2 - mu);
    acc += LaurentSeries(Poly::monomial(m)).scaled(paired(g, "gl2_example"));
  }
  return SymFunc::collect(acc.reduced(), x_vars(2), Field::kappa);
}

// ---- degeneration

JackLimitResult jack_macdonald_limit_check(int max_weight, int n, long kappa, double hbar, double tol) {
  using F = boost::multiprecision::cpp_bin_float_100;
  JackLimitResult res;
  res.report = Report("jack-macdonald-limit");
  res.report.param("kappa", std::to_string(kappa));
  res.report.param("hbar", std::to_string(hbar));
  const F h(hbar);
  // q^(e/2) t^(f/2) at q = exp(-hbar), t = q^kappa
  auto eval_poly = [&](const Poly& p) {
    F s = 0;
    for (const auto& t : p.terms()) {
      F e = -h * (F(t.mono[kQ]) + F(kappa) * F(t.mono[kT])) / 2;
      s += F(t.coeff.get_str()) * exp(e);
    }
    return s;
  };
  auto to_F = [](const mpq_class& v) { return F(v.get_num().get_str()) / F(v.get_den().get_str()); };
  for (const auto& lam : partitions_up_to(max_weight, n)) {
    SymFunc mac = macdonald_P(lam, n), jac = jack_gs(lam, n);
    for (const auto& mu : partitions_up_to(max_weight, n)) {
      if (mu.weight() != lam.weight()) continue;
      RatFunc mc = mac.coeff(mu);
      F approx = mc.is_zero() ? F(0) : eval_poly(mc.num()) / eval_poly(mc.den());
      F exact = to_F(at_kappa(jac.coeff(mu), kappa));
      F err = abs(approx - exact);
      if (exact != 0) err /= abs(exact);
      double e = static_cast<double>(err);
      res.max_rel_error = std::max(res.max_rel_error, e);
      res.report.check(e < tol, [&] {
        return "P_" + lam.to_string() + " at m_" + mu.to_string() + ": relative error " + std::to_string(e);
      });
    }
  }
  return res;
}

}  // namespace macbax
