#include "macbax/gammakit.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace macbax {

namespace {

Poly one_minus(const Monomial& m) { return Poly(1) - Poly::monomial(m); }

std::vector<int> key_of(const Monomial& m) { return {m.exp.begin(), m.exp.end()}; }

// Order of vanishing of p at the root of d (repeated exact division).
int vanishing_order(Poly& p, const Poly& d, const std::function<bool(const Poly&)>& vanishes) {
  int order = 0;
  while (!p.is_zero() && vanishes(p)) {
    auto r = p.divide_exact(d);
    if (!r) throw std::logic_error("vanishing_order: inexact division");
    p = std::move(*r);
    ++order;
  }
  return order;
}

}  // namespace

Poly q_pochhammer(const Monomial& x, int n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: negative length");
  Poly r(1);
  for (int j = 0; j < n; ++j) r *= one_minus(x * qh(2 * j));
  return r;
}

Poly q_factorial(int n) { return q_pochhammer(qh(2), n); }

RatFunc gamma_qt_coeff(int n) {
  if (n < 0) throw std::invalid_argument("gamma_qt_coeff: n < 0");
  return RatFunc(q_pochhammer(th(2), n), q_factorial(n));
}

RatFunc gamma_q_coeff(int n) {
  if (n < 0) throw std::invalid_argument("gamma_q_coeff: n < 0");
  return RatFunc(Poly(1), q_factorial(n));
}

RatFunc gamma_kappa_coeff(int n) {
  if (n < 0) throw std::invalid_argument("gamma_kappa_coeff: n < 0");
  RatFunc r = rising_ratio(RatFunc::var(kKappa), n);
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return r / RatFunc(f);
}

mpq_class gamma_kappa_coeff(int n, long kappa) {
  mpq_class r = 1;
  for (int j = 0; j < n; ++j) r *= mpq_class(kappa + j, j + 1);
  r.canonicalize();
  return r;
}

RatFunc gamma_finite_ratio(const Monomial& s, const Monomial& x, int n) {
  Poly num(1), den(1);
  if (n >= 0) {
    for (int j = 0; j < n; ++j) {
      Monomial xj = x * qh(2 * j);
      num *= one_minus(xj);
      den *= one_minus(s * xj);
    }
  } else {
    for (int j = 0; j < -n; ++j) {
      Monomial xj = x * qh(2 * (n + j));
      num *= one_minus(s * xj);
      den *= one_minus(xj);
    }
  }
  if (den.is_zero()) throw std::domain_error("gamma_finite_ratio: pole");
  return RatFunc(num, den);
}

RatFunc rising_ratio(const RatFunc& x, int n) {
  RatFunc r(1);
  if (n >= 0) {
    for (int j = 0; j < n; ++j) r *= x + RatFunc(j);
  } else {
    for (int j = n; j < 0; ++j) {
      RatFunc f = x + RatFunc(j);
      if (f.is_zero()) throw std::domain_error("rising_ratio: pole");
      r /= f;
    }
  }
  return r;
}

// ---- local expansions

LocalValue local_at_t_power(const RatFunc& f, int k) {
  if (f.is_zero()) return {0, RatFunc(0)};
  const Poly root = Poly::monomial(th(1)) - Poly::monomial(qh(k));
  auto vanishes = [&](const Poly& p) { return specialize_t(p, k).is_zero(); };
  Poly n = f.num(), d = f.den();
  int order = vanishing_order(n, root, vanishes) - vanishing_order(d, root, vanishes);
  RatFunc lead = RatFunc(specialize_t(n, k), specialize_t(d, k));
  // t^(1/2) - q^(k/2) = q^(k/2) eps / 2 + O(eps^2)
  RatFunc step = RatFunc::monomial(qh(k)) / RatFunc(2);
  return {order, lead * step.pow(order)};
}

bool operator==(const LocalValue& a, const LocalValue& b) {
  if (a.lead.is_zero() || b.lead.is_zero()) return a.lead.is_zero() && b.lead.is_zero();
  return a.order == b.order && a.lead == b.lead;
}

// ---- QGammaProduct

QGammaProduct QGammaProduct::gamma(const Monomial& s, const Monomial& x, int e) {
  QGammaProduct g;
  if (e != 0) g.factors_.push_back({s, x, e});
  return g;
}

QGammaProduct QGammaProduct::linear(const Monomial& x, int e) {
  QGammaProduct g;
  if (e != 0) g.linear_.push_back({x, e});
  return g;
}

QGammaProduct& QGammaProduct::operator*=(const QGammaProduct& o) {
  scalar_ *= o.scalar_;
  factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
  linear_.insert(linear_.end(), o.linear_.begin(), o.linear_.end());
  return *this;
}

QGammaProduct QGammaProduct::inverse() const {
  QGammaProduct r(scalar_.inverse());
  for (auto f : factors_) r.factors_.push_back({f.s, f.x, -f.e});
  for (auto l : linear_) r.linear_.push_back({l.x, -l.e});
  return r;
}

QGammaProduct::Reduced QGammaProduct::reduce() const {
  Reduced r{scalar_, {}};
  Poly num(1), den(1);
  for (const auto& l : linear_) {
    Poly p = one_minus(l.x);
    for (int i = 0; i < std::abs(l.e); ++i) (l.e > 0 ? num : den) *= p;
  }
  for (const auto& f : factors_) {
    int xq = f.x.exp[kQ];
    int base = (xq % 2 == 0) ? 2 : 1;
    Monomial x0 = f.x;
    x0.set(kQ, base);
    RatFunc ratio = gamma_finite_ratio(f.s, x0, (xq - base) / 2);
    r.scalar *= ratio.pow(f.e);
    auto& slot = r.formal[{key_of(f.s), key_of(x0)}];
    slot += f.e;
    if (slot == 0) r.formal.erase({key_of(f.s), key_of(x0)});
  }
  r.scalar *= RatFunc(num, den);
  return r;
}

RatFunc QGammaProduct::to_ratfunc() const {
  Reduced r = reduce();
  if (!r.rational()) throw std::domain_error("QGammaProduct: unpaired Gamma factors");
  return r.scalar;
}

LocalValue QGammaProduct::at_t_power(int k) const {
  LocalValue acc = local_at_t_power(scalar_, k);
  Poly num(1), den(1);
  mpq_class c = 1;
  // exponent of q^(1/2) after t -> q^k, and t-slope (as a rational) of a monomial
  auto qexp = [k](const Monomial& m) { return k * m.exp[kT] + m.exp[kQ]; };
  auto slope = [](const Monomial& m) {
    mpq_class a(m.exp[kT], 2);
    a.canonicalize();
    return a;
  };
  auto zero_factor = [&](const Monomial& m, int e) {
    mpq_class a = slope(m);
    if (a == 0) throw std::domain_error("QGammaProduct: genuine zero or pole at t = q^k");
    mpq_class v = -a;
    for (int i = 0; i < std::abs(e); ++i) (e > 0) ? c *= v : c /= v;
    acc.order += e;
  };
  auto mul_factor = [&](int m, int e) {  // (1 - q^(m/2))^e with m != 0
    Poly p = one_minus(qh(m));
    for (int i = 0; i < std::abs(e); ++i) (e > 0 ? num : den) *= p;
  };
  for (const auto& l : linear_) {
    int m = qexp(l.x);
    if (m == 0)
      zero_factor(l.x, l.e);
    else
      mul_factor(m, l.e);
  }
  for (const auto& f : factors_) {
    Monomial sx = f.s * f.x;
    int M = qexp(sx), Mp = qexp(f.x);
    int sigma = M - Mp;
    if (sigma % 2 != 0) throw std::domain_error("QGammaProduct: non-telescoping factor");
    bool zn = M <= 0 && M % 2 == 0;
    bool zd = Mp <= 0 && Mp % 2 == 0;
    if (zn) zero_factor(sx, f.e);
    if (zd) zero_factor(f.x, -f.e);
    if (sigma >= 0) {
      for (int j = 0; j < sigma / 2; ++j) {
        int m = Mp + 2 * j;
        if (m != 0) mul_factor(m, -f.e);
      }
    } else {
      for (int j = 0; j < -sigma / 2; ++j) {
        int m = M + 2 * j;
        if (m != 0) mul_factor(m, f.e);
      }
    }
  }
  acc.lead *= RatFunc(num, den) * RatFunc(c);
  return acc;
}

std::string QGammaProduct::to_string() const {
  std::ostringstream os;
  os << "(" << scalar_.to_string() << ")";
  for (const auto& f : factors_)
    os << " * G[" << Poly::monomial(f.s).to_string() << "](" << Poly::monomial(f.x).to_string()
       << ")^" << f.e;
  for (const auto& l : linear_) os << " * (1-" << Poly::monomial(l.x).to_string() << ")^" << l.e;
  return os.str();
}

// ---- KappaGammaProduct

KappaGammaProduct KappaGammaProduct::gamma(int c, int a, int e) {
  KappaGammaProduct g;
  if (e != 0) g.factors_.push_back({a, c, e});
  return g;
}

KappaGammaProduct& KappaGammaProduct::operator*=(const KappaGammaProduct& o) {
  scalar_ *= o.scalar_;
  factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
  return *this;
}

KappaGammaProduct KappaGammaProduct::inverse() const {
  KappaGammaProduct r(scalar_.inverse());
  for (auto f : factors_) r.factors_.push_back({f.a, f.c, -f.e});
  return r;
}

KappaGammaProduct::Reduced KappaGammaProduct::reduce() const {
  Reduced r{scalar_, {}};
  for (const auto& f : factors_) {
    if (f.a == 0) {
      if (f.c < 1) throw std::domain_error("KappaGammaProduct: Gamma at a non-positive integer");
      mpz_class fact = 1;
      for (int i = 2; i < f.c; ++i) fact *= i;
      r.scalar *= RatFunc(fact).pow(f.e);
      continue;
    }
    RatFunc base = RatFunc(Poly::var(kKappa).scaled(f.a));
    r.scalar *= rising_ratio(base, f.c).pow(f.e);
    int& slot = r.formal[f.a];
    slot += f.e;
    if (slot == 0) r.formal.erase(f.a);
  }
  return r;
}

KappaGammaProduct::Local KappaGammaProduct::at_kappa(long kappa) const {
  Local out;
  out.lead = 1;
  // scalar: local expansion in kappa
  {
    const Poly root = Poly::var(kKappa) - Poly(kappa);
    auto vanishes = [&](const Poly& p) { return p.eval_var(kKappa, kappa).is_zero(); };
    Poly n = scalar_.num(), d = scalar_.den();
    if (n.is_zero()) {
      out.lead = 0;
      return out;
    }
    out.order = vanishing_order(n, root, vanishes) - vanishing_order(d, root, vanishes);
    out.lead = RatFunc(n.eval_var(kKappa, kappa), d.eval_var(kKappa, kappa)).constant_value();
  }
  for (const auto& f : factors_) {
    long N = f.c + f.a * kappa;
    mpq_class v;
    if (N >= 1) {
      mpz_class fact = 1;
      for (long i = 2; i < N; ++i) fact *= i;
      v = fact;
    } else {
      // Gamma(-m + a eps) = (-1)^m / (m! a eps) + O(1)
      if (f.a == 0) throw std::domain_error("KappaGammaProduct: Gamma pole independent of kappa");
      long m = -N;
      mpz_class fact = 1;
      for (long i = 2; i <= m; ++i) fact *= i;
      v = mpq_class((m % 2 == 0) ? 1 : -1) / mpq_class(fact * f.a);
      out.order -= f.e;
    }
    v.canonicalize();
    for (int i = 0; i < std::abs(f.e); ++i) (f.e > 0) ? out.lead *= v : out.lead /= v;
  }
  return out;
}

// ---- theta function

LaurentSeries theta1_body(int K) {
  PolyBuilder b;
  for (int n = -2 * K - 2; n <= 2 * K + 2; ++n) {
    long e = static_cast<long>(n) * (n + 1) / 2;
    if (e > K) continue;
    Monomial m = qh(2 * static_cast<int>(e)) * Monomial::unit(kAux, 2 * n + 1);
    b.add(m, (n % 2 == 0) ? 1 : -1);
  }
  LaurentSeries r(b.build());
  r.truncate_q(K);
  return r;
}

LaurentSeries theta1_body_product(int K) {
  Poly p = Poly::var(kAux) - Poly::var(kAux, -1);
  for (int j = 1; j <= K; ++j) {
    p = mul_truncated(p, one_minus(qh(2 * j)), kQ, 2 * K);
    p = mul_truncated(p, one_minus(qh(2 * j) * Monomial::unit(kAux, 2)), kQ, 2 * K);
    p = mul_truncated(p, one_minus(qh(2 * j) * Monomial::unit(kAux, -2)), kQ, 2 * K);
  }
  LaurentSeries r(p);
  r.truncate_q(K);
  return r;
}

namespace {

std::string first_difference(const Poly& a, const Poly& b) {
  Poly d = a - b;
  if (d.is_zero()) return "";
  const auto& t = d.terms().back();
  std::ostringstream os;
  os << "q^(" << t.mono.exp[kQ] << "/2) zeta^" << t.mono.exp[kAux] << ": difference "
     << t.coeff.get_str();
  return os.str();
}

// B(q^(k/2) zeta) * q^(k/2) through q-order K, from the sum form.
Poly theta_shifted(int K, int k) {
  PolyBuilder b;
  int span = 2 * K + 4 * k + 4;
  for (int n = -span; n <= span; ++n) {
    long e = static_cast<long>(n + 1) * (n + 2 * k);  // half units
    if (e > 2L * K) continue;
    b.add(qh(static_cast<int>(e)) * Monomial::unit(kAux, 2 * n + 1), (n % 2 == 0) ? 1 : -1);
  }
  return b.build();
}

}  // namespace

Report reflection_check(int K, int max_k, bool perturb) {
  Report rep("reflection");
  rep.param("q_order", std::to_string(K));
  rep.param("max_k", std::to_string(max_k));
  {
    Report sub("theta product form");
    Poly a = theta1_body(K).numer(), b = theta1_body_product(K).numer();
    sub.check(a == b, [&] { return first_difference(a, b); });
    rep.absorb(sub);
  }
  for (int k = 1; k <= max_k; ++k) {
    // Gamma_{q,q^k}(z) Gamma_{q,q^-k}(q/z) = N/D with
    // N = prod_{r<k} (1 - q^(r+1-k)/z),  D = prod_{r<k} (1 - q^r z)
    Poly N(1), D(1);
    for (int r = 0; r < k; ++r) {
      N *= one_minus(qh(2 * (r + 1 - k)) * Monomial::unit(kAux, -2));
      D *= one_minus(qh(2 * r) * Monomial::unit(kAux, 2));
    }
    Poly lhs = (N * theta1_body(K + k).numer()).truncate_above(kQ, 2 * K);
    Poly rhs = (D * theta_shifted(K, k)).truncate_above(kQ, 2 * K);
    if (perturb) lhs += Poly::monomial(qh(2 * K) * Monomial::unit(kAux, 1));
    Report sub("(q,t) reflection k=" + std::to_string(k));
    sub.check(lhs == rhs, [&] { return first_difference(lhs, rhs); });
    rep.absorb(sub);
  }
  {
    // zeta B(zeta) = -(q;q)_inf (z;q)_inf (q/z;q)_inf
    Poly rhs(-1);
    for (int j = 0; j <= K; ++j) {
      if (j >= 1) rhs = mul_truncated(rhs, one_minus(qh(2 * j)), kQ, 2 * K);
      rhs = mul_truncated(rhs, one_minus(qh(2 * j) * Monomial::unit(kAux, 2)), kQ, 2 * K);
      if (j >= 1) rhs = mul_truncated(rhs, one_minus(qh(2 * j) * Monomial::unit(kAux, -2)), kQ, 2 * K);
    }
    Poly lhs = theta1_body(K).numer().shifted(Monomial::unit(kAux, 1));
    if (perturb) lhs += Poly::monomial(qh(2 * K));
    Report sub("q reflection");
    sub.check(lhs == rhs, [&] { return first_difference(lhs, rhs); });
    rep.absorb(sub);
  }
  {
    // Gamma^(kappa)(z) Gamma^(-kappa)(1/z) = (-1)^kappa z^(-kappa)
    Report sub("kappa reflection");
    for (int kappa = 1; kappa <= max_k + 1; ++kappa) {
      Poly z = Poly::var(kAux);
      RatFunc lhs = RatFunc(Poly(1) - Poly::var(kAux, -1)).pow(kappa) /
                    RatFunc(Poly(1) - z).pow(kappa);
      RatFunc rhs = RatFunc(Poly::var(kAux, -kappa).scaled(kappa % 2 == 0 ? 1 : -1));
      sub.check(lhs == rhs, [&] { return "kappa=" + std::to_string(kappa); });
    }
    rep.absorb(sub);
  }
  return rep;
}

namespace {

Poly mul_trunc2(const Poly& a, const Poly& b, int K, int N) {
  return mul_truncated(a, b, kQ, 2 * K).truncate_above(kAux, N);
}

// sum_{a<=N} (x)^a
Poly geometric(const Monomial& x, int N) {
  Poly g;
  for (int a = 0; a <= N; ++a) g += Poly::monomial(x.pow(a));
  return g;
}

}  // namespace

Report euler_check(int max_n, int K, bool perturb) {
  Report rep("euler");
  rep.param("max_n", std::to_string(max_n));
  rep.param("q_order", std::to_string(K));
  const Monomial z = Monomial::unit(kAux, 1);
  const std::vector<int> zv{kAux};

  // Independent expansions of the infinite products through q^K, z^max_n.
  Poly gq(1), gqt(1);
  for (int j = 0; j <= K; ++j) {
    Poly g = geometric(z * qh(2 * j), max_n);
    gq = mul_trunc2(gq, g, K, max_n);
    gqt = mul_trunc2(gqt, g, K, max_n);
    gqt = mul_trunc2(gqt, one_minus(th(2) * z * qh(2 * j)), K, max_n);
  }
  if (perturb) gqt += Poly::monomial(qh(2 * K) * z);
  LaurentSeries sq(gq), sqt(gqt);
  sq.truncate_q(K);
  sqt.truncate_q(K);

  Poly rebuilt_q, rebuilt_qt;
  for (int n = 0; n <= max_n; ++n) {
    Poly zn = Poly::monomial(z.pow(-n));
    RatFunc ct_qt = (sqt * LaurentSeries(zn)).constant_term(zv);
    RatFunc ct_q = (sq * LaurentSeries(zn)).constant_term(zv);
    Poly want_qt = gamma_qt_coeff(n).q_series(K);
    Poly want_q = gamma_q_coeff(n).q_series(K);
    rep.check(ct_qt == RatFunc(want_qt), [&] { return "Gamma_{q,t} coefficient n=" + std::to_string(n); });
    rep.check(ct_q == RatFunc(want_q), [&] { return "Gamma_q coefficient n=" + std::to_string(n); });
    rep.check(gamma_q_coeff(n) == gamma_qt_coeff(n).eval(kT, 0),
              [&] { return "t=0 specialization n=" + std::to_string(n); });
    rebuilt_qt += want_qt.shifted(z.pow(n));
    rebuilt_q += want_q.shifted(z.pow(n));
  }
  rep.check(rebuilt_qt == gqt, "Gamma_{q,t} series reconstruction");
  rep.check(rebuilt_q == gq, "Gamma_q series reconstruction");

  // t = q^k: Gamma_{q,q^k}(z) = 1/prod_{r<k}(1 - z q^r), exact in q
  for (int k = 1; k <= 3; ++k) {
    Poly s(1);
    for (int r = 0; r < k; ++r) s = (s * geometric(z * qh(2 * r), max_n)).truncate_above(kAux, max_n);
    LaurentSeries ls(s);
    for (int n = 0; n <= max_n; ++n) {
      RatFunc ct = (ls * LaurentSeries(Poly::monomial(z.pow(-n)))).constant_term(zv);
      rep.check(ct == specialize_t(gamma_qt_coeff(n), k),
                [&] { return "t=q^" + std::to_string(k) + " coefficient n=" + std::to_string(n); });
    }
  }

  // Gamma^(kappa)(z) = (1-z)^(-kappa) at integer kappa
  for (int kappa = 1; kappa <= 4; ++kappa) {
    Poly s(1);
    for (int r = 0; r < kappa; ++r) s = (s * geometric(z, max_n)).truncate_above(kAux, max_n);
    LaurentSeries ls(s);
    for (int n = 0; n <= max_n; ++n) {
      RatFunc ct = (ls * LaurentSeries(Poly::monomial(z.pow(-n)))).constant_term(zv);
      mpq_class want = gamma_kappa_coeff(n, kappa);
      RatFunc sym = gamma_kappa_coeff(n).eval(kKappa, kappa);
      mpz_class nf = 1;
      for (int i = 2; i <= n; ++i) nf *= i;
      // n! CT(z^-n Gamma^(kappa)) = Gamma(kappa+n)/Gamma(kappa)
      RatFunc pochhammer = rising_ratio(RatFunc(kappa), n);
      bool ok = ct == RatFunc(want) && sym == RatFunc(want) && ct * RatFunc(nf) == pochhammer;
      rep.check(ok, [&] {
        return "kappa=" + std::to_string(kappa) + " coefficient n=" + std::to_string(n);
      });
    }
  }
  return rep;
}

// ---- numeric limit

namespace {

double gamma_qt_numeric(double x, double q, double t) {
  double lg = 0;
  double qn = 1;
  for (long n = 0;; ++n) {
    if (std::fabs(qn) < 1e-18) break;
    if (n > 100000000L) throw std::domain_error("jack_limit_check: non-convergent tail");
    lg += std::log1p(-t * x * qn) - std::log1p(-x * qn);
    qn *= q;
  }
  return std::exp(lg);
}

double b_row_numeric(int n, double q, double t) {
  double r = 1;
  for (int i = 1; i <= n; ++i) r *= (1 - t * std::pow(q, n - i)) / (1 - std::pow(q, n + 1 - i));
  return r;
}

}  // namespace

LimitReport jack_limit_check(double x0, int kappa, const std::vector<double>& hbars, int max_n) {
  LimitReport out;
  out.report.name = "jack limit";
  out.report.param("x0", std::to_string(x0));
  out.report.param("kappa", std::to_string(kappa));
  if (!(x0 > 0 && x0 < 1) || kappa < 1) throw std::invalid_argument("jack_limit_check: parameters");
  double target = std::pow(1 - x0, -kappa);
  for (double h : hbars) {
    if (!(h > 0) || h > 0.5) throw std::invalid_argument("jack_limit_check: hbar out of range");
    double q = std::exp(-h), t = std::pow(q, kappa);
    out.hbar.push_back(h);
    out.errors.push_back(std::fabs(gamma_qt_numeric(x0, q, t) - target));
  }
  bool exact = true;  // kappa = 1 is exact: Gamma_{q,q}(x) = 1/(1-x)
  for (double e : out.errors) exact = exact && e < 1e-12 * target;
  for (std::size_t i = 1; i < out.errors.size() && !exact; ++i) {
    double ratio = out.errors[i - 1] / out.errors[i];
    double expected = out.hbar[i - 1] / out.hbar[i];
    out.ratios.push_back(ratio);
    out.report.check(std::fabs(ratio - expected) <= 0.1 * expected, [&] {
      std::ostringstream os;
      os << "error ratio " << ratio << " at hbar " << out.hbar[i] << " (expected " << expected << ")";
      return os.str();
    });
  }
  if (!hbars.empty()) {
    double h = hbars.back();
    double q = std::exp(-h), t = std::pow(q, kappa);
    for (int n = 1; n <= max_n; ++n) {
      // b_(n) -> Gamma(n+kappa)/(Gamma(n+1) Gamma(kappa))
      double want = std::exp(std::lgamma(n + kappa) - std::lgamma(n + 1) - std::lgamma(kappa));
      double err = std::fabs(b_row_numeric(n, q, t) - want);
      out.coeff_errors.push_back(err);
      out.report.check(err < 10 * h * want * (n + kappa), [&] {
        std::ostringstream os;
        os << "b_(" << n << ") deviates by " << err;
        return os.str();
      });
    }
  }
  return out;
}

}  // namespace macbax
