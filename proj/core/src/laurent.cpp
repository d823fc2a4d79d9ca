#include "macbax/laurent.hpp"

#include <stdexcept>

namespace macbax {

std::vector<int> x_vars(int n) {
  if (n > kMaxX) throw std::invalid_argument("too many x variables");
  std::vector<int> v;
  for (int i = 0; i < n; ++i) v.push_back(x_var(i));
  return v;
}

std::vector<int> y_vars(int n) {
  if (n > kMaxY) throw std::invalid_argument("too many y variables");
  std::vector<int> v;
  for (int i = 0; i < n; ++i) v.push_back(y_var(i));
  return v;
}

LaurentSeries::LaurentSeries(Poly numer, Poly denom) : num_(std::move(numer)), den_(std::move(denom)) {
  if (den_.is_zero()) throw std::domain_error("LaurentSeries: zero denominator");
}

void LaurentSeries::apply_truncation() {
  if (q_order_) {
    int top = 2 * *q_order_;
    num_ = num_.truncate_above(kQ, top);
  }
  if (aux_order_) num_ = num_.truncate_above(aux_var_, *aux_order_);
}

LaurentSeries& LaurentSeries::truncate_q(int K) {
  if (!den_.is_constant()) {
    // expand the denominator as a q-series first
    RatFunc inv(Poly(1), den_);
    num_ = mul_truncated(num_, inv.q_series(K), kQ, 2 * K);
    den_ = Poly(1);
  }
  q_order_ = q_order_ ? std::min(*q_order_, K) : K;
  apply_truncation();
  return *this;
}

LaurentSeries& LaurentSeries::truncate_aux(int var, int M) {
  if (aux_order_ && var != aux_var_) throw std::logic_error("LaurentSeries: second aux variable");
  aux_var_ = var;
  aux_order_ = aux_order_ ? std::min(*aux_order_, M) : M;
  apply_truncation();
  return *this;
}

Poly mul_truncated(const Poly& a, const Poly& b, int var, int max_exp) {
  if (a.is_zero() || b.is_zero()) return Poly();
  PolyBuilder bld;
  for (const auto& x : a.terms()) {
    int ex = x.mono.exp[var];
    for (const auto& y : b.terms()) {
      if (ex + y.mono.exp[var] > max_exp) continue;
      bld.addmul(x.mono * y.mono, x.coeff, y.coeff);
    }
  }
  return bld.build();
}

namespace {

template <class T>
std::optional<int> min_opt(const std::optional<T>& a, const std::optional<T>& b) {
  if (a && b) return std::min(*a, *b);
  if (a) return a;
  return b;
}

void merge_truncation(LaurentSeries& r, const LaurentSeries& a, const LaurentSeries& b) {
  if (auto k = min_opt(a.q_order(), b.q_order())) r.truncate_q(*k);
  if (a.aux_order() && b.aux_order() && a.aux_var() != b.aux_var())
    throw std::logic_error("LaurentSeries: mismatched aux variables");
  if (auto m = min_opt(a.aux_order(), b.aux_order()))
    r.truncate_aux(a.aux_order() ? a.aux_var() : b.aux_var(), *m);
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r;
  if (a.den_ == b.den_) {
    r = LaurentSeries(a.num_ + b.num_, a.den_);
  } else {
    Poly g = gcd(a.den_, b.den_);
    Poly ad = a.den_.div_exact(g), bd = b.den_.div_exact(g);
    r = LaurentSeries(a.num_ * bd + b.num_ * ad, a.den_ * bd);
  }
  merge_truncation(r, a, b);
  return r;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  r.num_ = -r.num_;
  return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  std::optional<int> k = min_opt(a.q_order_, b.q_order_);
  std::optional<int> m = min_opt(a.aux_order_, b.aux_order_);
  int auxv = a.aux_order_ ? a.aux_var_ : b.aux_var_;
  Poly n;
  if (k && a.den_.is_constant() && b.den_.is_constant()) {
    Poly an = a.num_.truncate_above(kQ, 2 * *k), bn = b.num_.truncate_above(kQ, 2 * *k);
    if (m) {
      an = an.truncate_above(auxv, *m);
      bn = bn.truncate_above(auxv, *m);
    }
    n = mul_truncated(an, bn, kQ, 2 * *k);
  } else if (m) {
    n = mul_truncated(a.num_.truncate_above(auxv, *m), b.num_.truncate_above(auxv, *m), auxv, *m);
  } else {
    n = a.num_ * b.num_;
  }
  LaurentSeries r(std::move(n), a.den_ * b.den_);
  merge_truncation(r, a, b);
  return r;
}

LaurentSeries LaurentSeries::scaled(const RatFunc& c) const {
  LaurentSeries r(num_ * c.num(), den_ * c.den());
  r.q_order_ = q_order_;
  r.aux_order_ = aux_order_;
  r.aux_var_ = aux_var_;
  if (q_order_) {
    r.q_order_.reset();
    r.truncate_q(*q_order_);
  }
  return r;
}

std::map<std::vector<int>, Poly> split_by(const Poly& p, const std::vector<int>& vars) {
  std::map<std::vector<int>, std::vector<Poly::Term>> acc;
  for (const auto& t : p.terms()) {
    std::vector<int> key(vars.size());
    Monomial m = t.mono;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      key[i] = m.exp[vars[i]];
      m.set(vars[i], 0);
    }
    acc[key].push_back({m, t.coeff});
  }
  std::map<std::vector<int>, Poly> out;
  for (auto& [k, ts] : acc) out.emplace(k, Poly::from_terms(std::move(ts)));
  return out;
}

RatFunc LaurentSeries::constant_term(const std::vector<int>& vars) const {
  Poly ct = num_.filter([&](const Monomial& m) {
    for (int v : vars)
      if (m.exp[v] != 0) return false;
    return true;
  });
  return RatFunc(ct, den_);
}

LaurentSeries LaurentSeries::constant_term_partial(const std::vector<int>& vars) const {
  LaurentSeries r = *this;
  r.num_ = num_.filter([&](const Monomial& m) {
    for (int v : vars)
      if (m.exp[v] != 0) return false;
    return true;
  });
  return r;
}

RatFunc LaurentSeries::coefficient(const std::vector<int>& vars, const std::vector<int>& exps) const {
  Poly c = num_.filter([&](const Monomial& m) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (m.exp[vars[i]] != exps[i]) return false;
    return true;
  });
  Monomial shift;
  for (std::size_t i = 0; i < vars.size(); ++i) shift.set(vars[i], -exps[i]);
  return RatFunc(c.shifted(shift), den_);
}

std::map<std::vector<int>, RatFunc> LaurentSeries::terms(const std::vector<int>& vars) const {
  std::map<std::vector<int>, RatFunc> out;
  for (auto& [k, p] : split_by(num_, vars)) out.emplace(k, RatFunc(p, den_));
  return out;
}

LaurentSeries LaurentSeries::q_shift(int v) const {
  std::vector<Poly::Term> ts;
  ts.reserve(num_.size());
  for (const auto& t : num_.terms()) {
    Monomial m = t.mono;
    m.set(kQ, m.exp[kQ] + 2 * m.exp[v]);
    ts.push_back({m, t.coeff});
  }
  LaurentSeries r = *this;
  r.num_ = Poly::from_terms(std::move(ts));
  if (q_order_) r.apply_truncation();
  return r;
}

LaurentSeries LaurentSeries::substitute(int v, const Monomial& image) const {
  LaurentSeries r = *this;
  r.num_ = num_.substitute(v, image);
  r.den_ = den_.substitute(v, image);
  if (r.den_.is_zero()) throw std::domain_error("LaurentSeries::substitute: zero denominator");
  r.apply_truncation();
  return r;
}

LaurentSeries LaurentSeries::invert(const std::vector<int>& vars) const {
  std::vector<Poly::Term> ts;
  ts.reserve(num_.size());
  for (const auto& t : num_.terms()) {
    Monomial m = t.mono;
    for (int v : vars) m.set(v, -m.exp[v]);
    ts.push_back({m, t.coeff});
  }
  LaurentSeries r = *this;
  r.num_ = Poly::from_terms(std::move(ts));
  return r;
}

LaurentSeries LaurentSeries::div_exact(const Poly& p) const {
  LaurentSeries r = *this;
  r.num_ = num_.div_exact(p);
  return r;
}

LaurentSeries LaurentSeries::reduced() const {
  LaurentSeries r = *this;
  if (den_.is_constant()) {
    mpz_class d = den_.constant_value();
    mpz_class g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (d < 0) g = -g;
    if (g != 0 && g != 1) {
      r.num_ = num_.div_scalar(g);
      r.den_ = Poly(d / g);
    }
    return r;
  }
  Poly g = gcd(num_, den_);
  r.num_ = num_.div_exact(g);
  r.den_ = den_.div_exact(g);
  if (sgn(r.den_.leading().coeff) < 0) {
    r.den_ = -r.den_;
    r.num_ = -r.num_;
  }
  return r;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

}  // namespace macbax
