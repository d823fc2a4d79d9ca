#include "macbax/ratfunc.hpp"

#include <stdexcept>

namespace macbax {

RatFunc::RatFunc(const mpq_class& c) {
  mpq_class r = c;
  r.canonicalize();
  num_ = Poly(r.get_num());
  den_ = Poly(r.get_den());
}

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("RatFunc with zero denominator");
  normalize();
}

// Moves the monomial content of den into num and fixes the sign.
void RatFunc::fix_units() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Monomial m = den_.min_exponents();
  if (!m.is_one()) {
    den_ = den_.shifted(m.inverse());
    num_ = num_.shifted(m.inverse());
  }
  if (sgn(den_.leading().coeff) < 0) {
    den_ = -den_;
    num_ = -num_;
  }
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_constant()) {
    mpz_class d = den_.constant_value();
    mpz_class g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (g != 1) {
      num_ = num_.div_scalar(g);
      d /= g;
    }
    if (d < 0) {
      d = -d;
      num_ = -num_;
    }
    den_ = Poly(d);
    return;
  }
  if (den_.is_monomial()) {
    const auto& lt = den_.leading();
    mpz_class g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), lt.coeff.get_mpz_t());
    num_ = num_.div_scalar(g).shifted(lt.mono.inverse());
    mpz_class d = lt.coeff / g;
    if (d < 0) {
      d = -d;
      num_ = -num_;
    }
    den_ = Poly(d);
    return;
  }
  Poly g = gcd(num_, den_);
  if (!(g == Poly(1))) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  fix_units();
}

mpq_class RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("RatFunc::constant_value on non-constant");
  mpq_class r(num_.constant_value(), den_.constant_value());
  r.canonicalize();
  return r;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Trusted{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    return RatFunc(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_constant() && b.den_.is_constant()) {
    return RatFunc(a.num_.scaled(b.den_.constant_value()) + b.num_.scaled(a.den_.constant_value()),
                   Poly(a.den_.constant_value() * b.den_.constant_value()));
  }
  Poly g = gcd(a.den_, b.den_);
  Poly ad = a.den_.div_exact(g), bd = b.den_.div_exact(g);
  Poly n = a.num_ * bd + b.num_ * ad;
  if (n.is_zero()) return RatFunc();
  Poly d = a.den_ * bd;
  if (g.is_constant() && abs(g.constant_value()) == 1) {
    RatFunc r(std::move(n), std::move(d), RatFunc::Trusted{});
    r.fix_units();
    return r;
  }
  Poly h = gcd(n, g);
  if (!(h == Poly(1))) {
    n = n.div_exact(h);
    d = d.div_exact(h);
  }
  RatFunc r(std::move(n), std::move(d), RatFunc::Trusted{});
  r.fix_units();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_ == Poly(1) && b.den_ == Poly(1)) return RatFunc(a.num_ * b.num_, Poly(1), RatFunc::Trusted{});
  Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  Poly n = a.num_.div_exact(g1) * b.num_.div_exact(g2);
  Poly d = a.den_.div_exact(g2) * b.den_.div_exact(g1);
  RatFunc r(std::move(n), std::move(d), RatFunc::Trusted{});
  r.fix_units();
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc::inverse of zero");
  RatFunc r(den_, num_, Trusted{});
  r.fix_units();
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r(num_.pow(e), den_.pow(e), Trusted{});
  r.fix_units();
  return r;
}

std::optional<RatFunc> RatFunc::try_substitute(int v, const Monomial& image) const {
  Poly d = den_.substitute(v, image);
  if (d.is_zero()) return std::nullopt;
  return RatFunc(num_.substitute(v, image), d);
}

RatFunc RatFunc::substitute(int v, const Monomial& image) const {
  auto r = try_substitute(v, image);
  if (!r) throw std::domain_error("RatFunc::substitute: denominator vanishes");
  return *r;
}

std::optional<RatFunc> RatFunc::try_eval(int v, const mpz_class& x) const {
  auto ev = [&](const Poly& p) {
    // negative exponents: multiply through by x^{-min}
    return p.eval_var(v, x);
  };
  int lo = std::min(num_.min_degree_in(v), 0);
  Poly n = num_, d = den_;
  if (lo < 0) {
    if (sgn(x) == 0) return std::nullopt;
    n = n.shifted(Monomial::unit(v, -lo));
    d = d.shifted(Monomial::unit(v, -lo));
  }
  Poly dd = ev(d);
  if (dd.is_zero()) return std::nullopt;
  return RatFunc(ev(n), dd);
}

RatFunc RatFunc::eval(int v, const mpz_class& x) const {
  auto r = try_eval(v, x);
  if (!r) throw std::domain_error("RatFunc::eval: pole");
  return *r;
}

Poly RatFunc::q_series(int K) const {
  // work in half-lattice steps
  const int top = 2 * K;
  Monomial dm = Monomial::unit(kQ, den_.min_degree_in(kQ));
  Poly d = den_.shifted(dm.inverse());
  Poly n = num_.shifted(dm.inverse());
  auto ds = d.coeffs_in(kQ);
  auto it0 = ds.find(0);
  if (it0 == ds.end() || !it0->second.is_constant() || abs(it0->second.constant_value()) != 1)
    throw std::domain_error("RatFunc::q_series: denominator not a unit at q=0");
  mpz_class d0 = it0->second.constant_value();
  auto ns = n.coeffs_in(kQ);
  if (ns.empty()) return Poly();
  int lo = ns.begin()->first;
  std::map<int, Poly> s;  // coefficient of q^{j/2}
  for (int j = lo; j <= top; ++j) {
    Poly acc;
    if (auto it = ns.find(j); it != ns.end()) acc = it->second;
    for (const auto& [e, c] : ds) {
      if (e == 0) continue;
      auto it = s.find(j - e);
      if (it != s.end()) acc -= c * it->second;
    }
    if (!acc.is_zero()) s[j] = acc.scaled(d0);  // d0 = +-1 is its own inverse
  }
  PolyBuilder b;
  for (const auto& [e, c] : s) b.add_shifted(c, Monomial::unit(kQ, e), 1);
  return b.build();
}

std::string RatFunc::to_string() const {
  if (den_ == Poly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Poly specialize_t(const Poly& f, int k) { return f.substitute(kT, qh(k)); }

RatFunc specialize_t(const RatFunc& f, int k) { return f.substitute(kT, qh(k)); }

}  // namespace macbax
