#include "macbax/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace macbax {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::unit(int v, int e) {
  Monomial m;
  m.set(v, e);
  return m;
}

void Monomial::set(int v, int e) {
  if (e < INT16_MIN || e > INT16_MAX) throw std::overflow_error("monomial exponent overflow");
  deg += e - exp[v];
  exp[v] = static_cast<int16_t>(e);
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

Monomial Monomial::inverse() const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<int16_t>(-exp[i]);
  r.deg = -deg;
  return r;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = exp[i] + o.exp[i];
    if (e < INT16_MIN || e > INT16_MAX) throw std::overflow_error("monomial exponent overflow");
    r.exp[i] = static_cast<int16_t>(e);
  }
  r.deg = deg + o.deg;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const { return *this * o.inverse(); }

Monomial Monomial::pow(int e) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.set(i, exp[i] * e);
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < kMaxVars; ++i) {
    h ^= static_cast<std::uint16_t>(exp[i]);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::string var_name(int v) {
  switch (v) {
    case kQ: return "q";
    case kT: return "t";
    case kKappa: return "k";
    case kSpec: return "X";
    case kAux: return "z";
    default: break;
  }
  if (v >= kX1 && v < kX1 + kMaxX) return "x" + std::to_string(v - kX1 + 1);
  return "y" + std::to_string(v - kY1 + 1);
}

// ------------------------------------------------------------- PolyBuilder

std::size_t PolyBuilder::find_slot(const Monomial& m) {
  std::size_t mask = buckets_.size() - 1;
  std::size_t i = m.hash() & mask;
  while (true) {
    std::size_t b = buckets_[i];
    if (b == SIZE_MAX || acc_[b].first == m) return i;
    i = (i + 1) & mask;
  }
}

void PolyBuilder::rehash() {
  std::size_t cap = buckets_.empty() ? 16 : buckets_.size() * 2;
  buckets_.assign(cap, SIZE_MAX);
  for (std::size_t k = 0; k < acc_.size(); ++k) buckets_[find_slot(acc_[k].first)] = k;
}

void PolyBuilder::add(const Monomial& m, const mpz_class& c) {
  if (sgn(c) == 0) return;
  if ((acc_.size() + 1) * 2 > buckets_.size()) rehash();
  std::size_t s = find_slot(m);
  if (buckets_[s] == SIZE_MAX) {
    buckets_[s] = acc_.size();
    acc_.emplace_back(m, c);
  } else {
    acc_[buckets_[s]].second += c;
  }
}

void PolyBuilder::addmul(const Monomial& m, const mpz_class& a, const mpz_class& b) {
  if ((acc_.size() + 1) * 2 > buckets_.size()) rehash();
  std::size_t s = find_slot(m);
  if (buckets_[s] == SIZE_MAX) {
    buckets_[s] = acc_.size();
    acc_.emplace_back(m, 0);
    mpz_mul(acc_.back().second.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  } else {
    mpz_addmul(acc_[buckets_[s]].second.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
}

void PolyBuilder::add(const Poly& p) {
  for (const auto& t : p.terms()) add(t.mono, t.coeff);
}

void PolyBuilder::add_shifted(const Poly& p, const Monomial& m, const mpz_class& c) {
  for (const auto& t : p.terms()) addmul(t.mono * m, t.coeff, c);
}

Poly PolyBuilder::build() {
  Poly r;
  r.terms_.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (sgn(c) != 0) r.terms_.push_back({m, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return grlex_gt(a.mono, b.mono); });
  acc_.clear();
  buckets_.clear();
  return r;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({Monomial{}, mpz_class(c)});
}

Poly::Poly(const mpz_class& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::monomial(const Monomial& m, const mpz_class& c) {
  Poly p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  PolyBuilder b;
  for (auto& t : terms) b.add(t.mono, t.coeff);
  return b.build();
}

mpz_class Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("Poly::constant_value on non-constant");
  return terms_[0].coeff;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// merge of two sorted term lists, sign = +1 or -1 applied to b
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                    const std::vector<Poly::Term>& b, int sign) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_gt(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_gt(b[j].mono, a[i].mono)) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      mpz_class c = a[i].coeff;
      if (sign > 0) c += b[j].coeff;
      else c -= b[j].coeff;
      if (sgn(c) != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const Poly& s = a.size() <= b.size() ? a : b;
  const Poly& l = a.size() <= b.size() ? b : a;
  if (s.size() == 1) return l.shifted(s.terms_[0].mono).scaled(s.terms_[0].coeff);
  PolyBuilder bld;
  for (const auto& x : s.terms_)
    for (const auto& y : l.terms_) bld.addmul(x.mono * y.mono, x.coeff, y.coeff);
  return bld.build();
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const mpz_class& c) const {
  if (sgn(c) == 0) return Poly();
  Poly r = *this;
  if (c == 1) return r;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::shifted(const Monomial& m) const {
  Poly r = *this;
  if (m.is_one()) return r;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;  // multiplication by a monomial preserves grlex order
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Monomial Poly::min_exponents() const {
  Monomial m;
  if (terms_.empty()) return m;
  m = terms_[0].mono;
  for (const auto& t : terms_)
    for (int i = 0; i < kMaxVars; ++i)
      if (t.mono.exp[i] < m.exp[i]) m.exp[i] = t.mono.exp[i];
  m.deg = 0;
  for (int i = 0; i < kMaxVars; ++i) m.deg += m.exp[i];
  return m;
}

Monomial Poly::max_exponents() const {
  Monomial m;
  if (terms_.empty()) return m;
  m = terms_[0].mono;
  for (const auto& t : terms_)
    for (int i = 0; i < kMaxVars; ++i)
      if (t.mono.exp[i] > m.exp[i]) m.exp[i] = t.mono.exp[i];
  m.deg = 0;
  for (int i = 0; i < kMaxVars; ++i) m.deg += m.exp[i];
  return m;
}

int Poly::degree_in(int v) const {
  if (terms_.empty()) return 0;
  int d = INT32_MIN;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.exp[v]);
  return d;
}

int Poly::min_degree_in(int v) const {
  if (terms_.empty()) return 0;
  int d = INT32_MAX;
  for (const auto& t : terms_) d = std::min<int>(d, t.mono.exp[v]);
  return d;
}

bool Poly::uses(int v) const {
  for (const auto& t : terms_)
    if (t.mono.exp[v] != 0) return true;
  return false;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::div_scalar(const mpz_class& c) const {
  if (c == 1) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t()))
      throw std::domain_error("Poly::div_scalar: not divisible");
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

Poly Poly::sign_normalized() const {
  if (!terms_.empty() && sgn(terms_[0].coeff) < 0) return -*this;
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

namespace {

// Exact division for polynomials with non-negative exponents.
std::optional<Poly> divide_nonneg(const Poly& a, const Poly& b) {
  if (a.is_zero()) return Poly();
  const auto& lb = b.leading();
  if (b.size() == 1) {
    std::vector<Poly::Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!lb.mono.divides(t.mono)) return std::nullopt;
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), lb.coeff.get_mpz_t())) return std::nullopt;
      mpz_class c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), lb.coeff.get_mpz_t());
      out.push_back({t.mono / lb.mono, std::move(c)});
    }
    return Poly::from_terms(std::move(out));
  }
  // quick degree screens
  Monomial amax = a.max_exponents(), bmax = b.max_exponents();
  Monomial amin = a.min_exponents(), bmin = b.min_exponents();
  for (int i = 0; i < kMaxVars; ++i) {
    if (bmax.exp[i] - bmin.exp[i] > amax.exp[i] - amin.exp[i]) return std::nullopt;
  }
  std::map<Monomial, mpz_class, GrlexGreater> rem;
  for (const auto& t : a.terms()) rem.emplace_hint(rem.end(), t.mono, t.coeff);
  std::vector<Poly::Term> quo;
  mpz_class qc, tmp;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lb.mono.divides(it->first)) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), lb.coeff.get_mpz_t())) return std::nullopt;
    Monomial qm = it->first / lb.mono;
    // every quotient monomial must stay within a's exponent box shifted by b
    for (int i = 0; i < kMaxVars; ++i)
      if (qm.exp[i] + bmin.exp[i] < amin.exp[i]) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lb.coeff.get_mpz_t());
    rem.erase(it);
    bool first = true;
    for (const auto& bt : b.terms()) {
      if (first) {
        first = false;
        continue;
      }
      Monomial key = bt.mono * qm;
      auto [pos, inserted] = rem.try_emplace(key, 0);
      mpz_submul(pos->second.get_mpz_t(), qc.get_mpz_t(), bt.coeff.get_mpz_t());
      if (sgn(pos->second) == 0) rem.erase(pos);
    }
    quo.push_back({qm, qc});
  }
  return Poly::from_terms(std::move(quo));
}

}  // namespace

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("Poly division by zero");
  if (is_zero()) return Poly();
  Monomial ma = min_exponents(), md = d.min_exponents();
  Poly a0 = shifted(ma.inverse()), d0 = d.shifted(md.inverse());
  auto q = divide_nonneg(a0, d0);
  if (!q) return std::nullopt;
  return q->shifted(ma / md);
}

Poly Poly::div_exact(const Poly& d) const {
  auto q = divide_exact(d);
  if (!q) throw std::domain_error("Poly::div_exact: nonzero remainder");
  return *q;
}

Poly Poly::substitute(int v, const Monomial& image) const {
  bool used = false;
  for (const auto& t : terms_)
    if (t.mono.exp[v] != 0) {
      used = true;
      break;
    }
  if (!used) return *this;
  PolyBuilder b;
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    int e = m.exp[v];
    m.set(v, 0);
    b.add(m * image.pow(e), t.coeff);
  }
  return b.build();
}

Poly Poly::eval_var(int v, const mpz_class& x) const {
  int lo = min_degree_in(v), hi = degree_in(v);
  if (lo == 0 && hi == 0) return *this;
  if (lo < 0) throw std::domain_error("eval_var with negative exponent");
  std::vector<mpz_class> pw(hi + 1);
  pw[0] = 1;
  for (int i = 1; i <= hi; ++i) pw[i] = pw[i - 1] * x;
  PolyBuilder b;
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    int e = m.exp[v];
    m.set(v, 0);
    b.addmul(m, t.coeff, pw[e]);
  }
  return b.build();
}

Poly Poly::truncate_above(int v, int max_exp) const {
  return filter([&](const Monomial& m) { return m.exp[v] <= max_exp; });
}

std::map<int, Poly> Poly::coeffs_in(int v) const {
  std::map<int, Poly> out;
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    int e = m.exp[v];
    m.set(v, 0);
    out[e].terms_.push_back({m, t.coeff});
  }
  for (auto& [e, p] : out)
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return grlex_gt(a.mono, b.mono); });
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    c = abs(c);
    bool unit = t.mono.is_one();
    if (c != 1 || unit) os << c.get_str();
    bool need_star = (c != 1 || unit) && !unit;
    for (int i = 0; i < kMaxVars; ++i) {
      int e = t.mono.exp[i];
      if (e == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << var_name(i);
      if (half_lattice(i)) {
        if (e % 2 == 0) {
          if (e != 2) os << "^" << (e / 2 < 0 ? "(" + std::to_string(e / 2) + ")" : std::to_string(e / 2));
        } else {
          os << "^(" << e << "/2)";
        }
      } else if (e != 1) {
        os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
      }
    }
  }
  return os.str();
}

std::size_t Poly::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& t : terms_) {
    h ^= t.mono.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>()(t.coeff.get_str(16)) + (h << 6) + (h >> 2);
  }
  return h;
}

// --------------------------------------------------------------------- GCD

namespace {

Poly integer_poly(const mpz_class& c) { return Poly(c); }

std::vector<int> used_vars(const Poly& a, const Poly& b) {
  std::vector<int> v;
  Monomial amin = a.min_exponents(), amax = a.max_exponents();
  Monomial bmin = b.min_exponents(), bmax = b.max_exponents();
  for (int i = 0; i < kMaxVars; ++i)
    if (amin.exp[i] != amax.exp[i] || bmin.exp[i] != bmax.exp[i]) v.push_back(i);
  return v;
}

mpz_class max_norm(const Poly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms())
    if (mpz_cmpabs(t.coeff.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.coeff);
  return m;
}

// symmetric residue of c modulo x, in (-x/2, x/2]
mpz_class sym_mod(const mpz_class& c, const mpz_class& x) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  if (2 * r > x) r -= x;
  return r;
}

Poly interpolate(Poly h, int v, const mpz_class& x) {
  PolyBuilder out;
  int i = 0;
  while (!h.is_zero()) {
    std::vector<Poly::Term> g;
    std::vector<Poly::Term> rest;
    for (const auto& t : h.terms()) {
      mpz_class r = sym_mod(t.coeff, x);
      if (sgn(r) != 0) g.push_back({t.mono, r});
      mpz_class rem = t.coeff - r;
      mpz_divexact(rem.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t());
      if (sgn(rem) != 0) rest.push_back({t.mono, rem});
    }
    Monomial vi = Monomial::unit(v, i);
    for (auto& t : g) out.add(t.mono * vi, t.coeff);
    h = Poly::from_terms(std::move(rest));
    ++i;
    if (i > 100000) throw std::runtime_error("interpolate: runaway");
  }
  return out.build();
}

Poly primitive(const Poly& p) {
  mpz_class c = p.content();
  if (c == 0) return p;
  return p.div_scalar(c).sign_normalized();
}

bool divides(const Poly& d, const Poly& a) { return a.divide_exact(d).has_value(); }

std::optional<Poly> heu_gcd(const Poly& f, const Poly& g, std::vector<int> vars, int depth);

// full gcd including integer content, for non-negative exponent inputs
std::optional<Poly> heu_gcd_full(const Poly& f, const Poly& g, const std::vector<int>& vars,
                                 int depth) {
  if (f.is_zero()) return g.sign_normalized();
  if (g.is_zero()) return f.sign_normalized();
  mpz_class cf = f.content(), cg = g.content();
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  Poly pf = f.div_scalar(cf), pg = g.div_scalar(cg);
  std::vector<int> live;
  for (int v : vars)
    if (pf.uses(v) || pg.uses(v)) live.push_back(v);
  if (live.empty() || pf.is_constant() || pg.is_constant()) return integer_poly(c);
  auto h = heu_gcd(pf, pg, live, depth);
  if (!h) return std::nullopt;
  return h->scaled(c);
}

// f, g primitive with non-negative exponents in vars
std::optional<Poly> heu_gcd(const Poly& f, const Poly& g, std::vector<int> vars, int depth) {
  if (depth > 40) return std::nullopt;
  int v = vars.back();
  std::vector<int> rest(vars.begin(), vars.end() - 1);
  if (!f.uses(v) || !g.uses(v)) {
    // gcd lies in the coefficient ring: take gcd of all coefficient slices
    const Poly& inner = f.uses(v) ? g : f;
    const Poly& outer = f.uses(v) ? f : g;
    Poly acc = inner;
    for (auto& [e, c] : outer.coeffs_in(v)) {
      auto r = heu_gcd_full(acc, c, rest, depth + 1);
      if (!r) return std::nullopt;
      acc = *r;
      if (acc.is_constant()) break;
    }
    return primitive(acc);
  }
  mpz_class nf = max_norm(f), ng = max_norm(g);
  mpz_class b = 2 * std::min(nf, ng) + 29;
  mpz_class x;
  {
    mpz_class sq;
    mpz_sqrt(sq.get_mpz_t(), b.get_mpz_t());
    x = std::min<mpz_class>(b, 99 * sq);
    mpz_class lf = abs(f.leading().coeff), lg = abs(g.leading().coeff);
    mpz_class alt = 2 * std::min<mpz_class>(nf / lf, ng / lg) + 2;
    if (alt > x) x = alt;
  }
  for (int attempt = 0; attempt < 6; ++attempt) {
    Poly ff = f.eval_var(v, x), gg = g.eval_var(v, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto h = heu_gcd_full(ff, gg, rest, depth + 1);
      if (h) {
        Poly cand = primitive(interpolate(*h, v, x));
        if (!cand.is_zero() && divides(cand, f) && divides(cand, g)) return cand;
        if (auto cff = ff.divide_exact(*h)) {
          Poly cf = interpolate(*cff, v, x);
          if (!cf.is_zero()) {
            if (auto hh = f.divide_exact(cf)) {
              Poly c2 = primitive(*hh);
              if (divides(c2, g)) return c2;
            }
          }
        }
        if (auto cgg = gg.divide_exact(*h)) {
          Poly cg = interpolate(*cgg, v, x);
          if (!cg.is_zero()) {
            if (auto hh = g.divide_exact(cg)) {
              Poly c2 = primitive(*hh);
              if (divides(c2, f)) return c2;
            }
          }
        }
      }
    }
    // next evaluation point: x <- 73794 x sqrt(sqrt(x)) / 27011
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), x.get_mpz_t());
    mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
    x = 73794 * x * s / 27011;
  }
  return std::nullopt;
}

// ---------- PRS reference gcd

Poly prs_gcd_rec(const Poly& f, const Poly& g, const std::vector<int>& vars);

Poly content_in(const Poly& f, int v, const std::vector<int>& rest) {
  Poly acc;
  for (auto& [e, c] : f.coeffs_in(v)) {
    acc = prs_gcd_rec(acc, c, rest);
    if (acc.is_constant() && !acc.is_zero() && abs(acc.constant_value()) == 1) break;
  }
  return acc.sign_normalized();
}

Poly prem(const Poly& a, const Poly& b, int v) {
  int db = b.degree_in(v);
  auto bs = b.coeffs_in(v);
  Poly lb = bs.rbegin()->second;
  Poly r = a;
  int e = a.degree_in(v) - db + 1;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    auto rs = r.coeffs_in(v);
    int dr = rs.rbegin()->first;
    Poly lr = rs.rbegin()->second;
    r = lb * r - (lr * b).shifted(Monomial::unit(v, dr - db));
    --e;
  }
  if (e > 0) r = lb.pow(e) * r;
  return r;
}

Poly prs_gcd_rec(const Poly& f, const Poly& g, const std::vector<int>& vars) {
  if (f.is_zero()) return g.sign_normalized();
  if (g.is_zero()) return f.sign_normalized();
  std::vector<int> live;
  for (int v : vars)
    if (f.uses(v) || g.uses(v)) live.push_back(v);
  if (live.empty()) {
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), f.constant_value().get_mpz_t(), g.constant_value().get_mpz_t());
    return Poly(c);
  }
  int v = live.front();
  std::vector<int> rest(live.begin() + 1, live.end());
  Poly cf = f.uses(v) ? content_in(f, v, rest) : f.sign_normalized();
  Poly cg = g.uses(v) ? content_in(g, v, rest) : g.sign_normalized();
  Poly c = prs_gcd_rec(cf, cg, rest);
  if (!f.uses(v) || !g.uses(v)) return c;
  Poly pf = f.div_exact(cf), pg = g.div_exact(cg);
  if (pf.degree_in(v) < pg.degree_in(v)) std::swap(pf, pg);
  while (!pg.is_zero() && pg.uses(v)) {
    Poly r = prem(pf, pg, v);
    pf = pg;
    if (r.is_zero()) {
      pg = Poly();
      break;
    }
    pg = r.uses(v) ? r.div_exact(content_in(r, v, rest)) : Poly(1);
  }
  Poly res = pg.is_zero() ? pf : Poly(1);
  if (res.uses(v)) res = res.div_exact(content_in(res, v, rest));
  else res = Poly(1);
  return (c * res).sign_normalized();
}

// Strip monomial content, compress exponent strides; returns factor list.
struct Normalized {
  Poly a, b;
  std::array<int, kMaxVars> stride{};
};

Normalized normalize_pair(const Poly& a, const Poly& b) {
  Normalized n;
  n.a = a.shifted(a.min_exponents().inverse());
  n.b = b.shifted(b.min_exponents().inverse());
  for (int i = 0; i < kMaxVars; ++i) {
    int g = 0;
    for (const auto& t : n.a.terms()) g = std::gcd(g, int(t.mono.exp[i]));
    for (const auto& t : n.b.terms()) g = std::gcd(g, int(t.mono.exp[i]));
    n.stride[i] = g == 0 ? 1 : g;
  }
  auto compress = [&](const Poly& p) {
    bool trivial = true;
    for (int s : n.stride)
      if (s != 1) trivial = false;
    if (trivial) return p;
    std::vector<Poly::Term> ts;
    ts.reserve(p.size());
    for (const auto& t : p.terms()) {
      Monomial m;
      for (int i = 0; i < kMaxVars; ++i) m.set(i, t.mono.exp[i] / n.stride[i]);
      ts.push_back({m, t.coeff});
    }
    return Poly::from_terms(std::move(ts));
  };
  n.a = compress(n.a);
  n.b = compress(n.b);
  return n;
}

Poly expand_strides(const Poly& p, const std::array<int, kMaxVars>& stride) {
  std::vector<Poly::Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.set(i, t.mono.exp[i] * stride[i]);
    ts.push_back({m, t.coeff});
  }
  return Poly::from_terms(std::move(ts));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return primitive(b.shifted(b.min_exponents().inverse())).scaled(b.content());
  if (b.is_zero()) return primitive(a.shifted(a.min_exponents().inverse())).scaled(a.content());
  mpz_class ca = a.content(), cb = b.content(), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_monomial() || b.is_monomial()) return Poly(c);
  Normalized n = normalize_pair(a.div_scalar(ca), b.div_scalar(cb));
  if (n.a.is_constant() || n.b.is_constant()) return Poly(c);
  if (n.a == n.b || n.a == -n.b) return expand_strides(n.a.sign_normalized(), n.stride).scaled(c);
  std::vector<int> vars = used_vars(n.a, n.b);
  std::optional<Poly> h;
  if (!vars.empty()) h = heu_gcd(n.a, n.b, vars, 0);
  Poly r = h ? *h : prs_gcd_rec(n.a, n.b, vars);
  return expand_strides(r, n.stride).sign_normalized().scaled(c);
}

Poly gcd_prs(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return gcd(a, b);
  mpz_class ca = a.content(), cb = b.content(), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly a0 = a.shifted(a.min_exponents().inverse()).div_scalar(ca);
  Poly b0 = b.shifted(b.min_exponents().inverse()).div_scalar(cb);
  std::vector<int> vars = used_vars(a0, b0);
  return prs_gcd_rec(a0, b0, vars).sign_normalized().scaled(c);
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly g = gcd(a, b);
  return (a.div_exact(g) * b).sign_normalized();
}

}  // namespace macbax
