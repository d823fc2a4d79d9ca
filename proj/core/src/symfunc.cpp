#include "macbax/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace macbax {

std::string field_name(Field f) {
  switch (f) {
    case Field::qt: return "qt";
    case Field::q: return "q";
    case Field::kappa: return "kappa";
  }
  return "?";
}

SymFunc SymFunc::monomial(const Partition& lambda, int rank, Field field) {
  if (lambda.length() > rank) throw std::invalid_argument("partition longer than rank");
  SymFunc s(rank, field);
  s.coeffs_[lambda] = RatFunc(1);
  return s;
}

SymFunc SymFunc::constant(const RatFunc& c, int rank, Field field) {
  SymFunc s(rank, field);
  s.set(Partition(), c);
  return s;
}

RatFunc SymFunc::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? RatFunc() : it->second;
}

void SymFunc::set(const Partition& lambda, const RatFunc& c) {
  if (lambda.length() > rank_) throw std::invalid_argument("partition longer than rank");
  if (c.is_zero()) coeffs_.erase(lambda);
  else coeffs_[lambda] = c;
}

void SymFunc::add(const Partition& lambda, const RatFunc& c) {
  if (c.is_zero()) return;
  if (lambda.length() > rank_) throw std::invalid_argument("partition longer than rank");
  auto it = coeffs_.find(lambda);
  if (it == coeffs_.end()) {
    coeffs_.emplace(lambda, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

int SymFunc::degree() const {
  int d = -1;
  for (const auto& [p, c] : coeffs_) d = std::max(d, p.weight());
  return d;
}

bool SymFunc::homogeneous() const {
  int w = -1;
  for (const auto& [p, c] : coeffs_) {
    if (w >= 0 && p.weight() != w) return false;
    w = p.weight();
  }
  return true;
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& [p, c] : r.coeffs_) c = -c;
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("SymFunc rank mismatch");
  for (const auto& [p, c] : o.coeffs_) add(p, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("SymFunc rank mismatch");
  for (const auto& [p, c] : o.coeffs_) add(p, -c);
  return *this;
}

SymFunc SymFunc::scaled(const RatFunc& c) const {
  SymFunc r(rank_, field_);
  if (c.is_zero()) return r;
  for (const auto& [p, v] : coeffs_) r.coeffs_.emplace(p, v * c);
  return r;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("SymFunc rank mismatch");
  if (a.is_zero() || b.is_zero()) return SymFunc(a.rank_, a.field_);
  auto vars = x_vars(a.rank_);
  return SymFunc::collect(a.expand(vars) * b.expand(vars), vars, a.field_, false);
}

SymFunc SymFunc::restrict_rank(int n) const {
  SymFunc r(n, field_);
  for (const auto& [p, c] : coeffs_)
    if (p.length() <= n) r.coeffs_.emplace(p, c);
  return r;
}

SymFunc SymFunc::with_rank(int n) const {
  if (n < rank_) return restrict_rank(n);
  SymFunc r = *this;
  r.rank_ = n;
  return r;
}

std::vector<std::vector<int>> distinct_permutations(std::vector<int> v) {
  std::vector<std::vector<int>> out;
  std::sort(v.begin(), v.end());
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

LaurentSeries SymFunc::expand(const std::vector<int>& vars) const {
  int n = static_cast<int>(vars.size());
  if (n < rank_) throw std::invalid_argument("SymFunc::expand: too few variables");
  Poly den(1);
  for (const auto& [p, c] : coeffs_)
    if (!c.den().is_constant() || c.den() != Poly(1)) den = lcm(den, c.den());
  den = den.sign_normalized();
  PolyBuilder b;
  for (const auto& [p, c] : coeffs_) {
    Poly scale = c.num() * den.div_exact(c.den());
    for (const auto& perm : distinct_permutations(p.padded(n))) {
      Monomial m;
      for (int i = 0; i < n; ++i) m.set(vars[i], perm[i]);
      for (const auto& t : scale.terms()) b.add(t.mono * m, t.coeff);
    }
  }
  return LaurentSeries(b.build(), den);
}

SymFunc SymFunc::collect(const LaurentSeries& f, const std::vector<int>& vars, Field field,
                         bool check) {
  int n = static_cast<int>(vars.size());
  SymFunc r(n, field);
  auto parts = split_by(f.numer(), vars);
  for (const auto& [key, p] : parts) {
    for (int e : key)
      if (e < 0) throw std::domain_error("SymFunc::collect: negative exponent");
    if (!std::is_sorted(key.begin(), key.end(), std::greater<int>())) {
      if (check) {
        std::vector<int> s = key;
        std::sort(s.begin(), s.end(), std::greater<int>());
        auto it = parts.find(s);
        if (it == parts.end() || it->second != p)
          throw std::domain_error("SymFunc::collect: input not symmetric");
      }
      continue;
    }
    r.coeffs_.emplace(Partition(key), RatFunc(p, f.denom()));
  }
  for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
    it = it->second.is_zero() ? r.coeffs_.erase(it) : std::next(it);
  return r;
}

std::string SymFunc::to_string() const {
  if (coeffs_.empty()) return "0";
  std::vector<Partition> keys;
  for (const auto& [p, c] : coeffs_) keys.push_back(p);
  std::sort(keys.begin(), keys.end(), graded_lex_less);
  std::string s;
  for (const auto& p : keys) {
    if (!s.empty()) s += " + ";
    s += "[" + coeffs_.at(p).to_string() + "]*m" + p.to_string();
  }
  return s;
}

// ------------------------------------------------------------------ bases

SymFunc monomial_sym(const Partition& lambda, int n, Field field) {
  return SymFunc::monomial(lambda, n, field);
}

namespace {

// number of ways to distribute the parts of rho into bins with sums lambda
mpz_class distribution_count(const std::vector<int>& rho, std::vector<int> bins, std::size_t i) {
  if (i == rho.size()) {
    for (int b : bins)
      if (b != 0) return 0;
    return 1;
  }
  mpz_class total = 0;
  for (std::size_t j = 0; j < bins.size(); ++j) {
    if (bins[j] >= rho[i]) {
      bins[j] -= rho[i];
      total += distribution_count(rho, bins, i + 1);
      bins[j] += rho[i];
    }
  }
  return total;
}

struct PowerTransition {
  std::vector<Partition> parts;                   // partitions of w
  std::vector<std::vector<mpq_class>> inv;        // m_lambda = sum_rho inv[lambda][rho] p_rho
};

const PowerTransition& power_transition(int w) {
  static std::mutex mu;
  static std::map<int, PowerTransition> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  PowerTransition pt;
  pt.parts = partitions_of(w);
  std::size_t N = pt.parts.size();
  // L[rho][lambda]: p_rho = sum_lambda L m_lambda
  std::vector<std::vector<mpq_class>> a(N, std::vector<mpq_class>(2 * N));
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t l = 0; l < N; ++l)
      a[r][l] = distribution_count(pt.parts[r].parts(), pt.parts[l].parts(), 0);
    a[r][N + r] = 1;
  }
  // Gauss-Jordan: rows rho; invert L
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    while (piv < N && a[piv][c] == 0) ++piv;
    if (piv == N) throw std::logic_error("power transition singular");
    std::swap(a[piv], a[c]);
    mpq_class d = a[c][c];
    for (auto& v : a[c]) v /= d;
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (std::size_t k = 0; k < 2 * N; ++k) a[r][k] -= f * a[c][k];
    }
  }
  // L^{-1}[lambda][rho] sits at a[lambda][N + rho]; m_lambda = sum_rho Linv[lambda][rho] p_rho
  pt.inv.assign(N, std::vector<mpq_class>(N));
  for (std::size_t l = 0; l < N; ++l)
    for (std::size_t r = 0; r < N; ++r) pt.inv[l][r] = a[l][N + r];
  return cache.emplace(w, std::move(pt)).first->second;
}

}  // namespace

SymFunc power_sum(const Partition& lambda, int n, Field field) {
  SymFunc r(n, field);
  for (const auto& mu : partitions_of(lambda.weight(), n)) {
    mpz_class c = distribution_count(lambda.parts(), mu.parts(), 0);
    if (c != 0) r.set(mu, RatFunc(c));
  }
  return r;
}

SymFunc elementary(int r, int n, Field field) {
  if (r > n) return SymFunc(n, field);
  return SymFunc::monomial(Partition(std::vector<int>(r, 1)), n, field);
}

std::map<Partition, RatFunc> to_power_basis(const SymFunc& f) {
  if (f.degree() > f.rank())
    throw std::domain_error("to_power_basis: degree " + std::to_string(f.degree()) +
                            " exceeds rank " + std::to_string(f.rank()));
  std::map<int, std::vector<std::pair<Partition, RatFunc>>> by_weight;
  for (const auto& [p, c] : f.coeffs()) by_weight[p.weight()].push_back({p, c});
  std::map<Partition, RatFunc> out;
  for (const auto& [w, terms] : by_weight) {
    const auto& pt = power_transition(w);
    std::map<Partition, std::size_t> index;
    for (std::size_t i = 0; i < pt.parts.size(); ++i) index[pt.parts[i]] = i;
    for (std::size_t r = 0; r < pt.parts.size(); ++r) {
      RatFunc acc;
      for (const auto& [p, c] : terms) {
        const mpq_class& m = pt.inv[index.at(p)][r];
        if (m != 0) acc += c * RatFunc(m);
      }
      if (!acc.is_zero()) out.emplace(pt.parts[r], acc);
    }
  }
  return out;
}

mpz_class z_lambda(const Partition& lambda) {
  mpz_class z = 1;
  std::map<int, int> mult;
  for (int p : lambda.parts()) ++mult[p];
  for (auto [part, m] : mult) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), part, m);
    z *= f * pw;
  }
  return z;
}

namespace {

RatFunc sp_generic(const SymFunc& f, const SymFunc& g, const std::function<RatFunc(const Partition&)>& w) {
  auto pf = to_power_basis(f);
  auto pg = to_power_basis(g);
  RatFunc acc;
  for (const auto& [rho, c] : pf) {
    auto it = pg.find(rho);
    if (it == pg.end()) continue;
    acc += c * it->second * w(rho);
  }
  return acc;
}

}  // namespace

RatFunc sp_qt(const SymFunc& f, const SymFunc& g) {
  return sp_generic(f, g, [](const Partition& rho) {
    Poly num(z_lambda(rho)), den(1);
    for (int r : rho.parts()) {
      num *= Poly(1) - Poly::var(kQ, 2 * r);
      den *= Poly(1) - Poly::var(kT, 2 * r);
    }
    return RatFunc(num, den);
  });
}

RatFunc sp_q(const SymFunc& f, const SymFunc& g) {
  return sp_generic(f, g, [](const Partition& rho) {
    Poly num(z_lambda(rho));
    for (int r : rho.parts()) num *= Poly(1) - Poly::var(kQ, 2 * r);
    return RatFunc(num);
  });
}

RatFunc sp_kappa(const SymFunc& f, const SymFunc& g) {
  return sp_generic(f, g, [](const Partition& rho) {
    return RatFunc(Poly(z_lambda(rho)), Poly::var(kKappa, rho.length()));
  });
}

LaurentSeries weight_delta(const WeightKind& w) {
  int n = w.rank;
  auto z = x_vars(n);
  Poly acc(1);
  switch (w.kind) {
    case WeightKind::macdonald: {
      if (w.param < 1) throw std::invalid_argument("macdonald weight needs k >= 1");
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          Monomial ratio = Monomial::unit(z[i]) * Monomial::unit(z[j], -1);
          for (int r = 0; r < w.param; ++r)
            acc *= Poly(1) - Poly::monomial(ratio * qh(2 * r));
        }
      return LaurentSeries(acc);
    }
    case WeightKind::jack: {
      if (w.param < 1) throw std::invalid_argument("jack weight needs integer kappa >= 1");
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          Monomial ratio = Monomial::unit(z[j]) * Monomial::unit(z[i], -1);
          acc *= (Poly(1) - Poly::monomial(ratio)).pow(w.param);
        }
      return LaurentSeries(acc);
    }
    case WeightKind::qwhittaker: {
      if (w.param < 0) throw std::invalid_argument("qwhittaker weight needs K >= 0");
      int top = 2 * w.param;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          Monomial ratio = Monomial::unit(z[j]) * Monomial::unit(z[i], -1);
          for (int r = 0; r <= w.param; ++r)
            acc = mul_truncated(acc, Poly(1) - Poly::monomial(ratio * qh(2 * r)), kQ, top);
        }
      LaurentSeries d(acc);
      d.truncate_q(w.param);
      return d;
    }
  }
  throw std::logic_error("unknown weight kind");
}

RatFunc sp_torus(const SymFunc& f, const SymFunc& g, const WeightKind& w) {
  if (f.rank() != w.rank || g.rank() != w.rank) throw std::invalid_argument("sp_torus: rank mismatch");
  auto z = x_vars(w.rank);
  LaurentSeries lf = f.expand(z), lg = g.expand(z).invert(z);
  if (w.kind == WeightKind::qwhittaker) {
    lf.truncate_q(w.param);
    lg.truncate_q(w.param);
  }
  LaurentSeries prod = lf * weight_delta(w) * lg;
  RatFunc ct = prod.constant_term(z);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), w.rank);
  RatFunc r = ct * RatFunc(mpq_class(1, fact));
  if (w.kind == WeightKind::qwhittaker) return RatFunc(r.num().truncate_above(kQ, 2 * w.param), r.den());
  return r;
}

}  // namespace macbax
