#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "macbax/laurent.hpp"
#include "macbax/ratfunc.hpp"
#include "macbax/report.hpp"

namespace macbax {

// (x;q)_n = prod_{j<n} (1 - x q^j), n >= 0.
Poly q_pochhammer(const Monomial& x, int n);
// (n)_q! = (q;q)_n
Poly q_factorial(int n);

// Coefficient of x^n in Gamma_{q,t}(x) = (tx;q)_inf/(x;q)_inf.
RatFunc gamma_qt_coeff(int n);
// Coefficient of z^n in Gamma_q(z) = 1/(z;q)_inf.
RatFunc gamma_q_coeff(int n);
// kappa(kappa+1)...(kappa+n-1)/n!, symbolic kappa.
RatFunc gamma_kappa_coeff(int n);
mpq_class gamma_kappa_coeff(int n, long kappa);

// Gamma_{q,s}(x q^n) / Gamma_{q,s}(x) for monomials s, x.
RatFunc gamma_finite_ratio(const Monomial& s, const Monomial& x, int n);
inline RatFunc gamma_qt_finite_ratio(const Monomial& x, int n) {
  return gamma_finite_ratio(th(2), x, n);
}
// Gamma(x + n)/Gamma(x) for a rational function x.
RatFunc rising_ratio(const RatFunc& x, int n);

// Local behaviour of a function of t near t = q^k along t = q^k (1 + eps):
// f = lead * eps^order + O(eps^(order+1)).
struct LocalValue {
  int order = 0;
  RatFunc lead;
  bool is_zero() const { return lead.is_zero(); }
};
LocalValue local_at_t_power(const RatFunc& f, int k);
bool operator==(const LocalValue& a, const LocalValue& b);

// Formal product  scalar * prod Gamma_{q,s}(x)^e * prod (1-x)^e  with s, x
// monomials in q and t.
class QGammaProduct {
 public:
  struct Factor {
    Monomial s, x;
    int e;
  };
  struct Linear {
    Monomial x;
    int e;
  };

  QGammaProduct() : scalar_(1) {}
  explicit QGammaProduct(RatFunc scalar) : scalar_(std::move(scalar)) {}
  static QGammaProduct gamma(const Monomial& s, const Monomial& x, int e = 1);
  static QGammaProduct linear(const Monomial& x, int e = 1);

  const RatFunc& scalar() const { return scalar_; }
  const std::vector<Factor>& factors() const { return factors_; }

  QGammaProduct& operator*=(const QGammaProduct& o);
  friend QGammaProduct operator*(QGammaProduct a, const QGammaProduct& b) { return a *= b; }
  QGammaProduct inverse() const;
  friend QGammaProduct operator/(const QGammaProduct& a, const QGammaProduct& b) {
    return a * b.inverse();
  }

  // Every Gamma factor rewritten as Gamma_{q,s}(x0) times a finite ratio,
  // x0 being the representative of x q^Z with q-exponent 1.  The factors
  // left over are "formal"; the product is rational when none remain.
  struct Reduced {
    RatFunc scalar;
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> formal;  // (s, x0) -> power
    bool rational() const { return formal.empty(); }
  };
  Reduced reduce() const;
  // Throws std::domain_error when formal factors remain.
  RatFunc to_ratfunc() const;

  // Expansion at t = q^k (any integer k).
  LocalValue at_t_power(int k) const;

  std::string to_string() const;

 private:
  RatFunc scalar_;
  std::vector<Factor> factors_;
  std::vector<Linear> linear_;
};

// Product  scalar * prod Gamma(c + a kappa)^e.
class KappaGammaProduct {
 public:
  struct Factor {
    int a, c, e;
  };
  KappaGammaProduct() : scalar_(1) {}
  explicit KappaGammaProduct(RatFunc scalar) : scalar_(std::move(scalar)) {}
  static KappaGammaProduct gamma(int c, int a, int e = 1);

  KappaGammaProduct& operator*=(const KappaGammaProduct& o);
  friend KappaGammaProduct operator*(KappaGammaProduct a, const KappaGammaProduct& b) {
    return a *= b;
  }
  KappaGammaProduct inverse() const;

  // Reduction to Gamma(a kappa) powers (a != 0) times a rational function in
  // kappa; slope-zero factors are evaluated as factorials.
  struct Reduced {
    RatFunc scalar;
    std::map<int, int> formal;  // a -> power of Gamma(a kappa)
  };
  Reduced reduce() const;

  // Expansion at an integer kappa along kappa + eps.
  struct Local {
    int order = 0;
    mpq_class lead;
  };
  Local at_kappa(long kappa) const;

 private:
  RatFunc scalar_;
  std::vector<Factor> factors_;
};

// The theta function without its q^(1/4)/i prefactor, as a Laurent
// polynomial in zeta = z^(1/2) (slot kAux):
//   B(zeta) = (zeta - 1/zeta) prod_{j>=1} (1-q^j)(1-zeta^2 q^j)(1-zeta^-2 q^j)
// through q-order K.  Computed from the triple-product sum.
LaurentSeries theta1_body(int K);
// Same object from the product form (independent expansion).
LaurentSeries theta1_body_product(int K);

// Reflection identities through q-order K, for t = q^k, k = 1..max_k, and the
// t = 0 variant.  perturb adds a q^K term to one side (negative control).
Report reflection_check(int K, int max_k = 3, bool perturb = false);
// Constant-term extraction of z^{-n} Gamma(z) against the coefficient
// formulas for n <= max_n, with Gamma_{q,t}, Gamma_q expanded through q^K.
Report euler_check(int max_n, int K, bool perturb = false);

struct LimitReport {
  Report report;
  std::vector<double> hbar, errors, ratios;
  std::vector<double> coeff_errors;  // b_(n) deviations at the smallest hbar, n = 1..
};
// Numeric check of Gamma_{q,t}(x0) -> (1-x0)^(-kappa) at q = exp(-hbar),
// t = q^kappa; error ratios should approach hbar ratios.
LimitReport jack_limit_check(double x0, int kappa, const std::vector<double>& hbars,
                             int max_n = 4);

}  // namespace macbax
