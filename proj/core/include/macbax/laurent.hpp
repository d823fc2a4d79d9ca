#pragma once

#include <map>
#include <optional>
#include <vector>

#include "macbax/poly.hpp"
#include "macbax/ratfunc.hpp"

namespace macbax {

// Laurent polynomial in a set of torus/spatial variables with RatFunc
// coefficients, stored as an integer polynomial over a common denominator
// that involves parameters only.  Optionally truncated in q (order K, integer
// powers) and in one auxiliary variable (order M).
class LaurentSeries {
 public:
  LaurentSeries() : den_(1) {}
  LaurentSeries(Poly numer, Poly denom = Poly(1));  // NOLINT(google-explicit-constructor)
  static LaurentSeries from(const RatFunc& c) { return LaurentSeries(c.num(), c.den()); }

  const Poly& numer() const { return num_; }
  const Poly& denom() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  std::optional<int> q_order() const { return q_order_; }
  std::optional<int> aux_order() const { return aux_order_; }
  int aux_var() const { return aux_var_; }

  // Declares truncation and drops terms beyond it.  q truncation requires a
  // constant denominator (series coefficients are integers).
  LaurentSeries& truncate_q(int K);
  LaurentSeries& truncate_aux(int var, int M);

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries operator-() const;
  LaurentSeries scaled(const RatFunc& c) const;
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  // Coefficient of the zero exponent vector in vars, as a RatFunc in the rest.
  RatFunc constant_term(const std::vector<int>& vars) const;
  // Same but keeps other non-parameter variables (result as series).
  LaurentSeries constant_term_partial(const std::vector<int>& vars) const;
  // Coefficient of vars^exps.
  RatFunc coefficient(const std::vector<int>& vars, const std::vector<int>& exps) const;
  // Map from exponent vectors in vars to coefficients.
  std::map<std::vector<int>, RatFunc> terms(const std::vector<int>& vars) const;

  // T_{q, v}: v^a -> q^a v^a.
  LaurentSeries q_shift(int v) const;
  LaurentSeries substitute(int v, const Monomial& image) const;
  // v -> 1/v for each listed variable.
  LaurentSeries invert(const std::vector<int>& vars) const;
  // Exact division of the numerator by p (p free of the denominator).
  LaurentSeries div_exact(const Poly& p) const;
  // Common denominator put in canonical form (gcd with numerator removed).
  LaurentSeries reduced() const;

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

 private:
  Poly num_, den_;
  std::optional<int> q_order_;
  std::optional<int> aux_order_;
  int aux_var_ = kAux;
  void apply_truncation();
};

// Product of a and b dropping terms with exponent of var > max_exp.
Poly mul_truncated(const Poly& a, const Poly& b, int var, int max_exp);

// Splits p by the exponents in vars; keys are exponent vectors.
std::map<std::vector<int>, Poly> split_by(const Poly& p, const std::vector<int>& vars);

std::vector<int> x_vars(int n);
std::vector<int> y_vars(int n);

}  // namespace macbax
