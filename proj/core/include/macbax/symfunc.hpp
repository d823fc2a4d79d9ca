#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "macbax/laurent.hpp"
#include "macbax/partition.hpp"
#include "macbax/ratfunc.hpp"

namespace macbax {

enum class Field { qt, q, kappa };

std::string field_name(Field f);

// Symmetric polynomial in n variables in the monomial basis m_lambda.
class SymFunc {
 public:
  explicit SymFunc(int rank = 0, Field field = Field::qt) : rank_(rank), field_(field) {}

  static SymFunc monomial(const Partition& lambda, int rank, Field field = Field::qt);
  static SymFunc constant(const RatFunc& c, int rank, Field field = Field::qt);

  int rank() const { return rank_; }
  Field field() const { return field_; }
  void set_field(Field f) { field_ = f; }
  const std::map<Partition, RatFunc>& coeffs() const { return coeffs_; }
  RatFunc coeff(const Partition& lambda) const;
  void set(const Partition& lambda, const RatFunc& c);
  void add(const Partition& lambda, const RatFunc& c);
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;  // max weight in support, -1 for zero
  bool homogeneous() const;

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  SymFunc scaled(const RatFunc& c) const;
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.rank_ == b.rank_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

  // Apply fn to every coefficient (zero results are pruned).
  template <class Fn>
  SymFunc map_coeffs(Fn fn) const {
    SymFunc r(rank_, field_);
    for (const auto& [p, c] : coeffs_) r.set(p, fn(c));
    return r;
  }
  // Terms with length <= n only, at rank n.
  SymFunc restrict_rank(int n) const;
  // Reinterpret at a larger rank (coefficients unchanged).
  SymFunc with_rank(int n) const;

  // Expansion as a polynomial in the given variables over a common
  // denominator.  Default variables x_1..x_n.
  LaurentSeries expand(const std::vector<int>& vars) const;
  LaurentSeries expand() const { return expand(x_vars(rank_)); }
  // Collect a symmetric polynomial.  Throws std::domain_error if the input is
  // not symmetric (when check is set) or has negative exponents.
  static SymFunc collect(const LaurentSeries& f, const std::vector<int>& vars, Field field,
                         bool check = true);

  std::string to_string() const;

 private:
  int rank_;
  Field field_;
  std::map<Partition, RatFunc> coeffs_;
};

// All distinct permutations of a vector.
std::vector<std::vector<int>> distinct_permutations(std::vector<int> v);

// ---- bases

SymFunc monomial_sym(const Partition& lambda, int n, Field field = Field::qt);
SymFunc power_sum(const Partition& lambda, int n, Field field = Field::qt);
SymFunc elementary(int r, int n, Field field = Field::qt);
// Coefficients c with f = sum c_rho p_rho.  Requires degree <= rank.
std::map<Partition, RatFunc> to_power_basis(const SymFunc& f);

// z_lambda = prod_i i^{m_i} m_i!
mpz_class z_lambda(const Partition& lambda);

RatFunc sp_qt(const SymFunc& f, const SymFunc& g);
RatFunc sp_q(const SymFunc& f, const SymFunc& g);
RatFunc sp_kappa(const SymFunc& f, const SymFunc& g);

// Torus weights.
struct WeightKind {
  enum Kind { macdonald, qwhittaker, jack } kind;
  int param;  // k for macdonald, K for qwhittaker, kappa for jack
  int rank;
};

LaurentSeries weight_delta(const WeightKind& w);
// (1/n!) CT( f(z) g(z^{-1}) Delta(z) ); modulo q^{K+1} for the q-Whittaker kind.
RatFunc sp_torus(const SymFunc& f, const SymFunc& g, const WeightKind& w);

inline std::ostream& operator<<(std::ostream& os, const SymFunc& f) { return os << f.to_string(); }

}  // namespace macbax
