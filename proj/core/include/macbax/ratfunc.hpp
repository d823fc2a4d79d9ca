#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "macbax/poly.hpp"

namespace macbax {

// Canonical quotient of Laurent polynomials over Z.
//
// Invariants: gcd(num, den) = 1, den has non-negative exponents with minimum 0
// in every slot (monomials are units and live in num), den has positive
// leading coefficient in graded-lex order.  Equality is structural.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const mpz_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc var(int v, int e = 1) { return RatFunc(Poly::var(v, e)); }
  static RatFunc monomial(const Monomial& m) { return RatFunc(Poly::monomial(m)); }
  // q^(a) with a an integer power (stored on the half lattice).
  static RatFunc q_pow(int a) { return var(kQ, 2 * a); }
  static RatFunc t_pow(int a) { return var(kT, 2 * a); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == Poly(1) && den_ == Poly(1); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class constant_value() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  RatFunc pow(int e) const;

  // Substitute one lattice unit of v by a monomial.  nullopt if the
  // denominator vanishes.
  std::optional<RatFunc> try_substitute(int v, const Monomial& image) const;
  RatFunc substitute(int v, const Monomial& image) const;
  std::optional<RatFunc> try_eval(int v, const mpz_class& x) const;
  RatFunc eval(int v, const mpz_class& x) const;

  // Power series in q through q^K (integer powers; half powers included when
  // present).  Requires den to be a unit at q = 0.  Result is a polynomial
  // in the half-lattice q exponent with possibly other variables present.
  Poly q_series(int K) const;

  std::string to_string() const;
  std::size_t hash() const { return num_.hash() * 31u + den_.hash(); }

 private:
  Poly num_, den_;
  struct Trusted {};
  RatFunc(Poly num, Poly den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  void fix_units();
};

// q^(h/2) and t^(h/2)
inline Monomial qh(int half_units) { return Monomial::unit(kQ, half_units); }
inline Monomial th(int half_units) { return Monomial::unit(kT, half_units); }

// Specializations used throughout: t -> q^k on the half lattice.
RatFunc specialize_t(const RatFunc& f, int k);
Poly specialize_t(const Poly& f, int k);

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.to_string(); }

}  // namespace macbax
