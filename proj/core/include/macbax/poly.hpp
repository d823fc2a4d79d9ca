#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace macbax {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxX = 6;
inline constexpr int kMaxY = 5;

// Variable slots shared by every polynomial in the library.  q and t live on
// the half-integer lattice: an exponent e in slot kQ means q^(e/2).
enum Var : int {
  kQ = 0,
  kT = 1,
  kKappa = 2,
  kSpec = 3,  // spectral parameter X of generating operators
  kAux = 4,   // auxiliary series variable z
  kX1 = 5,    // x_1 .. x_6
  kY1 = kX1 + kMaxX,  // y_1 .. y_5
};

constexpr Var x_var(int i) { return Var(kX1 + i); }
constexpr Var y_var(int j) { return Var(kY1 + j); }
constexpr bool half_lattice(int v) { return v == kQ || v == kT; }

struct Monomial {
  std::array<int16_t, kMaxVars> exp{};
  int32_t deg = 0;

  static Monomial unit(int v, int e = 1);
  int operator[](int v) const { return exp[v]; }
  void set(int v, int e);
  bool is_one() const { return deg == 0 && exp == std::array<int16_t, kMaxVars>{}; }
  bool divides(const Monomial& o) const;
  Monomial inverse() const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial pow(int e) const;
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  std::size_t hash() const;
};

// true when a > b in graded-lex order (degree first, then lex on slots)
inline bool grlex_gt(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg;
  return a.exp > b.exp;
}

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_gt(a, b); }
};
struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Sparse Laurent polynomial with integer coefficients.
class Poly {
 public:
  struct Term {
    Monomial mono;
    mpz_class coeff;
  };

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const mpz_class& c);  // NOLINT(google-explicit-constructor)
  static Poly monomial(const Monomial& m, const mpz_class& c = 1);
  static Poly var(int v, int e = 1) { return monomial(Monomial::unit(v, e)); }
  // Sorts and merges; zero coefficients are dropped.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  mpz_class constant_value() const;  // requires is_constant()
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const mpz_class& c) const;
  Poly shifted(const Monomial& m) const;  // multiply by monomial
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Exact quotient in the Laurent ring; nullopt when b does not divide.
  std::optional<Poly> divide_exact(const Poly& d) const;
  Poly div_exact(const Poly& d) const;  // throws when not divisible
  Poly div_scalar(const mpz_class& c) const;  // exact, throws otherwise
  Poly pow(unsigned e) const;

  mpz_class content() const;  // positive gcd of coefficients
  Monomial min_exponents() const;
  Monomial max_exponents() const;
  int degree_in(int v) const;
  int min_degree_in(int v) const;
  bool uses(int v) const;

  // Replace one lattice unit of v by the monomial image.
  Poly substitute(int v, const Monomial& image) const;
  // Evaluate v at an integer.
  Poly eval_var(int v, const mpz_class& x) const;
  // Keep terms whose exponent in v is <= max_exp.
  Poly truncate_above(int v, int max_exp) const;
  // Group by exponent of v.
  std::map<int, Poly> coeffs_in(int v) const;
  // Keep terms whose monomial satisfies pred.
  template <class Pred>
  Poly filter(Pred pred) const {
    Poly r;
    for (const auto& t : terms_)
      if (pred(t.mono)) r.terms_.push_back(t);
    return r;
  }

  std::string to_string() const;
  std::size_t hash() const;

  // Leading coefficient sign normalization (positive grlex leading term).
  Poly sign_normalized() const;

 private:
  std::vector<Term> terms_;  // grlex descending, nonzero coefficients
  friend class PolyBuilder;
};

// Accumulates terms in any order, then produces a canonical Poly.
class PolyBuilder {
 public:
  void add(const Monomial& m, const mpz_class& c);
  void addmul(const Monomial& m, const mpz_class& a, const mpz_class& b);
  void add(const Poly& p);
  void add_shifted(const Poly& p, const Monomial& m, const mpz_class& c);
  Poly build();
  bool empty() const { return acc_.empty(); }

 private:
  std::vector<std::pair<Monomial, mpz_class>> acc_;
  std::vector<std::size_t> buckets_;  // open addressing table into acc_
  std::size_t find_slot(const Monomial& m);
  void rehash();
};

Poly gcd(const Poly& a, const Poly& b);
// Reference algorithm (primitive remainder sequences), slow but simple.
Poly gcd_prs(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

std::string var_name(int v);

}  // namespace macbax
