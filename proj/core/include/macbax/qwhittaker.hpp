#pragma once

#include <vector>

#include "macbax/baxter.hpp"
#include "macbax/macdonald.hpp"
#include "macbax/partition_function.hpp"
#include "macbax/report.hpp"
#include "macbax/symfunc.hpp"

namespace macbax {

// Class-one q-Whittaker polynomial P^{qW}_lambda = P_lambda(x; q, 0) / Delta_q(lambda).
struct QWhittakerEntry {
  Partition lambda;
  int rank = 0;
  SymFunc poly;
  RatFunc delta;  // Delta_q(lambda) at this rank
};

// (n)_q! as a rational function; 1/(n)_q! is read as zero for n < 0.
RatFunc qfact(int n);
RatFunc inv_qfact(int n);
// prod_{i<n} (lambda_i - lambda_{i+1})_q!
RatFunc delta_q(const std::vector<int>& lambda);
inline RatFunc delta_q(const Partition& lambda, int n) { return delta_q(lambda.padded(n)); }

// t = 0 at the coefficient level; throws std::domain_error on a pole.
SymFunc at_t_zero(const SymFunc& f);
QWhittakerEntry qwhit(const Partition& lambda, int n);
inline SymFunc qwhit_P(const Partition& lambda, int n) { return qwhit(lambda, n).poly; }

// Coefficients reduced to q-series modulo q^{K+1}.
SymFunc truncate_q(const SymFunc& f, int K);
// (q;q)_inf^e modulo q^{K+1}, any sign of e.
Poly qq_infinity_series(int e, int K);

struct QWhitNorms {
  RatFunc sp;     // <P, P>_q = (lambda_n)_q! / Delta_q(lambda)
  RatFunc delta;  // Delta_q(lambda)
  int ell = 0;    // <P, P>'_q = Delta_q(lambda)^{-1} Gamma_q(q)^ell, Gamma_q(q) = 1/(q;q)_inf
  Poly torus_series(int K) const;
};
QWhitNorms qwhit_norms(const Partition& lambda, int n);
// Both norms against sp_q (stable lift) and sp_torus modulo q^{K+1}.
Report qwhit_norm_check(const Partition& lambda, int n, int K);

// H_r on functions of lambda: sum_I prod_k (1 - q^{lambda_{i_k} - lambda_{i_k+1} + 1})^{...} T^vee_I.
RatFunc toda_coefficient(const std::vector<int>& I, const std::vector<int>& lam);
template <class V>
PartitionFunction<V> apply_toda(int r, int n, const PartitionFunction<V>& F) {
  return apply_shift_operator(n, r, F, [](const std::vector<int>& I, const std::vector<int>& lam) {
    return toda_coefficient(I, lam);
  });
}
// H^vee_r on symmetric polynomials: sum_I prod_{i in I, j not in I} x_j/(x_j - x_i) T_I.
SymFunc apply_toda_dual(int r, const SymFunc& f);
// q^{lambda_{n-r+1} + ... + lambda_n}
RatFunc toda_dual_eigenvalue(const Partition& lambda, int r, int n);

// Pieri coefficient for P^{qW}_(m) P^{qW}_lambda; mu, lambda padded to rank n.
RatFunc qwhit_pieri_phi(const std::vector<int>& mu, const std::vector<int>& lambda);
// Kernel of the Baxter operator Q_z (without z power): phi(q, t=0) / Delta_q(lambda).
RatFunc qwhit_baxter_kernel(const std::vector<int>& mu, const std::vector<int>& lambda);
// Coefficient of P^{qW}_lambda(x) P^{qW}_lambda(y) in prod Gamma_q(x_i y_j), ranks n and m.
RatFunc qwhit_cauchy_coeff(const Partition& lambda, int n, int m);
Report qwhit_cauchy_check(int n, int m, int D, bool perturb = false);

// [z^m] prod_i Gamma_q(z x_i)
SymFunc gamma_q_row(int m, int n);

// z^m coefficients, m = 0..M, of Q_z applied to mu -> P^{qW}_mu(x), at lambda.
std::vector<SymFunc> qwhit_baxter_apply(const Partition& lambda, int n, int M);
// Eigenvalue identity per z-order, the action against prod Gamma_q(z x_i) P^{qW}_lambda,
// and D(-z) Q_z = Q_{qz} composed in lambda-space on all |lambda| <= W.
Report qwhit_baxter_equation_check(int n, int W, int M);

// Dual Baxter operator modulo q^{K+1}, torus measure normalized to total mass one
// (1/n! and (q;q)_inf^{n-1}).
SymFunc qwhit_dual_baxter_apply(const SymFunc& f, int gamma, int K);
RatFunc qwhit_dual_baxter_eigenvalue(const Partition& lambda, int gamma, int n);
Report qwhit_dual_baxter_equation_check(const Partition& lambda, int n, int gamma, int K);

// Rank-raising stages from x^{lambda_1}: Stage::II sums with Q_{l+1,l}(lambda; mu | x_{l+1}),
// Stage::I integrates with the dual kernel (normalized measure), modulo q^{K+1}.
SymFunc qwhit_mixed(const Partition& lambda, int n, const std::vector<Stage>& eps, int K);
enum class RecursionMode { sum, torus };
SymFunc qwhit_recursion(const Partition& lambda, int n, RecursionMode mode, int K);

}  // namespace macbax
