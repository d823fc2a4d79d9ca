#pragma once

#include <vector>

#include "macbax/baxter.hpp"
#include "macbax/gammakit.hpp"
#include "macbax/partition_function.hpp"
#include "macbax/report.hpp"
#include "macbax/symfunc.hpp"

namespace macbax {

// Monic Jack polynomial over Q(kappa) by Gram-Schmidt against sp_kappa.
SymFunc jack_gs(const Partition& lambda, int n);
inline SymFunc jack_P(const Partition& lambda, int n) { return jack_gs(lambda, n); }
// kappa -> integer value; throws std::domain_error on a pole.
SymFunc at_kappa(const SymFunc& f, long kappa);
mpq_class at_kappa(const RatFunc& c, long kappa);

// Inverse norm <P, P>_kappa^{-1}, product over boxes.
RatFunc jack_b(const Partition& lambda);
// <P, P>'_kappa (1/n! torus measure) as a Gamma product.
KappaGammaProduct jack_torus_norm(const Partition& lambda, int n);
Report jack_torus_norm_check(const Partition& lambda, int n, long kappa);

// ---- Sekiguchi operators; X lives in slot kSpec
// D(X) f = V^{-1} sum_sigma sgn(sigma) prod_i x_i^{sigma(rho_i)} (X + sigma(rho_i) kappa + x_i d_i) f
SymFunc sekiguchi_apply(const SymFunc& f);
// Coefficient of X^{n-r}.
SymFunc sekiguchi_hamiltonian(int r, const SymFunc& f);
// prod_i (X + lambda_i + rho_i kappa), rho_i = n - i
RatFunc sekiguchi_eigenvalue(const Partition& lambda, int n);
// H_1, H_2 in their explicit differential form (independent of the generating function).
SymFunc jack_H1(const SymFunc& f);
SymFunc jack_H2(const SymFunc& f);

// ---- dual Hamiltonians on functions of lambda
// prod_{i in I, j not in I} ((i-j+1) kappa + lambda_j - lambda_i - 1)/((i-j) kappa + lambda_j - lambda_i - 1)
RatFunc jack_dual_coefficient(const std::vector<int>& I, const std::vector<int>& lam);
// N_lambda = prod_{i<j} Gamma(l_i - l_j + 1 + (j-i) kappa)/Gamma(l_i - l_j + 1 + (j-i-1) kappa):
// the dual Hamiltonians are diagonal on lambda -> N_lambda P_lambda.
KappaGammaProduct jack_dual_normalization(const std::vector<int>& lam);
// Coefficient of the conjugated operator N^{-1} H^vee_r N (acts on monic P).
RatFunc jack_dual_conjugated_coefficient(const std::vector<int>& I, const std::vector<int>& lam);
template <class V>
PartitionFunction<V> apply_jack_dual(int r, int n, const PartitionFunction<V>& F) {
  return apply_shift_operator(n, r, F, [](const std::vector<int>& I, const std::vector<int>& lam) {
    return jack_dual_coefficient(I, lam);
  });
}
template <class V>
PartitionFunction<V> apply_jack_dual_conjugated(int r, int n, const PartitionFunction<V>& F) {
  return apply_shift_operator(n, r, F, [](const std::vector<int>& I, const std::vector<int>& lam) {
    return jack_dual_conjugated_coefficient(I, lam);
  });
}

// ---- Pieri and Cauchy
// Four-Gamma double product; zero off the interlacing support.
RatFunc jack_pieri_phi(const std::vector<int>& mu, const std::vector<int>& lambda);
// [z^m] prod_i (1 - z x_i)^{-kappa}, symbolic kappa
SymFunc gamma_kappa_row(int m, int n);
Report jack_cauchy_check(int n, int m, int D, long kappa, bool perturb = false);

// ---- Baxter operators (integer kappa)
// Int d^x y prod (x_i y_i)^gamma prod (1 - x_i y_j)^{-kappa} Delta_kappa(y) f(1/y), with the
// measure Gamma(kappa)^n / n!.  f has rational coefficients.
SymFunc jack_baxter_apply(const SymFunc& f, int gamma, long kappa);
// prod_i Gamma(l_i - gamma + (rho_i + 1) kappa) / Gamma(l_i - gamma + rho_i kappa + 1); zero for gamma > lambda_n.
mpq_class jack_baxter_eigenvalue(const Partition& lambda, int gamma, int n, long kappa);
Report jack_baxter_equation_check(const Partition& lambda, int n, int gamma, long kappa);

std::vector<SymFunc> jack_dual_baxter_apply(const Partition& lambda, int n, int M);
Report jack_dual_baxter_equation_check(const Partition& lambda, int n, int M);

// ---- recursions
// Printed dual recursive kernel for big (rank l+1) over small (rank l), terms with small_{l+1}
// left out; zero product off the interlacing support.  It has the shape of the Pieri
// coefficient and reproduces P only at l = 1 (after normalizing at small = head).
KappaGammaProduct jack_branch_kernel(const std::vector<int>& big, const std::vector<int>& small);
// Branching coefficient: P_big(x, z) = sum_small psi z^{|big|-|small|} P_small(x); the kappa
// limit of the Macdonald psi.
RatFunc jack_branch_psi(const std::vector<int>& big, const std::vector<int>& small);
// Stage::II sums with jack_branch_psi; Stage::I is the torus integral at integer kappa divided
// by l! b_nu <P_nu, P_nu>'.  kappa >= 1: everything at that kappa; kappa <= 0: symbolic, sums only.
SymFunc jack_mixed(const Partition& lambda, int n, const std::vector<Stage>& eps, long kappa);
enum class JackRecursionMode { integral, sum };
// Sum mode is symbolic (kappa ignored); integral mode needs kappa >= 1.
SymFunc jack_recursion(const Partition& lambda, int n, JackRecursionMode mode, long kappa = 1);
// The explicit gl2 sum divided by Gamma(kappa) (exact in Q(kappa)).
SymFunc gl2_example(int l1, int l2);

// ---- degeneration: Macdonald coefficients at q = e^-hbar, t = q^kappa vs Jack coefficients
struct JackLimitResult {
  Report report;
  double max_rel_error = 0;
};
JackLimitResult jack_macdonald_limit_check(int max_weight, int n, long kappa, double hbar, double tol);

}  // namespace macbax
