#pragma once

#include <functional>
#include <vector>

#include "macbax/gammakit.hpp"
#include "macbax/orthogonal.hpp"
#include "macbax/partition_function.hpp"
#include "macbax/report.hpp"
#include "macbax/symfunc.hpp"

namespace macbax {

enum class Construction { gram_schmidt, branching };

struct BasisEntry {
  Partition lambda;
  int rank = 0;
  SymFunc poly;
  Construction tag = Construction::branching;
};

// Monomial x^a with a = (a_1..a_n) on x_1..x_n.
Monomial x_monomial(const std::vector<int>& a);
// Evaluate f at x_i = point[i] (monomials in q, t).
RatFunc evaluate_at(const SymFunc& f, const std::vector<Monomial>& point);
// e_r(y_1..y_n)
RatFunc elementary_value(int r, const std::vector<RatFunc>& y);

// s = t/q, the second parameter of the Gamma functions in the product formulas
inline Monomial t_over_q() { return th(2) * qh(-2); }

BasisEntry macdonald_gs(const Partition& lambda, int n, Extension ext = Extension::lex);
// lambda of length l+1, mu of length l (zero padded); zero unless interlaced.
RatFunc branching_psi(const std::vector<int>& lambda, const std::vector<int>& mu);
BasisEntry macdonald_branch(const Partition& lambda, int n);
// Production constructor (branching, memoized).
inline SymFunc macdonald_P(const Partition& lambda, int n) { return macdonald_branch(lambda, n).poly; }

// Inverse norm <P, P>^{-1}: product over boxes.
RatFunc b_norm(const Partition& lambda);
// The same through single-row norms and Gamma ratios.
RatFunc b_norm_factored(const Partition& lambda);
// <P, P>' (torus scalar product, 1/n! measure) as a formal Gamma product.
QGammaProduct torus_norm(const Partition& lambda, int n);

// sum_{|I|=r} prod_{i in I, j not in I} cross(i,j)/(x_i - x_j) T_I f, where
// T_I multiplies x_i (i in I) by q.  Exact division by the Vandermonde.
using CrossFactor = std::function<Poly(int, int)>;
SymFunc apply_difference_operator(int r, const SymFunc& f, const CrossFactor& cross);
// M_r, exact division by the Vandermonde.
SymFunc apply_macdonald_op(int r, const SymFunc& f);
RatFunc macdonald_eigenvalue(const Partition& lambda, int r, int n);
// (1-t)^{-n} prod (1 + t^{rho_i} q^{lambda_i} X), X in slot kSpec.
RatFunc macdonald_generating_eigenvalue(const std::vector<int>& lambda);

// Coefficient of T_I in the reduced dual operator t^{-r l/2} M_r^vee at lam.
RatFunc dual_op_coefficient(const std::vector<int>& I, const std::vector<int>& lam);
template <class V>
PartitionFunction<V> apply_dual_op(int r, int n, const PartitionFunction<V>& F) {
  return apply_shift_operator(n, r, F, [](const std::vector<int>& I, const std::vector<int>& lam) {
    return dual_op_coefficient(I, lam);
  });
}

// Pieri coefficient; mu and lambda zero padded to the same length.
RatFunc pieri_phi(const std::vector<int>& mu, const std::vector<int>& lambda);

// Coefficient of z^m in prod_i Gamma_{q,t}(z x_i), as a polynomial in x_1..x_n.
SymFunc gamma_row(int m, int n);

// prod_{i,j} K(x_i y_j) with K(z) = sum_a coeff(a) z^a, x-degree graded in kAux through D.
LaurentSeries cauchy_kernel(int n, int m, int D, const std::function<RatFunc(int)>& coeff);
// Kernel against sum_{l(lambda) <= min(n,m)} term(lambda), one case per bidegree.
// perturb adds a q x_1^D y_1^D term to the sum (negative control).
Report cauchy_compare(Report rep, int n, int m, int D, const std::function<RatFunc(int)>& coeff,
                      const std::function<LaurentSeries(const Partition&)>& term, bool perturb);
Report cauchy_check(int n, int m, int D, bool perturb = false);
Report self_duality_check(const Partition& lambda, const Partition& mu, int k, int n);

}  // namespace macbax
