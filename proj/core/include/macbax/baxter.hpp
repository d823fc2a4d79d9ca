#pragma once

#include <functional>
#include <string>
#include <vector>

#include "macbax/gammakit.hpp"
#include "macbax/macdonald.hpp"
#include "macbax/report.hpp"

namespace macbax {

struct BaxterParams {
  int gamma = 0;
  int k = 1;           // t = q^k for the integral operators
  int max_degree = 8;  // degree cap on inputs
  int z_order = 4;     // truncation of dual-operator series
};

// L_gamma(lambda) = b_{lambda - gamma} <P_lambda, P_lambda>'; zero product when lambda_n < gamma.
QGammaProduct baxter_eigenvalue(const Partition& lambda, int gamma, int n);
// prod_i Gamma_{q,t/q}(q) / Gamma_{q,t/q}(t^{n-i} q^{lambda_i - gamma + 1}), lambda any tuple.
QGammaProduct baxter_eigenvalue_compact(const std::vector<int>& lambda, int gamma);

// Int d^x y  prod_j y_j^c  prod_{i,j} K(x_i y_j)  weight(y)  f(y^{-1}), no 1/n!,
// with row_of(m) = [z^m] prod_i K(z x_i) in nx variables.  A q-truncated
// weight truncates the integrand to the same order.
SymFunc pairing_integral(const SymFunc& f, int nx, int c, const LaurentSeries& weight,
                         const std::function<SymFunc(int)>& row_of);

// Int d^x y  prod_j y_j^c  prod_{i,j} Gamma_{q,q^k}(x_i y_j)  Delta(y; q, q^k)  f(y^{-1})
// for f symmetric in rank(f) variables with coefficients in Q(q); result in nx variables.
// No 1/n! factor.
SymFunc kernel_integral(const SymFunc& f, int nx, int c, int k);

// Baxter operator at t = q^k, with the 1/n! torus measure.
SymFunc apply_baxter(const SymFunc& f, const BaxterParams& p);
Report baxter_equation_check(const Partition& lambda, int gamma, int k, int n);

// Coefficients of z^m, m = 0..M, of the dual Baxter operator on P_lambda.
std::vector<SymFunc> dual_baxter_apply(const Partition& lambda, int n, int M);
Report dual_baxter_equation_check(const Partition& lambda, int n, int k, int M);

// Type I recursion: raw torus integral, rank l -> l+1.
SymFunc recursion_I_apply(int last, const SymFunc& f, int k);
// Constant produced by the raw integral on P_{nu + last}: l! b_nu <P_nu, P_nu>'_l at t = q^k.
RatFunc recursion_I_constant(const Partition& nu, int l, int k);

enum class Stage { I, II };
// Compose rank-raising stages eps[0] (1 -> 2), ..., eps[n-2] from x^{lambda_1}; at t = q^k.
SymFunc mixed_representation(const Partition& lambda, int n, const std::vector<Stage>& eps, int k);

SymFunc specialize_t(const SymFunc& f, int k);

}  // namespace macbax
