// SPDX-License-Identifier: Apache-2.0
//
// Foundation kernels: gamma functions, regularized incomplete gamma
// pair, modified Bessel function of the first kind for real order, and
// generalized Laguerre polynomials.
//
// All functions are pure and safe for concurrent use.
#ifndef MARCUMQ_SPECIAL_FUNCTIONS_HPP
#define MARCUMQ_SPECIAL_FUNCTIONS_HPP

namespace marcumq {

// Degree/order pair of a generalized Laguerre polynomial L_n^{(alpha)}.
// Requires n >= 0 and alpha > -1.
struct LaguerreIndex {
    int n = 0;
    double alpha = 0.0;
};

void validate_index(const LaguerreIndex& idx);

// Euler gamma function for x > 0. Relative error a few ulp over the
// representable range; throws OverflowError past x ~ 171.6.
double gamma(double x);

// ln Gamma(x) for x > 0; the overflow-safe companion of gamma().
double log_gamma(double x);

// Regularized incomplete gamma pair, s > 0 and x >= 0:
//   reg_lower_gamma = gamma(s,x)/Gamma(s),  reg_upper_gamma = Gamma(s,x)/Gamma(s).
// Power series below x = s+1, continued fraction above; within each
// branch one member is derived by complement so the pair sums to 1
// exactly.
double reg_lower_gamma(double s, double x);
double reg_upper_gamma(double s, double x);

// Modified Bessel function I_nu(t) for nu >= 0, t >= 0, summed from
// the defining power series with term-ratio updates until the next
// term falls below 1e-17 of the partial sum. Throws OverflowError when
// the value exceeds double range.
double bessel_i(double nu, double t);

// ln I_order(t) for order > -1 and t > 0. Works far beyond the
// overflow point of bessel_i (arguments of a few thousand); used by
// the quadrature integrand.
double log_bessel_i(double order, double t);

// L_n^{(alpha)}(x) by the three-term recurrence
//   (n+1) L_{n+1} = (2n+alpha+1-x) L_n - (n+alpha) L_{n-1},
// L_0 = 1, L_1 = alpha + 1 - x.
double laguerre(const LaguerreIndex& idx, double x);

// L_n^{(alpha)}(0) = Gamma(n+alpha+1) / (Gamma(alpha+1) Gamma(n+1)).
double laguerre_at_zero(const LaguerreIndex& idx);

// Direct summation of the explicit formula
//   sum_{k=0}^n Gamma(n+alpha+1)/(Gamma(k+alpha+1) Gamma(n-k+1)) (-x)^k / k!
// in extended precision. Reference implementation for laguerre();
// intended for n <= 60.
double brute_laguerre_sum(const LaguerreIndex& idx, double x);

}  // namespace marcumq

#endif
