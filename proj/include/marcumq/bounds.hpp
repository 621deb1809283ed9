// SPDX-License-Identifier: Apache-2.0
//
// Uniform envelopes for generalized Laguerre polynomials and the
// exponential-tail inequality, exposed so tests can assert them
// numerically.
#ifndef MARCUMQ_BOUNDS_HPP
#define MARCUMQ_BOUNDS_HPP

#include "marcumq/special_functions.hpp"

namespace marcumq {

// |L_n^{(alpha)}(x)| <= Gamma(alpha+n+1)/(n! Gamma(alpha+1)) e^{x/2},
// valid for alpha >= 0, x > 0.
double szego_bound(const LaguerreIndex& idx, double x);

// |L_n^{(alpha)}(x)| <= Gamma(alpha+n+1)/n! (x/2)^{-alpha} e^{x/2},
// valid for alpha >= 0, x > 0.
double love_bound(const LaguerreIndex& idx, double x);

// |L_n^{(alpha)}(x)| <= (2 - Gamma(alpha+n+1)/(n! Gamma(alpha+1))) e^{x/2},
// valid for -1 < alpha <= 0, x > 0.
double szego_small_order_bound(const LaguerreIndex& idx, double x);

struct SewellGap {
    double gap = 0.0;    // e^x - sum_{k=0}^n x^k/k!
    double bound = 0.0;  // x e^x / n
};

// Tail of the exponential series after n terms against its bound
// x e^x / n (n >= 1, x >= 0). The gap is accumulated as a forward
// term-ratio tail sum so it never suffers cancellation.
SewellGap sewell_gap(double x, int n);

}  // namespace marcumq

#endif
