// SPDX-License-Identifier: Apache-2.0
//
// Main evaluation engine: the generalized-Laguerre power series for
// Q_nu(a,b), driven by the P_{nu,n} recurrence with a-priori
// truncation bounds and an optional fixed-(nu,a) coefficient cache.
#ifndef MARCUMQ_LAGUERRE_SERIES_HPP
#define MARCUMQ_LAGUERRE_SERIES_HPP

#include <cstdint>
#include <vector>

#include "marcumq/types.hpp"

namespace marcumq {

// Rolling state of the sequence P_{nu,n}(a,b) = b^n L_n^{(nu-1)}(a) / Gamma(nu+n+1):
// holds P_n and P_{n-1}.
struct PState {
    int n = 0;
    double p_curr = 0.0;
    double p_prev = 0.0;
};

// Initial conditions P_{nu,0} = 1/Gamma(nu+1), P_{nu,1} = (nu-a) b / Gamma(nu+2),
// returned as the state at n = 1. The (a,b) here are the arguments of
// P itself; the series engine feeds it (a^2/2, -b^2/2).
PState p_init(double nu, double a, double b);

// One step of the recurrence
//   P_{n+1} = (2n+nu-a) b / ((n+1)(nu+n+1)) P_n
//           - (n+nu-1) b^2 / ((n+1)(nu+n)(nu+n+1)) P_{n-1}.
PState p_step(const PState& state, double nu, double a, double b);

// Memoized series coefficients for fixed (nu, a):
//   coeffs[n] = (-1)^n e^{-a^2/2} L_n^{(nu-1)}(a^2/2) / Gamma(nu+n+1),
// stored with the exponential and the Gamma denominator folded in so
// entries stay in double range. The raw recurrence tail (r_lo, r_hi)
// is kept so extension continues the exact arithmetic sequence and
// cached evaluation is bit-identical to the uncached path.
//
// Safe for concurrent reads once built; extend only under exclusive
// access, then share.
struct LaguerreCache {
    double nu = 0.0;
    double a = 0.0;
    std::vector<double> coeffs;
    int hi_index = 0;   // index m of r_hi
    double r_lo = 0.0;  // L_{m-1}^{(nu-1)}(a^2/2) / Gamma(nu+m)
    double r_hi = 0.0;  // L_m^{(nu-1)}(a^2/2) / Gamma(nu+m+1)
};

LaguerreCache cache_build(double nu, double a, int upto);
void cache_extend(LaguerreCache& cache, int upto);

// Closed-form a-priori bound on |Q_nu(a,b) - partial sum through term n0|
// (n0 >= 1). For nu >= 1 this is the smaller of
//   e^{b^2/2 - a^2/4} / (n0+1) * (b^2/2)^nu / Gamma(nu)
//   e^{b^2/2 - a^2/4} / (n0+1) * (b^2/2) * (2 b^2/a^2)^{nu-1}
// and for 0 < nu <= 1 it is
//   2 e^{b^2/2 - a^2/4} / n0 * (b^2/2)^{nu+1}.
double truncation_bound(const MarcumArgs& args, std::int64_t n0);

// Smallest n0 with truncation_bound(args, n0) <= eps, found by closed-form
// inversion and confirmed by evaluation. Throws InfeasibleError when it
// would exceed the implementation cap.
std::int64_t required_terms(const MarcumArgs& args, double eps);

// Partial sum through term index n0 (inclusive), unclamped. Diagnostic
// companion of truncation_bound.
double eval_laguerre_partial(const MarcumArgs& args, int n0);

// Evaluate Q_nu(a,b) (a > 0) by the Laguerre series, stopping once the
// running truncation bound in its sharp exponential-tail form reaches
// policy.target_eps. The reported error_bound additionally covers
// round-off from the alternating sum.
//
// Refuses regimes where cancellation exceeds double precision
// (b^2/2 > 45 or the closed bound at n0 = 1 above 1e3) unless force
// is set.
EvalReport eval_laguerre_series(const MarcumArgs& args, const TruncationPolicy& policy,
                                const LaguerreCache* cache = nullptr, bool force = false);

}  // namespace marcumq

#endif
