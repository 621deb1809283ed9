// SPDX-License-Identifier: Apache-2.0
//
// Ground-truth evaluation of Q_nu(a,b) by adaptive Gauss-Kronrod
// quadrature of the defining integral. The referee for the series
// methods, not a production path.
#ifndef MARCUMQ_QUADRATURE_HPP
#define MARCUMQ_QUADRATURE_HPP

#include "marcumq/types.hpp"

namespace marcumq {

enum class QuadMode {
    automatic,      // complementary when b^2/2 < nu, direct otherwise
    direct,         // integrate t in [b, T] with an analytic tail bound beyond T
    complementary,  // 1 - integral over [0, b]
};

// Density of the defining integral,
//   t^nu e^{-(t^2+a^2)/2} I_{nu-1}(a t) / a^{nu-1},
// evaluated in log space so it neither overflows nor loses the tail
// for a*t up to a few thousand. Nonnegative; integrates to 1 over
// [0, inf).
double marcum_integrand(const MarcumArgs& args, double t);

// Adaptive G7-K15 evaluation with absolute tolerance tol (>= 1e-13).
// terms_used reports integrand evaluations; error_bound the
// accumulated error estimate plus the analytic tail bound.
EvalReport quadrature_q(const MarcumArgs& args, double tol,
                        QuadMode mode = QuadMode::automatic);

}  // namespace marcumq

#endif
