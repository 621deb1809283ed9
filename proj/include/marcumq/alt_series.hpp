// SPDX-License-Identifier: Apache-2.0
//
// Independent series representations of Q_nu(a,b), used both as
// user-selectable methods and as cross-checks of the Laguerre engine.
#ifndef MARCUMQ_ALT_SERIES_HPP
#define MARCUMQ_ALT_SERIES_HPP

#include "marcumq/types.hpp"

namespace marcumq {

// Canonical representation: Poisson(a^2/2) weights against regularized
// upper gamma survival values,
//   Q = e^{-a^2/2} sum_n (a^2/2)^n / n! * Gamma(nu+n, b^2/2)/Gamma(nu+n).
// The upper gamma values advance by the stable forward recurrence
//   Q(s+1,x) = Q(s,x) + x^s e^{-x}/Gamma(s+1),
// re-anchored by a full evaluation every 64 terms. Stops when the
// remaining Poisson tail mass (which bounds the residual, since every
// survival factor is <= 1) drops below target_eps. Allows a >= 0.
EvalReport eval_canonical(const MarcumArgs& args, const TruncationPolicy& policy);

// Expansion in powers of a^2/2:
//   Q = Gamma(nu, b^2/2)/Gamma(nu)
//     - sum_{n>=1} (-1)^n e^{-b^2/2} (b^2/2)^nu L_{n-1}^{(nu)}(b^2/2) / (n Gamma(nu+n)) (a^2/2)^n.
// No a-priori truncation bound exists for this form; it stops after
// the last included term stays below target_eps/10 for three
// consecutive terms, and error_bound reports that window's residual
// estimate rather than a guarantee. Requires a > 0; refuses a^2/2 > 45
// unless force is set.
EvalReport eval_gideon_gurland(const MarcumArgs& args, const TruncationPolicy& policy,
                               bool force = false);

// lim_{a->0} Q_nu(a,b) = Gamma(nu, b^2/2)/Gamma(nu).
double limit_a_zero(double nu, double b);

}  // namespace marcumq

#endif
