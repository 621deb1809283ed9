// SPDX-License-Identifier: Apache-2.0
#include "marcumq/alt_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "marcumq/errors.hpp"
#include "marcumq/kahan.hpp"
#include "marcumq/special_functions.hpp"

namespace marcumq {

namespace {

constexpr int kReanchorStride = 64;
constexpr double kGideonGurlandMaxX = 45.0;

}  // namespace

EvalReport eval_canonical(const MarcumArgs& args, const TruncationPolicy& policy) {
    validate_args(args, /*require_positive_a=*/false);
    validate_policy(policy);
    const double x = 0.5 * args.a * args.a;
    const double h = 0.5 * args.b * args.b;

    // Every survival factor is exactly 1 at b = 0, so the Poisson
    // weights sum out analytically.
    if (h == 0.0) return {1.0, 1, 0.0, Method::canonical};

    double w = std::exp(-x);                  // Poisson weight e^{-x} x^n / n!
    double q = reg_upper_gamma(args.nu, h);   // Gamma(nu+n, h)/Gamma(nu+n)
    double d = std::exp(args.nu * std::log(h) - h - log_gamma(args.nu + 1.0));
    double remaining = 1.0;                   // Poisson mass not yet consumed
    KahanSum sum;
    for (int n = 0; n < policy.max_terms; ++n) {
        sum.add(w * q);
        remaining = std::max(remaining - w, 0.0);
        if (remaining <= policy.target_eps) {
            double value = sum.value();
            const double error_bound = remaining;
            const double allow =
                error_bound + 32.0 * std::numeric_limits<double>::epsilon();
            if (value < -allow || value > 1.0 + allow) {
                throw ConsistencyError("eval_canonical: value " + std::to_string(value) +
                                       " outside [0,1] by more than its error bound");
            }
            value = std::clamp(value, 0.0, 1.0);
            return {value, n + 1, error_bound, Method::canonical};
        }
        w *= x / (n + 1.0);
        if ((n + 1) % kReanchorStride == 0) {
            // Full-accuracy re-anchor of the forward gamma recurrence.
            q = reg_upper_gamma(args.nu + (n + 1.0), h);
            d = std::exp((args.nu + n + 1.0) * std::log(h) - h -
                         log_gamma(args.nu + n + 2.0));
        } else {
            q += d;
            d *= h / (args.nu + n + 1.0);
        }
    }
    throw ConvergenceError("eval_canonical: Poisson tail still " + std::to_string(remaining) +
                           " after " + std::to_string(policy.max_terms) + " terms");
}

EvalReport eval_gideon_gurland(const MarcumArgs& args, const TruncationPolicy& policy,
                               bool force) {
    validate_args(args, /*require_positive_a=*/true);
    validate_policy(policy);
    const double x = 0.5 * args.a * args.a;
    const double h = 0.5 * args.b * args.b;
    const double nu = args.nu;
    if (!force && x > kGideonGurlandMaxX) {
        throw IllConditionedError(
            "eval_gideon_gurland: a^2/2 > 45; expansion in powers of a^2/2 "
            "cancels past double precision, use quadrature (or force)");
    }

    const double lead = reg_upper_gamma(nu, h);
    const double pref = std::exp(nu * std::log(h) - h);  // e^{-h} h^nu; 0 at h = 0

    // term_n = (-1)^n pref L_{n-1}^{(nu)}(h) x^n / (n Gamma(nu+n)),
    // with the Laguerre values advanced by their own recurrence.
    double l_prev = 1.0;            // L_0^{(nu)}(h)
    double l_curr = nu + 1.0 - h;   // L_1^{(nu)}(h)
    double coef = x * std::exp(-log_gamma(nu + 1.0));  // x^n / (n Gamma(nu+n)) at n = 1
    KahanSum series;
    int small_streak = 0;
    double window[3] = {0.0, 0.0, 0.0};
    for (int n = 1; n < policy.max_terms; ++n) {
        const double lag = n == 1 ? l_prev : l_curr;
        if (n >= 2) {
            // advance to L_n^{(nu)}(h) for the next iteration
            const double lp = ((2.0 * (n - 1) + nu + 1.0 - h) * l_curr - (n - 1.0 + nu) * l_prev) /
                              static_cast<double>(n);
            l_prev = l_curr;
            l_curr = lp;
        }
        // contribution to Q is -(-1)^n * pref * L_{n-1} * coef
        const double term = (n & 1) ? pref * coef * lag : -(pref * coef * lag);
        series.add(term);
        window[n % 3] = std::fabs(term);
        small_streak = std::fabs(term) < policy.target_eps / 10.0 ? small_streak + 1 : 0;
        if (small_streak >= 3) {
            double value = lead + series.value();
            const double estimate = window[0] + window[1] + window[2];
            const double allow = estimate + 1e-14;
            if (value < -allow || value > 1.0 + allow) {
                throw ConsistencyError("eval_gideon_gurland: value " + std::to_string(value) +
                                       " outside [0,1] by more than its residual estimate");
            }
            value = std::clamp(value, 0.0, 1.0);
            return {value, n, estimate, Method::gideon_gurland};
        }
        coef *= x * n / ((n + 1.0) * (nu + n));
    }
    throw ConvergenceError("eval_gideon_gurland: no three consecutive terms below target after " +
                           std::to_string(policy.max_terms) + " terms");
}

double limit_a_zero(double nu, double b) {
    if (!(nu > 0.0)) throw DomainError("limit_a_zero: nu must satisfy nu > 0");
    if (!(b >= 0.0)) throw DomainError("limit_a_zero: b must satisfy b >= 0");
    return reg_upper_gamma(nu, 0.5 * b * b);
}

}  // namespace marcumq
