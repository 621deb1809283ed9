// SPDX-License-Identifier: Apache-2.0
#include "marcumq/laguerre_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "marcumq/errors.hpp"
#include "marcumq/kahan.hpp"
#include "marcumq/special_functions.hpp"

namespace marcumq {

namespace {

// The engine works internally with x = a^2/2 and powers of h = b^2/2;
// every public entry point takes the (a, b) of Q_nu(a,b).
struct Transformed {
    double x;  // a^2/2
    double h;  // b^2/2
};

Transformed transform(const MarcumArgs& args) {
    return {0.5 * args.a * args.a, 0.5 * args.b * args.b};
}

// R_n = L_n^{(nu-1)}(x) / Gamma(nu+n+1). Its recurrence carries the
// same rational coefficients as the P_{nu,n} recurrence with the
// second argument stripped off, which is what lets a fixed-(nu,a)
// cache reproduce the uncached arithmetic exactly.
double r_first(double nu) { return std::exp(-log_gamma(nu + 1.0)); }

double r_second(double nu, double x) { return (nu - x) * std::exp(-log_gamma(nu + 2.0)); }

double r_advance(int n, double nu, double x, double r_curr, double r_prev) {
    const double c1 = (2.0 * n + nu - x) / ((n + 1.0) * (nu + n + 1.0));
    const double c2 = (n + nu - 1.0) / ((n + 1.0) * (nu + n) * (nu + n + 1.0));
    return c1 * r_curr - c2 * r_prev;
}

double signed_coeff(int n, double exp_neg_x, double r) {
    const double c = exp_neg_x * r;
    return (n & 1) ? -c : c;
}

// sum_{k > m} h^k / k!, accumulated forward so the exponential tail is
// never formed by subtraction.
double exp_tail(double h, std::int64_t m) {
    if (h == 0.0) return 0.0;
    double term = std::exp((m + 1.0) * std::log(h) - std::lgamma(m + 2.0));
    double sum = term;
    for (std::int64_t k = m + 2; term > 0.0 && k < m + 200000; ++k) {
        term *= h / static_cast<double>(k);
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return sum;
}

// Prefactor of the sharp (exponential-tail) truncation bound; multiply
// by exp_tail at the right offset to get the bound itself.
struct SharpBound {
    double factor;
    bool small_order;  // true on the 0 < nu < 1 branch
};

SharpBound sharp_bound_factor(double nu, double x, double h) {
    if (h == 0.0) return {0.0, nu < 1.0};
    const double base = std::exp(-0.5 * x);
    if (nu >= 1.0) {
        const double k1 = std::exp((nu - 1.0) * std::log(h) - log_gamma(nu));
        const double k2 = std::pow(2.0 * h / x, nu - 1.0);
        return {base * std::min(k1, k2), false};
    }
    return {2.0 * base * std::pow(h, nu), true};
}

double sharp_bound_at(const SharpBound& sb, double h, std::int64_t n0) {
    return sb.factor * exp_tail(h, sb.small_order ? n0 : n0 + 1);
}

constexpr double kGuardMaxH = 45.0;
constexpr double kGuardMaxFirstBound = 1e3;
constexpr std::int64_t kRequiredTermsCap = 1000000000000000000;  // 1e18

}  // namespace

PState p_init(double nu, double a, double b) {
    if (!(nu > 0.0)) throw DomainError("p_init: nu must satisfy nu > 0");
    const double p0 = std::exp(-log_gamma(nu + 1.0));
    const double p1 = (nu - a) * b * std::exp(-log_gamma(nu + 2.0));
    return {1, p1, p0};
}

PState p_step(const PState& state, double nu, double a, double b) {
    if (state.n < 1) throw DomainError("p_step: state must be at n >= 1");
    const int n = state.n;
    const double c1 = (2.0 * n + nu - a) * b / ((n + 1.0) * (nu + n + 1.0));
    const double c2 = (n + nu - 1.0) * b * b / ((n + 1.0) * (nu + n) * (nu + n + 1.0));
    return {n + 1, c1 * state.p_curr - c2 * state.p_prev, state.p_curr};
}

LaguerreCache cache_build(double nu, double a, int upto) {
    if (!(nu > 0.0)) throw DomainError("cache_build: nu must satisfy nu > 0");
    if (!(a > 0.0)) throw DomainError("cache_build: a must satisfy a > 0");
    if (upto < 0) throw DomainError("cache_build: upto must satisfy upto >= 0");

    LaguerreCache cache;
    cache.nu = nu;
    cache.a = a;
    const double x = 0.5 * a * a;
    const double em = std::exp(-x);
    cache.r_lo = r_first(nu);
    cache.r_hi = r_second(nu, x);
    cache.hi_index = 1;
    cache.coeffs.reserve(static_cast<std::size_t>(upto) + 1);
    cache.coeffs.push_back(signed_coeff(0, em, cache.r_lo));
    cache_extend(cache, upto);
    return cache;
}

void cache_extend(LaguerreCache& cache, int upto) {
    const double x = 0.5 * cache.a * cache.a;
    const double em = std::exp(-x);
    while (static_cast<int>(cache.coeffs.size()) <= upto) {
        const int next = static_cast<int>(cache.coeffs.size());
        while (cache.hi_index < next) {
            const double nxt = r_advance(cache.hi_index, cache.nu, x, cache.r_hi, cache.r_lo);
            cache.r_lo = cache.r_hi;
            cache.r_hi = nxt;
            ++cache.hi_index;
        }
        cache.coeffs.push_back(signed_coeff(next, em, cache.r_hi));
    }
}

double truncation_bound(const MarcumArgs& args, std::int64_t n0) {
    validate_args(args, /*require_positive_a=*/true);
    if (n0 < 1) throw DomainError("truncation_bound: n0 must satisfy n0 >= 1");
    const auto [x, h] = transform(args);
    const double nu = args.nu;
    if (nu >= 1.0) {
        const double pref = std::exp(h - 0.5 * x) / (n0 + 1.0);
        const double b1 = pref * std::exp(nu * std::log(h) - log_gamma(nu));
        const double b2 = pref * h * std::pow(2.0 * h / x, nu - 1.0);
        return h == 0.0 ? 0.0 : std::min(b1, b2);
    }
    return 2.0 * std::exp(h - 0.5 * x) / static_cast<double>(n0) * std::pow(h, nu + 1.0);
}

std::int64_t required_terms(const MarcumArgs& args, double eps) {
    validate_args(args, /*require_positive_a=*/true);
    if (!(eps > 0.0)) throw DomainError("required_terms: eps must satisfy eps > 0");

    if (truncation_bound(args, 1) <= eps) return 1;

    // The closed forms are K/(n0+1) (nu >= 1) or K/n0 (nu <= 1), so the
    // inversion is exact up to rounding; confirm by evaluation.
    const auto [x, h] = transform(args);
    const double nu = args.nu;
    double k;
    if (nu >= 1.0) {
        const double pref = std::exp(h - 0.5 * x);
        k = pref * std::min(std::exp(nu * std::log(h) - log_gamma(nu)),
                            h * std::pow(2.0 * h / x, nu - 1.0));
    } else {
        k = 2.0 * std::exp(h - 0.5 * x) * std::pow(h, nu + 1.0);
    }
    const double raw = k / eps;
    if (!(raw < static_cast<double>(kRequiredTermsCap))) {
        throw InfeasibleError(
            "required_terms: term count for requested accuracy exceeds cap; "
            "use quadrature instead");
    }
    std::int64_t n0 = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(raw)) - 1);
    while (truncation_bound(args, n0) > eps) ++n0;
    while (n0 > 1 && truncation_bound(args, n0 - 1) <= eps) --n0;
    if (n0 > kRequiredTermsCap) {
        throw InfeasibleError(
            "required_terms: term count for requested accuracy exceeds cap; "
            "use quadrature instead");
    }
    return n0;
}

double eval_laguerre_partial(const MarcumArgs& args, int n0) {
    validate_args(args, /*require_positive_a=*/true);
    if (n0 < 0) throw DomainError("eval_laguerre_partial: n0 must satisfy n0 >= 0");
    const auto [x, h] = transform(args);
    const double em = std::exp(-x);

    double r_lo = r_first(args.nu);
    double r_hi = r_second(args.nu, x);
    double hpow = std::pow(h, args.nu);
    KahanSum sum;
    for (int n = 0; n <= n0; ++n) {
        double r;
        if (n == 0) {
            r = r_lo;
        } else if (n == 1) {
            r = r_hi;
        } else {
            const double nxt = r_advance(n - 1, args.nu, x, r_hi, r_lo);
            r_lo = r_hi;
            r_hi = nxt;
            r = r_hi;
        }
        sum.add(signed_coeff(n, em, r) * hpow);
        hpow *= h;
    }
    return 1.0 - sum.value();
}

EvalReport eval_laguerre_series(const MarcumArgs& args, const TruncationPolicy& policy,
                                const LaguerreCache* cache, bool force) {
    validate_args(args, /*require_positive_a=*/true);
    validate_policy(policy);
    const Transformed tr = transform(args);
    const double x = tr.x;
    const double h = tr.h;
    const double nu = args.nu;

    if (!force) {
        if (h > kGuardMaxH) {
            throw IllConditionedError(
                "eval_laguerre_series: b^2/2 > 45; cancellation exceeds double "
                "precision, use quadrature (or force)");
        }
        if (truncation_bound(args, 1) > kGuardMaxFirstBound) {
            throw IllConditionedError(
                "eval_laguerre_series: truncation bound at n0=1 above 1e3; "
                "use quadrature (or force)");
        }
    }
    if (cache != nullptr && (cache->nu != nu || cache->a != args.a)) {
        throw DomainError("eval_laguerre_series: cache was built for different (nu, a)");
    }

    const double em = std::exp(-x);
    const SharpBound sb = sharp_bound_factor(nu, x, h);

    // Local mirror of the coefficient recurrence; seeded from the cache
    // tail when one is supplied so both paths run the same arithmetic.
    double r_lo, r_hi;
    int hi_index;
    if (cache != nullptr) {
        r_lo = cache->r_lo;
        r_hi = cache->r_hi;
        hi_index = cache->hi_index;
    } else {
        r_lo = r_first(nu);
        r_hi = r_second(nu, x);
        hi_index = 1;
    }
    const auto coeff_at = [&](int n) {
        if (cache != nullptr && n < static_cast<int>(cache->coeffs.size())) {
            return cache->coeffs[static_cast<std::size_t>(n)];
        }
        while (hi_index < n) {
            const double nxt = r_advance(hi_index, nu, x, r_hi, r_lo);
            r_lo = r_hi;
            r_hi = nxt;
            ++hi_index;
        }
        return signed_coeff(n, em, n == hi_index ? r_hi : r_lo);
    };

    double hpow = std::pow(h, nu);
    KahanSum sum;
    double abs_sum = 0.0;
    std::int64_t bound_met_at = -1;
    std::int64_t stop_n = -1;
    for (int n = 0; n < policy.max_terms; ++n) {
        const double term = coeff_at(n) * hpow;
        if (!std::isfinite(term)) {
            throw ConvergenceError(
                "eval_laguerre_series: series terms left double range before "
                "reaching target accuracy");
        }
        sum.add(term);
        abs_sum += std::fabs(term);
        if (bound_met_at < 0 && n >= 1 && sharp_bound_at(sb, h, n) <= policy.target_eps) {
            bound_met_at = n;
        }
        // Once the certified bound is met, a handful of extra terms cost
        // nothing and settle the trailing digits of the printed value.
        if (bound_met_at >= 0 &&
            (n >= bound_met_at + 8 ||
             std::fabs(term) <= 2.2e-17 * (1.0 + std::fabs(sum.value())))) {
            stop_n = n;
            break;
        }
        hpow *= h;
    }
    if (stop_n < 0) {
        if (bound_met_at >= 0) {
            stop_n = policy.max_terms - 1;
        } else {
            throw ConvergenceError(
                "eval_laguerre_series: truncation bound still " +
                std::to_string(sharp_bound_at(sb, h, policy.max_terms - 1)) + " after " +
                std::to_string(policy.max_terms) + " terms (target " +
                std::to_string(policy.target_eps) + ")");
        }
    }
    const double stop_bound = sharp_bound_at(sb, h, stop_n);

    double value = 1.0 - sum.value();
    // Round-off share of the bound: a few eps of the absolute term mass.
    const double error_bound = std::max(stop_bound, 4.0 * std::numeric_limits<double>::epsilon() * abs_sum);
    const double allow =
        error_bound + 32.0 * std::numeric_limits<double>::epsilon() * (1.0 + abs_sum);
    if (value < -allow || value > 1.0 + allow) {
        throw ConsistencyError("eval_laguerre_series: value " + std::to_string(value) +
                               " outside [0,1] by more than its error bound");
    }
    value = std::clamp(value, 0.0, 1.0);
    return {value, stop_n + 1, error_bound, Method::laguerre};
}

}  // namespace marcumq
