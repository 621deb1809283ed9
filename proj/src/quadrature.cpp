// SPDX-License-Identifier: Apache-2.0
#include "marcumq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "marcumq/errors.hpp"
#include "marcumq/kahan.hpp"
#include "marcumq/special_functions.hpp"

namespace marcumq {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0,
};
constexpr double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679,  0.1903505780647854,  0.2044329400752989, 0.2094821410847278,
};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694,
};

struct PanelResult {
    double value;
    double error;
};

template <typename F>
PanelResult gk15(const F& f, double lo, double hi, std::int64_t& evals) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double fc = f(center);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::fabs(fc);
    double fv1[8];
    double fv2[8];
    fv1[7] = fc;
    fv2[7] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        const double s = f1 + f2;
        resk += kWgk[j] * s;
        if (j % 2 == 1) resg += kWg[(j - 1) / 2] * s;
        resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    }
    evals += 15;

    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
    }
    resasc *= std::fabs(half);
    resabs *= std::fabs(half);

    const double value = resk * half;
    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    constexpr double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / eps50) {
        err = std::max(err, eps50 * resabs);
    }
    return {value, err};
}

// Depth-first bisection with a halved absolute budget per child; the
// fixed traversal order keeps the accumulated sum deterministic. The
// leaf budgets of a binary partition sum to the root budget, so panels
// accepted within budget can never push the total past tol. Panels cut
// off at the depth cap are accepted into the global estimate instead;
// the caller checks the total.
template <typename F>
void adapt(const F& f, double lo, double hi, double tol, int depth, KahanSum& acc,
           double& err_acc, std::int64_t& evals) {
    const PanelResult r = gk15(f, lo, hi, evals);
    if (r.error <= tol || depth >= 48) {
        acc.add(r.value);
        err_acc += r.error;
        return;
    }
    const double mid = 0.5 * (lo + hi);
    adapt(f, lo, mid, 0.5 * tol, depth + 1, acc, err_acc, evals);
    adapt(f, mid, hi, 0.5 * tol, depth + 1, acc, err_acc, evals);
}

template <typename F>
double integrate(const F& f, double lo, double hi, double tol, double& err_acc,
                 std::int64_t& evals) {
    KahanSum acc;
    adapt(f, lo, hi, tol, 0, acc, err_acc, evals);
    if (!(err_acc <= tol)) {
        throw ConvergenceError("quadrature_q: tolerance not met after maximal refinement");
    }
    return acc.value();
}

// Bound on the integral of the integrand over [T, inf): with
// I_mu(z) <= e^z (1 + 2/z) for mu >= -1 the integrand is dominated by
// t^nu e^{-(t-a)^2/2} (1 + 2/(aT)) / a^{nu-1}, and on t >= T the power
// factor obeys t^nu <= T^nu e^{nu (t-T)/T}, which leaves a decaying
// exponential whose integral is elementary. Requires T - a > nu / T.
double tail_bound(const MarcumArgs& args, double t_cut) {
    const double slope = (t_cut - args.a) - args.nu / t_cut;
    if (slope <= 0.0) return std::numeric_limits<double>::infinity();
    const double log_peak = args.nu * std::log(t_cut) -
                            0.5 * (t_cut - args.a) * (t_cut - args.a) -
                            (args.nu - 1.0) * std::log(args.a);
    return std::exp(log_peak) * (1.0 + 2.0 / (args.a * t_cut)) / slope;
}

double pick_cutoff(const MarcumArgs& args, double tol) {
    double t_cut = std::max(args.b, args.a + 10.0 +
                                        std::sqrt(2.0 * args.nu *
                                                  std::max(1.0, std::log(args.nu))));
    while (tail_bound(args, t_cut) > 0.1 * tol) t_cut += 2.0;
    return t_cut;
}

}  // namespace

double marcum_integrand(const MarcumArgs& args, double t) {
    validate_args(args, /*require_positive_a=*/true);
    if (!(t >= 0.0)) throw DomainError("marcum_integrand: t must satisfy t >= 0");
    if (t == 0.0) {
        // Leading behavior t^{2nu-1} e^{-a^2/2} / (2^{nu-1} Gamma(nu)).
        if (args.nu > 0.5) return 0.0;
        if (args.nu == 0.5) {
            return std::exp(-0.5 * args.a * args.a + 0.5 * std::log(2.0) -
                            log_gamma(0.5));
        }
        return std::numeric_limits<double>::infinity();
    }
    const double log_f = args.nu * std::log(t) - 0.5 * (t * t + args.a * args.a) +
                         log_bessel_i(args.nu - 1.0, args.a * t) -
                         (args.nu - 1.0) * std::log(args.a);
    return std::exp(log_f);
}

EvalReport quadrature_q(const MarcumArgs& args, double tol, QuadMode mode) {
    validate_args(args, /*require_positive_a=*/true);
    if (!(tol >= 1e-13) || !std::isfinite(tol)) {
        throw DomainError("quadrature_q: tol must satisfy tol >= 1e-13");
    }

    const double h = 0.5 * args.b * args.b;
    const bool complementary =
        mode == QuadMode::complementary || (mode == QuadMode::automatic && h < args.nu);

    const auto f = [&args](double t) { return marcum_integrand(args, t); };

    std::int64_t evals = 0;
    double err_acc = 0.0;
    double value;
    if (complementary) {
        // Q = 1 - integral over [0, b]; better conditioned when b is
        // small and the survival probability is near 1.
        double integral;
        if (args.b == 0.0) {
            integral = 0.0;
        } else if (args.nu < 1.0) {
            // The integrand carries a t^{2nu-1} corner at t = 0; the
            // substitution s = t^{2nu} absorbs it exactly, leaving a
            // C^1 integrand for every nu > 0. Budget and estimate are
            // scaled back through the Jacobian 1/(2nu).
            const double inv = 1.0 / (2.0 * args.nu);
            const auto g = [&args, inv](double s) {
                const double t = std::pow(s, inv);
                const double log_v = (1.0 - args.nu) * std::log(t) -
                                     0.5 * (t * t + args.a * args.a) +
                                     log_bessel_i(args.nu - 1.0, args.a * t) -
                                     (args.nu - 1.0) * std::log(args.a);
                return std::exp(log_v);
            };
            double err_sub = 0.0;
            integral = inv * integrate(g, 0.0, std::pow(args.b, 2.0 * args.nu),
                                       tol / inv, err_sub, evals);
            err_acc += inv * err_sub;
        } else {
            integral = integrate(f, 0.0, args.b, tol, err_acc, evals);
        }
        value = 1.0 - integral;
    } else {
        const double t_cut = pick_cutoff(args, tol);
        value = integrate(f, args.b, t_cut, tol, err_acc, evals);
        err_acc += tail_bound(args, t_cut);
    }

    const double allow = err_acc + 1e-14;
    if (value < -allow || value > 1.0 + allow) {
        throw ConsistencyError("quadrature_q: value " + std::to_string(value) +
                               " outside [0,1] by more than its error estimate");
    }
    value = std::clamp(value, 0.0, 1.0);
    return {value, evals, err_acc, Method::quadrature};
}

}  // namespace marcumq
