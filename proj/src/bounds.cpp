// SPDX-License-Identifier: Apache-2.0
#include "marcumq/bounds.hpp"

#include <cmath>

#include "marcumq/errors.hpp"

namespace marcumq {

namespace {

void require_positive_x(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("laguerre bound: x must satisfy x > 0");
    }
}

}  // namespace

double szego_bound(const LaguerreIndex& idx, double x) {
    validate_index(idx);
    if (!(idx.alpha >= 0.0)) throw DomainError("szego_bound: requires alpha >= 0");
    require_positive_x(x);
    return std::exp(std::lgamma(idx.alpha + idx.n + 1.0) - std::lgamma(idx.n + 1.0) -
                    std::lgamma(idx.alpha + 1.0) + 0.5 * x);
}

double love_bound(const LaguerreIndex& idx, double x) {
    validate_index(idx);
    if (!(idx.alpha >= 0.0)) throw DomainError("love_bound: requires alpha >= 0");
    require_positive_x(x);
    return std::exp(std::lgamma(idx.alpha + idx.n + 1.0) - std::lgamma(idx.n + 1.0) -
                    idx.alpha * std::log(0.5 * x) + 0.5 * x);
}

double szego_small_order_bound(const LaguerreIndex& idx, double x) {
    validate_index(idx);
    if (!(idx.alpha <= 0.0)) {
        throw DomainError("szego_small_order_bound: requires -1 < alpha <= 0");
    }
    require_positive_x(x);
    const double ratio = std::exp(std::lgamma(idx.alpha + idx.n + 1.0) -
                                  std::lgamma(idx.n + 1.0) - std::lgamma(idx.alpha + 1.0));
    return (2.0 - ratio) * std::exp(0.5 * x);
}

SewellGap sewell_gap(double x, int n) {
    if (n < 1) throw DomainError("sewell_gap: n must satisfy n >= 1");
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("sewell_gap: x must satisfy x >= 0");
    if (x == 0.0) return {0.0, 0.0};

    // gap = sum_{k > n} x^k/k!, summed forward from k = n+1.
    double term = std::exp((n + 1.0) * std::log(x) - std::lgamma(n + 2.0));
    double gap = term;
    for (int k = n + 2; term > 0.0 && k < 100000; ++k) {
        term *= x / k;
        gap += term;
        if (term < gap * 1e-17) break;
    }
    return {gap, x * std::exp(x) / n};
}

}  // namespace marcumq
