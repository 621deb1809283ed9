// SPDX-License-Identifier: Apache-2.0
#ifndef MARCUMQ_TYPES_HPP
#define MARCUMQ_TYPES_HPP

#include <cstdint>
#include <optional>
#include <string_view>

namespace marcumq {

// Evaluation route for Q_nu(a,b).
enum class Method {
    laguerre,        // Laguerre-polynomial series with certified truncation bounds
    canonical,       // Poisson mixture of regularized upper gamma values
    gideon_gurland,  // Laguerre expansion in powers of a^2/2
    quadrature,      // adaptive quadrature of the defining integral
};

const char* method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

// Argument triple of the generalized Marcum Q-function Q_nu(a,b).
//
// nu > 0 always; b >= 0 always. The series evaluators require a > 0;
// a == 0 is served exactly by limit_a_zero().
struct MarcumArgs {
    double nu = 0.0;
    double a = 0.0;
    double b = 0.0;
};

// Throws DomainError naming the violated constraint. Series methods
// pass require_positive_a = true.
void validate_args(const MarcumArgs& args, bool require_positive_a = true);

// Absolute error budget and hard cap on the number of series terms.
struct TruncationPolicy {
    double target_eps = 1e-12;
    int max_terms = 500;
};

void validate_policy(const TruncationPolicy& policy);

// What every evaluator returns: the value, how much work it took, and
// an a-priori absolute error bound (or, for methods without one, an
// honest residual estimate).
struct EvalReport {
    double value = 0.0;
    std::int64_t terms_used = 0;
    double error_bound = 0.0;
    Method method = Method::laguerre;
};

}  // namespace marcumq

#endif
