// SPDX-License-Identifier: Apache-2.0
#ifndef MARCUMQ_ERRORS_HPP
#define MARCUMQ_ERRORS_HPP

#include <stdexcept>

namespace marcumq {

// Argument outside a function's stated domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Result not representable in double precision.
struct OverflowError : std::range_error {
    using std::range_error::range_error;
};

// A series or quadrature failed to reach the requested accuracy
// within its budget.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The a-priori term-count needed for the requested accuracy exceeds
// the implementation cap; callers should fall back to quadrature.
struct InfeasibleError : ConvergenceError {
    using ConvergenceError::ConvergenceError;
};

// Parameter regime where alternating-series cancellation exhausts
// double precision; the evaluator refuses unless forced.
struct IllConditionedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed value violates an invariant by more than its own error
// bound; indicates a bug rather than rounding.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace marcumq

#endif
