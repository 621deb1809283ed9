// SPDX-License-Identifier: Apache-2.0
#include "marcumq/types.hpp"

#include <cmath>

#include "marcumq/errors.hpp"

namespace marcumq {

const char* method_name(Method m) {
    switch (m) {
        case Method::laguerre: return "laguerre";
        case Method::canonical: return "canonical";
        case Method::gideon_gurland: return "gideon_gurland";
        case Method::quadrature: return "quadrature";
    }
    return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "laguerre") return Method::laguerre;
    if (name == "canonical") return Method::canonical;
    if (name == "gideon_gurland") return Method::gideon_gurland;
    if (name == "quadrature") return Method::quadrature;
    return std::nullopt;
}

void validate_args(const MarcumArgs& args, bool require_positive_a) {
    if (!(args.nu > 0.0) || !std::isfinite(args.nu)) {
        throw DomainError("MarcumArgs: nu must satisfy nu > 0");
    }
    if (!std::isfinite(args.a) || (require_positive_a ? !(args.a > 0.0) : !(args.a >= 0.0))) {
        throw DomainError(require_positive_a ? "MarcumArgs: a must satisfy a > 0 for this method"
                                             : "MarcumArgs: a must satisfy a >= 0");
    }
    if (!(args.b >= 0.0) || !std::isfinite(args.b)) {
        throw DomainError("MarcumArgs: b must satisfy b >= 0");
    }
}

void validate_policy(const TruncationPolicy& policy) {
    if (!(policy.target_eps > 0.0) || !std::isfinite(policy.target_eps)) {
        throw DomainError("TruncationPolicy: target_eps must satisfy target_eps > 0");
    }
    if (policy.max_terms < 2) {
        throw DomainError("TruncationPolicy: max_terms must satisfy max_terms >= 2");
    }
}

}  // namespace marcumq
