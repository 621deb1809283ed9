// SPDX-License-Identifier: Apache-2.0
#ifndef MARCUMQ_KAHAN_HPP
#define MARCUMQ_KAHAN_HPP

#include <cmath>

namespace marcumq {

// Neumaier-style compensated accumulator. The correction term also
// captures the case where the addend exceeds the running sum, which
// happens in alternating series before the terms start to decay.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + comp; }
};

}  // namespace marcumq

#endif
