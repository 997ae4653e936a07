// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lagdisp {

/// Outcome of checking a computed quantity against a bound.
/// For upper bounds slack = bound - supremum; for lower bounds (value >= bound)
/// slack = value - bound. Either way a negative slack is a violation.
struct BoundReport {
    std::string name;
    double supremum = 0.0;
    double arg_x = std::numeric_limits<double>::quiet_NaN();
    int arg_n = -1;
    int arg_m = -1;
    double bound = 0.0;
    double slack = 0.0;
    bool pass = false;
    bool exploratory = false;  ///< parameters outside the proven range
};

/// pass <=> slack >= -tol * max(1, |bound|). Bounds of size binom(n+a, n)
/// are only representable to relative precision, hence the scaling.
inline bool within_tolerance(double slack, double bound, double tol) {
    return slack >= -tol * std::max(1.0, std::abs(bound));
}

}  // namespace lagdisp
