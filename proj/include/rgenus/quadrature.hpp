#pragma once

#include <cstddef>
#include <functional>

namespace rgenus {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;          // estimated absolute error
    std::size_t evaluations = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod on [a, b]: the interval with
/// the largest error estimate is bisected until the summed estimate drops
/// below abs_tol. Throws ToleranceNotReached after max_intervals intervals.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, std::size_t max_intervals = 4000);

}  // namespace rgenus
