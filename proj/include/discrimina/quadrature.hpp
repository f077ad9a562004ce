#pragma once

#include <functional>

namespace discrimina {

struct QuadratureResult {
    double value = 0;
    double error = 0;  // estimated absolute error, including a roundoff floor
    int evaluations = 0;
    int subintervals = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b]: the
/// subinterval with the largest embedded error estimate is halved until the
/// summed estimate is <= tol. Throws ConvergenceError past `max_subintervals`.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                                    int max_subintervals = 20000);

}  // namespace discrimina
