#pragma once

#include <functional>

namespace pinney {

struct QuadratureOptions {
    double tol = 1e-10;  ///< absolute error target for the whole integral
    int max_depth = 40;  ///< recursion cap; exceeding it is an error
};

/// Adaptive Simpson integration of f over [a, b] (either orientation).
/// Throws QuadratureDepthExceeded when the recursion cap is hit and
/// IntegrandEvalFailure when f throws.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        const QuadratureOptions& opts = {});

}  // namespace pinney
