#pragma once

#include <functional>

#include "galicurve/error.hpp"

namespace galicurve {

inline constexpr double kQuadratureTol = 1e-10;
inline constexpr int kQuadratureMaxDepth = 50;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute, accumulated over accepted panels
  long evaluations = 0;
};

// Adaptive Simpson with interval bisection and Richardson acceptance.
// Requires a <= b and tol > 0. Throws MaxDepth when the recursion cap is hit
// before the local tolerance is met, Domain when f yields a non-finite value.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double tol = kQuadratureTol,
                                    int max_depth = kQuadratureMaxDepth);

}  // namespace galicurve
