#pragma once

// Test-side oracles: finite differences and frame-derivative residuals. These
// stay independent of the jet/quadrature code paths they check.

#include <cmath>
#include <functional>

#include "galicurve/analysis.hpp"

namespace test_support {

// Central difference approximations of f' and f''.
inline double central_d1(const std::function<double(double)>& f, double x,
                         double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double central_d2(const std::function<double(double)>& f, double x,
                         double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// Euclidean norm of the isotropic (x2, x3) part.
inline double norm23(const galicurve::Vec3G& v) {
  return std::hypot(v.x2, v.x3);
}

inline galicurve::Vec3G sub(const galicurve::Vec3G& a, const galicurve::Vec3G& b) {
  return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
}

inline galicurve::Vec3G scale(const galicurve::Vec3G& a, double c) {
  return {a.x1 * c, a.x2 * c, a.x3 * c};
}

// Residual of the forward-difference derivative of one frame vector against a
// prescribed right-hand side, measured on the isotropic components. The x1
// components cancel exactly and are checked by the callers.
inline double frenet_residual(const galicurve::ArcLengthCurve& curve, double s,
                              double h, galicurve::FrameVector which,
                              const galicurve::Vec3G& rhs) {
  const galicurve::Frame f0 = galicurve::frame_at(curve, s);
  const galicurve::Frame f1 = galicurve::frame_at(curve, s + h);
  const auto pick = [&](const galicurve::Frame& f) {
    switch (which) {
      case galicurve::FrameVector::T: return f.T;
      case galicurve::FrameVector::N: return f.N;
      default: return f.B;
    }
  };
  const galicurve::Vec3G fd = scale(sub(pick(f1), pick(f0)), 1.0 / h);
  return norm23(sub(fd, rhs));
}

}  // namespace test_support
