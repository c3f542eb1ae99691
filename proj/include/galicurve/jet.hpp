#pragma once

#include <cmath>

#include "galicurve/error.hpp"

namespace galicurve {

// Zero threshold for jet division and series inversion. Callers that need a
// different degeneracy cutoff pass their own value to divide()/invert_series().
inline constexpr double kJetEpsilon = 1e-12;

// A value together with its first three derivatives at a point. Derivatives
// are stored raw, not divided by factorials, so the Leibniz and Faa di Bruno
// rules below carry the binomial weights explicitly.
struct Jet3 {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;

  static Jet3 constant(double c) { return {c, 0.0, 0.0, 0.0}; }
  // Jet of the identity function at t0.
  static Jet3 variable(double t0) { return {t0, 1.0, 0.0, 0.0}; }

  bool finite() const {
    return std::isfinite(v) && std::isfinite(d1) && std::isfinite(d2) &&
           std::isfinite(d3);
  }
};

Jet3 operator+(const Jet3& a, const Jet3& b);
Jet3 operator-(const Jet3& a, const Jet3& b);
Jet3 operator-(const Jet3& a);
Jet3 operator*(const Jet3& a, const Jet3& b);
Jet3 operator*(const Jet3& a, double c);

// Quotient jet by Leibniz back-substitution; multiplying the result by b
// reproduces a to machine precision.
Jet3 divide(const Jet3& a, const Jet3& b, double epsilon = kJetEpsilon);

inline Jet3 operator/(const Jet3& a, const Jet3& b) { return divide(a, b); }
inline Jet3 operator+(const Jet3& a, double c) { return a + Jet3::constant(c); }
inline Jet3 operator+(double c, const Jet3& a) { return Jet3::constant(c) + a; }
inline Jet3 operator-(const Jet3& a, double c) { return a - Jet3::constant(c); }
inline Jet3 operator-(double c, const Jet3& a) { return Jet3::constant(c) - a; }
inline Jet3 operator*(double c, const Jet3& a) { return a * c; }
inline Jet3 operator/(const Jet3& a, double c) { return divide(a, Jet3::constant(c)); }
inline Jet3 operator/(double c, const Jet3& a) { return divide(Jet3::constant(c), a); }

// Faa di Bruno to third order: jet of f composed with g, given the plain
// derivatives f0..f3 of f at the point g.v.
Jet3 chain(double f0, double f1, double f2, double f3, const Jet3& g);

// Jet of f(g(.)); f must be the jet of a function taken at the point g.v.
Jet3 compose(const Jet3& f, const Jet3& g);

// Jet of the inverse function t(x) at x0 = x.v, where x is the jet of an
// invertible t -> x(t) at t0. The basepoint t0 becomes the value of the
// result; it cannot be recovered from x alone.
Jet3 invert_series(const Jet3& x, double t0, double epsilon = kJetEpsilon);

Jet3 sin(const Jet3& a);
Jet3 cos(const Jet3& a);
Jet3 sinh(const Jet3& a);
Jet3 cosh(const Jet3& a);
Jet3 exp(const Jet3& a);
Jet3 log(const Jet3& a);    // requires a.v > 0
Jet3 sqrt(const Jet3& a);   // requires a.v > 0
Jet3 pow(const Jet3& a, double r);  // constant real exponent, requires a.v > 0

}  // namespace galicurve
