#pragma once

#include "galicurve/arc_curve.hpp"

namespace galicurve {

// Degenerate scalar product of G3: projects onto x1 unless both vectors are
// isotropic, in which case the Euclidean product of the (x2, x3) parts applies.
double galilean_dot(const Vec3G& a, const Vec3G& b);

// Arc-length normal-form data of a curve at parameter t0.
struct ReparamPoint {
  double s0 = 0.0;
  Jet3 y, z;
};

// Converts the general parameterization to the arc-length form: s0 = x(t0),
// and y, z become jets with respect to arc length via series inversion of x's
// jet. Passes through unchanged when x(t) = t.
ReparamPoint reparameterize(const CurveSpec& c, double t0);

// Samples the curve on its parameter grid and reports every point where the
// normal form breaks down: x'(t) ~ 0 (including sign changes located between
// grid nodes), vanishing curvature, or an isotropic principal normal in the
// pseudo-Galilean case.
AdmissibilityReport check_admissible(const CurveSpec& c);

// Curvature, torsion, and moving trihedron at parameter t, dispatching on the
// curve's geometry tag.
double curvature(const CurveSpec& c, double t);
double torsion(const CurveSpec& c, double t);
Frame frenet_frame(const CurveSpec& c, double t);

// Galilean formulas on arc-length jets (used by the analysis pipeline).
double galilean_curvature_from(const CurveJets& j);
double galilean_torsion_from(const CurveJets& j, double epsilon);
Frame galilean_frame_from(const CurveJets& j, double epsilon);

Vec3G apply_motion(const Vec3G& p, const MotionB6& m);

// Applies the motion symbolically, producing a curve whose coordinate
// expressions are affine/trigonometric combinations of the old ones. Jets of
// the transformed curve stay exact; curvature and torsion are invariant.
CurveSpec transform_curve(const CurveSpec& c, const MotionB6& m);

}  // namespace galicurve
