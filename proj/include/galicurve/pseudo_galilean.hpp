#pragma once

#include "galicurve/arc_curve.hpp"

namespace galicurve {

// Pseudo-Galilean scalar product: x1*y1 unless both vectors are isotropic,
// then the Lorentzian product x2*y2 - x3*y3 of the isotropic parts.
double pg_dot(const Vec3G& a, const Vec3G& b);

// Sign classification of a self-product: positive spacelike, negative
// timelike, zero (within kIsotropyEps) isotropic.
CausalCharacter causal_character(double self_product);

// kappa = sqrt(|y''^2 - z''^2|); undefined where y''^2 == z''^2.
double pg_curvature(const CurveSpec& c, double t);
double pg_torsion(const CurveSpec& c, double t);
// T = (1, y', z'); N = (0, y'', z'')/kappa; B = (0, z'', y'')/kappa, with
// causal characters from the pg self-products.
Frame pg_frenet_frame(const CurveSpec& c, double t);

// The same formulas on arc-length jets.
double pg_curvature_from(const CurveJets& j, double epsilon);
double pg_torsion_from(const CurveJets& j, double epsilon);
Frame pg_frame_from(const CurveJets& j, double epsilon);

}  // namespace galicurve
