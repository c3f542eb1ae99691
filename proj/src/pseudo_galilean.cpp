#include "galicurve/pseudo_galilean.hpp"

#include <cmath>
#include <string>

#include "galicurve/galilean.hpp"

namespace galicurve {

double pg_dot(const Vec3G& a, const Vec3G& b) {
  if (std::abs(a.x1) > kIsotropyEps || std::abs(b.x1) > kIsotropyEps)
    return a.x1 * b.x1;
  return a.x2 * b.x2 - a.x3 * b.x3;
}

CausalCharacter causal_character(double self_product) {
  if (self_product > kIsotropyEps) return CausalCharacter::Spacelike;
  if (self_product < -kIsotropyEps) return CausalCharacter::Timelike;
  return CausalCharacter::Isotropic;
}

double pg_curvature_from(const CurveJets& j, double epsilon) {
  const double q = j.y.d2 * j.y.d2 - j.z.d2 * j.z.d2;
  if (std::abs(q) <= epsilon)
    raise(ErrorCode::IsotropicNormal,
          "isotropic principal normal (y''^2 == z''^2): pseudo-Galilean "
          "curvature is undefined");
  return std::sqrt(std::abs(q));
}

double pg_torsion_from(const CurveJets& j, double epsilon) {
  const double kappa = pg_curvature_from(j, epsilon);
  return (j.y.d2 * j.z.d3 - j.y.d3 * j.z.d2) / (kappa * kappa);
}

Frame pg_frame_from(const CurveJets& j, double epsilon) {
  const double kappa = pg_curvature_from(j, epsilon);
  Frame f;
  f.T = {1.0, j.y.d1, j.z.d1};
  f.N = {0.0, j.y.d2 / kappa, j.z.d2 / kappa};
  f.B = {0.0, j.z.d2 / kappa, j.y.d2 / kappa};
  f.kappa = kappa;
  f.tau = (j.y.d2 * j.z.d3 - j.y.d3 * j.z.d2) / (kappa * kappa);
  f.causal = {causal_character(pg_dot(f.T, f.T)),
              causal_character(pg_dot(f.N, f.N)),
              causal_character(pg_dot(f.B, f.B))};
  return f;
}

namespace {

CurveJets arc_jets(const CurveSpec& c, double t) {
  const ReparamPoint p = reparameterize(c, t);
  return {p.y, p.z};
}

}  // namespace

double pg_curvature(const CurveSpec& c, double t) {
  return pg_curvature_from(arc_jets(c, t), c.tol.epsilon);
}

double pg_torsion(const CurveSpec& c, double t) {
  return pg_torsion_from(arc_jets(c, t), c.tol.epsilon);
}

Frame pg_frenet_frame(const CurveSpec& c, double t) {
  return pg_frame_from(arc_jets(c, t), c.tol.epsilon);
}

}  // namespace galicurve
