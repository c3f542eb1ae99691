#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "galicurve/expr.hpp"

namespace galicurve {

enum class Geometry { Galilean, PseudoGalilean };

const char* geometry_name(Geometry g);

// Point or vector in Galilean coordinates; x1 is the non-isotropic component.
struct Vec3G {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

// |x1| at or below this threshold marks a vector as isotropic, selecting the
// degenerate branch of the scalar products.
inline constexpr double kIsotropyEps = 1e-12;

enum class CausalCharacter { Spacelike, Timelike, Isotropic };

const char* causal_name(CausalCharacter c);

struct Tolerances {
  double epsilon = 1e-9;       // admissibility, inflection, and torsion-zero tests
  double jet_epsilon = 1e-12;  // jet division and series inversion
  double quadrature = 1e-10;   // arc-length integrals
  double constancy = 1e-6;     // relative dispersion below which a profile is constant
  double linearity = 1e-7;     // max residual per unit of s for a fit to count as linear

  void validate() const;  // all values must be positive and finite
};

// A curve given by coordinate expressions in a free parameter t.
struct CurveSpec {
  Geometry geometry = Geometry::Galilean;
  ExprPtr x, y, z;
  double t_lo = 0.0;
  double t_hi = 1.0;
  Bindings constants;
  int samples = 256;
  Tolerances tol;

  // Structural checks (expressions present, t_lo < t_hi, samples >= 8,
  // bindings well formed); throws InvalidArgument.
  void validate() const;
};

struct Frame {
  Vec3G T, N, B;
  double kappa = 0.0;
  double tau = 0.0;
  // Pseudo-Galilean frames only, in T, N, B order.
  std::optional<std::array<CausalCharacter, 3>> causal;
};

// The six parameters of a Galilean motion.
struct MotionB6 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
  double phi = 0.0;  // radians
};

struct AdmissibilityViolation {
  double t = 0.0;
  std::string reason;
};

struct AdmissibilityReport {
  bool ok = true;
  std::vector<AdmissibilityViolation> violations;
};

}  // namespace galicurve
