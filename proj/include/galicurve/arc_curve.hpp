#pragma once

#include <optional>

#include "galicurve/curve.hpp"

namespace galicurve {

// Jets of the two isotropic coordinates with respect to arc length.
struct CurveJets {
  Jet3 y, z;
};

// A curve in the admissible normal form (s, y(s), z(s)). Frames, curvature
// profiles, and indicatrix arc lengths all consume this interface, so curves
// may come from coordinate expressions or from any other evaluator (for
// example one built by numerically integrating prescribed derivatives).
class ArcLengthCurve {
 public:
  virtual ~ArcLengthCurve() = default;

  virtual CurveJets at(double s) const = 0;
  virtual double s_min() const = 0;
  virtual double s_max() const = 0;
  virtual Geometry geometry() const = 0;
  virtual const Tolerances& tolerances() const = 0;

  // Original curve parameter at arc length s; identity unless overridden.
  virtual double parameter_of(double s) const { return s; }
  // True when the source parameterization ran against the arc length
  // direction (x' < 0) and was traversed in reverse.
  virtual bool parameter_flipped() const { return false; }
};

// Expression-backed curve. Reparameterizes (x(t), y(t), z(t)) to arc length
// through series inversion of x's jet; x'(t) must keep a single sign and stay
// away from zero over the parameter range. Curves with x' < 0 are accepted
// and traversed in the direction of increasing x.
class ExprArcCurve final : public ArcLengthCurve {
 public:
  explicit ExprArcCurve(CurveSpec spec);

  CurveJets at(double s) const override;
  double s_min() const override { return s_lo_; }
  double s_max() const override { return s_hi_; }
  Geometry geometry() const override { return spec_.geometry; }
  const Tolerances& tolerances() const override { return spec_.tol; }
  double parameter_of(double s) const override { return t_of_s(s); }
  bool parameter_flipped() const override { return flipped_; }

  const CurveSpec& spec() const { return spec_; }

  double s_of_t(double t) const;
  // Inverts s = x(t) by safeguarded Newton on the bracketed range.
  double t_of_s(double s, std::optional<double> hint = {}) const;
  // Arc-length jets at the point with parameter t.
  CurveJets at_t(double t) const;

 private:
  CurveSpec spec_;
  bool flipped_ = false;
  double s_lo_ = 0.0;
  double s_hi_ = 0.0;
};

// View of another curve moved by a Galilean motion, exact at the jet level.
// Does not own the base curve.
class MovedArcCurve final : public ArcLengthCurve {
 public:
  MovedArcCurve(const ArcLengthCurve& base, const MotionB6& m);

  CurveJets at(double s) const override;
  double s_min() const override { return base_.s_min() + motion_.a; }
  double s_max() const override { return base_.s_max() + motion_.a; }
  Geometry geometry() const override { return base_.geometry(); }
  const Tolerances& tolerances() const override { return base_.tolerances(); }
  double parameter_of(double s) const override {
    return base_.parameter_of(s - motion_.a);
  }
  bool parameter_flipped() const override { return base_.parameter_flipped(); }

 private:
  const ArcLengthCurve& base_;
  MotionB6 motion_;
  double cos_phi_, sin_phi_;
};

}  // namespace galicurve
