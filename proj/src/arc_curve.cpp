#include "galicurve/arc_curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace galicurve {

const char* geometry_name(Geometry g) {
  return g == Geometry::Galilean ? "galilean" : "pseudo-galilean";
}

const char* causal_name(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Isotropic: return "isotropic";
  }
  return "?";
}

void Tolerances::validate() const {
  const double values[] = {epsilon, jet_epsilon, quadrature, constancy, linearity};
  for (double v : values)
    if (!(v > 0.0) || !std::isfinite(v))
      raise(ErrorCode::InvalidArgument, "tolerances must be positive and finite");
}

void CurveSpec::validate() const {
  if (!x || !y || !z)
    raise(ErrorCode::InvalidArgument, "curve needs all of x, y, z expressions");
  if (!std::isfinite(t_lo) || !std::isfinite(t_hi) || !(t_lo < t_hi))
    raise(ErrorCode::InvalidArgument, "parameter range must satisfy t_lo < t_hi");
  if (samples < 8)
    raise(ErrorCode::InvalidArgument, "at least 8 samples are required");
  validate_bindings(constants);
  tol.validate();
}

ExprArcCurve::ExprArcCurve(CurveSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  const double sa = eval_scalar(spec_.x, spec_.t_lo, spec_.constants, spec_.tol.jet_epsilon);
  const double sb = eval_scalar(spec_.x, spec_.t_hi, spec_.constants, spec_.tol.jet_epsilon);
  if (!(std::abs(sb - sa) > 0.0))
    raise(ErrorCode::NotAdmissible,
          "x(t_lo) == x(t_hi): x'(t) cannot keep a single nonzero sign");
  flipped_ = sb < sa;
  s_lo_ = std::min(sa, sb);
  s_hi_ = std::max(sa, sb);
}

double ExprArcCurve::s_of_t(double t) const {
  return eval_scalar(spec_.x, t, spec_.constants, spec_.tol.jet_epsilon);
}

double ExprArcCurve::t_of_s(double s, std::optional<double> hint) const {
  const double span = s_hi_ - s_lo_;
  const double slack = 1e-9 * std::max(1.0, span);
  if (s < s_lo_ - slack || s > s_hi_ + slack)
    raise(ErrorCode::InvalidArgument,
          "arc length " + std::to_string(s) + " lies outside the curve range [" +
              std::to_string(s_lo_) + ", " + std::to_string(s_hi_) + "]");
  s = std::clamp(s, s_lo_, s_hi_);

  double lo = spec_.t_lo;
  double hi = spec_.t_hi;
  const double direction = flipped_ ? -1.0 : 1.0;
  double t = hint ? std::clamp(*hint, lo, hi) : 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const Jet3 xj = eval_jet(spec_.x, t, spec_.constants, spec_.tol.jet_epsilon);
    const double residual = xj.v - s;
    if (std::abs(residual) <= 1e-13 * std::max(1.0, std::abs(s))) return t;
    if (direction * residual < 0.0)
      lo = t;
    else
      hi = t;
    double next = t - residual / xj.d1;
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (hi - lo <=
        4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t)))
      return t;
    t = next;
  }
  return t;
}

CurveJets ExprArcCurve::at_t(double t) const {
  const Jet3 xj = eval_jet(spec_.x, t, spec_.constants, spec_.tol.jet_epsilon);
  if (std::abs(xj.d1) <= spec_.tol.epsilon)
    raise(ErrorCode::NotAdmissible,
          "x'(t) vanishes at t = " + std::to_string(t) +
              ": curve is not admissible there");
  const Jet3 tj = invert_series(xj, t, spec_.tol.jet_epsilon);
  const Jet3 yj = eval_jet(spec_.y, t, spec_.constants, spec_.tol.jet_epsilon);
  const Jet3 zj = eval_jet(spec_.z, t, spec_.constants, spec_.tol.jet_epsilon);
  return {compose(yj, tj), compose(zj, tj)};
}

CurveJets ExprArcCurve::at(double s) const { return at_t(t_of_s(s)); }

MovedArcCurve::MovedArcCurve(const ArcLengthCurve& base, const MotionB6& m)
    : base_(base), motion_(m), cos_phi_(std::cos(m.phi)), sin_phi_(std::sin(m.phi)) {}

CurveJets MovedArcCurve::at(double s) const {
  const double s0 = s - motion_.a;
  const CurveJets j = base_.at(s0);
  const Jet3 sv = Jet3::variable(s0);
  CurveJets out;
  out.y = Jet3::constant(motion_.b) + motion_.c * sv + cos_phi_ * j.y + sin_phi_ * j.z;
  out.z = Jet3::constant(motion_.d) + motion_.e * sv - sin_phi_ * j.y + cos_phi_ * j.z;
  return out;
}

}  // namespace galicurve
