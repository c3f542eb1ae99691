#include "galicurve/galilean.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "galicurve/pseudo_galilean.hpp"

namespace galicurve {

double galilean_dot(const Vec3G& a, const Vec3G& b) {
  if (std::abs(a.x1) > kIsotropyEps || std::abs(b.x1) > kIsotropyEps)
    return a.x1 * b.x1;
  return a.x2 * b.x2 + a.x3 * b.x3;
}

ReparamPoint reparameterize(const CurveSpec& c, double t0) {
  const Jet3 xj = eval_jet(c.x, t0, c.constants, c.tol.jet_epsilon);
  const Jet3 tj = invert_series(xj, t0, c.tol.jet_epsilon);
  const Jet3 yj = eval_jet(c.y, t0, c.constants, c.tol.jet_epsilon);
  const Jet3 zj = eval_jet(c.z, t0, c.constants, c.tol.jet_epsilon);
  return {xj.v, compose(yj, tj), compose(zj, tj)};
}

namespace {

CurveJets arc_jets(const CurveSpec& c, double t) {
  const ReparamPoint p = reparameterize(c, t);
  return {p.y, p.z};
}

void require_regular(const CurveSpec& c, double t) {
  const Jet3 xj = eval_jet(c.x, t, c.constants, c.tol.jet_epsilon);
  if (std::abs(xj.d1) <= c.tol.epsilon)
    raise(ErrorCode::NotAdmissible,
          "x'(t) vanishes at t = " + std::to_string(t));
}

// Locates a zero of fn between two sample points by bisection; fn must change
// sign across [lo, hi].
template <typename Fn>
double bisect_zero(Fn&& fn, double lo, double hi) {
  double flo = fn(lo);
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = fn(mid);
    if ((flo < 0.0) == (fmid < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

AdmissibilityReport check_admissible(const CurveSpec& c) {
  c.validate();
  AdmissibilityReport report;
  const int n = c.samples;
  auto x_prime = [&](double t) {
    return eval_jet(c.x, t, c.constants, c.tol.jet_epsilon).d1;
  };
  // Normal-isotropy indicator; a sign change locates a point where the
  // pseudo-Galilean frame degenerates even when no grid node lands on it.
  auto isotropy = [&](double t) {
    const CurveJets j = arc_jets(c, t);
    return j.y.d2 * j.y.d2 - j.z.d2 * j.z.d2;
  };

  double prev_t = 0.0;
  double prev_d1 = 0.0;
  double prev_q = 0.0;
  bool have_prev = false;
  for (int i = 0; i < n; ++i) {
    const double t = c.t_lo + (c.t_hi - c.t_lo) * i / (n - 1);
    try {
      const double d1 = x_prime(t);
      if (have_prev && prev_d1 * d1 < 0.0 && std::abs(prev_d1) > c.tol.epsilon &&
          std::abs(d1) > c.tol.epsilon) {
        // x' changes sign between grid nodes; pin down the interior zero.
        const double t_zero = bisect_zero(x_prime, prev_t, t);
        report.violations.push_back({t_zero, "x'(t) vanishes (sign change)"});
      }
      if (std::abs(d1) <= c.tol.epsilon) {
        report.violations.push_back({t, "x'(t) vanishes (|x'| <= epsilon)"});
        have_prev = false;
        continue;
      }
      const CurveJets j = arc_jets(c, t);
      if (c.geometry == Geometry::Galilean) {
        if (std::hypot(j.y.d2, j.z.d2) <= c.tol.epsilon)
          report.violations.push_back(
              {t, "curvature vanishes: no Frenet frame exists"});
      } else {
        const double q = j.y.d2 * j.y.d2 - j.z.d2 * j.z.d2;
        if (std::abs(q) <= c.tol.epsilon) {
          report.violations.push_back(
              {t, "isotropic principal normal: y''^2 == z''^2"});
        } else if (have_prev && prev_q * q < 0.0) {
          const double t_zero = bisect_zero(isotropy, prev_t, t);
          report.violations.push_back(
              {t_zero, "isotropic principal normal (y''^2 - z''^2 changes sign)"});
        }
        prev_q = q;
      }
      prev_t = t;
      prev_d1 = d1;
      have_prev = true;
    } catch (const Error& e) {
      report.violations.push_back({t, std::string("evaluation failed: ") + e.what()});
      have_prev = false;
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const AdmissibilityViolation& a, const AdmissibilityViolation& b) {
              return a.t < b.t;
            });
  report.ok = report.violations.empty();
  return report;
}

double galilean_curvature_from(const CurveJets& j) {
  return std::hypot(j.y.d2, j.z.d2);
}

double galilean_torsion_from(const CurveJets& j, double epsilon) {
  const double kappa = galilean_curvature_from(j);
  if (kappa <= epsilon)
    raise(ErrorCode::InflectionPoint,
          "curvature vanishes: torsion is undefined at an inflection point");
  // det(a', a'', a''') in normal form reduces to y''z''' - y'''z''.
  return (j.y.d2 * j.z.d3 - j.y.d3 * j.z.d2) / (kappa * kappa);
}

Frame galilean_frame_from(const CurveJets& j, double epsilon) {
  const double kappa = galilean_curvature_from(j);
  if (kappa <= epsilon)
    raise(ErrorCode::InflectionPoint,
          "curvature vanishes: no Frenet frame at an inflection point");
  Frame f;
  f.T = {1.0, j.y.d1, j.z.d1};
  f.N = {0.0, j.y.d2 / kappa, j.z.d2 / kappa};
  f.B = {0.0, -j.z.d2 / kappa, j.y.d2 / kappa};
  f.kappa = kappa;
  f.tau = (j.y.d2 * j.z.d3 - j.y.d3 * j.z.d2) / (kappa * kappa);
  return f;
}

double curvature(const CurveSpec& c, double t) {
  require_regular(c, t);
  const CurveJets j = arc_jets(c, t);
  if (c.geometry == Geometry::PseudoGalilean)
    return pg_curvature_from(j, c.tol.epsilon);
  return galilean_curvature_from(j);
}

double torsion(const CurveSpec& c, double t) {
  require_regular(c, t);
  const CurveJets j = arc_jets(c, t);
  if (c.geometry == Geometry::PseudoGalilean)
    return pg_torsion_from(j, c.tol.epsilon);
  return galilean_torsion_from(j, c.tol.epsilon);
}

Frame frenet_frame(const CurveSpec& c, double t) {
  require_regular(c, t);
  const CurveJets j = arc_jets(c, t);
  if (c.geometry == Geometry::PseudoGalilean)
    return pg_frame_from(j, c.tol.epsilon);
  return galilean_frame_from(j, c.tol.epsilon);
}

Vec3G apply_motion(const Vec3G& p, const MotionB6& m) {
  const double cp = std::cos(m.phi);
  const double sp = std::sin(m.phi);
  return {m.a + p.x1,
          m.b + m.c * p.x1 + p.x2 * cp + p.x3 * sp,
          m.d + m.e * p.x1 - p.x2 * sp + p.x3 * cp};
}

CurveSpec transform_curve(const CurveSpec& c, const MotionB6& m) {
  const double cp = std::cos(m.phi);
  const double sp = std::sin(m.phi);
  const auto num = [](double v) { return Expr::make_number(v); };
  const auto bin = [](char op, ExprPtr l, ExprPtr r) {
    return Expr::make_binary(op, std::move(l), std::move(r));
  };

  CurveSpec out = c;
  out.x = bin('+', num(m.a), c.x);
  out.y = bin('+', bin('+', num(m.b), bin('*', num(m.c), c.x)),
              bin('+', bin('*', num(cp), c.y), bin('*', num(sp), c.z)));
  out.z = bin('+', bin('+', num(m.d), bin('*', num(m.e), c.x)),
              bin('+', bin('*', num(-sp), c.y), bin('*', num(cp), c.z)));
  return out;
}

}  // namespace galicurve
