#include "galicurve/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace galicurve {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double sign_of(double v, double epsilon) {
  if (v > epsilon) return 1.0;
  if (v < -epsilon) return -1.0;
  return 0.0;
}

}  // namespace

double harmonic_curvature(double kappa, double tau, double epsilon) {
  if (std::abs(tau) <= epsilon)
    raise(ErrorCode::VanishingTorsion,
          "harmonic curvature is undefined where torsion vanishes (|tau| = " +
              std::to_string(std::abs(tau)) + ")");
  return kappa / tau;
}

double curvature_at(const ArcLengthCurve& c, double s) {
  const CurveJets j = c.at(s);
  if (c.geometry() == Geometry::PseudoGalilean)
    return pg_curvature_from(j, c.tolerances().epsilon);
  return galilean_curvature_from(j);
}

double torsion_at(const ArcLengthCurve& c, double s) {
  const CurveJets j = c.at(s);
  if (c.geometry() == Geometry::PseudoGalilean)
    return pg_torsion_from(j, c.tolerances().epsilon);
  return galilean_torsion_from(j, c.tolerances().epsilon);
}

Frame frame_at(const ArcLengthCurve& c, double s) {
  const CurveJets j = c.at(s);
  if (c.geometry() == Geometry::PseudoGalilean)
    return pg_frame_from(j, c.tolerances().epsilon);
  return galilean_frame_from(j, c.tolerances().epsilon);
}

namespace {

Vec3G pick_vector(const Frame& f, FrameVector which) {
  switch (which) {
    case FrameVector::T: return f.T;
    case FrameVector::N: return f.N;
    case FrameVector::B: return f.B;
  }
  raise(ErrorCode::InvalidArgument, "unknown frame vector");
}

void check_arc_range(const ArcLengthCurve& c, double s_lo, double s_hi) {
  if (!(s_lo <= s_hi))
    raise(ErrorCode::InvalidArgument, "arc-length bounds must satisfy s_lo <= s_hi");
  const double slack = 1e-9 * std::max(1.0, c.s_max() - c.s_min());
  if (s_lo < c.s_min() - slack || s_hi > c.s_max() + slack)
    raise(ErrorCode::InvalidArgument,
          "arc-length window [" + std::to_string(s_lo) + ", " +
              std::to_string(s_hi) + "] exceeds the curve range");
}

}  // namespace

Vec3G spherical_representation_at(const ArcLengthCurve& c, FrameVector which,
                                  double s) {
  return pick_vector(frame_at(c, s), which);
}

Vec3G spherical_representation(const CurveSpec& c, FrameVector which, double t) {
  return pick_vector(frenet_frame(c, t), which);
}

double arc_length_T(const ArcLengthCurve& c, double s_lo, double s_hi, double tol) {
  check_arc_range(c, s_lo, s_hi);
  return integrate_adaptive([&](double s) { return curvature_at(c, s); }, s_lo,
                            s_hi, tol)
      .value;
}

double arc_length_N(const ArcLengthCurve& c, double s_lo, double s_hi, double tol) {
  check_arc_range(c, s_lo, s_hi);
  return integrate_adaptive(
             [&](double s) { return std::abs(torsion_at(c, s)); }, s_lo, s_hi, tol)
      .value;
}

double arc_length_B(const ArcLengthCurve& c, double s_lo, double s_hi, double tol) {
  // Same integrand as the normal image: ds_B/ds = tau as well.
  check_arc_range(c, s_lo, s_hi);
  return integrate_adaptive(
             [&](double s) { return std::abs(torsion_at(c, s)); }, s_lo, s_hi, tol)
      .value;
}

double arc_length_T(const CurveSpec& c, double s_lo, double s_hi, double tol) {
  return arc_length_T(ExprArcCurve(c), s_lo, s_hi, tol);
}

double arc_length_N(const CurveSpec& c, double s_lo, double s_hi, double tol) {
  return arc_length_N(ExprArcCurve(c), s_lo, s_hi, tol);
}

double arc_length_B(const CurveSpec& c, double s_lo, double s_hi, double tol) {
  return arc_length_B(ExprArcCurve(c), s_lo, s_hi, tol);
}

LinearityReport fit_linear(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    raise(ErrorCode::InvalidArgument, "fit_linear needs matching sequence lengths");
  const std::size_t n = xs.size();
  if (n < 3)
    raise(ErrorCode::TooFewPoints,
          "linear fit needs at least 3 points, got " + std::to_string(n));
  for (std::size_t i = 1; i < n; ++i)
    if (!(xs[i] > xs[i - 1]))
      raise(ErrorCode::InvalidArgument, "fit_linear abscissae must be strictly increasing");

  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mean_x;
    sxx += dx * dx;
    sxy += dx * (ys[i] - mean_y);
  }

  LinearityReport r;
  r.slope = sxy / sxx;
  r.intercept = mean_y - r.slope * mean_x;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double res = ys[i] - (r.slope * xs[i] + r.intercept);
    r.max_residual = std::max(r.max_residual, std::abs(res));
    sum_sq += res * res;
  }
  r.rms_residual = std::sqrt(sum_sq / static_cast<double>(n));
  return r;
}

ConstancyStats constancy_stats(std::span<const double> values) {
  ConstancyStats s;
  s.count = static_cast<long>(values.size());
  if (values.empty()) {
    s.mean = s.stddev = s.rel_dispersion = s.min = s.max = kNaN;
    return s;
  }
  double sum = 0.0;
  s.min = values.front();
  s.max = values.front();
  for (double v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = sum / static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) {
    const double d = v - s.mean;
    var += d * d;
  }
  s.stddev = std::sqrt(var / static_cast<double>(values.size()));
  if (s.mean != 0.0)
    s.rel_dispersion = s.stddev / std::abs(s.mean);
  else
    s.rel_dispersion = s.stddev == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return s;
}

const char* helix_tag_name(HelixTag tag) {
  switch (tag) {
    case HelixTag::CircularHelix: return "circular_helix";
    case HelixTag::GeneralHelix: return "general_helix";
    case HelixTag::Generic: return "generic";
    case HelixTag::UndefinedTorsion: return "undefined_torsion";
  }
  return "?";
}

CurveAnalysis analyze(const ArcLengthCurve& c, int samples) {
  if (samples < 8)
    raise(ErrorCode::InvalidArgument, "analysis needs at least 8 samples");
  const double s0 = c.s_min();
  const double s1 = c.s_max();
  const double eps = c.tolerances().epsilon;

  CurveAnalysis out;
  out.geometry = c.geometry();
  out.parameter_flipped = c.parameter_flipped();
  out.t.resize(samples);
  out.s.resize(samples);
  out.kappa.resize(samples);
  out.tau.resize(samples);
  out.H.resize(samples);
  out.sT.assign(samples, 0.0);
  out.sN.assign(samples, 0.0);
  out.sB.assign(samples, 0.0);
  out.sN_signed.assign(samples, 0.0);

  for (int i = 0; i < samples; ++i) {
    const double s = s0 + (s1 - s0) * i / (samples - 1);
    const Frame f = frame_at(c, s);
    out.s[i] = s;
    out.t[i] = c.parameter_of(s);
    out.kappa[i] = f.kappa;
    out.tau[i] = f.tau;
    out.H[i] = std::abs(f.tau) > eps ? f.kappa / f.tau : kNaN;
  }

  // Cumulative indicatrix arc lengths, one adaptive panel per grid cell. The
  // per-panel tolerance splits the quadrature budget so the endpoint value is
  // grid-independent.
  const double panel_tol = c.tolerances().quadrature / (samples - 1);
  const auto kappa_of = [&](double s) { return curvature_at(c, s); };
  const auto abs_tau_of = [&](double s) { return std::abs(torsion_at(c, s)); };
  const auto tau_of = [&](double s) { return torsion_at(c, s); };
  for (int i = 1; i < samples; ++i) {
    const double a = out.s[i - 1];
    const double b = out.s[i];
    out.sT[i] = out.sT[i - 1] + integrate_adaptive(kappa_of, a, b, panel_tol).value;
    out.sN[i] = out.sN[i - 1] + integrate_adaptive(abs_tau_of, a, b, panel_tol).value;
    out.sB[i] = out.sB[i - 1] + integrate_adaptive(abs_tau_of, a, b, panel_tol).value;
    out.sN_signed[i] =
        out.sN_signed[i - 1] + integrate_adaptive(tau_of, a, b, panel_tol).value;
  }
  return out;
}

CurveAnalysis analyze(const CurveSpec& c) {
  const AdmissibilityReport report = check_admissible(c);
  if (!report.ok) {
    std::string msg = "curve fails admissibility at " +
                      std::to_string(report.violations.size()) +
                      " sample point(s); first: t = " +
                      std::to_string(report.violations.front().t) + ", " +
                      report.violations.front().reason;
    raise(ErrorCode::NotAdmissible, msg);
  }
  const ExprArcCurve curve(c);
  return analyze(curve, c.samples);
}

HelixClass classify(const ArcLengthCurve& c, int samples) {
  const CurveAnalysis a = analyze(c, samples);
  const double eps = c.tolerances().epsilon;
  const double constancy_tol = c.tolerances().constancy;
  const int n = samples;

  HelixClass result;
  HelixEvidence& ev = result.evidence;
  ev.fit_sT = fit_linear(a.s, a.sT);
  ev.fit_sN = fit_linear(a.s, a.sN);
  ev.fit_sB = fit_linear(a.s, a.sB);
  ev.kappa = constancy_stats(a.kappa);
  ev.tau = constancy_stats(a.tau);
  ev.tau_signed_integral = a.sN_signed.back();

  std::vector<double> h_defined;
  h_defined.reserve(n);
  long zero_count = 0;
  double sum_tau_h = 0.0;
  double sum_kappa_over_h = 0.0;
  bool sign_change = false;
  double prev_sign = 0.0;
  for (int i = 0; i < n; ++i) {
    const double sgn = sign_of(a.tau[i], eps);
    if (sgn == 0.0) {
      ++zero_count;
    } else {
      h_defined.push_back(a.H[i]);
      sum_tau_h += a.tau[i] * a.H[i];
      sum_kappa_over_h += a.kappa[i] / a.H[i];
      if (prev_sign != 0.0 && sgn != prev_sign) sign_change = true;
      prev_sign = sgn;
    }
  }
  ev.harmonic = constancy_stats(h_defined);
  ev.torsion_zero_fraction = static_cast<double>(zero_count) / n;
  ev.tau_sign_change = sign_change;
  ev.mean_tau_times_h =
      h_defined.empty() ? kNaN : sum_tau_h / static_cast<double>(h_defined.size());
  ev.mean_kappa_over_h =
      h_defined.empty() ? kNaN
                        : sum_kappa_over_h / static_cast<double>(h_defined.size());

  if (ev.torsion_zero_fraction > 0.01) {
    result.tag = HelixTag::UndefinedTorsion;
  } else if (ev.kappa.rel_dispersion < constancy_tol &&
             ev.tau.rel_dispersion < constancy_tol && ev.kappa.mean > 0.0 &&
             ev.tau.mean > 0.0) {
    result.tag = HelixTag::CircularHelix;
  } else if (zero_count == 0 && !sign_change &&
             ev.harmonic.rel_dispersion < constancy_tol) {
    result.tag = HelixTag::GeneralHelix;
  } else {
    result.tag = HelixTag::Generic;
  }
  return result;
}

HelixClass classify(const CurveSpec& c) {
  const AdmissibilityReport report = check_admissible(c);
  if (!report.ok)
    raise(ErrorCode::NotAdmissible,
          "curve fails admissibility at " + std::to_string(report.violations.size()) +
              " sample point(s); cannot classify");
  const ExprArcCurve curve(c);
  return classify(curve, c.samples);
}

SegmentationReport admissible_segments(const ArcLengthCurve& c, int samples) {
  if (samples < 8)
    raise(ErrorCode::InvalidArgument, "segmentation needs at least 8 samples");
  const double s0 = c.s_min();
  const double s1 = c.s_max();
  const double eps = c.tolerances().epsilon;
  const bool pg = c.geometry() == Geometry::PseudoGalilean;

  // Frame-degeneracy indicator. In the pseudo-Galilean case y''^2 - z''^2
  // changes sign across an isotropic point, so interior zeros are visible
  // between grid nodes and can be located by bisection. Galilean curvature is
  // nonnegative; only nodes at which it (nearly) vanishes can be detected.
  const auto indicator = [&](double s) {
    const CurveJets j = c.at(s);
    if (pg) return j.y.d2 * j.y.d2 - j.z.d2 * j.z.d2;
    return std::hypot(j.y.d2, j.z.d2);
  };

  std::vector<double> grid(samples);
  std::vector<double> ind(samples);
  std::vector<bool> good(samples);
  for (int i = 0; i < samples; ++i) {
    grid[i] = s0 + (s1 - s0) * i / (samples - 1);
    ind[i] = indicator(grid[i]);
    good[i] = std::abs(ind[i]) > eps;
  }

  const auto bisect = [&](double lo, double hi) {
    double flo = indicator(lo);
    for (int k = 0; k < 80; ++k) {
      const double mid = 0.5 * (lo + hi);
      const double fmid = indicator(mid);
      if ((flo < 0.0) == (fmid < 0.0)) {
        lo = mid;
        flo = fmid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  SegmentationReport report;
  int start = -1;  // index of the first good node of the open segment
  for (int i = 0; i < samples; ++i) {
    if (good[i] && start < 0) start = i;
    const bool crossing =
        pg && good[i] && i + 1 < samples && good[i + 1] && ind[i] * ind[i + 1] < 0.0;
    const bool next_bad = i + 1 < samples && !good[i + 1];
    const bool at_end = i + 1 == samples;
    if (start < 0 || !good[i]) continue;
    if (crossing || next_bad || at_end) {
      if (i > start) report.segments.push_back({grid[start], grid[i]});
      if (crossing) report.breakpoints.push_back(bisect(grid[i], grid[i + 1]));
      if (next_bad) report.breakpoints.push_back(grid[i + 1]);
      if (!at_end) start = -1;
    }
  }
  return report;
}

}  // namespace galicurve
