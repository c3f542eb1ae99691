#pragma once

#include <span>
#include <vector>

#include "galicurve/galilean.hpp"
#include "galicurve/pseudo_galilean.hpp"
#include "galicurve/quadrature.hpp"

namespace galicurve {

// First harmonic curvature H = kappa/tau; undefined where |tau| <= epsilon.
double harmonic_curvature(double kappa, double tau, double epsilon = 1e-9);

enum class FrameVector { T, N, B };

// Geometry-dispatched frame machinery on the arc-length interface.
double curvature_at(const ArcLengthCurve& c, double s);
double torsion_at(const ArcLengthCurve& c, double s);
Frame frame_at(const ArcLengthCurve& c, double s);

// A point of the tangent, principal-normal, or binormal indicatrix.
Vec3G spherical_representation(const CurveSpec& c, FrameVector which, double t);
Vec3G spherical_representation_at(const ArcLengthCurve& c, FrameVector which,
                                  double s);

// Arc lengths of the three indicatrices over [s_lo, s_hi]: the integral of
// kappa for the tangent image, of |tau| for the normal and binormal images.
double arc_length_T(const ArcLengthCurve& c, double s_lo, double s_hi, double tol);
double arc_length_N(const ArcLengthCurve& c, double s_lo, double s_hi, double tol);
double arc_length_B(const ArcLengthCurve& c, double s_lo, double s_hi, double tol);
double arc_length_T(const CurveSpec& c, double s_lo, double s_hi, double tol);
double arc_length_N(const CurveSpec& c, double s_lo, double s_hi, double tol);
double arc_length_B(const CurveSpec& c, double s_lo, double s_hi, double tol);

struct LinearityReport {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  double rms_residual = 0.0;
};

// Least-squares line through (xs, ys); needs >= 3 strictly increasing xs.
LinearityReport fit_linear(std::span<const double> xs, std::span<const double> ys);

struct ConstancyStats {
  double mean = 0.0;
  double stddev = 0.0;          // population standard deviation
  double rel_dispersion = 0.0;  // stddev / |mean|
  double min = 0.0;
  double max = 0.0;
  long count = 0;               // samples the statistics were taken over
};

ConstancyStats constancy_stats(std::span<const double> values);

enum class HelixTag { CircularHelix, GeneralHelix, Generic, UndefinedTorsion };

const char* helix_tag_name(HelixTag tag);

struct HelixEvidence {
  LinearityReport fit_sT, fit_sN, fit_sB;
  ConstancyStats kappa, tau, harmonic;
  double tau_signed_integral = 0.0;  // signed integral of tau over the range
  double torsion_zero_fraction = 0.0;
  bool tau_sign_change = false;
  // Slopes the helix characterizations predict for the fits above: the
  // tangent-image fit should match mean(tau*H), the normal/binormal fits
  // mean(kappa/H).
  double mean_tau_times_h = 0.0;
  double mean_kappa_over_h = 0.0;
};

struct HelixClass {
  HelixTag tag = HelixTag::Generic;
  HelixEvidence evidence;
};

// Sampled profiles over a uniform arc-length grid. H is NaN where |tau| is at
// or below the curve epsilon. sT, sN, sB are cumulative indicatrix arc
// lengths starting at zero; consecutive differences equal panel quadrature.
struct CurveAnalysis {
  Geometry geometry = Geometry::Galilean;
  bool parameter_flipped = false;
  std::vector<double> t, s;
  std::vector<double> kappa, tau, H;
  std::vector<double> sT, sN, sB;
  std::vector<double> sN_signed;
};

CurveAnalysis analyze(const ArcLengthCurve& c, int samples);
CurveAnalysis analyze(const CurveSpec& c);  // checks admissibility first

// Classification per the helix definitions: circular when kappa and tau are
// both constant with positive means, general when H is constant and tau never
// crosses zero, undefined_torsion when |tau| <= epsilon on more than 1% of
// samples, generic otherwise. Constancy means relative dispersion below the
// curve's constancy tolerance.
HelixClass classify(const ArcLengthCurve& c, int samples);
HelixClass classify(const CurveSpec& c);

// Maximal subranges on which a frame exists, for curves whose normal turns
// isotropic (or whose curvature vanishes) inside the range. Breakpoints list
// the located degenerate arc lengths; they are reported, never interpolated
// across.
struct SegmentationReport {
  struct Segment {
    double s_lo = 0.0;
    double s_hi = 0.0;
  };
  std::vector<Segment> segments;
  std::vector<double> breakpoints;
};

SegmentationReport admissible_segments(const ArcLengthCurve& c, int samples);

}  // namespace galicurve
