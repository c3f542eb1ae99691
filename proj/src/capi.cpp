#include "galicurve/galicurve.h"

#include <cstring>
#include <string>

#include "galicurve/analysis.hpp"
#include "galicurve/curve_io.hpp"

struct gc_curve {
  galicurve::CurveSpec spec;
};

struct gc_analysis {
  galicurve::CurveAnalysis data;
};

namespace {

thread_local std::string t_last_error;

gc_status map_code(galicurve::ErrorCode code) {
  using galicurve::ErrorCode;
  switch (code) {
    case ErrorCode::Io: return GC_ERR_IO;
    case ErrorCode::Syntax: return GC_ERR_SYNTAX;
    case ErrorCode::Schema: return GC_ERR_SCHEMA;
    case ErrorCode::UnknownFunction: return GC_ERR_UNKNOWN_FUNCTION;
    case ErrorCode::UnboundConstant: return GC_ERR_UNBOUND_CONSTANT;
    case ErrorCode::Domain: return GC_ERR_DOMAIN;
    case ErrorCode::DivisionByZero: return GC_ERR_DIVISION_BY_ZERO;
    case ErrorCode::NonInvertible: return GC_ERR_NON_INVERTIBLE;
    case ErrorCode::NotAdmissible: return GC_ERR_NOT_ADMISSIBLE;
    case ErrorCode::InflectionPoint: return GC_ERR_INFLECTION_POINT;
    case ErrorCode::IsotropicNormal: return GC_ERR_ISOTROPIC_NORMAL;
    case ErrorCode::VanishingTorsion: return GC_ERR_VANISHING_TORSION;
    case ErrorCode::MaxDepth: return GC_ERR_MAX_DEPTH;
    case ErrorCode::TooFewPoints: return GC_ERR_TOO_FEW_POINTS;
    case ErrorCode::InvalidArgument: return GC_ERR_INVALID_ARGUMENT;
  }
  return GC_ERR_INTERNAL;
}

template <typename Fn>
gc_status guarded(Fn&& fn) {
  try {
    fn();
    return GC_OK;
  } catch (const galicurve::Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return GC_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return GC_ERR_INTERNAL;
  }
}

gc_status invalid(const char* message) {
  t_last_error = message;
  return GC_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void fill_fit(gc_linear_fit& out, const galicurve::LinearityReport& in) {
  out.slope = in.slope;
  out.intercept = in.intercept;
  out.max_residual = in.max_residual;
  out.rms_residual = in.rms_residual;
}

void fill_constancy(gc_constancy& out, const galicurve::ConstancyStats& in) {
  out.mean = in.mean;
  out.stddev = in.stddev;
  out.rel_dispersion = in.rel_dispersion;
  out.min = in.min;
  out.max = in.max;
  out.count = in.count;
}

int causal_to_int(galicurve::CausalCharacter c) {
  switch (c) {
    case galicurve::CausalCharacter::Spacelike: return GC_CAUSAL_SPACELIKE;
    case galicurve::CausalCharacter::Timelike: return GC_CAUSAL_TIMELIKE;
    case galicurve::CausalCharacter::Isotropic: return GC_CAUSAL_ISOTROPIC;
  }
  return GC_CAUSAL_NONE;
}

}  // namespace

extern "C" {

const char* gc_version(void) { return "0.1.0"; }

const char* gc_status_name(gc_status status) {
  switch (status) {
    case GC_OK: return "ok";
    case GC_ERR_IO: return "io";
    case GC_ERR_SYNTAX: return "syntax";
    case GC_ERR_SCHEMA: return "schema";
    case GC_ERR_UNKNOWN_FUNCTION: return "unknown-function";
    case GC_ERR_UNBOUND_CONSTANT: return "unbound-constant";
    case GC_ERR_DOMAIN: return "domain";
    case GC_ERR_DIVISION_BY_ZERO: return "division-by-zero";
    case GC_ERR_NON_INVERTIBLE: return "non-invertible";
    case GC_ERR_NOT_ADMISSIBLE: return "not-admissible";
    case GC_ERR_INFLECTION_POINT: return "inflection-point";
    case GC_ERR_ISOTROPIC_NORMAL: return "isotropic-normal";
    case GC_ERR_VANISHING_TORSION: return "vanishing-torsion";
    case GC_ERR_MAX_DEPTH: return "max-depth";
    case GC_ERR_TOO_FEW_POINTS: return "too-few-points";
    case GC_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case GC_ERR_INTERNAL: return "internal";
  }
  return "?";
}

const char* gc_last_error(void) { return t_last_error.c_str(); }

gc_status gc_curve_load(const char* path, gc_curve** out) {
  if (!path || !out) return invalid("gc_curve_load: null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new gc_curve{galicurve::load_curve_spec(path)};
  });
}

gc_status gc_curve_parse(const char* json_text, gc_curve** out) {
  if (!json_text || !out) return invalid("gc_curve_parse: null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new gc_curve{galicurve::curve_from_json(json_text)};
  });
}

gc_status gc_curve_to_json(const gc_curve* curve, char** out_json) {
  if (!curve || !out_json) return invalid("gc_curve_to_json: null argument");
  *out_json = nullptr;
  return guarded([&] {
    *out_json = copy_string(galicurve::curve_to_json(curve->spec));
  });
}

void gc_curve_free(gc_curve* curve) { delete curve; }

void gc_string_free(char* s) { delete[] s; }

gc_status gc_curve_geometry(const gc_curve* curve, int* out) {
  if (!curve || !out) return invalid("gc_curve_geometry: null argument");
  *out = curve->spec.geometry == galicurve::Geometry::Galilean
             ? GC_GALILEAN
             : GC_PSEUDO_GALILEAN;
  return GC_OK;
}

gc_status gc_curve_samples(const gc_curve* curve, int* out) {
  if (!curve || !out) return invalid("gc_curve_samples: null argument");
  *out = curve->spec.samples;
  return GC_OK;
}

gc_status gc_curve_t_range(const gc_curve* curve, double* t_lo, double* t_hi) {
  if (!curve || !t_lo || !t_hi) return invalid("gc_curve_t_range: null argument");
  *t_lo = curve->spec.t_lo;
  *t_hi = curve->spec.t_hi;
  return GC_OK;
}

gc_status gc_curve_set_tolerance(gc_curve* curve, const char* name, double value) {
  if (!curve || !name) return invalid("gc_curve_set_tolerance: null argument");
  if (!(value > 0.0)) return invalid("gc_curve_set_tolerance: value must be positive");
  const std::string key = name;
  galicurve::Tolerances& tol = curve->spec.tol;
  if (key == "epsilon")
    tol.epsilon = value;
  else if (key == "jet_epsilon")
    tol.jet_epsilon = value;
  else if (key == "quadrature")
    tol.quadrature = value;
  else if (key == "constancy")
    tol.constancy = value;
  else if (key == "linearity")
    tol.linearity = value;
  else
    return invalid("gc_curve_set_tolerance: unknown tolerance name");
  return GC_OK;
}

gc_status gc_curve_admissibility(const gc_curve* curve, int* ok, char** report_json) {
  if (!curve || !ok) return invalid("gc_curve_admissibility: null argument");
  if (report_json) *report_json = nullptr;
  return guarded([&] {
    const galicurve::AdmissibilityReport report =
        galicurve::check_admissible(curve->spec);
    *ok = report.ok ? 1 : 0;
    if (report_json)
      *report_json = copy_string(galicurve::admissibility_to_json(report));
  });
}

gc_status gc_curve_frame(const gc_curve* curve, double t, gc_frame* out) {
  if (!curve || !out) return invalid("gc_curve_frame: null argument");
  return guarded([&] {
    const galicurve::Frame f = galicurve::frenet_frame(curve->spec, t);
    out->T[0] = f.T.x1; out->T[1] = f.T.x2; out->T[2] = f.T.x3;
    out->N[0] = f.N.x1; out->N[1] = f.N.x2; out->N[2] = f.N.x3;
    out->B[0] = f.B.x1; out->B[1] = f.B.x2; out->B[2] = f.B.x3;
    out->kappa = f.kappa;
    out->tau = f.tau;
    for (int i = 0; i < 3; ++i) out->causal[i] = GC_CAUSAL_NONE;
    if (f.causal)
      for (int i = 0; i < 3; ++i) out->causal[i] = causal_to_int((*f.causal)[i]);
  });
}

gc_status gc_curve_curvature(const gc_curve* curve, double t, double* out) {
  if (!curve || !out) return invalid("gc_curve_curvature: null argument");
  return guarded([&] { *out = galicurve::curvature(curve->spec, t); });
}

gc_status gc_curve_torsion(const gc_curve* curve, double t, double* out) {
  if (!curve || !out) return invalid("gc_curve_torsion: null argument");
  return guarded([&] { *out = galicurve::torsion(curve->spec, t); });
}

gc_status gc_curve_representation(const gc_curve* curve, int which, double t,
                                  double out[3]) {
  if (!curve || !out) return invalid("gc_curve_representation: null argument");
  if (which < GC_VECTOR_T || which > GC_VECTOR_B)
    return invalid("gc_curve_representation: which must be GC_VECTOR_T/N/B");
  return guarded([&] {
    const galicurve::Vec3G v = galicurve::spherical_representation(
        curve->spec, static_cast<galicurve::FrameVector>(which), t);
    out[0] = v.x1;
    out[1] = v.x2;
    out[2] = v.x3;
  });
}

gc_status gc_curve_arc_length(const gc_curve* curve, int which, double s_lo,
                              double s_hi, double tol, double* out) {
  if (!curve || !out) return invalid("gc_curve_arc_length: null argument");
  if (which < GC_VECTOR_T || which > GC_VECTOR_B)
    return invalid("gc_curve_arc_length: which must be GC_VECTOR_T/N/B");
  return guarded([&] {
    switch (which) {
      case GC_VECTOR_T:
        *out = galicurve::arc_length_T(curve->spec, s_lo, s_hi, tol);
        break;
      case GC_VECTOR_N:
        *out = galicurve::arc_length_N(curve->spec, s_lo, s_hi, tol);
        break;
      default:
        *out = galicurve::arc_length_B(curve->spec, s_lo, s_hi, tol);
        break;
    }
  });
}

gc_status gc_curve_transform(const gc_curve* curve, const double params[6],
                             gc_curve** out) {
  if (!curve || !params || !out) return invalid("gc_curve_transform: null argument");
  *out = nullptr;
  return guarded([&] {
    const galicurve::MotionB6 m{params[0], params[1], params[2],
                                params[3], params[4], params[5]};
    *out = new gc_curve{galicurve::transform_curve(curve->spec, m)};
  });
}

gc_status gc_curve_analyze(const gc_curve* curve, gc_analysis** out) {
  if (!curve || !out) return invalid("gc_curve_analyze: null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new gc_analysis{galicurve::analyze(curve->spec)};
  });
}

void gc_analysis_free(gc_analysis* analysis) { delete analysis; }

gc_status gc_analysis_size(const gc_analysis* analysis, int* out) {
  if (!analysis || !out) return invalid("gc_analysis_size: null argument");
  *out = static_cast<int>(analysis->data.s.size());
  return GC_OK;
}

gc_status gc_analysis_flipped(const gc_analysis* analysis, int* out) {
  if (!analysis || !out) return invalid("gc_analysis_flipped: null argument");
  *out = analysis->data.parameter_flipped ? 1 : 0;
  return GC_OK;
}

const double* gc_analysis_column(const gc_analysis* analysis, const char* name) {
  if (!analysis || !name) return nullptr;
  const galicurve::CurveAnalysis& a = analysis->data;
  const std::string key = name;
  if (key == "t") return a.t.data();
  if (key == "s") return a.s.data();
  if (key == "kappa") return a.kappa.data();
  if (key == "tau") return a.tau.data();
  if (key == "H") return a.H.data();
  if (key == "s_T") return a.sT.data();
  if (key == "s_N") return a.sN.data();
  if (key == "s_B") return a.sB.data();
  if (key == "s_N_signed") return a.sN_signed.data();
  return nullptr;
}

gc_status gc_curve_classify(const gc_curve* curve, gc_classification* out) {
  if (!curve || !out) return invalid("gc_curve_classify: null argument");
  return guarded([&] {
    const galicurve::HelixClass result = galicurve::classify(curve->spec);
    switch (result.tag) {
      case galicurve::HelixTag::CircularHelix: out->tag = GC_HELIX_CIRCULAR; break;
      case galicurve::HelixTag::GeneralHelix: out->tag = GC_HELIX_GENERAL; break;
      case galicurve::HelixTag::Generic: out->tag = GC_HELIX_GENERIC; break;
      case galicurve::HelixTag::UndefinedTorsion:
        out->tag = GC_HELIX_UNDEFINED_TORSION;
        break;
    }
    const galicurve::HelixEvidence& ev = result.evidence;
    fill_fit(out->fit_s_T, ev.fit_sT);
    fill_fit(out->fit_s_N, ev.fit_sN);
    fill_fit(out->fit_s_B, ev.fit_sB);
    fill_constancy(out->kappa, ev.kappa);
    fill_constancy(out->tau, ev.tau);
    fill_constancy(out->harmonic, ev.harmonic);
    out->tau_signed_integral = ev.tau_signed_integral;
    out->torsion_zero_fraction = ev.torsion_zero_fraction;
    out->tau_sign_change = ev.tau_sign_change ? 1 : 0;
    out->mean_tau_times_h = ev.mean_tau_times_h;
    out->mean_kappa_over_h = ev.mean_kappa_over_h;
  });
}

const char* gc_helix_class_name(int tag) {
  switch (tag) {
    case GC_HELIX_CIRCULAR: return "circular_helix";
    case GC_HELIX_GENERAL: return "general_helix";
    case GC_HELIX_GENERIC: return "generic";
    case GC_HELIX_UNDEFINED_TORSION: return "undefined_torsion";
  }
  return "?";
}

}  // extern "C"
