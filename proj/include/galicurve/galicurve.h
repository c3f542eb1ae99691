/* galicurve — curve geometry in Galilean and pseudo-Galilean 3-space.
 *
 * C interface to the shared library. All entry points return a gc_status;
 * results come back through out parameters. Handles are opaque and must be
 * released with the matching *_free call. gc_last_error() returns a detailed
 * message for the most recent failing call on the current thread.
 */

#ifndef GALICURVE_H
#define GALICURVE_H

#ifdef _WIN32
#define GALICURVE_API __declspec(dllexport)
#else
#define GALICURVE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gc_status {
  GC_OK = 0,
  GC_ERR_IO = 1,
  GC_ERR_SYNTAX = 2,
  GC_ERR_SCHEMA = 3,
  GC_ERR_UNKNOWN_FUNCTION = 4,
  GC_ERR_UNBOUND_CONSTANT = 5,
  GC_ERR_DOMAIN = 6,
  GC_ERR_DIVISION_BY_ZERO = 7,
  GC_ERR_NON_INVERTIBLE = 8,
  GC_ERR_NOT_ADMISSIBLE = 9,
  GC_ERR_INFLECTION_POINT = 10,
  GC_ERR_ISOTROPIC_NORMAL = 11,
  GC_ERR_VANISHING_TORSION = 12,
  GC_ERR_MAX_DEPTH = 13,
  GC_ERR_TOO_FEW_POINTS = 14,
  GC_ERR_INVALID_ARGUMENT = 15,
  GC_ERR_INTERNAL = 16
} gc_status;

typedef enum gc_geometry {
  GC_GALILEAN = 0,
  GC_PSEUDO_GALILEAN = 1
} gc_geometry;

typedef enum gc_frame_vector {
  GC_VECTOR_T = 0,
  GC_VECTOR_N = 1,
  GC_VECTOR_B = 2
} gc_frame_vector;

typedef enum gc_causal {
  GC_CAUSAL_NONE = -1, /* Galilean frames carry no causal labels */
  GC_CAUSAL_SPACELIKE = 0,
  GC_CAUSAL_TIMELIKE = 1,
  GC_CAUSAL_ISOTROPIC = 2
} gc_causal;

typedef enum gc_helix_class {
  GC_HELIX_CIRCULAR = 0,
  GC_HELIX_GENERAL = 1,
  GC_HELIX_GENERIC = 2,
  GC_HELIX_UNDEFINED_TORSION = 3
} gc_helix_class;

typedef struct gc_curve gc_curve;
typedef struct gc_analysis gc_analysis;

typedef struct gc_frame {
  double T[3];
  double N[3];
  double B[3];
  double kappa;
  double tau;
  int causal[3]; /* gc_causal per vector, GC_CAUSAL_NONE for Galilean curves */
} gc_frame;

typedef struct gc_linear_fit {
  double slope;
  double intercept;
  double max_residual;
  double rms_residual;
} gc_linear_fit;

typedef struct gc_constancy {
  double mean;
  double stddev;
  double rel_dispersion;
  double min;
  double max;
  long count;
} gc_constancy;

typedef struct gc_classification {
  int tag; /* gc_helix_class */
  gc_linear_fit fit_s_T;
  gc_linear_fit fit_s_N;
  gc_linear_fit fit_s_B;
  gc_constancy kappa;
  gc_constancy tau;
  gc_constancy harmonic;
  double tau_signed_integral;
  double torsion_zero_fraction;
  int tau_sign_change;
  double mean_tau_times_h;
  double mean_kappa_over_h;
} gc_classification;

GALICURVE_API const char* gc_version(void);
GALICURVE_API const char* gc_status_name(gc_status status);
GALICURVE_API const char* gc_last_error(void);

/* --- curve handles ------------------------------------------------------ */

GALICURVE_API gc_status gc_curve_load(const char* path, gc_curve** out);
GALICURVE_API gc_status gc_curve_parse(const char* json_text, gc_curve** out);
GALICURVE_API gc_status gc_curve_to_json(const gc_curve* curve, char** out_json);
GALICURVE_API void gc_curve_free(gc_curve* curve);
GALICURVE_API void gc_string_free(char* s);

GALICURVE_API gc_status gc_curve_geometry(const gc_curve* curve, int* out);
GALICURVE_API gc_status gc_curve_samples(const gc_curve* curve, int* out);
GALICURVE_API gc_status gc_curve_t_range(const gc_curve* curve, double* t_lo,
                                         double* t_hi);
/* name is one of "epsilon", "jet_epsilon", "quadrature", "constancy",
 * "linearity"; value must be positive. */
GALICURVE_API gc_status gc_curve_set_tolerance(gc_curve* curve, const char* name,
                                               double value);
/* *ok set to 1/0; report_json (optional, may be NULL) receives a JSON object
 * {"ok": ..., "violations": [{"t": ..., "reason": ...}, ...]}. */
GALICURVE_API gc_status gc_curve_admissibility(const gc_curve* curve, int* ok,
                                               char** report_json);

/* --- pointwise geometry ------------------------------------------------- */

GALICURVE_API gc_status gc_curve_frame(const gc_curve* curve, double t,
                                       gc_frame* out);
GALICURVE_API gc_status gc_curve_curvature(const gc_curve* curve, double t,
                                           double* out);
GALICURVE_API gc_status gc_curve_torsion(const gc_curve* curve, double t,
                                         double* out);
GALICURVE_API gc_status gc_curve_representation(const gc_curve* curve, int which,
                                                double t, double out[3]);
/* which selects the integrand: GC_VECTOR_T integrates kappa, N and B |tau|.
 * s_lo and s_hi are arc lengths within the curve range. */
GALICURVE_API gc_status gc_curve_arc_length(const gc_curve* curve, int which,
                                            double s_lo, double s_hi, double tol,
                                            double* out);
/* params = {a, b, c, d, e, phi}; phi in radians. */
GALICURVE_API gc_status gc_curve_transform(const gc_curve* curve,
                                           const double params[6],
                                           gc_curve** out);

/* --- analysis ------------------------------------------------------------ */

GALICURVE_API gc_status gc_curve_analyze(const gc_curve* curve,
                                         gc_analysis** out);
GALICURVE_API void gc_analysis_free(gc_analysis* analysis);
GALICURVE_API gc_status gc_analysis_size(const gc_analysis* analysis, int* out);
GALICURVE_API gc_status gc_analysis_flipped(const gc_analysis* analysis,
                                            int* out);
/* Column names: "t", "s", "kappa", "tau", "H", "s_T", "s_N", "s_B",
 * "s_N_signed". The returned pointer stays valid while the handle lives;
 * entries of "H" are NaN where torsion vanishes. NULL for unknown names. */
GALICURVE_API const double* gc_analysis_column(const gc_analysis* analysis,
                                               const char* name);

GALICURVE_API gc_status gc_curve_classify(const gc_curve* curve,
                                          gc_classification* out);
GALICURVE_API const char* gc_helix_class_name(int tag);

#ifdef __cplusplus
}
#endif

#endif /* GALICURVE_H */
