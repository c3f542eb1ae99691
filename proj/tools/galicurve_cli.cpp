// galicurve command-line front end. Talks to the shared library exclusively
// through the C interface in galicurve/galicurve.h; formatting and file
// handling live here.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "galicurve/galicurve.h"
#include "galicurve/num_format.hpp"

namespace {

using galicurve::format_sig12;

int exit_code_for(gc_status status) {
  switch (status) {
    case GC_OK:
      return 0;
    case GC_ERR_NOT_ADMISSIBLE:
    case GC_ERR_INFLECTION_POINT:
    case GC_ERR_ISOTROPIC_NORMAL:
    case GC_ERR_VANISHING_TORSION:
      return 2;
    case GC_ERR_MAX_DEPTH:
    case GC_ERR_DIVISION_BY_ZERO:
    case GC_ERR_NON_INVERTIBLE:
    case GC_ERR_DOMAIN:
    case GC_ERR_INTERNAL:
      return 3;
    default:
      return 1;  // I/O, syntax, schema, usage
  }
}

int fail(gc_status status) {
  std::fprintf(stderr, "galicurve: error [%s]: %s\n", gc_status_name(status),
               gc_last_error());
  return exit_code_for(status);
}

int fail_usage(const std::string& message) {
  std::fprintf(stderr, "galicurve: %s\n", message.c_str());
  return 1;
}

struct CurveDeleter {
  void operator()(gc_curve* c) const { gc_curve_free(c); }
};
struct AnalysisDeleter {
  void operator()(gc_analysis* a) const { gc_analysis_free(a); }
};
using CurvePtr = std::unique_ptr<gc_curve, CurveDeleter>;
using AnalysisPtr = std::unique_ptr<gc_analysis, AnalysisDeleter>;

// Temp-file-then-rename so an error never leaves a partial output behind.
bool write_file_atomic(const std::string& path, const std::string& content,
                       std::string* error) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      *error = "cannot open '" + tmp + "' for writing";
      return false;
    }
    out << content;
    out.flush();
    if (!out.good()) {
      *error = "failed while writing '" + tmp + "'";
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return false;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    *error = "failed to move '" + tmp + "' to '" + path + "'";
    std::filesystem::remove(tmp, ec);
    return false;
  }
  return true;
}

std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  return format_sig12(v);
}

std::string json_vector(const double v[3]) {
  return "[" + json_number(v[0]) + ", " + json_number(v[1]) + ", " +
         json_number(v[2]) + "]";
}

void append_column(std::string& out, const char* name, const double* data, int n,
                   bool trailing_comma) {
  out += "  \"";
  out += name;
  out += "\": [";
  for (int i = 0; i < n; ++i) {
    if (i) out += ", ";
    out += json_number(data[i]);
  }
  out += trailing_comma ? "],\n" : "]\n";
}

const char* causal_text(int causal) {
  switch (causal) {
    case GC_CAUSAL_SPACELIKE: return "spacelike";
    case GC_CAUSAL_TIMELIKE: return "timelike";
    case GC_CAUSAL_ISOTROPIC: return "isotropic";
    default: return "none";
  }
}

// Loads the spec, applies GALICURVE_TOL and the optional --tol override, and
// reports admissibility warnings on stderr.
int load_curve(const std::string& path, double tol_override, CurvePtr* out) {
  gc_curve* raw = nullptr;
  if (const gc_status st = gc_curve_load(path.c_str(), &raw); st != GC_OK)
    return fail(st);
  out->reset(raw);

  if (const char* env = std::getenv("GALICURVE_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0))
      return fail_usage("GALICURVE_TOL must be a positive number, got '" +
                        std::string(env) + "'");
    gc_curve_set_tolerance(out->get(), "constancy", v);
  }
  if (tol_override > 0.0)
    gc_curve_set_tolerance(out->get(), "constancy", tol_override);

  int ok = 0;
  char* report = nullptr;
  if (const gc_status st = gc_curve_admissibility(out->get(), &ok, &report);
      st != GC_OK)
    return fail(st);
  if (!ok && report) {
    try {
      const auto parsed = nlohmann::json::parse(report);
      const auto& violations = parsed["violations"];
      std::fprintf(stderr,
                   "galicurve: warning: curve fails admissibility at %zu sample "
                   "point(s); first: t = %s, %s\n",
                   violations.size(),
                   format_sig12(violations[0]["t"].get<double>()).c_str(),
                   violations[0]["reason"].get<std::string>().c_str());
    } catch (...) {
      std::fprintf(stderr, "galicurve: warning: curve fails admissibility\n");
    }
  }
  gc_string_free(report);
  return 0;
}

std::string classification_json(const gc_classification& c) {
  const auto fit = [](const gc_linear_fit& f) {
    return "{\"slope\": " + json_number(f.slope) +
           ", \"intercept\": " + json_number(f.intercept) +
           ", \"max_residual\": " + json_number(f.max_residual) +
           ", \"rms_residual\": " + json_number(f.rms_residual) + "}";
  };
  const auto stats = [](const gc_constancy& s) {
    return "{\"mean\": " + json_number(s.mean) +
           ", \"stddev\": " + json_number(s.stddev) +
           ", \"rel_dispersion\": " + json_number(s.rel_dispersion) +
           ", \"min\": " + json_number(s.min) + ", \"max\": " + json_number(s.max) +
           ", \"count\": " + std::to_string(s.count) + "}";
  };
  std::string out = "{\n";
  out += "  \"tag\": \"" + std::string(gc_helix_class_name(c.tag)) + "\",\n";
  out += "  \"evidence\": {\n";
  out += "    \"fit_s_T\": " + fit(c.fit_s_T) + ",\n";
  out += "    \"fit_s_N\": " + fit(c.fit_s_N) + ",\n";
  out += "    \"fit_s_B\": " + fit(c.fit_s_B) + ",\n";
  out += "    \"kappa\": " + stats(c.kappa) + ",\n";
  out += "    \"tau\": " + stats(c.tau) + ",\n";
  out += "    \"H\": " + stats(c.harmonic) + ",\n";
  out += "    \"tau_signed_integral\": " + json_number(c.tau_signed_integral) + ",\n";
  out += "    \"torsion_zero_fraction\": " + json_number(c.torsion_zero_fraction) + ",\n";
  out += std::string("    \"tau_sign_change\": ") +
         (c.tau_sign_change ? "true" : "false") + ",\n";
  out += "    \"mean_tau_times_H\": " + json_number(c.mean_tau_times_h) + ",\n";
  out += "    \"mean_kappa_over_H\": " + json_number(c.mean_kappa_over_h) + "\n";
  out += "  }\n";
  out += "}\n";
  return out;
}

int run_analyze(const std::string& input, const std::string& output,
                const std::string& format, double tol) {
  CurvePtr curve;
  if (const int rc = load_curve(input, tol, &curve); rc != 0) return rc;

  gc_analysis* raw = nullptr;
  if (const gc_status st = gc_curve_analyze(curve.get(), &raw); st != GC_OK)
    return fail(st);
  AnalysisPtr analysis(raw);

  int n = 0;
  gc_analysis_size(analysis.get(), &n);
  int flipped = 0;
  gc_analysis_flipped(analysis.get(), &flipped);
  const double* s = gc_analysis_column(analysis.get(), "s");
  const double* kappa = gc_analysis_column(analysis.get(), "kappa");
  const double* tau = gc_analysis_column(analysis.get(), "tau");
  const double* H = gc_analysis_column(analysis.get(), "H");
  const double* sT = gc_analysis_column(analysis.get(), "s_T");
  const double* sN = gc_analysis_column(analysis.get(), "s_N");
  const double* sB = gc_analysis_column(analysis.get(), "s_B");
  const double* sNs = gc_analysis_column(analysis.get(), "s_N_signed");

  std::string content;
  if (format == "csv") {
    content = "s,kappa,tau,H,s_T,s_N,s_B\n";
    for (int i = 0; i < n; ++i) {
      content += format_sig12(s[i]) + ',' + format_sig12(kappa[i]) + ',' +
                 format_sig12(tau[i]) + ',';
      if (!std::isnan(H[i])) content += format_sig12(H[i]);
      content += ',' + format_sig12(sT[i]) + ',' + format_sig12(sN[i]) + ',' +
                 format_sig12(sB[i]) + '\n';
    }
  } else {
    int geometry = GC_GALILEAN;
    gc_curve_geometry(curve.get(), &geometry);
    content = "{\n";
    content += std::string("  \"geometry\": \"") +
               (geometry == GC_GALILEAN ? "galilean" : "pseudo-galilean") + "\",\n";
    content += std::string("  \"parameter_flipped\": ") +
               (flipped ? "true" : "false") + ",\n";
    content += "  \"samples\": " + std::to_string(n) + ",\n";
    append_column(content, "s", s, n, true);
    append_column(content, "kappa", kappa, n, true);
    append_column(content, "tau", tau, n, true);
    append_column(content, "H", H, n, true);
    append_column(content, "s_T", sT, n, true);
    append_column(content, "s_N", sN, n, true);
    append_column(content, "s_B", sB, n, true);
    append_column(content, "s_N_signed", sNs, n, false);
    content += "}\n";
  }

  std::string error;
  if (!write_file_atomic(output, content, &error)) return fail_usage(error);
  return 0;
}

int run_classify(const std::string& input, double tol) {
  CurvePtr curve;
  if (const int rc = load_curve(input, tol, &curve); rc != 0) return rc;
  gc_classification result;
  if (const gc_status st = gc_curve_classify(curve.get(), &result); st != GC_OK)
    return fail(st);
  std::fputs(classification_json(result).c_str(), stdout);
  return 0;
}

int run_frame(const std::string& input, double at, double tol) {
  CurvePtr curve;
  if (const int rc = load_curve(input, tol, &curve); rc != 0) return rc;
  gc_frame frame;
  if (const gc_status st = gc_curve_frame(curve.get(), at, &frame); st != GC_OK)
    return fail(st);
  std::string out = "{\n";
  out += "  \"t\": " + json_number(at) + ",\n";
  out += "  \"kappa\": " + json_number(frame.kappa) + ",\n";
  out += "  \"tau\": " + json_number(frame.tau) + ",\n";
  out += "  \"T\": " + json_vector(frame.T) + ",\n";
  out += "  \"N\": " + json_vector(frame.N) + ",\n";
  out += "  \"B\": " + json_vector(frame.B);
  if (frame.causal[0] != GC_CAUSAL_NONE) {
    out += ",\n  \"causal\": [\"";
    out += causal_text(frame.causal[0]);
    out += "\", \"";
    out += causal_text(frame.causal[1]);
    out += "\", \"";
    out += causal_text(frame.causal[2]);
    out += "\"]";
  }
  out += "\n}\n";
  std::fputs(out.c_str(), stdout);
  return 0;
}

int run_repr(const std::string& input, const std::string& which,
             const std::string& output, double tol) {
  CurvePtr curve;
  if (const int rc = load_curve(input, tol, &curve); rc != 0) return rc;

  int vector_tag = GC_VECTOR_T;
  if (which == "T")
    vector_tag = GC_VECTOR_T;
  else if (which == "N")
    vector_tag = GC_VECTOR_N;
  else if (which == "B")
    vector_tag = GC_VECTOR_B;
  else
    return fail_usage("--which must be T, N, or B");

  gc_analysis* raw = nullptr;
  if (const gc_status st = gc_curve_analyze(curve.get(), &raw); st != GC_OK)
    return fail(st);
  AnalysisPtr analysis(raw);
  int n = 0;
  gc_analysis_size(analysis.get(), &n);
  const double* s = gc_analysis_column(analysis.get(), "s");
  const double* t = gc_analysis_column(analysis.get(), "t");

  std::string content = "s,x1,x2,x3\n";
  for (int i = 0; i < n; ++i) {
    double v[3];
    if (const gc_status st =
            gc_curve_representation(curve.get(), vector_tag, t[i], v);
        st != GC_OK)
      return fail(st);
    content += format_sig12(s[i]) + ',' + format_sig12(v[0]) + ',' +
               format_sig12(v[1]) + ',' + format_sig12(v[2]) + '\n';
  }
  std::string error;
  if (!write_file_atomic(output, content, &error)) return fail_usage(error);
  return 0;
}

int run_motion(const std::string& input, const std::string& params,
               const std::string& output, double tol) {
  double values[6];
  {
    std::size_t start = 0;
    for (int i = 0; i < 6; ++i) {
      const std::size_t comma = params.find(',', start);
      const bool last = i == 5;
      if ((comma == std::string::npos) != last)
        return fail_usage("--params needs exactly six comma-separated numbers "
                          "a,b,c,d,e,phi");
      const std::string field =
          params.substr(start, last ? std::string::npos : comma - start);
      char* end = nullptr;
      values[i] = std::strtod(field.c_str(), &end);
      if (end == field.c_str() || *end != '\0')
        return fail_usage("--params component '" + field + "' is not a number");
      start = comma + 1;
    }
  }

  CurvePtr curve;
  if (const int rc = load_curve(input, tol, &curve); rc != 0) return rc;
  gc_curve* moved_raw = nullptr;
  if (const gc_status st = gc_curve_transform(curve.get(), values, &moved_raw);
      st != GC_OK)
    return fail(st);
  CurvePtr moved(moved_raw);
  char* json = nullptr;
  if (const gc_status st = gc_curve_to_json(moved.get(), &json); st != GC_OK)
    return fail(st);
  const std::string content = json;
  gc_string_free(json);
  std::string error;
  if (!write_file_atomic(output, content, &error)) return fail_usage(error);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frenet apparatus, harmonic curvature, and indicatrix arc "
               "lengths for curves in Galilean and pseudo-Galilean 3-space"};
  app.require_subcommand(1);

  std::string input, output, format = "csv", which, params;
  double at = 0.0;
  double tol = -1.0;

  CLI::App* analyze = app.add_subcommand("analyze", "Sample s, kappa, tau, H and indicatrix arc lengths over the curve");
  analyze->add_option("--input", input, "Curve spec file (JSON)")->required();
  analyze->add_option("--output", output, "Destination table")->required();
  analyze->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  analyze->add_option("--tol", tol, "Constancy tolerance override");

  CLI::App* classify = app.add_subcommand("classify", "Classify the curve against the helix characterizations");
  classify->add_option("--input", input, "Curve spec file (JSON)")->required();
  classify->add_option("--tol", tol, "Constancy tolerance override");

  CLI::App* frame = app.add_subcommand("frame", "Frenet frame at a parameter value");
  frame->add_option("--input", input, "Curve spec file (JSON)")->required();
  frame->add_option("--at", at, "Parameter value t")->required();
  frame->add_option("--tol", tol, "Constancy tolerance override");

  CLI::App* repr = app.add_subcommand("repr", "Spherical representation (indicatrix) of a frame vector");
  repr->add_option("--input", input, "Curve spec file (JSON)")->required();
  repr->add_option("--which", which, "Frame vector: T, N, or B")->required();
  repr->add_option("--output", output, "Destination table (CSV)")->required();
  repr->add_option("--tol", tol, "Constancy tolerance override");

  CLI::App* motion = app.add_subcommand("motion", "Apply a Galilean motion and write the transformed curve spec");
  motion->add_option("--input", input, "Curve spec file (JSON)")->required();
  motion->add_option("--params", params, "Motion parameters a,b,c,d,e,phi (phi in radians)")->required();
  motion->add_option("--output", output, "Destination curve spec (JSON)")->required();
  motion->add_option("--tol", tol, "Constancy tolerance override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (analyze->parsed()) return run_analyze(input, output, format, tol);
  if (classify->parsed()) return run_classify(input, tol);
  if (frame->parsed()) return run_frame(input, at, tol);
  if (repr->parsed()) return run_repr(input, which, output, tol);
  if (motion->parsed()) return run_motion(input, params, output, tol);
  return fail_usage("no command given");
}
