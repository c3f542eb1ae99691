#include "galicurve/curve_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "galicurve/num_format.hpp"

namespace galicurve {
namespace {

using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& message) {
  raise(ErrorCode::Schema, message);
}

double require_number(const ordered_json& j, const std::string& field) {
  if (!j.is_number())
    schema_error("field \"" + field + "\" must be a number");
  return j.get<double>();
}

ExprPtr parse_coordinate(const ordered_json& doc, const std::string& field) {
  if (!doc.contains(field))
    schema_error("missing required field \"" + field + "\"");
  if (!doc[field].is_string())
    schema_error("field \"" + field + "\" must be an expression string");
  try {
    return parse(doc[field].get<std::string>());
  } catch (const Error& e) {
    // Keep the code and byte offset, say which coordinate failed.
    std::string msg = "in expression \"" + field + "\": " + e.what();
    if (e.offset())
      throw Error(e.code(), msg, *e.offset());
    throw Error(e.code(), msg);
  }
}

}  // namespace

CurveSpec curve_from_json(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Syntax,
                std::string("curve spec is not valid JSON: ") + e.what(),
                e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!doc.is_object()) schema_error("curve spec must be a JSON object");

  static const char* known_fields[] = {"geometry", "x",         "y",
                                       "z",        "t_range",   "samples",
                                       "constants", "tolerances"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    bool known = false;
    for (const char* f : known_fields)
      if (key == f) known = true;
    if (!known) schema_error("unknown field \"" + key + "\"");
  }

  CurveSpec spec;

  if (!doc.contains("geometry")) schema_error("missing required field \"geometry\"");
  if (!doc["geometry"].is_string())
    schema_error("field \"geometry\" must be a string");
  const std::string geom = doc["geometry"].get<std::string>();
  if (geom == "galilean")
    spec.geometry = Geometry::Galilean;
  else if (geom == "pseudo-galilean")
    spec.geometry = Geometry::PseudoGalilean;
  else
    schema_error("field \"geometry\" must be \"galilean\" or \"pseudo-galilean\", got \"" +
                 geom + "\"");

  spec.x = parse_coordinate(doc, "x");
  spec.y = parse_coordinate(doc, "y");
  spec.z = parse_coordinate(doc, "z");

  if (!doc.contains("t_range")) schema_error("missing required field \"t_range\"");
  const auto& range = doc["t_range"];
  if (!range.is_array() || range.size() != 2)
    schema_error("field \"t_range\" must be an array [t_lo, t_hi]");
  spec.t_lo = require_number(range[0], "t_range[0]");
  spec.t_hi = require_number(range[1], "t_range[1]");
  if (!(spec.t_lo < spec.t_hi))
    schema_error("field \"t_range\" must satisfy t_lo < t_hi");

  if (doc.contains("samples")) {
    if (!doc["samples"].is_number_integer())
      schema_error("field \"samples\" must be an integer");
    const long long n = doc["samples"].get<long long>();
    if (n < 8 || n > 1000000)
      schema_error("field \"samples\" must be between 8 and 1000000");
    spec.samples = static_cast<int>(n);
  }

  if (doc.contains("constants")) {
    if (!doc["constants"].is_object())
      schema_error("field \"constants\" must be an object of numbers");
    for (const auto& [name, value] : doc["constants"].items()) {
      if (!value.is_number())
        schema_error("constant \"" + name + "\" must be a number");
      spec.constants[name] = value.get<double>();
    }
    try {
      validate_bindings(spec.constants);
    } catch (const Error& e) {
      schema_error(std::string("invalid \"constants\": ") + e.what());
    }
  }

  if (doc.contains("tolerances")) {
    if (!doc["tolerances"].is_object())
      schema_error("field \"tolerances\" must be an object");
    for (const auto& [name, value] : doc["tolerances"].items()) {
      const double v = require_number(value, "tolerances." + name);
      if (!(v > 0.0) || !std::isfinite(v))
        schema_error("tolerance \"" + name + "\" must be positive and finite");
      if (name == "epsilon")
        spec.tol.epsilon = v;
      else if (name == "jet_epsilon")
        spec.tol.jet_epsilon = v;
      else if (name == "quadrature")
        spec.tol.quadrature = v;
      else if (name == "constancy")
        spec.tol.constancy = v;
      else if (name == "linearity")
        spec.tol.linearity = v;
      else
        schema_error("unknown tolerance \"" + name + "\"");
    }
  }

  spec.validate();
  return spec;
}

std::string curve_to_json(const CurveSpec& c) {
  ordered_json doc;
  doc["geometry"] = geometry_name(c.geometry);
  doc["x"] = pretty_print(c.x);
  doc["y"] = pretty_print(c.y);
  doc["z"] = pretty_print(c.z);
  doc["t_range"] = {c.t_lo, c.t_hi};
  doc["samples"] = c.samples;
  ordered_json constants = ordered_json::object();
  for (const auto& [name, value] : c.constants) constants[name] = value;
  doc["constants"] = constants;
  doc["tolerances"] = {{"epsilon", c.tol.epsilon},
                       {"jet_epsilon", c.tol.jet_epsilon},
                       {"quadrature", c.tol.quadrature},
                       {"constancy", c.tol.constancy},
                       {"linearity", c.tol.linearity}};
  return doc.dump(2) + "\n";
}

CurveSpec load_curve_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    raise(ErrorCode::Io, "cannot open curve spec '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad())
    raise(ErrorCode::Io, "failed to read curve spec '" + path.string() + "'");
  try {
    return curve_from_json(buffer.str());
  } catch (const Error& e) {
    std::string msg = path.string() + ": " + e.what();
    if (e.offset()) throw Error(e.code(), msg, *e.offset());
    throw Error(e.code(), msg);
  }
}

void save_curve_spec(const CurveSpec& c, const std::filesystem::path& path) {
  const std::string text = curve_to_json(c);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) raise(ErrorCode::Io, "cannot open '" + tmp.string() + "' for writing");
    out << text;
    out.flush();
    if (!out.good()) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      raise(ErrorCode::Io, "failed to write '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    raise(ErrorCode::Io, "failed to move '" + tmp.string() + "' into place");
  }
}

std::string admissibility_to_json(const AdmissibilityReport& report) {
  std::string out = "{\"ok\": ";
  out += report.ok ? "true" : "false";
  out += ", \"violations\": [";
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    if (i) out += ", ";
    out += "{\"t\": " + format_sig12(report.violations[i].t) + ", \"reason\": \"" +
           report.violations[i].reason + "\"}";
  }
  out += "]}";
  return out;
}

}  // namespace galicurve
