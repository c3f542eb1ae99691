#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "galicurve/analysis.hpp"
#include "galicurve/curve_io.hpp"

using namespace galicurve;

namespace {

const char* kHelixJson = R"json({
  "geometry": "galilean",
  "x": "t",
  "y": "a*cos(t)",
  "z": "a*sin(t)",
  "t_range": [0, 6.283185307179586],
  "samples": 256,
  "constants": {"a": 2}
})json";

void expect_schema_error(const std::string& json, const std::string& needle) {
  try {
    curve_from_json(json);
    FAIL_CHECK("expected a schema error for: ", json);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Schema);
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("loads a valid spec") {
  const CurveSpec spec = curve_from_json(kHelixJson);
  CHECK(spec.geometry == Geometry::Galilean);
  CHECK(spec.t_lo == 0.0);
  CHECK(spec.t_hi == doctest::Approx(6.283185307179586));
  CHECK(spec.samples == 256);
  CHECK(spec.constants.at("a") == 2.0);
  CHECK(curvature(spec, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("schema violations name the offending field") {
  expect_schema_error(R"json({"geometry": "galilean", "x": "t", "y": "t",
                          "t_range": [0, 1]})json",
                      "\"z\"");
  expect_schema_error(R"json({"x": "t", "y": "t", "z": "0", "t_range": [0, 1]})json",
                      "\"geometry\"");
  expect_schema_error(R"json({"geometry": "euclidean", "x": "t", "y": "t", "z": "0",
                          "t_range": [0, 1]})json",
                      "geometry");
  expect_schema_error(R"json({"geometry": "galilean", "x": "t", "y": "t", "z": "0",
                          "t_range": [1, 0]})json",
                      "t_range");
  expect_schema_error(R"json({"geometry": "galilean", "x": "t", "y": "t", "z": "0",
                          "t_range": [0]})json",
                      "t_range");
  expect_schema_error(R"json({"geometry": "galilean", "x": "t", "y": "t", "z": "0",
                          "t_range": [0, 1], "samples": 4})json",
                      "samples");
  expect_schema_error(R"json({"geometry": "galilean", "x": "t", "y": "t", "z": "0",
                          "t_range": [0, 1], "constants": {"t": 3}})json",
                      "constants");
  expect_schema_error(R"json({"geometry": "galilean", "x": "t", "y": "t", "z": "0",
                          "t_range": [0, 1], "tolerances": {"epsilon": -1}})json",
                      "epsilon");
  expect_schema_error(R"json({"geometry": "galilean", "x": "t", "y": "t", "z": "0",
                          "t_range": [0, 1], "wavelength": 3})json",
                      "wavelength");
}

TEST_CASE("expression errors carry the coordinate and offset") {
  try {
    curve_from_json(R"json({"geometry": "galilean", "x": "t", "y": "2t", "z": "0",
                        "t_range": [0, 1]})json");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Syntax);
    CHECK(std::string(e.what()).find("\"y\"") != std::string::npos);
    REQUIRE(e.offset().has_value());
    CHECK(*e.offset() == 1);
  }
  try {
    curve_from_json(R"json({"geometry": "galilean", "x": "t", "y": "tanh(t)",
                        "z": "0", "t_range": [0, 1]})json");
    FAIL("expected an unknown-function error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFunction);
    CHECK(std::string(e.what()).find("tanh") != std::string::npos);
  }
}

TEST_CASE("malformed JSON is a syntax error") {
  try {
    curve_from_json("{ not json");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Syntax);
  }
}

TEST_CASE("round trip through text") {
  const CurveSpec spec = curve_from_json(kHelixJson);
  const std::string first = curve_to_json(spec);
  const CurveSpec reloaded = curve_from_json(first);
  CHECK(curve_to_json(reloaded) == first);  // serialization is a fixed point
  // identical evaluations, not just similar text
  for (int i = 0; i < 32; ++i) {
    const double t = 6.283185307179586 * i / 31.0;
    CHECK(eval_scalar(reloaded.y, t, reloaded.constants) ==
          eval_scalar(spec.y, t, spec.constants));
  }
  CHECK(reloaded.tol.epsilon == spec.tol.epsilon);
  CHECK(reloaded.samples == spec.samples);
}

TEST_CASE("tolerances are honored") {
  const CurveSpec spec = curve_from_json(R"json({
    "geometry": "galilean", "x": "t", "y": "t^2/2", "z": "0",
    "t_range": [0, 1],
    "tolerances": {"epsilon": 1e-8, "quadrature": 1e-9, "constancy": 1e-4}
  })json");
  CHECK(spec.tol.epsilon == 1e-8);
  CHECK(spec.tol.quadrature == 1e-9);
  CHECK(spec.tol.constancy == 1e-4);
  CHECK(spec.tol.linearity == 1e-7);  // default kept
}

TEST_CASE("file I/O") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "galicurve_io_test";
  fs::create_directories(dir);
  const fs::path path = dir / "helix.json";

  const CurveSpec spec = curve_from_json(kHelixJson);
  save_curve_spec(spec, path);
  CHECK(fs::exists(path));
  CHECK_FALSE(fs::exists(path.string() + ".tmp"));

  const CurveSpec loaded = load_curve_spec(path);
  CHECK(loaded.constants.at("a") == 2.0);

  try {
    load_curve_spec(dir / "missing.json");
    FAIL("expected an io error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
  fs::remove_all(dir);
}

TEST_CASE("admissibility report serialization") {
  AdmissibilityReport report;
  report.ok = false;
  report.violations.push_back({0.5, "x'(t) vanishes (|x'| <= epsilon)"});
  const std::string json = admissibility_to_json(report);
  CHECK(json.find("\"ok\": false") != std::string::npos);
  CHECK(json.find("0.5") != std::string::npos);
  CHECK(json.find("vanishes") != std::string::npos);
}
