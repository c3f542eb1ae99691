#pragma once

#include <filesystem>
#include <string>

#include "galicurve/curve.hpp"

namespace galicurve {

// Curve-spec document: a JSON object with fields geometry, x, y, z, t_range,
// and optional samples, constants, tolerances. See docs/curve-format.md.
CurveSpec curve_from_json(const std::string& json_text);
std::string curve_to_json(const CurveSpec& c);

CurveSpec load_curve_spec(const std::filesystem::path& path);
// Writes atomically (temp file + rename); no partial file survives a failure.
void save_curve_spec(const CurveSpec& c, const std::filesystem::path& path);

std::string admissibility_to_json(const AdmissibilityReport& report);

}  // namespace galicurve
