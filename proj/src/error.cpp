#include "galicurve/error.hpp"

namespace galicurve {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io: return "io";
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::Schema: return "schema";
    case ErrorCode::UnknownFunction: return "unknown-function";
    case ErrorCode::UnboundConstant: return "unbound-constant";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::NonInvertible: return "non-invertible";
    case ErrorCode::NotAdmissible: return "not-admissible";
    case ErrorCode::InflectionPoint: return "inflection-point";
    case ErrorCode::IsotropicNormal: return "isotropic-normal";
    case ErrorCode::VanishingTorsion: return "vanishing-torsion";
    case ErrorCode::MaxDepth: return "max-depth";
    case ErrorCode::TooFewPoints: return "too-few-points";
    case ErrorCode::InvalidArgument: return "invalid-argument";
  }
  return "?";
}

}  // namespace galicurve
