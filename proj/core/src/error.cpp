#include "ortholog/error.hpp"

namespace ortholog {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SpecFormat: return "SpecFormat";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::BadOrtho: return "BadOrtho";
    case ErrorKind::ParamTooLarge: return "ParamTooLarge";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::InvalidAntichain: return "InvalidAntichain";
    case ErrorKind::ExpansionTooLarge: return "ExpansionTooLarge";
    case ErrorKind::UniversalTooLarge: return "UniversalTooLarge";
    case ErrorKind::NotInCarrier: return "NotInCarrier";
    case ErrorKind::IsoFailure: return "IsoFailure";
    case ErrorKind::GroundTooLarge: return "GroundTooLarge";
    case ErrorKind::MismatchedInputs: return "MismatchedInputs";
    case ErrorKind::TargetInvariantFailure: return "TargetInvariantFailure";
    case ErrorKind::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

SyntaxError::SyntaxError(int line, int col, std::string expected)
    : Error(ErrorKind::SyntaxError,
            "line " + std::to_string(line) + ", col " + std::to_string(col) + ": expected " + expected),
      line_(line),
      col_(col),
      expected_(std::move(expected)) {}

}  // namespace ortholog
