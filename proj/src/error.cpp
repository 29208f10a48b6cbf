#include "qcb/error.hpp"

namespace qcb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::NegativePower: return "NegativePower";
    case ErrorKind::NonIntegralPairing: return "NonIntegralPairing";
    case ErrorKind::MalformedWord: return "MalformedWord";
    case ErrorKind::StepLimitExceeded: return "StepLimitExceeded";
    case ErrorKind::NotInOmegaPlus: return "NotInOmegaPlus";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotOrthogonalTableau: return "NotOrthogonalTableau";
    case ErrorKind::IterationLimit: return "IterationLimit";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

bool is_internal(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InexactDivision:
    case ErrorKind::StepLimitExceeded:
    case ErrorKind::IterationLimit:
    case ErrorKind::InternalInvariant:
    case ErrorKind::NonIntegralPairing:
      return true;
    default:
      return false;
  }
}

}  // namespace qcb
