#include "glevi/error.hpp"

namespace glevi {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::NotALieAlgebra: return "NotALieAlgebra";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NotAGrading: return "NotAGrading";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::CertificateRejected: return "CertificateRejected";
    case ErrorKind::IrrationalSpectrum: return "IrrationalSpectrum";
    case ErrorKind::NonIntegerDegree: return "NonIntegerDegree";
    case ErrorKind::InconsistentCocycle: return "InconsistentCocycle";
    case ErrorKind::NoInnerRepresentative: return "NoInnerRepresentative";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DepthCapExceeded: return "DepthCapExceeded";
    case ErrorKind::AssertionFailed: return "AssertionFailed";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IrrationalSpectrum:
    case ErrorKind::NonIntegerDegree:
      return 2;
    case ErrorKind::InconsistentCocycle:
    case ErrorKind::NoInnerRepresentative:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::DepthCapExceeded:
    case ErrorKind::AssertionFailed:
      return 3;
    default:
      return 1;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

}  // namespace glevi
