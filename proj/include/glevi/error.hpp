#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glevi {

enum class ErrorKind {
  // input validation
  DimensionMismatch,
  ParseError,
  UnknownName,
  NotALieAlgebra,
  NotASubalgebra,
  NotAnIdeal,
  NotADerivation,
  NotCommuting,
  NotSemisimple,
  NotAGrading,
  NotGraded,
  NotInvariant,
  IoError,
  CertificateRejected,
  // unsupported scope
  IrrationalSpectrum,
  NonIntegerDegree,
  // internal assertions (a bug, or corrupted input)
  InconsistentCocycle,
  NoInnerRepresentative,
  PreconditionViolated,
  DepthCapExceeded,
  AssertionFailed,
};

std::string_view error_name(ErrorKind kind);

/// Process exit code for a failure of this kind: 1 input, 2 scope, 3 internal.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace glevi
