#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glevi/derivation_split.hpp"
#include "glevi/levi.hpp"

namespace glevi {

/// Collects notes about accepted but non-canonical input, e.g. "2/4".
struct ParseLog {
  std::vector<std::string> warnings;
};

// All writers emit sorted keys, two-space indentation, "p/q" rationals and a
// trailing newline. Readers throw ErrorKind::ParseError naming the field.

std::string write_algebra(const LieAlgebra& g);
LieAlgebra read_algebra(std::string_view text, ParseLog* log = nullptr);

std::string write_grading(const Grading& grading);
Grading read_grading(std::string_view text, std::size_t dim, ParseLog* log = nullptr);

std::string write_derivations(const DerivationFamily& family);
DerivationFamily read_derivations(std::string_view text, std::size_t dim, ParseLog* log = nullptr);

/// Certificate as stored on disk: the decomposition, the trace and the check
/// results, bound to its inputs by content hashes.
struct CertificateFile {
  std::string algebra_sha256;
  std::string family_sha256;
  Subspace levi;
  Subspace radical;
  std::vector<CaseStep> trace;
  std::vector<std::pair<std::string, bool>> checks;
  std::optional<ExtensionFacts> extension;
};

CertificateFile certificate_file(const LieAlgebra& g, const LeviCertificate& cert);
std::string write_certificate(const CertificateFile& cert);
CertificateFile read_certificate(std::string_view text, std::size_t dim, ParseLog* log = nullptr);

std::string write_split(const SplitResult& split);
SplitResult read_split(std::string_view text, std::size_t dim, ParseLog* log = nullptr);

/// { "dim": k, "radical_basis": [...] }
std::string write_radical(const Subspace& radical);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);
/// Hash of the canonical serialisation, so formatting of the source file does not matter.
std::string algebra_hash(const LieAlgebra& g);
std::string family_hash(const DerivationFamily& family);

}  // namespace glevi
