#include "glevi/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "glevi/catalog.hpp"
#include "glevi/error.hpp"
#include "glevi/formats.hpp"

namespace glevi {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream outf(path, std::ios::binary);
  if (!outf || !(outf << text)) throw Error(ErrorKind::IoError, "cannot write " + path);
}

// Rethrows with the file name in front of the message.
template <class F>
auto in_file(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

void print_warnings(const std::string& path, const ParseLog& log, std::ostream& err) {
  for (const auto& w : log.warnings) err << "warning: " << path << ": " << w << "\n";
}

std::string display_case(CaseLabel label) {
  switch (label) {
    case CaseLabel::Semisimple: return "Semisimple";
    case CaseLabel::Case1: return "Case 1";
    case CaseLabel::Case2a: return "Case 2a";
    case CaseLabel::Case2b: return "Case 2b";
    case CaseLabel::Extend: return "Extend";
  }
  return "?";
}

struct Loaded {
  LieAlgebra algebra;
  std::string algebra_sha256;
  std::optional<Grading> grading;
  DerivationFamily family;
  std::string family_source = "none";
};

struct InputPaths {
  std::string algebra;
  std::string grading;
  std::string derivations;
};

Loaded load(const InputPaths& paths, std::ostream& err) {
  Loaded in;
  ParseLog log;
  in.algebra = in_file(paths.algebra, [&] { return read_algebra(read_file(paths.algebra), &log); });
  print_warnings(paths.algebra, log, err);
  in_file(paths.algebra, [&] { validate(in.algebra); });
  in.algebra_sha256 = algebra_hash(in.algebra);
  const std::size_t n = in.algebra.dim();
  log.warnings.clear();
  if (!paths.grading.empty()) {
    in.grading = in_file(paths.grading, [&] { return read_grading(read_file(paths.grading), n, &log); });
    print_warnings(paths.grading, log, err);
    in_file(paths.grading, [&] {
      validate_grading(in.algebra, *in.grading);
      in.family = grading_to_derivations(in.algebra, *in.grading);
    });
    in.family_source = paths.grading;
  } else if (!paths.derivations.empty()) {
    in.family = in_file(paths.derivations, [&] { return read_derivations(read_file(paths.derivations), n, &log); });
    print_warnings(paths.derivations, log, err);
    in.family_source = paths.derivations;
  }
  return in;
}

void report_inputs(const InputPaths& paths, const Loaded& in, std::ostream& err) {
  err << "algebra   " << paths.algebra << "  dim " << in.algebra.dim() << "  sha256 " << in.algebra_sha256 << "\n";
  err << "family    " << in.family.size() << " derivation(s) from " << in.family_source << "\n";
}

void report_checks(const std::vector<std::pair<std::string, bool>>& checks, std::ostream& err) {
  err << "checks\n";
  for (const auto& [name, ok] : checks) err << "  " << std::left << std::setw(24) << name << (ok ? "pass" : "FAIL") << "\n";
}

void report_components(const char* what, const std::vector<GradedComponent>& comps, std::ostream& err) {
  err << what;
  for (const auto& c : comps) err << "  " << to_string(c.degree) << ":" << c.space.dim();
  err << "\n";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

LeviCertificate from_file(const CertificateFile& file, const DerivationFamily& family) {
  LeviCertificate cert;
  cert.levi = file.levi;
  cert.radical = file.radical;
  cert.family = family;
  cert.trace = file.trace;
  cert.extension = file.extension;
  return cert;
}

int run_validate(const InputPaths& paths, std::ostream& out, std::ostream& err) {
  const Loaded in = load(paths, err);
  out << "ok: Lie algebra of dimension " << in.algebra.dim() << "\n";
  return 0;
}

int run_radical(const InputPaths& paths, std::ostream& out, std::ostream& err) {
  const Loaded in = load(paths, err);
  const Subspace r = radical(in.algebra);
  err << "radical dim " << r.dim() << " of " << in.algebra.dim()
      << (is_nilpotent_algebra(in.algebra, r) ? " (nilpotent)" : "") << "\n";
  out << write_radical(r);
  return 0;
}

int run_levi(const InputPaths& paths, const std::string& cert_path, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Loaded in = load(paths, err);
  report_inputs(paths, in, err);

  LeviCertificate cert;
  if (in.grading) {
    GradedLevi graded = graded_levi(in.algebra, *in.grading);
    cert = std::move(graded.certificate);
    report_components("levi components   ", graded.levi_components, err);
    report_components("radical components", graded.radical_components, err);
  } else {
    cert = invariant_levi(in.algebra, in.family);
  }

  err << "trace\n";
  for (const auto& step : cert.trace) {
    err << "  " << std::string(2 * step.depth, ' ') << display_case(step.label) << "  dim " << step.algebra_dim;
    if (step.ideal) err << "  ideal dim " << step.ideal->dim();
    if (step.generic_h) err << "  H = " << to_string(*step.generic_h);
    err << "\n";
  }
  err << "levi dim " << cert.levi.dim() << ", radical dim " << cert.radical.dim() << "\n";
  report_checks(cert.checks, err);
  if (!cert.all_checks_pass()) throw Error(ErrorKind::AssertionFailed, "computed certificate fails verification");

  const std::string text = write_certificate(certificate_file(in.algebra, cert));
  // Re-read what is about to be emitted and verify it from scratch.
  const CertificateFile reread = read_certificate(text, in.algebra.dim());
  if (!verify_certificate(in.algebra, from_file(reread, in.family)).ok()) {
    throw Error(ErrorKind::AssertionFailed, "emitted certificate does not re-verify");
  }
  if (cert_path.empty()) {
    out << text;
  } else {
    write_file(cert_path, text);
    err << "certificate written to " << cert_path << "\n";
  }
  err << "elapsed " << std::fixed << std::setprecision(3) << seconds_since(start) << " s\n";
  return 0;
}

int run_verify(const InputPaths& paths, const std::string& cert_path, std::ostream& out, std::ostream& err) {
  const Loaded in = load(paths, err);
  ParseLog log;
  const CertificateFile file =
      in_file(cert_path, [&] { return read_certificate(read_file(cert_path), in.algebra.dim(), &log); });
  print_warnings(cert_path, log, err);
  if (file.algebra_sha256 != in.algebra_sha256) {
    throw Error(ErrorKind::CertificateRejected, "certificate was issued for a different algebra (sha256 " +
                                                    file.algebra_sha256 + ", input " + in.algebra_sha256 + ")");
  }
  const std::string fam = family_hash(in.family);
  if (file.family_sha256 != fam) {
    throw Error(ErrorKind::CertificateRejected, "certificate was issued for a different derivation family (sha256 " +
                                                    file.family_sha256 + ", input " + fam + ")");
  }
  const VerificationReport report = verify_certificate(in.algebra, from_file(file, in.family));
  for (const auto& [name, ok] : report.checks) {
    out << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    for (const auto& [stored, stored_ok] : file.checks) {
      if (stored == name && stored_ok != ok) err << "warning: stored result for " << name << " disagrees\n";
    }
  }
  if (!report.ok()) throw Error(ErrorKind::CertificateRejected, "certificate fails verification");
  out << "ok\n";
  return 0;
}

int run_split(const InputPaths& paths, std::ostream& out, std::ostream& err) {
  if (paths.grading.empty() && paths.derivations.empty()) {
    throw Error(ErrorKind::ParseError, "split needs --grading or --derivations");
  }
  const Loaded in = load(paths, err);
  report_inputs(paths, in, err);
  const LeviCertificate cert = invariant_levi(in.algebra, in.family);
  if (!cert.all_checks_pass()) throw Error(ErrorKind::AssertionFailed, "computed certificate fails verification");
  const SplitResult split = split_family(in.algebra, cert);
  for (const auto& s : split.splits) {
    err << "  " << s.label << ": H_l = " << to_string(s.h_levi) << (s.residual.is_zero() ? ", inner" : ", outer part")
        << "\n";
  }
  err << "inner span dim " << split.inner_span.dim() << ", all commutators vanish\n";
  out << write_split(split);
  return 0;
}

int run_catalog_list(std::ostream& out) {
  for (const auto& name : catalog_list()) out << name << "\n";
  return 0;
}

int run_catalog_emit(const std::string& name, const std::string& dir, std::ostream& out) {
  const CatalogEntry entry = catalog_get(name);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + dir + ": " + ec.message());
  auto emit = [&](const std::string& file, const std::string& text) {
    const std::string path = (std::filesystem::path(dir) / file).string();
    write_file(path, text);
    out << path << "\n";
  };
  emit(name + ".json", write_algebra(entry.algebra));
  for (std::size_t i = 0; i < entry.gradings.size(); ++i) {
    emit(name + "_grading" + std::to_string(i) + ".json", write_grading(entry.gradings[i]));
  }
  for (std::size_t i = 0; i < entry.derivations.size(); ++i) {
    emit(name + "_derivations" + std::to_string(i) + ".json", write_derivations(entry.derivations[i]));
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Levi decompositions compatible with gradings and semisimple derivations", "glevi"};
  app.require_subcommand(1);

  InputPaths paths;
  std::string cert_path;
  std::string name;
  std::string dir = ".";

  auto add_family = [&](CLI::App* cmd) {
    auto* g = cmd->add_option("--grading", paths.grading, "grading file");
    auto* d = cmd->add_option("--derivations", paths.derivations, "derivation family file");
    g->excludes(d);
    d->excludes(g);
  };

  auto* validate_cmd = app.add_subcommand("validate", "check the Jacobi identity");
  validate_cmd->add_option("algebra", paths.algebra, "algebra file")->required();

  auto* radical_cmd = app.add_subcommand("radical", "print a basis of the radical");
  radical_cmd->add_option("algebra", paths.algebra, "algebra file")->required();

  auto* levi_cmd = app.add_subcommand("levi", "invariant Levi decomposition with certificate");
  levi_cmd->add_option("algebra", paths.algebra, "algebra file")->required();
  add_family(levi_cmd);
  levi_cmd->add_option("--certificate", cert_path, "write the certificate here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "recheck a certificate");
  verify_cmd->add_option("algebra", paths.algebra, "algebra file")->required();
  verify_cmd->add_option("certificate", cert_path, "certificate file")->required();
  add_family(verify_cmd);

  auto* split_cmd = app.add_subcommand("split", "split derivations into inner and residual parts");
  split_cmd->add_option("algebra", paths.algebra, "algebra file")->required();
  add_family(split_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "built-in examples");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list entry names");
  auto* emit_cmd = catalog_cmd->add_subcommand("emit", "write algebra, grading and derivation files");
  emit_cmd->add_option("name", name, "entry name")->required();
  emit_cmd->add_option("--out", dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate_cmd) return run_validate(paths, out, err);
    if (*radical_cmd) return run_radical(paths, out, err);
    if (*levi_cmd) return run_levi(paths, cert_path, out, err);
    if (*verify_cmd) return run_verify(paths, cert_path, out, err);
    if (*split_cmd) return run_split(paths, out, err);
    if (*list_cmd) return run_catalog_list(out);
    if (*emit_cmd) return run_catalog_emit(name, dir, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

}  // namespace glevi
