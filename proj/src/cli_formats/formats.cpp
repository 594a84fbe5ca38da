#include "glevi/formats.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include "json.hpp"

#include "glevi/error.hpp"

namespace glevi {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, (path.empty() ? std::string("<root>") : path) + ": " + what);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

// Two-space indentation; arrays holding only scalars stay on one line.
void dump_to(const json& j, std::string& out, std::size_t indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + json(it.key()).dump() + ": ";
      dump_to(it.value(), out, indent + 2);
    }
    out += "\n" + std::string(indent, ' ') + "}";
  } else if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
    if (flat) {
      out += j.dump(-1, ' ', false);
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      dump_to(j[i], out, indent + 2);
    }
    out += "\n" + std::string(indent, ' ') + "]";
  } else {
    out += j.dump();
  }
}

std::string dump(const json& j) {
  std::string out;
  dump_to(j, out, 0);
  return out + "\n";
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::size_t read_index(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(path, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

std::int64_t read_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

Rational read_rational(const json& v, const std::string& path, ParseLog* log) {
  if (v.is_number_integer()) {
    if (log) log->warnings.push_back(path + ": integer given as a number, expected a string");
    return Rational(v.get<long>());
  }
  if (!v.is_string()) fail(path, "expected a rational string \"p/q\"");
  const auto text = v.get<std::string>();
  bool canonical = true;
  Rational q;
  try {
    q = parse_rational(text, &canonical);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  if (!canonical && log) {
    log->warnings.push_back(path + ": \"" + text + "\" is not canonical, read as \"" + to_string(q) + "\"");
  }
  return q;
}

const json& array_at(const json& v, const std::string& path, std::optional<std::size_t> size = std::nullopt) {
  if (!v.is_array()) fail(path, "expected an array");
  if (size && v.size() != *size) {
    fail(path, "expected " + std::to_string(*size) + " entries, found " + std::to_string(v.size()));
  }
  return v;
}

Vector read_vector(const json& v, const std::string& path, std::size_t n, ParseLog* log) {
  array_at(v, path, n);
  Vector out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(read_rational(v[i], sub(path, i), log));
  return out;
}

Matrix read_matrix(const json& v, const std::string& path, std::size_t n, ParseLog* log) {
  array_at(v, path, n);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < n; ++r) rows.push_back(read_vector(v[r], sub(path, r), n, log));
  return Matrix::from_rows(rows, n);
}

Subspace read_basis(const json& v, const std::string& path, std::size_t n, ParseLog* log) {
  array_at(v, path);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < v.size(); ++r) rows.push_back(read_vector(v[r], sub(path, r), n, log));
  Subspace s = Subspace::span(n, rows);
  if (s.dim() != rows.size()) fail(path, "basis vectors are linearly dependent");
  return s;
}

bool read_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected true or false");
  return v.get<bool>();
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(const Subspace& s) {
  json out = json::array();
  for (const auto& v : s.basis_vectors()) out.push_back(to_json(v));
  return out;
}

Degree read_degree(const json& v, const std::string& path, std::size_t rank) {
  array_at(v, path, rank);
  Degree d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(read_int(v[i], sub(path, i)));
  return d;
}

template <class F>
auto rethrow_as_parse(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    throw Error(e.kind(), path + ": " + e.what());
  }
}

}  // namespace

// ---- algebra -------------------------------------------------------------

std::string write_algebra(const LieAlgebra& g) {
  std::map<std::pair<std::size_t, std::size_t>, json> grouped;
  for (const auto& t : g.structure()) {
    grouped[{t.i, t.j}].push_back(json{{"k", t.k}, {"c", to_string(t.c)}});
  }
  json brackets = json::array();
  for (auto& [ij, terms] : grouped) brackets.push_back(json{{"i", ij.first}, {"j", ij.second}, {"terms", terms}});
  return dump(json{{"dim", g.dim()}, {"names", g.names()}, {"brackets", brackets}});
}

LieAlgebra read_algebra(std::string_view text, ParseLog* log) {
  const json j = parse_text(text);
  const std::size_t n = read_index(field(j, "dim", ""), "dim");
  std::vector<std::string> names;
  if (j.contains("names")) {
    const auto& arr = array_at(j["names"], "names", n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!arr[i].is_string()) fail(sub("names", i), "expected a string");
      names.push_back(arr[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  }
  std::vector<StructureConstant> terms;
  const auto& brackets = array_at(field(j, "brackets", ""), "brackets");
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string path = sub("brackets", b);
    const std::size_t i = read_index(field(brackets[b], "i", path), sub(path, "i"));
    const std::size_t jj = read_index(field(brackets[b], "j", path), sub(path, "j"));
    if (!(i < jj)) fail(path, "requires i < j");
    if (jj >= n) fail(path, "index out of range for dim " + std::to_string(n));
    const auto& ts = array_at(field(brackets[b], "terms", path), sub(path, "terms"));
    for (std::size_t t = 0; t < ts.size(); ++t) {
      const std::string tp = sub(sub(path, "terms"), t);
      const std::size_t k = read_index(field(ts[t], "k", tp), sub(tp, "k"));
      if (k >= n) fail(sub(tp, "k"), "index out of range for dim " + std::to_string(n));
      terms.push_back({i, jj, k, read_rational(field(ts[t], "c", tp), sub(tp, "c"), log)});
    }
  }
  return LieAlgebra(std::move(names), terms);
}

// ---- grading and derivations ---------------------------------------------

std::string write_grading(const Grading& grading) {
  json j{{"rank", grading.rank()}};
  if (auto degrees = grading.basis_degrees()) {
    j["degrees"] = *degrees;
  } else {
    json comps = json::array();
    for (const auto& c : grading.components()) comps.push_back(json{{"degree", c.degree}, {"basis", to_json(c.space)}});
    j["components"] = comps;
  }
  return dump(j);
}

Grading read_grading(std::string_view text, std::size_t dim, ParseLog* log) {
  const json j = parse_text(text);
  const std::size_t rank = read_index(field(j, "rank", ""), "rank");
  if (j.contains("degrees") == j.contains("components")) fail("", "exactly one of \"degrees\" and \"components\" is required");
  if (j.contains("degrees")) {
    const auto& arr = array_at(j["degrees"], "degrees", dim);
    std::vector<Degree> degrees;
    for (std::size_t i = 0; i < dim; ++i) degrees.push_back(read_degree(arr[i], sub("degrees", i), rank));
    return rethrow_as_parse("degrees", [&] { return Grading::from_basis_degrees(rank, degrees); });
  }
  const auto& arr = array_at(j["components"], "components");
  std::vector<GradedComponent> comps;
  for (std::size_t c = 0; c < arr.size(); ++c) {
    const std::string path = sub("components", c);
    comps.push_back({read_degree(field(arr[c], "degree", path), sub(path, "degree"), rank),
                     read_basis(field(arr[c], "basis", path), sub(path, "basis"), dim, log)});
  }
  return rethrow_as_parse("components", [&] { return Grading(rank, std::move(comps)); });
}

std::string write_derivations(const DerivationFamily& family) {
  json matrices = json::array();
  for (const auto& m : family.matrices) matrices.push_back(to_json(m));
  return dump(json{{"matrices", matrices}, {"labels", family.labels}});
}

DerivationFamily read_derivations(std::string_view text, std::size_t dim, ParseLog* log) {
  const json j = parse_text(text);
  DerivationFamily family;
  const auto& arr = array_at(field(j, "matrices", ""), "matrices");
  for (std::size_t m = 0; m < arr.size(); ++m) family.matrices.push_back(read_matrix(arr[m], sub("matrices", m), dim, log));
  if (j.contains("labels")) {
    const auto& labels = array_at(j["labels"], "labels", arr.size());
    for (std::size_t m = 0; m < labels.size(); ++m) {
      if (!labels[m].is_string()) fail(sub("labels", m), "expected a string");
      family.labels.push_back(labels[m].get<std::string>());
    }
  } else {
    for (std::size_t m = 0; m < arr.size(); ++m) family.labels.push_back("D" + std::to_string(m));
  }
  return family;
}

// ---- certificate ---------------------------------------------------------

CertificateFile certificate_file(const LieAlgebra& g, const LeviCertificate& cert) {
  return {algebra_hash(g), family_hash(cert.family), cert.levi, cert.radical, cert.trace, cert.checks, cert.extension};
}

std::string write_certificate(const CertificateFile& cert) {
  json trace = json::array();
  for (const auto& step : cert.trace) {
    json s{{"case", std::string(case_name(step.label))}, {"dim", step.algebra_dim}, {"depth", step.depth}};
    if (step.ideal) s["ideal"] = to_json(*step.ideal);
    if (step.generic_h) s["generic_h"] = to_json(*step.generic_h);
    trace.push_back(s);
  }
  json checks = json::object();
  for (const auto& [name, ok] : cert.checks) checks[name] = ok;
  json j{{"algebra_sha256", cert.algebra_sha256},
         {"family_sha256", cert.family_sha256},
         {"levi_basis", to_json(cert.levi)},
         {"radical_basis", to_json(cert.radical)},
         {"trace", trace},
         {"checks", checks}};
  if (cert.extension) {
    j["extension"] = {{"levi_in_g", cert.extension->levi_in_g}, {"radical_restricts", cert.extension->radical_restricts}};
  }
  return dump(j);
}

CertificateFile read_certificate(std::string_view text, std::size_t dim, ParseLog* log) {
  const json j = parse_text(text);
  CertificateFile out;
  auto read_hash = [&](const char* key) {
    const json& v = field(j, key, "");
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
  };
  out.algebra_sha256 = read_hash("algebra_sha256");
  out.family_sha256 = read_hash("family_sha256");
  out.levi = read_basis(field(j, "levi_basis", ""), "levi_basis", dim, log);
  out.radical = read_basis(field(j, "radical_basis", ""), "radical_basis", dim, log);
  const auto& trace = array_at(field(j, "trace", ""), "trace");
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const std::string path = sub("trace", t);
    const json& name = field(trace[t], "case", path);
    if (!name.is_string()) fail(sub(path, "case"), "expected a string");
    const auto label = parse_case_name(name.get<std::string>());
    if (!label) fail(sub(path, "case"), "unknown case \"" + name.get<std::string>() + "\"");
    CaseStep step{*label, read_index(field(trace[t], "dim", path), sub(path, "dim")),
                  read_index(field(trace[t], "depth", path), sub(path, "depth")), std::nullopt, std::nullopt};
    if (trace[t].contains("ideal")) {
      step.ideal = read_basis(trace[t]["ideal"], sub(path, "ideal"), step.algebra_dim, log);
    }
    if (trace[t].contains("generic_h")) {
      step.generic_h = read_vector(trace[t]["generic_h"], sub(path, "generic_h"), step.algebra_dim, log);
    }
    out.trace.push_back(std::move(step));
  }
  const json& checks = field(j, "checks", "");
  if (!checks.is_object()) fail("checks", "expected an object");
  for (const char* name : {kCheckSubalgebra, kCheckKilling, kCheckRadical, kCheckDirectSum, kCheckInvariant}) {
    out.checks.emplace_back(name, read_bool(field(checks, name, "checks"), sub("checks", name)));
  }
  if (j.contains("extension")) {
    ExtensionFacts facts;
    facts.levi_in_g = read_bool(field(j["extension"], "levi_in_g", "extension"), "extension.levi_in_g");
    facts.radical_restricts =
        read_bool(field(j["extension"], "radical_restricts", "extension"), "extension.radical_restricts");
    out.extension = facts;
  }
  return out;
}

// ---- split ---------------------------------------------------------------

std::string write_split(const SplitResult& split) {
  json splits = json::array();
  for (const auto& s : split.splits) {
    splits.push_back(json{{"label", s.label}, {"H_l", to_json(s.h_levi)}, {"residual", to_json(s.residual)}});
  }
  return dump(json{{"splits", splits}});
}

SplitResult read_split(std::string_view text, std::size_t dim, ParseLog* log) {
  const json j = parse_text(text);
  SplitResult out;
  const auto& arr = array_at(field(j, "splits", ""), "splits");
  std::vector<Vector> parts;
  for (std::size_t s = 0; s < arr.size(); ++s) {
    const std::string path = sub("splits", s);
    const json& label = field(arr[s], "label", path);
    if (!label.is_string()) fail(sub(path, "label"), "expected a string");
    DerivationSplit d{label.get<std::string>(), read_vector(field(arr[s], "H_l", path), sub(path, "H_l"), dim, log),
                      read_matrix(field(arr[s], "residual", path), sub(path, "residual"), dim, log)};
    parts.push_back(d.h_levi);
    out.splits.push_back(std::move(d));
  }
  out.inner_span = Subspace::span(dim, parts);
  return out;
}

std::string write_radical(const Subspace& radical) {
  return dump(json{{"dim", radical.dim()}, {"radical_basis", to_json(radical)}});
}

// ---- hashing -------------------------------------------------------------

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::AssertionFailed, "SHA-256 failed");
  }
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

std::string algebra_hash(const LieAlgebra& g) { return sha256_hex(write_algebra(g)); }

std::string family_hash(const DerivationFamily& family) { return sha256_hex(write_derivations(family)); }

}  // namespace glevi
