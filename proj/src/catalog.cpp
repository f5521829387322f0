#include "rcg/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace rcg {

// Generated from catalog/*.datum at configure time.
std::vector<std::pair<std::string, std::string>> builtin_catalog_sources();

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw ParseError(source + ": " + where + ": " + what);
}

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::int64_t as_int(const json& j, const std::string& source, const std::string& where) {
  if (!j.is_number_integer()) fail(source, where, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    fail(source, where, "integer out of range");
  return j.get<std::int64_t>();
}

Coords as_vector(const json& j, std::size_t len, const std::string& source, const std::string& where) {
  if (!j.is_array()) fail(source, where, "expected an array of integers");
  if (j.size() != len) fail(source, where, "expected length " + std::to_string(len) + ", got " + std::to_string(j.size()));
  Coords v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(as_int(j[i], source, where + "[" + std::to_string(i) + "]"));
  return v;
}

std::vector<Coords> as_vectors(const json& j, std::size_t len, const std::string& source, const std::string& where) {
  if (!j.is_array()) fail(source, where, "expected an array of vectors");
  std::vector<Coords> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_vector(j[i], len, source, where + "[" + std::to_string(i) + "]"));
  return out;
}

SmallMatrix as_matrix(const json& j, std::size_t n, const std::string& source, const std::string& where) {
  if (!j.is_array()) fail(source, where, "expected a matrix (array of rows)");
  if (j.size() != n) fail(source, where, "matrix must be square of size rank = " + std::to_string(n));
  SmallMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != n) fail(source, row_where, "matrix must be square of size rank = " + std::to_string(n));
    for (std::size_t k = 0; k < n; ++k) m(i, k) = as_int(j[i][k], source, row_where + "[" + std::to_string(k) + "]");
  }
  return m;
}

json matrix_json(const SmallMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
  return rows;
}

}  // namespace

DatumFile parse_datum(std::string_view text, const std::string& source) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(source, line_col(text, e.byte), "malformed JSON");
  }
  if (!j.is_object()) fail(source, "top level", "expected a JSON object");

  static const std::set<std::string> known{"name", "rank", "roots", "coroots", "simple", "mu", "galois", "pairing", "comments"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) fail(source, key, "unknown field");
  for (const char* required : {"name", "rank", "roots", "coroots", "simple", "mu"})
    if (!j.contains(required)) fail(source, required, "missing required field");

  DatumFile f;
  f.source = source;
  if (!j["name"].is_string()) fail(source, "name", "expected a string");
  f.name = j["name"].get<std::string>();
  auto rank = as_int(j["rank"], source, "rank");
  if (rank <= 0) fail(source, "rank", "must be positive");
  f.rank = static_cast<std::size_t>(rank);
  f.roots = as_vectors(j["roots"], f.rank, source, "roots");
  f.coroots = as_vectors(j["coroots"], f.rank, source, "coroots");
  if (!j["simple"].is_array()) fail(source, "simple", "expected an array of indices");
  for (std::size_t i = 0; i < j["simple"].size(); ++i) {
    auto idx = as_int(j["simple"][i], source, "simple[" + std::to_string(i) + "]");
    if (idx < 0) fail(source, "simple[" + std::to_string(i) + "]", "index must be nonnegative");
    f.simple.push_back(static_cast<std::size_t>(idx));
  }
  f.mu = as_vector(j["mu"], f.rank, source, "mu");
  if (j.contains("galois")) {
    if (!j["galois"].is_array()) fail(source, "galois", "expected an array of matrices");
    for (std::size_t i = 0; i < j["galois"].size(); ++i)
      f.galois.push_back(as_matrix(j["galois"][i], f.rank, source, "galois[" + std::to_string(i) + "]"));
  }
  if (j.contains("pairing")) f.pairing = as_matrix(j["pairing"], f.rank, source, "pairing");
  if (j.contains("comments")) {
    if (!j["comments"].is_string()) fail(source, "comments", "expected a string");
    f.comments = j["comments"].get<std::string>();
  }
  return f;
}

DatumFile read_datum_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_datum(buf.str(), path.string());
}

RootDatum to_root_datum(const DatumFile& file) {
  RootDatum d;
  d.name = file.name;
  d.rank = file.rank;
  d.roots = file.roots;
  d.coroots = file.coroots;
  d.simple = file.simple;
  d.automorphisms = file.galois;
  d.pairing = file.pairing;
  return d;
}

nlohmann::ordered_json datum_to_json(const RootDatum& d) {
  nlohmann::ordered_json j;
  j["name"] = d.name;
  j["rank"] = d.rank;
  j["roots"] = d.roots;
  j["coroots"] = d.coroots;
  j["simple"] = d.simple;
  if (!d.automorphisms.empty()) {
    json autos = json::array();
    for (const auto& a : d.automorphisms) autos.push_back(matrix_json(a));
    j["galois"] = autos;
  }
  if (d.pairing.rows() != 0) j["pairing"] = matrix_json(d.pairing);
  return j;
}

LoadedEntry load_entry(const DatumFile& file) {
  RootDatum datum = to_root_datum(file);
  auto report = validate(datum);
  if (!report.passed()) throw InvalidDatum(file.source + ": " + report.first_failure());
  ShimuraData s = normalize_mu(datum, {Side::cocharacter, file.mu});
  return {file, std::move(datum), std::move(s)};
}

LoadedEntry load_datum(const std::filesystem::path& path) { return load_entry(read_datum_file(path)); }

std::vector<DatumFile> builtin_catalog() {
  std::vector<DatumFile> out;
  for (const auto& [name, text] : builtin_catalog_sources()) out.push_back(parse_datum(text, "builtin:" + name));
  return out;
}

std::vector<DatumFile> load_catalog_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw ParseError(dir.string() + ": not a directory");
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".datum") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  std::vector<DatumFile> out;
  for (const auto& p : paths) out.push_back(read_datum_file(p));
  return out;
}

}  // namespace rcg
