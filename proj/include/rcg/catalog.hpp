#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rcg/root_datum.hpp"
#include "rcg/shimura.hpp"

namespace rcg {

/// Datum file (JSON). Only integers are accepted anywhere in the numeric fields.
struct DatumFile {
  std::string name;
  std::size_t rank = 0;
  std::vector<Coords> roots;
  std::vector<Coords> coroots;
  std::vector<std::size_t> simple;
  Coords mu;
  std::vector<SmallMatrix> galois;
  SmallMatrix pairing;  // optional; empty means the dot product
  std::string comments;
  std::string source;  // path or "builtin:<file>", not part of the format
};

/// Throws ParseError with a line:column or field-path diagnostic.
DatumFile parse_datum(std::string_view text, const std::string& source);
DatumFile read_datum_file(const std::filesystem::path& path);

RootDatum to_root_datum(const DatumFile& file);
nlohmann::ordered_json datum_to_json(const RootDatum& d);

struct LoadedEntry {
  DatumFile file;
  RootDatum datum;
  ShimuraData shimura;
};

/// Validated datum plus normalized Shimura data. Throws ParseError,
/// InvalidDatum or AxiomViolation.
LoadedEntry load_entry(const DatumFile& file);
LoadedEntry load_datum(const std::filesystem::path& path);

/// Catalog compiled into the binary from the repository's catalog/ directory.
std::vector<DatumFile> builtin_catalog();

/// Every *.datum file in dir, sorted by file name.
std::vector<DatumFile> load_catalog_dir(const std::filesystem::path& dir);

/// Name of the environment variable that overrides the catalog directory.
inline constexpr const char* kCatalogEnv = "RCGROUP_CATALOG_DIR";

}  // namespace rcg
