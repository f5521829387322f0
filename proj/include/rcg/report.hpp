#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rcg/catalog.hpp"
#include "rcg/cgroup.hpp"
#include "rcg/parameters.hpp"

namespace rcg {

const char* tool_version();

/// Outcome of every check for one catalog entry.
struct EntryReport {
  std::string name;
  std::string source;
  std::string error_kind;  // empty when the entry loaded and ran
  std::string error;

  ValidationReport validation;
  std::vector<std::int64_t> mu;
  std::int64_t d = 0;
  bool degenerate = false;

  // Representation V_mu.
  std::int64_t dim_v_mu = 0;
  Integer weyl_dim;
  bool weyl_invariant = false;
  bool single_orbit_multiplicity_one = false;

  LemmaReport lemma;
  bool parity_all_weights = false;  // <l, chi> = d mod 2 for every weight
  bool rC_built = false;            // every (l, -d) lies in char_lattice

  // C-group.
  Integer char_index;
  Integer cochar_index;
  Integer kernel_order;
  bool kernel_generator_ok = false;
  bool e_trivial = false;
  std::vector<Coords> chi;
  QMatrix char_basis;
  QMatrix cochar_basis;

  DescentReport descent;
  std::vector<bool> fixes_mu_orbit;  // per automorphism; informational

  TrialSummary corollary;

  bool lemma1_part1() const;
  bool lemma1_part2() const;
  bool dimensions_ok() const;
  bool cgroup_ok() const;
  bool passed() const;
};

struct Report {
  std::string version;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<EntryReport> entries;
  std::optional<double> seconds;

  bool passed() const;
};

/// One entry; every failure (including load errors) is recorded, never thrown.
EntryReport verify_entry(const DatumFile& file, std::uint64_t seed, std::size_t trials, bool parallel_trials = false);

/// Serial reference.
Report run_full_verification_serial(const std::vector<DatumFile>& entries, std::uint64_t seed, std::size_t trials);
/// Entries verified in parallel (OpenMP), merged in name order; identical to the serial report.
Report run_full_verification(const std::vector<DatumFile>& entries, std::uint64_t seed, std::size_t trials);

std::string format_rational(const Rational& q);
nlohmann::ordered_json to_json(const TrialSummary& s, bool transcripts);
nlohmann::ordered_json to_json(const Report& r, bool transcripts = false);
std::string to_text(const Report& r);

}  // namespace rcg
