#pragma once

#include <cstdint>

#include "rcg/highest_weight.hpp"
#include "rcg/root_datum.hpp"

namespace rcg {

/// Root datum of G plus the antidominant Shimura cocharacter mu and d.
struct ShimuraData {
  RootDatum datum;
  WeightVector mu;  // cocharacter side
  std::int64_t d = 0;

  /// mu = 0: every formula still holds, but no actual Shimura datum has it.
  bool degenerate() const;
};

/// Replaces mu_in by its antidominant Weyl conjugate and checks that every
/// positive root pairs with it in {0, -1}. Throws AxiomViolation.
ShimuraData normalize_mu(const RootDatum& datum, const WeightVector& mu_in, const Limits& limits = {});

/// #{a > 0 : <a, mu> = -1}, recounted from the positive system.
std::int64_t dimension_d(const ShimuraData& s, const Limits& limits = {});

struct LemmaReport {
  std::int64_t pairing = 0;  // <chi, mu>
  std::int64_t d = 0;
  int scalar = 1;            // sign by which e = chi(-1) acts on V_mu
  int expected_scalar = 1;   // (-1)^d
  std::int64_t dim_v_mu = 0;
  bool degenerate = false;

  bool pairing_ok() const { return pairing == -d; }
  bool scalar_ok() const { return scalar == expected_scalar; }
  bool passed() const { return pairing_ok() && scalar_ok(); }
};

/// <chi, mu> = -d, and e acts on V_mu by (-1)^d.
LemmaReport verify_lemma1(const ShimuraData& s, const Limits& limits = {});

/// The representation of the dual group with extreme weight mu (same coordinates).
FormalCharacter v_mu_character(const ShimuraData& s, const Limits& limits = {});

}  // namespace rcg
