#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rcg/root_datum.hpp"

namespace rcg {

/// Finite multiset of weights: weight -> multiplicity (always >= 1).
struct FormalCharacter {
  std::string datum_name;
  Side side = Side::character;
  std::map<Coords, std::int64_t> entries;

  std::int64_t dimension() const;
  std::int64_t multiplicity(const Coords& w) const;

  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;
};

/// Character of the irreducible representation with the given extreme weight,
/// by Freudenthal's recursion from the dominant conjugate.
FormalCharacter irreducible_character(const RootDatum& g, const WeightVector& extreme, const Limits& limits = {});

/// Weyl dimension formula, exact. Throws NotDominant.
Integer weyl_dimension(const RootDatum& g, const WeightVector& highest, const Limits& limits = {});

/// Sign by which c(-1) acts, c a cocharacter of g pairing evenly with every root.
/// Throws NotCentral or NotScalar.
int central_scalar(const RootDatum& g, const FormalCharacter& ch, const WeightVector& c);

bool is_weyl_invariant(const RootDatum& g, const FormalCharacter& ch);

/// Image of the weight multiset under an automorphism of X(g).
FormalCharacter transform(const FormalCharacter& ch, const SmallMatrix& a);

}  // namespace rcg
