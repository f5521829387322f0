#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rcg/highest_weight.hpp"
#include "rcg/lattice.hpp"
#include "rcg/shimura.hpp"

namespace rcg {

/// Dual side of the C-group: the torus of (G^ x GL1) / <(e, -1)>, e = chi(-1).
/// Ambient coordinates are (X(T^), k) for characters and (Y(T^), k) for cocharacters.
struct CGroupDatum {
  RootDatum dual_datum;
  WeightVector chi;  // cocharacter of T^
  std::int64_t d = 0;
  Lattice char_lattice = Lattice::standard(1);    // {(l, k) : <l, chi> + k even}
  Lattice cochar_lattice = Lattice::standard(1);  // (Y(T^) + Z) + Z (chi, 1)/2
  std::vector<Coords> quotient_roots;
  std::vector<Coords> quotient_coroots;

  // Isogeny checks, recorded for reports.
  Integer char_index;
  Integer cochar_index;
  Integer kernel_order;
  bool kernel_generator_ok = false;  // kernel generated by (e, -1)
  bool e_trivial = false;            // chi(-1) = 1 in T^

  std::size_t ambient_dim() const { return dual_datum.rank + 1; }
  PairingForm pairing() const;
};

/// Throws IsogenyCheckFailed when an internal consistency check fails.
CGroupDatum build_c_group(const ShimuraData& s, const Limits& limits = {});

struct DescentEntry {
  bool preserves_char = false;
  bool preserves_cochar = false;
  bool fixes_chi = false;
  bool ok() const { return preserves_char && preserves_cochar && fixes_chi; }
};

struct DescentReport {
  std::vector<DescentEntry> entries;
  bool passed() const;
};

/// Each automorphism of X(T^), extended by the identity on the GL1 slot, must
/// preserve both quotient lattices and fix chi.
DescentReport galois_descent_check(const CGroupDatum& c, const std::vector<SmallMatrix>& autos);

/// r_C: weights (l, -d), with integral coordinates in the char_lattice basis.
struct QuotientCharacter {
  FormalCharacter character;
  std::map<Coords, ZVec> basis_coordinates;
};

/// Throws WeightNotInQuotientLattice (which would mean e does not act by (-1)^d).
QuotientCharacter build_rC(const CGroupDatum& c, const FormalCharacter& rL);

}  // namespace rcg
