#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rcg/errors.hpp"
#include "rcg/matrix.hpp"

namespace rcg {

using Coords = std::vector<std::int64_t>;

enum class Side { character, cocharacter };

inline Side opposite(Side s) { return s == Side::character ? Side::cocharacter : Side::character; }
const char* to_string(Side s);

/// Integer vector tagged with the lattice it lives in.
struct WeightVector {
  Side side = Side::character;
  Coords coords;

  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

/// Enumeration caps; exceeding them turns pathological input into errors.
struct Limits {
  std::size_t closure_bound = 100000;
  std::size_t weyl_cap = 1000000;
};

/// Based root datum (X, roots, Y, coroots) with X = Y = Z^rank, an integral
/// pairing <x, y> = x^T F y, a simple system and pinned automorphisms of X.
struct RootDatum {
  std::string name;
  std::size_t rank = 0;
  std::vector<Coords> roots;
  std::vector<Coords> coroots;
  std::vector<std::size_t> simple;
  std::vector<SmallMatrix> automorphisms;  // act on column vectors of X
  SmallMatrix pairing;                     // empty means the dot product

  std::int64_t pair(const Coords& x, const Coords& y) const;

  friend bool operator==(const RootDatum&, const RootDatum&) = default;
};

/// Rank-n datum with no roots.
RootDatum torus_datum(std::string name, std::size_t rank);

struct ValidationCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool passed() const;
  /// First failing check, formatted; empty when everything passed.
  std::string first_failure() const;
};

ValidationReport validate(const RootDatum& d);

/// Throws InvalidDatum carrying the first failure.
void require_valid(const RootDatum& d);

/// Swaps roots and coroots; automorphisms become their pairing-contragredients.
RootDatum dual(const RootDatum& d);

/// Matrix B on Y with <A x, B y> = <x, y>. Throws InvalidDatum if not integral.
SmallMatrix contragredient(const RootDatum& d, const SmallMatrix& a);

SmallMatrix pairing_matrix(const RootDatum& d);

struct PositiveRoot {
  std::size_t index;        // into d.roots
  Coords simple_coeffs;     // root = sum coeffs[i] * roots[simple[i]]
  std::int64_t height() const;
};

/// Positive system generated from the simple roots by reflection closure,
/// ordered by height then by index. Throws NonTerminating past limits.closure_bound.
std::vector<PositiveRoot> positive_system(const RootDatum& d, const Limits& limits = {});
std::vector<WeightVector> positive_closure(const RootDatum& d, const Limits& limits = {});

/// s_i(x) = x - <x, a_i^v> a_i on X, or y - <a_i, y> a_i^v on Y.
Coords reflect(const RootDatum& d, std::size_t simple_index, Side side, const Coords& v);

/// Sorted orbit under the simple reflections. Throws GroupTooLarge past limits.weyl_cap.
std::vector<WeightVector> weyl_orbit(const RootDatum& d, const WeightVector& w, const Limits& limits = {});

/// All Weyl group elements as matrices acting on the given side.
std::vector<SmallMatrix> weyl_group(const RootDatum& d, Side side, const Limits& limits = {});

/// chi = sum of positive roots, on the character side.
WeightVector sum_positive_roots(const RootDatum& d, const Limits& limits = {});

bool is_dominant(const RootDatum& d, const WeightVector& w);
bool is_antidominant(const RootDatum& d, const WeightVector& w);
/// Unique dominant (resp. antidominant) Weyl conjugate, by repeated simple reflections.
WeightVector dominant_conjugate(const RootDatum& d, const WeightVector& w);
WeightVector antidominant_conjugate(const RootDatum& d, const WeightVector& w);

Coords apply_matrix(const SmallMatrix& a, const Coords& v);

}  // namespace rcg
