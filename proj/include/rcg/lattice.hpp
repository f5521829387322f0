#pragma once

#include <optional>
#include <span>

#include "rcg/errors.hpp"
#include "rcg/matrix.hpp"

namespace rcg {

/// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal entries D(i,i), i < min(rows, cols).
  ZVec diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of m:
/// upper echelon, positive pivots, entries above a pivot reduced into [0, pivot).
/// Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Nondegenerate bilinear form <x, y> = x^T F y on the rational ambient space.
class PairingForm {
 public:
  explicit PairingForm(QMatrix matrix);
  static PairingForm standard(std::size_t n) { return PairingForm(QMatrix::identity(n)); }

  std::size_t dim() const { return matrix_.rows(); }
  const QMatrix& matrix() const { return matrix_; }
  Rational operator()(std::span<const Rational> x, std::span<const Rational> y) const;

 private:
  QMatrix matrix_;
};

/// Full-rank lattice in Q^n, stored by a basis (rows of a square matrix).
class Lattice {
 public:
  /// Rows of `basis` must be linearly independent and span Q^n.
  explicit Lattice(QMatrix basis);

  /// Lattice generated by an arbitrary (possibly dependent) spanning set of rows;
  /// the stored basis is the canonical one.
  static Lattice generated_by(const QMatrix& generators);
  static Lattice standard(std::size_t n) { return Lattice(QMatrix::identity(n)); }

  std::size_t dim() const { return basis_.rows(); }
  const QMatrix& basis() const { return basis_; }
  QVec basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  /// Coordinates of v in the basis when they are all integers.
  std::optional<ZVec> coordinates(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const { return coordinates(v).has_value(); }
  bool contains(const Lattice& other) const;

  /// Same lattice, basis replaced by the Hermite normal form of the scaled basis.
  Lattice canonical() const;

  /// Equality as sets (not as bases).
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim() == b.dim() && a.contains(b) && b.contains(a);
  }

 private:
  QMatrix basis_;
};

/// Integer matrix C with rows(sub.basis) = C * rows(sup.basis). Throws NotASublattice.
IntMatrix change_of_basis(const Lattice& sub, const Lattice& sup);

/// [sup : sub] = |det C|. Throws NotASublattice.
Integer quotient_index(const Lattice& sub, const Lattice& sup);

/// Invariant factors of sup/sub (SNF diagonal of the change of basis, 1's included).
ZVec quotient_invariants(const Lattice& sub, const Lattice& sup);

/// {y : <x, y> in Z for all x in L}, with canonical basis.
Lattice integral_dual(const Lattice& lattice, const PairingForm& form);

}  // namespace rcg
