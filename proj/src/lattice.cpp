#include "rcg/lattice.hpp"

#include <algorithm>

namespace rcg {

namespace {

bool is_zero_below_and_right(const IntMatrix& d, std::size_t t) {
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j)
      if (d(i, j) != 0) return false;
  return true;
}

// Position of the smallest nonzero |entry| in the block d[t:, t:].
std::pair<std::size_t, std::size_t> min_pivot(const IntMatrix& d, std::size_t t) {
  std::pair<std::size_t, std::size_t> best{t, t};
  Integer best_abs = 0;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (best_abs == 0 || a < best_abs) {
        best_abs = a;
        best = {i, j};
      }
    }
  return best;
}

Integer common_denominator(const QMatrix& m) {
  Integer den = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
  return den;
}

Lattice canonical_from_rows(const QMatrix& rows, std::size_t dim) {
  Integer den = common_denominator(rows);
  QMatrix scaled = rows;
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= den;
  IntMatrix h = hermite_normal_form(to_integer(scaled));
  if (h.rows() != dim) throw std::invalid_argument("generators do not span a full-rank lattice");
  QMatrix basis = to_rational(h);
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) basis(i, j) /= den;
  return Lattice(std::move(basis));
}

}  // namespace

ZVec SmithForm::diagonal() const {
  ZVec out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = s.D;
  const std::size_t limit = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    if (is_zero_below_and_right(d, t)) break;
    for (;;) {
      auto [pi, pj] = min_pivot(d, t);
      d.swap_rows(t, pi);
      s.U.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        s.U.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        s.V.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into row t and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, Integer(1));
            s.U.add_row(t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    for (;;) {
      std::size_t best = a.rows();
      for (std::size_t k = row; k < a.rows(); ++k)
        if (a(k, col) != 0 && (best == a.rows() || abs(a(k, col)) < abs(a(best, col)))) best = k;
      if (best == a.rows()) break;
      a.swap_rows(row, best);
      bool done = true;
      for (std::size_t k = row + 1; k < a.rows(); ++k) {
        if (a(k, col) == 0) continue;
        Integer q = a(k, col) / a(row, col);
        a.add_row(k, row, -q);
        if (a(k, col) != 0) done = false;
      }
      if (done) break;
    }
    if (a(row, col) == 0) continue;  // no pivot in this column
    if (a(row, col) < 0) a.negate_row(row);
    for (std::size_t k = 0; k < row; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(k, col).get_mpz_t(), a(row, col).get_mpz_t());
      if (q != 0) a.add_row(k, row, -q);
    }
    ++row;
  }
  IntMatrix out(row, a.cols());
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

PairingForm::PairingForm(QMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.square()) throw std::invalid_argument("pairing form must be square");
  if (determinant(matrix_) == 0) throw std::invalid_argument("pairing form is degenerate");
}

Rational PairingForm::operator()(std::span<const Rational> x, std::span<const Rational> y) const {
  Rational sum = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) sum += x[i] * matrix_(i, j) * y[j];
  }
  return sum;
}

Lattice::Lattice(QMatrix basis) : basis_(std::move(basis)) {
  if (!basis_.square() || basis_.rows() == 0) throw std::invalid_argument("lattice basis must be square and nonempty");
  if (determinant(basis_) == 0) throw std::invalid_argument("lattice basis is not linearly independent");
}

Lattice Lattice::generated_by(const QMatrix& generators) {
  return canonical_from_rows(generators, generators.cols());
}

std::optional<ZVec> Lattice::coordinates(std::span<const Rational> v) const {
  QVec c;
  if (!solve_row_combination(basis_, v, c)) return std::nullopt;
  ZVec z;
  z.reserve(c.size());
  for (const auto& x : c) {
    if (x.get_den() != 1) return std::nullopt;
    z.push_back(x.get_num());
  }
  return z;
}

bool Lattice::contains(const Lattice& other) const {
  if (other.dim() != dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Lattice Lattice::canonical() const { return canonical_from_rows(basis_, dim()); }

IntMatrix change_of_basis(const Lattice& sub, const Lattice& sup) {
  if (sub.dim() != sup.dim()) throw NotASublattice("ambient dimensions differ");
  QMatrix c = sub.basis() * inverse(sup.basis());
  try {
    return to_integer(c);
  } catch (const std::domain_error&) {
    throw NotASublattice("a basis vector of the first lattice is not an integral combination of the second");
  }
}

Integer quotient_index(const Lattice& sub, const Lattice& sup) {
  return abs(determinant(change_of_basis(sub, sup)));
}

ZVec quotient_invariants(const Lattice& sub, const Lattice& sup) {
  return smith_normal_form(change_of_basis(sub, sup)).diagonal();
}

Lattice integral_dual(const Lattice& lattice, const PairingForm& form) {
  if (form.dim() != lattice.dim()) throw std::invalid_argument("pairing form dimension mismatch");
  // y is in the dual iff B F y is integral, so the dual basis is the rows of ((B F)^{-1})^T.
  QMatrix dual_basis = inverse(lattice.basis() * form.matrix()).transpose();
  return Lattice(std::move(dual_basis)).canonical();
}

}  // namespace rcg
