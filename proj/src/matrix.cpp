#include "rcg/matrix.hpp"

#include <limits>

namespace rcg {

QMatrix to_rational(const IntMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

QMatrix to_rational(const SmallMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(static_cast<long>(m(i, j)));
  return q;
}

IntMatrix to_integer(const SmallMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = Integer(static_cast<long>(m(i, j)));
  return z;
}

IntMatrix to_integer(const QMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw std::domain_error("matrix entry is not integral");
      z(i, j) = m(i, j).get_num();
    }
  return z;
}

SmallMatrix to_small(const IntMatrix& m) {
  SmallMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).fits_slong_p()) throw std::domain_error("matrix entry overflows int64");
      s(i, j) = m(i, j).get_si();
    }
  return s;
}

Rational determinant(QMatrix m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = -m(r, c) / m(c, c);
      m.add_row(r, c, f);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) {
  Rational d = determinant(to_rational(m));
  return d.get_num();  // denominator is 1 for integer input
}

QMatrix inverse(const QMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  QMatrix a = m;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rational scale = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = -a(r, c);
      a.add_row(r, c, f);
      inv.add_row(r, c, f);
    }
  }
  return inv;
}

std::size_t rank(QMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t k = r + 1; k < m.rows(); ++k) {
      if (m(k, c) == 0) continue;
      Rational f = -m(k, c) / m(r, c);
      m.add_row(k, r, f);
    }
    ++r;
  }
  return r;
}

bool solve_row_combination(const QMatrix& basis, std::span<const Rational> v, QVec& out) {
  const std::size_t k = basis.rows();
  const std::size_t n = basis.cols();
  if (v.size() != n) return false;
  // Augmented system basis^T * c = v: n equations, k unknowns.
  QMatrix a(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = basis(j, i);
    a(i, k) = v[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) continue;
    a.swap_rows(p, r);
    Rational scale = 1 / a(r, c);
    for (std::size_t j = 0; j <= k; ++j) a(r, j) *= scale;
    for (std::size_t q = 0; q < n; ++q) {
      if (q == r || a(q, c) == 0) continue;
      Rational f = -a(q, c);
      a.add_row(q, r, f);
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r != k) return false;  // dependent rows: solution not unique
  for (std::size_t q = r; q < n; ++q)
    if (a(q, k) != 0) return false;
  out.assign(k, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out[pivot_col[i]] = a(i, k);
  return true;
}

}  // namespace rcg
