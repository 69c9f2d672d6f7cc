#include "ade/linalg.hpp"

#include <utility>

namespace ade {

QMatrix rref(QMatrix m, std::vector<std::size_t>* pivots) {
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
    }
    const Rational inv = 1 / m(lead_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(lead_row, j);
    }
    if (pivots) pivots->push_back(col);
    ++lead_row;
  }
  return m;
}

std::size_t rank(const QMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

QMatrix nullspace(const QMatrix& m) {
  std::vector<std::size_t> piv;
  const QMatrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  QMatrix basis(m.cols(), m.cols() - piv.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) basis(piv[i], k) = -r(i, free);
    ++k;
  }
  return basis;
}

QMatrix column_basis(const QMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  QMatrix b(m.rows(), piv.size());
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) b(i, k) = m(i, piv[k]);
  return b;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (!m.square()) throw ShapeMismatch("inverse of non-square " + QMatrix::shape_str(m));
  const std::size_t n = m.rows();
  const QMatrix r = rref(hstack(m, QMatrix::identity(n)));
  for (std::size_t i = 0; i < n; ++i) {
    if (r(i, i) != 1) return std::nullopt;
  }
  return r.block(0, n, n, n);
}

Rational determinant(QMatrix m) {
  if (!m.square()) throw ShapeMismatch("determinant of non-square " + QMatrix::shape_str(m));
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) {
    throw ShapeMismatch("hstack " + QMatrix::shape_str(a) + " | " + QMatrix::shape_str(b));
  }
  QMatrix c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

QMatrix block_diagonal(const QMatrix& a, const QMatrix& b) {
  QMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

QMatrix power(const QMatrix& m, unsigned k) {
  QMatrix result = QMatrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) result = result * m;
  return result;
}

bool in_span(const QMatrix& basis, const QMatrix& v) {
  if (basis.cols() == 0) return v.is_zero();
  return rank(hstack(basis, v)) == rank(basis);
}

}  // namespace ade
