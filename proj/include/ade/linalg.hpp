#pragma once

#include <optional>
#include <vector>

#include "ade/matrix.hpp"

namespace ade {

// Exact linear algebra over the rationals.

// Reduced row echelon form; pivot columns are appended to `pivots` if given.
QMatrix rref(QMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const QMatrix& m);

// Columns form a basis of {x : m x = 0}.
QMatrix nullspace(const QMatrix& m);

// Columns form a basis of the column space of m (a subset of m's columns).
QMatrix column_basis(const QMatrix& m);

std::optional<QMatrix> inverse(const QMatrix& m);

Rational determinant(QMatrix m);

// Horizontal concatenation; row counts must agree.
QMatrix hstack(const QMatrix& a, const QMatrix& b);

QMatrix block_diagonal(const QMatrix& a, const QMatrix& b);

QMatrix power(const QMatrix& m, unsigned k);

// True iff the column v lies in the column span of basis.
bool in_span(const QMatrix& basis, const QMatrix& v);

}  // namespace ade
