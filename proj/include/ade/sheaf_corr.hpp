#pragma once

#include <Eigen/Core>
#include <map>
#include <variant>
#include <vector>

#include "ade/adhm.hpp"
#include "ade/polynomial.hpp"
#include "ade/tolerances.hpp"

namespace ade {

// Exact rational support, or a numeric complex one.
using Support = std::variant<Rational, Complex>;

std::string to_string(const Support& s);

struct SheafPoint {
  Support support;
  std::vector<int> partition;  // Jordan block sizes, nonincreasing
};

// A torsion sheaf on A^1 by its local Jordan data: the t-action on global
// sections splits into blocks at each support point.
struct TorsionSheafData {
  std::vector<SheafPoint> points;

  int length() const;  // dimension of the space of global sections
  bool exact() const;  // every support rational
  // Throws InputError: repeated supports, empty or increasing partitions,
  // nonpositive parts.
  void validate() const;
  // Points sorted by support (rationals ascending, then complex by re, im).
  TorsionSheafData canonical() const;

  // Equality as sheaves: independent of point order.
  friend bool operator==(const TorsionSheafData& a, const TorsionSheafData& b);
};

// Block-diagonal Jordan matrix: supports in input order, blocks in partition
// order, upper Jordan blocks (ones on the superdiagonal). Exact supports only.
QMatrix sheaf_to_endo(const TorsionSheafData& s);
Eigen::MatrixXcd sheaf_to_endo_numeric(const TorsionSheafData& s);

struct JordanDecomposition {
  TorsionSheafData sheaf;  // supports ascending
  QMatrix jordan;          // sheaf_to_endo(sheaf)
  QMatrix base_change;     // g with g * psi * g^-1 == jordan, exactly
};

// Exact generalized-eigenspace decomposition. Eigenvalues are found exactly
// over Q; throws NonRationalSpectrum if the characteristic polynomial does
// not split over Q.
JordanDecomposition endo_to_sheaf(const QMatrix& psi);

// Numeric decomposition with clustered eigenvalues and tolerance-based ranks.
// Throws IllConditioned when a singular value falls in the ambiguous band
// [rank_tol, 1e3 * rank_tol) relative to the matrix scale.
TorsionSheafData endo_to_sheaf_numeric(const QMatrix& psi, const Tolerances& tol = {});

// Representation side translated to sheaves: per-node torsion sheaves plus
// sheaf maps written in the global-section (Jordan) bases.
struct QuiverSheafData {
  DynkinType type{Family::A, 1};
  bool affine = true;
  std::vector<TorsionSheafData> node_sheaves;  // indexed by label 0..rank
  std::map<ArrowKey, QMatrix> arrow_maps;
  std::vector<QMatrix> framing;

  // Shapes, and the intertwining of every arrow map with the t-actions.
  // Throws EdgeRelationViolated or ShapeMismatch.
  void validate() const;
};

struct Sheafification {
  QuiverSheafData data;
  std::vector<QMatrix> base_change;  // per node, as in JordanDecomposition
};

// Requires vanishing edge residuals (EdgeRelationViolated otherwise).
Sheafification quadruple_to_quintuple(const N1Representation& rep);

N1Representation quintuple_to_quadruple(const QuiverSheafData& q);

// det(t I - psi), monic, exact.
Polynomial char_poly(const QMatrix& psi);

// Minimal polynomial equals characteristic polynomial.
bool is_regular(const QMatrix& psi);

}  // namespace ade
