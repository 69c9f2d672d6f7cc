#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "ade/matrix.hpp"
#include "ade/root_system.hpp"
#include "ade/tolerances.hpp"

namespace ade {

using Complex = std::complex<double>;

// 2x2 complex matrix, row-major.
struct GroupElement {
  std::array<Complex, 4> m{};

  static GroupElement identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
  Complex det() const { return m[0] * m[3] - m[1] * m[2]; }
  Complex trace() const { return m[0] + m[3]; }
  // Inverse of an SL(2) element.
  GroupElement inverse() const { return {{m[3], -m[1], -m[2], m[0]}}; }
  double distance(const GroupElement& o) const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
             a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
  }
};

// Explicit generators of the finite subgroup of SL(2, C) of the given type.
std::vector<GroupElement> generators(const DynkinType& type);

struct GammaGroup {
  DynkinType type;
  std::vector<GroupElement> elements;
  std::vector<std::vector<std::size_t>> classes;  // element indices, identity class first
  std::size_t identity_index = 0;
  // product[i * order + j] = index of elements[i] * elements[j]
  std::vector<std::uint32_t> product;
  std::vector<std::size_t> inverse;
  std::vector<std::size_t> class_of;

  std::size_t order() const { return elements.size(); }
};

inline constexpr std::size_t kClosureCap = 200;

// Closure of the generators under multiplication, then conjugacy classes.
// Throws ClosureOverflow past kClosureCap elements.
GammaGroup enumerate(const DynkinType& type, const Tolerances& tol = {});

struct CharacterTable {
  Matrix<Complex> chars;      // rows: irreducible characters, columns: classes
  std::vector<double> dims;   // chars(r, identity class)
};

// Burnside's class-matrix method: a random real combination of the class
// multiplication matrices is diagonalized; its eigenvectors are the central
// characters. Rows are sorted by degree. Throws DegenerateSpectrum after
// ten retries with repeated eigenvalues.
CharacterTable character_table(const GammaGroup& g, std::uint64_t seed = 0,
                               const Tolerances& tol = {});

// Multiplicity of irrep b in Q (x) irrep a, Q the defining representation.
// Throws NonIntegralMultiplicity when a value is not within tolerance of an
// integer.
IMatrix mckay_adjacency(const GammaGroup& g, const CharacterTable& t, const Tolerances& tol = {});

// Bijection irrep index -> affine node label preserving both adjacency and
// the dimension/mark labels, if one exists.
std::optional<std::vector<int>> mckay_isomorphism(const IMatrix& adjacency,
                                                  const std::vector<int>& irrep_dims,
                                                  const DynkinType& type);

bool verify_mckay(const GammaGroup& g, std::uint64_t seed = 0, const Tolerances& tol = {});

}  // namespace ade
