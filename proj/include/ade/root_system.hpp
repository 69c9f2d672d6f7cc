#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ade/matrix.hpp"

namespace ade {

enum class Family { A, D, E };

// A simply-laced Dynkin type. A: rank >= 1, D: rank >= 4, E: rank 6, 7, 8.
//
// Node labels: the affine node is 0; finite nodes are 1..rank.
//   A_n  path 1-2-...-n; the affine node joins 1 and n (twice to 1 for n = 1).
//   D_n  tail 1-2-...-(n-2), fork n-2 -> {n-1, n}; the affine node joins 2.
//   E_n  nodes are numbered walking from the affine node: 0-1-2-... to the
//        branch node, then outward along the remaining long arm, then the
//        short arm. E6: 0-1-2-3-4 with 2-5-6. E7: 0-1-2-3-4-5-6 with 3-7.
//        E8: 0-1-2-3-4-5-6-7 with 5-8.
class DynkinType {
 public:
  DynkinType(Family family, int rank);

  // "A2", "D4", "E8".
  static DynkinType parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  // Number of nodes of the (affine) diagram.
  int node_count(bool affine) const { return rank_ + (affine ? 1 : 0); }

  friend bool operator==(const DynkinType& a, const DynkinType& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_;
  }

  // Every type exercised by the acceptance suite: A1-A8, D4-D8, E6-E8.
  static std::vector<DynkinType> supported();

 private:
  Family family_;
  int rank_;
};

// Undirected edges of the (affine) Dynkin diagram, listed with multiplicity
// and with the smaller label first.
std::vector<std::pair<int, int>> dynkin_edges(const DynkinType& type, bool affine);

struct CartanMatrix {
  IMatrix entries;
  bool affine = false;
  // Node label of each row/column. Affine: 0..rank, finite: 1..rank.
  std::vector<int> node_labels;
};

CartanMatrix cartan_matrix(const DynkinType& type, bool affine);

// Symmetric adjacency (multiplicity) matrix of the affine diagram, indexed by
// labels 0..rank.
IMatrix affine_adjacency(const DynkinType& type);

struct MarksVector {
  std::vector<int> delta;  // indexed by label 0..rank
};

// Primitive positive null vector of the affine Cartan matrix.
MarksVector marks(const DynkinType& type);

struct Root {
  std::vector<int> coefficients;  // index i holds the coefficient of node i+1

  int height() const;
  friend bool operator==(const Root& a, const Root& b) = default;
  friend auto operator<=>(const Root& a, const Root& b) = default;
};

std::string to_string(const Root& r);

// Cartan pairing (r, s) = r^T C s over the finite nodes.
long cartan_pairing(const CartanMatrix& finite, const std::vector<int>& r, const std::vector<int>& s);

// All positive roots by closure of the simple roots under simple reflections.
// Sorted by height, then lexicographically.
std::vector<Root> positive_roots(const DynkinType& type);

bool is_positive_root(const DynkinType& type, const std::vector<int>& coefficients);

// Unique root of maximal height.
Root highest_root(const DynkinType& type);

}  // namespace ade
