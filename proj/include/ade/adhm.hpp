#pragma once

#include <compare>
#include <map>
#include <vector>

#include "ade/deformation.hpp"
#include "ade/matrix.hpp"
#include "ade/quiver.hpp"
#include "ade/tolerances.hpp"

namespace ade {

struct ArrowKey {
  int from = 0;
  int to = 0;
  int pair = 0;

  ArrowKey reversed() const { return {to, from, pair}; }
  friend bool operator==(const ArrowKey&, const ArrowKey&) = default;
  friend auto operator<=>(const ArrowKey&, const ArrowKey&) = default;
};

std::string to_string(const ArrowKey& k);

// Finite-dimensional representation of the N = 1 quiver of `type`, with
// framing by free sheaves of rank r_a (so J = 0).
//
// When `affine` is false the representation lives on the finite quiver:
// node 0 is absent (dims[0] == 0) and no arrow touches it.
struct N1Representation {
  DynkinType type{Family::A, 1};
  bool affine = true;
  std::vector<int> dims;              // dim V_a, indexed by label 0..rank
  std::map<ArrowKey, QMatrix> B;      // B_ab : V_a -> V_b, dims[b] x dims[a]
  std::vector<QMatrix> psi;           // Psi_a, dims[a] x dims[a]
  std::vector<QMatrix> framing;       // I_a, dims[a] x r_a; columns are the I-vectors

  // Zero maps of the right shapes, no framing.
  static N1Representation zero(const DynkinType& type, std::vector<int> dims, bool affine = true);

  // Framing of rank 1 at node 0 with vector v0, none elsewhere.
  void set_v0(const QMatrix& v0);

  std::vector<int> nodes() const;     // labels present (0 omitted when !affine)
  std::vector<Arrow> arrows() const;  // McKay arrows present
  int framing_rank(int a) const { return static_cast<int>(framing.at(a).cols()); }
  int total_dim() const;

  // Throws ShapeMismatch on any inconsistent shape or missing arrow.
  void validate() const;
};

struct RelationResidual {
  std::map<int, QMatrix> node_residuals;
  std::map<ArrowKey, QMatrix> edge_residuals;

  bool nodes_vanish() const;
  bool edges_vanish() const;
  bool vanishes() const { return nodes_vanish() && edges_vanish(); }
};

// sum over arrows a -> b of eps_ab B_ba B_ab, plus Theta_a(Psi_a).
QMatrix node_residual(const N1Representation& rep, const DeformationParam& d, int node);

// Psi_b B_ab - B_ab Psi_a for the arrow a -> b.
QMatrix edge_residual(const N1Representation& rep, const ArrowKey& arrow);

RelationResidual check_relations(const N1Representation& rep, const DeformationParam& d);

// Smallest (B, Psi)-invariant collection of subspaces containing the framing
// vectors; one column basis per node (empty matrix for absent nodes).
std::vector<QMatrix> invariant_closure(const N1Representation& rep);

// True iff the invariant closure of the framing vectors is everything.
bool is_nondegenerate(const N1Representation& rep);

// Delete the affine node with its arrows, loop and framing.
N1Representation restrict_finite(const N1Representation& rep);

// Eigenvalues of each Psi_a (numeric), keyed by node label.
std::map<int, std::vector<Complex>> support(const N1Representation& rep);

struct SupportEntry {
  int node;
  Complex eigenvalue;
  Root best_root;      // root minimizing |Theta_eta(eigenvalue)|
  double min_value;
  bool pass;
};

struct SupportReport {
  std::vector<SupportEntry> entries;
  bool verdict = true;
};

// Every Psi eigenvalue must be within tol.support of a zero of some
// Theta_eta. Requires a finite-quiver representation.
SupportReport check_support_property(const N1Representation& rep, const DeformationParam& d,
                                     const Tolerances& tol = {});

N1Representation direct_sum(const N1Representation& a, const N1Representation& b);

// g_a-conjugate: B_ab -> g_b B_ab g_a^-1, Psi_a -> g_a Psi_a g_a^-1, I_a -> g_a I_a.
// Throws if some g_a is not invertible.
N1Representation conjugate(const N1Representation& rep, const std::vector<QMatrix>& g);

}  // namespace ade
