#pragma once

#include <map>
#include <vector>

#include "ade/polynomial.hpp"
#include "ade/root_system.hpp"
#include "ade/tolerances.hpp"

namespace ade {

// Per-node polynomials Theta_a, a = 0..rank, over C = A^1.
//
// A constrained parameter satisfies sum_a delta_a Theta_a = 0 (the geometric
// regime). Unconstrained parameters are accepted by the relation and monad
// checks, which make sense for arbitrary per-node data.
class DeformationParam {
 public:
  // Throws InputError unless sum_a delta_a Theta_a = 0 exactly.
  static DeformationParam constrained(const DynkinType& type, std::vector<Polynomial> theta);
  static DeformationParam unconstrained(const DynkinType& type, std::vector<Polynomial> theta);

  const DynkinType& type() const { return type_; }
  const std::vector<Polynomial>& theta() const { return theta_; }
  const Polynomial& theta(int node) const { return theta_.at(node); }
  bool is_constrained() const { return constrained_; }

  // sum_a delta_a Theta_a, the zero polynomial iff the constraint holds.
  Polynomial weighted_sum() const;

 private:
  DeformationParam(DynkinType type, std::vector<Polynomial> theta, bool constrained)
      : type_(type), theta_(std::move(theta)), constrained_(constrained) {}

  DynkinType type_;
  std::vector<Polynomial> theta_;
  bool constrained_;
};

// Theta_0 = -(sum_{a != 0} delta_a Theta_a) / delta_0. finite_theta maps
// finite labels 1..rank to polynomials; every finite node must be present.
DeformationParam complete_affine_theta(const DynkinType& type,
                                       const std::map<int, Polynomial>& finite_theta);

// Theta_eta = sum_a mu_a Theta_a over the finite nodes. Throws NotARoot.
Polynomial theta_of_root(const DeformationParam& d, const Root& eta);

struct LocusEntry {
  Complex point;
  Root root;
  int multiplicity;
};

struct ExceptionalLocus {
  std::vector<LocusEntry> entries;  // grouped by root in positive_roots order
};

// Roots of Theta_eta for every positive root eta. Throws
// IdenticallyZeroProjection if some Theta_eta vanishes identically.
ExceptionalLocus exceptional_locus(const DeformationParam& d, const Tolerances& tol = {});

// Distinct simple zeros across all positive roots.
bool is_generic(const DeformationParam& d, const Tolerances& tol = {});
bool is_generic(const ExceptionalLocus& locus, const Tolerances& tol = {});

}  // namespace ade
