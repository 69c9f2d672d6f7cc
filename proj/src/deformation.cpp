#include "ade/deformation.hpp"

#include <algorithm>

#include "ade/errors.hpp"

namespace ade {

namespace {
void check_node_count(const DynkinType& type, const std::vector<Polynomial>& theta) {
  if (static_cast<int>(theta.size()) != type.node_count(true)) {
    throw ShapeMismatch("deformation for " + type.name() + " needs " +
                        std::to_string(type.node_count(true)) + " polynomials, got " +
                        std::to_string(theta.size()));
  }
}
}  // namespace

DeformationParam DeformationParam::constrained(const DynkinType& type, std::vector<Polynomial> theta) {
  check_node_count(type, theta);
  DeformationParam d(type, std::move(theta), true);
  const Polynomial s = d.weighted_sum();
  if (!s.is_zero()) {
    throw InputError("sum of delta_a Theta_a is " + s.to_string() + ", not 0");
  }
  return d;
}

DeformationParam DeformationParam::unconstrained(const DynkinType& type, std::vector<Polynomial> theta) {
  check_node_count(type, theta);
  DeformationParam d(type, std::move(theta), false);
  d.constrained_ = d.weighted_sum().is_zero();
  return d;
}

Polynomial DeformationParam::weighted_sum() const {
  const auto delta = marks(type_).delta;
  Polynomial s;
  for (std::size_t a = 0; a < theta_.size(); ++a) s += Rational(delta[a]) * theta_[a];
  return s;
}

DeformationParam complete_affine_theta(const DynkinType& type,
                                       const std::map<int, Polynomial>& finite_theta) {
  const auto delta = marks(type).delta;
  std::vector<Polynomial> theta(type.node_count(true));
  Polynomial rest;
  for (int a = 1; a <= type.rank(); ++a) {
    auto it = finite_theta.find(a);
    if (it == finite_theta.end()) {
      throw InputError("missing Theta_" + std::to_string(a) + " for " + type.name());
    }
    theta[a] = it->second;
    rest += Rational(delta[a]) * it->second;
  }
  theta[0] = rest * Rational(-1, delta[0]);
  return DeformationParam::constrained(type, std::move(theta));
}

Polynomial theta_of_root(const DeformationParam& d, const Root& eta) {
  if (!is_positive_root(d.type(), eta.coefficients)) {
    throw NotARoot(to_string(eta) + " is not a positive root of " + d.type().name());
  }
  Polynomial p;
  for (int a = 1; a <= d.type().rank(); ++a) p += Rational(eta.coefficients[a - 1]) * d.theta(a);
  return p;
}

ExceptionalLocus exceptional_locus(const DeformationParam& d, const Tolerances& tol) {
  ExceptionalLocus locus;
  for (const Root& eta : positive_roots(d.type())) {
    Polynomial p;
    for (int a = 1; a <= d.type().rank(); ++a) p += Rational(eta.coefficients[a - 1]) * d.theta(a);
    if (p.is_zero()) {
      throw IdenticallyZeroProjection("Theta_eta vanishes identically for eta = " + to_string(eta) +
                                      "; the contraction is not small");
    }
    for (const auto& r : roots_with_multiplicity(p, tol.root_cluster)) {
      locus.entries.push_back({r.value, eta, r.multiplicity});
    }
  }
  return locus;
}

bool is_generic(const ExceptionalLocus& locus, const Tolerances& tol) {
  const auto& e = locus.entries;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].multiplicity != 1) return false;
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (std::abs(e[i].point - e[j].point) < tol.root_cluster) return false;
    }
  }
  return true;
}

bool is_generic(const DeformationParam& d, const Tolerances& tol) {
  return is_generic(exceptional_locus(d, tol), tol);
}

}  // namespace ade
