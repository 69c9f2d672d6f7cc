#pragma once

namespace ade {

// Numeric tolerances. Exact checks never consult these.
struct Tolerances {
  double dedup = 1e-9;        // group element identification
  double integrality = 1e-6;  // McKay multiplicities, character orthogonality
  double root_cluster = 1e-8; // polynomial roots / eigenvalue clustering
  double support = 1e-6;      // support property |Theta_eta(lambda)|
  double rank = 1e-8;         // numeric rank decisions

  static Tolerances uniform(double tol) {
    return Tolerances{tol, tol, tol, tol, tol};
  }
};

}  // namespace ade
