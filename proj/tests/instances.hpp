#pragma once

// Random exact-rational instances shared by the unit and acceptance tests.

#include <random>
#include <vector>

#include "ade/adhm.hpp"
#include "ade/deformation.hpp"
#include "ade/linalg.hpp"
#include "ade/monad.hpp"
#include "ade/sheaf_corr.hpp"

namespace ade::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, int num = 3, int den = 3) {
  Rational q(uniform(rng, -num, num), uniform(rng, 1, den));
  q.canonicalize();
  return q;
}

inline QMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational(rng);
  return m;
}

inline QMatrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    QMatrix m = random_matrix(rng, n, n);
    if (determinant(m) != 0) return m;
  }
}

inline std::vector<QMatrix> random_base_change(Rng& rng, const std::vector<int>& dims) {
  std::vector<QMatrix> g;
  for (int d : dims) g.push_back(random_invertible(rng, d));
  return g;
}

// Jordan block J_k(p).
inline QMatrix jordan_block(const Rational& p, int k) {
  QMatrix j(k, k);
  for (int i = 0; i < k; ++i) {
    j(i, i) = p;
    if (i + 1 < k) j(i, i + 1) = 1;
  }
  return j;
}

// Random element c_0 + c_1 N + ... of Q[N] / N^k evaluated at the nilpotent
// N = J_k(0); invertible when c_0 != 0.
inline QMatrix random_nil_polynomial(Rng& rng, int k, bool invertible) {
  const QMatrix n = jordan_block(0, k);
  QMatrix out(k, k), pw = QMatrix::identity(k);
  for (int i = 0; i < k; ++i) {
    Rational c = random_rational(rng);
    if (i == 0 && invertible && c == 0) c = 1;
    out += c * pw;
    pw = pw * n;
  }
  return out;
}

inline TorsionSheafData random_sheaf(Rng& rng, int max_points = 3, int max_parts = 2, int max_part = 3) {
  TorsionSheafData s;
  std::vector<Rational> used;
  const int points = uniform(rng, 0, max_points);
  while (static_cast<int>(s.points.size()) < points) {
    const Rational p = random_rational(rng);
    if (std::find(used.begin(), used.end(), p) != used.end()) continue;
    used.push_back(p);
    std::vector<int> part(uniform(rng, 1, max_parts));
    for (auto& x : part) x = uniform(rng, 1, max_part);
    std::sort(part.rbegin(), part.rend());
    s.points.push_back({p, part});
  }
  return s;
}

// Random constrained deformation: finite Theta of degree <= deg, Theta_0 completed.
inline DeformationParam random_theta(Rng& rng, const DynkinType& t, int deg = 1) {
  std::map<int, Polynomial> finite;
  for (int a = 1; a <= t.rank(); ++a) {
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = random_rational(rng);
    finite[a] = Polynomial(c);
  }
  return complete_affine_theta(t, finite);
}

// Relation-satisfying affine type-A representation: a direct sum of summands
// with every V_a = Q[N]/N^k and Psi_a = J_k(p); u_a along a -> a+1 and w_a
// back, both polynomials in N, with w_a u_a - w_{a-1} u_{a-1} = -Theta_a(Psi).
// Conjugated by a random base change at the end.
inline N1Representation random_solution_type_a(Rng& rng, const DynkinType& t, const DeformationParam& d,
                                               int max_dim = 3, bool conjugated = true) {
  const int nn = t.node_count(true);
  N1Representation rep = N1Representation::zero(t, std::vector<int>(nn, 0));
  int remaining = uniform(rng, 1, max_dim);
  while (remaining > 0) {
    const int k = uniform(rng, 1, remaining);
    remaining -= k;
    const Rational p = random_rational(rng);
    const QMatrix psi = jordan_block(p, k);
    std::vector<QMatrix> y(nn);
    y[0] = random_nil_polynomial(rng, k, false);
    for (int a = 1; a < nn; ++a) y[a] = y[a - 1] - d.theta(a)(psi);
    N1Representation s = N1Representation::zero(t, std::vector<int>(nn, k));
    for (int a = 0; a < nn; ++a) s.psi[a] = psi;
    for (const auto& arrow : s.arrows()) {
      if (arrow.sign < 0) continue;
      const ArrowKey key{arrow.source.label, arrow.target.label, arrow.pair_index};
      const QMatrix u = random_nil_polynomial(rng, k, true);
      s.B[key] = u;
      s.B[key.reversed()] = y[arrow.source.label] * *inverse(u);
    }
    rep = direct_sum(rep, s);
  }
  rep.set_v0(random_matrix(rng, rep.dims[0], 1));
  return conjugated ? conjugate(rep, random_base_change(rng, rep.dims)) : rep;
}

// Representation satisfying only the edge relations: Jordan Psi with random
// supports drawn from a small set (so intertwiners exist), random arrow maps
// from the intertwiner spaces, random framing, then a random conjugation.
inline N1Representation random_edge_solution(Rng& rng, const DynkinType& t, int max_dim = 3) {
  const int nn = t.node_count(true);
  std::vector<int> dims(nn);
  std::vector<QMatrix> psi(nn);
  for (int a = 0; a < nn; ++a) {
    TorsionSheafData s;
    int left = uniform(rng, 0, max_dim);
    std::vector<Rational> pool{0, 1, Rational(-1, 2)};
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::size_t i = 0; left > 0 && i < pool.size(); ++i) {
      const int k = uniform(rng, 1, left);
      left -= k;
      std::vector<int> part{k};
      if (k >= 2 && uniform(rng, 0, 1)) part = {k - 1, 1};
      s.points.push_back({pool[i], part});
    }
    psi[a] = sheaf_to_endo(s);
    dims[a] = static_cast<int>(psi[a].rows());
  }
  N1Representation rep = N1Representation::zero(t, dims);
  rep.psi = psi;
  for (auto& [key, b] : rep.B) {
    const int m = dims[key.to], n = dims[key.from];
    if (m == 0 || n == 0) continue;
    // vec(J_b X - X J_a) = 0 as a linear system in the mn entries of X.
    QMatrix sys(m * n, m * n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < m; ++k) sys(i * n + j, k * n + j) += psi[key.to](i, k);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) sys(i * n + j, i * n + k) -= psi[key.from](k, j);
    const QMatrix basis = nullspace(sys);
    QMatrix x(m, n);
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      const Rational coeff = random_rational(rng);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) x(i, j) += coeff * basis(i * n + j, c);
    }
    b = x;
  }
  rep.set_v0(random_matrix(rng, dims[0], 1));
  return conjugate(rep, random_base_change(rng, dims));
}

// Generic random representation (relations typically fail).
inline N1Representation random_representation(Rng& rng, const DynkinType& t, int max_dim = 2) {
  const int nn = t.node_count(true);
  std::vector<int> dims(nn);
  for (auto& d : dims) d = uniform(rng, 0, max_dim);
  N1Representation rep = N1Representation::zero(t, dims);
  for (auto& [key, b] : rep.B) b = random_matrix(rng, b.rows(), b.cols());
  for (int a = 0; a < nn; ++a) {
    rep.psi[a] = random_matrix(rng, dims[a], dims[a]);
    rep.framing[a] = random_matrix(rng, dims[a], uniform(rng, 0, 1));
  }
  return rep;
}

// Random monad blocks on the cyclic quiver with nodes nodes (1 = trivial
// group). When satisfying, I is solved from I J = -lambda - [B2, B1] with J
// square invertible per node.
inline MonadBlocks random_monad_blocks(Rng& rng, int nodes, bool satisfying) {
  MonadBlocks blk;
  blk.nodes = nodes;
  for (int a = 0; a < nodes; ++a) {
    blk.v_dims.push_back(uniform(rng, 0, 3));
    blk.lambda.push_back(random_rational(rng));
  }
  blk.w_dims = blk.v_dims;
  std::vector<std::size_t> off(nodes + 1, 0);
  for (int a = 0; a < nodes; ++a) off[a + 1] = off[a] + blk.v_dims[a];
  const std::size_t v = off.back();
  blk.B1 = QMatrix(v, v);
  blk.B2 = QMatrix(v, v);
  for (int a = 0; a < nodes; ++a) {
    const int up = (a + 1) % nodes, down = (a + nodes - 1) % nodes;
    blk.B1.set_block(off[up], off[a], random_matrix(rng, blk.v_dims[up], blk.v_dims[a]));
    blk.B2.set_block(off[down], off[a], random_matrix(rng, blk.v_dims[down], blk.v_dims[a]));
  }
  blk.I = QMatrix(v, v);
  blk.J = QMatrix(v, v);
  const QMatrix comm = blk.B2 * blk.B1 - blk.B1 * blk.B2;
  for (int a = 0; a < nodes; ++a) {
    const int d = blk.v_dims[a];
    if (satisfying) {
      const QMatrix j = random_invertible(rng, d);
      const QMatrix target = -(blk.lambda[a] * QMatrix::identity(d)) - node_block(comm, blk.v_dims, a);
      blk.J.set_block(off[a], off[a], j);
      blk.I.set_block(off[a], off[a], target * *inverse(j));
    } else {
      blk.J.set_block(off[a], off[a], random_matrix(rng, d, d));
      blk.I.set_block(off[a], off[a], random_matrix(rng, d, d));
    }
  }
  return blk;
}

}  // namespace ade::testing
