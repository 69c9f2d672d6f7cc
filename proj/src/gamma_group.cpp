#include "ade/gamma_group.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>

#include "ade/errors.hpp"
#include "ade/group_kernels.hpp"

namespace ade {

double GroupElement::distance(const GroupElement& o) const {
  double d = 0.0;
  for (int i = 0; i < 4; ++i) {
    d = std::max(d, std::abs(m[i].real() - o.m[i].real()));
    d = std::max(d, std::abs(m[i].imag() - o.m[i].imag()));
  }
  return d;
}

namespace {

using std::numbers::pi;

GroupElement diagonal(Complex z) { return {{z, 0.0, 0.0, 1.0 / z}}; }

// a + b i + c j + d k with i -> diag(i, -i), j -> [[0, 1], [-1, 0]].
GroupElement quaternion(double a, double b, double c, double d) {
  return {{Complex(a, b), Complex(c, d), Complex(-c, d), Complex(a, -b)}};
}

}  // namespace

std::vector<GroupElement> generators(const DynkinType& type) {
  const int n = type.rank();
  switch (type.family()) {
    case Family::A:
      return {diagonal(std::polar(1.0, 2.0 * pi / (n + 1)))};
    case Family::D:
      return {diagonal(std::polar(1.0, pi / (n - 2))), quaternion(0, 0, 1, 0)};
    case Family::E: {
      std::vector<GroupElement> gens = {quaternion(0, 1, 0, 0), quaternion(0, 0, 1, 0),
                                        quaternion(0.5, 0.5, 0.5, 0.5)};
      if (n == 7) gens.push_back(quaternion(std::sqrt(0.5), std::sqrt(0.5), 0, 0));
      if (n == 8) {
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        gens.push_back(quaternion(phi / 2.0, 0.5 / phi, 0.5, 0.0));
      }
      return gens;
    }
  }
  return {};
}

GammaGroup enumerate(const DynkinType& type, const Tolerances& tol) {
  GammaGroup g{type, {}, {}, 0, {}, {}, {}};
  const auto gens = generators(type);
  g.elements.push_back(GroupElement::identity());
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const GroupElement x = g.elements[queue.front()];
    queue.pop_front();
    for (const auto& s : gens) {
      const GroupElement y = x * s;
      if (kernels::find_element(g.elements, y, tol.dedup) != g.elements.size()) continue;
      if (g.elements.size() >= kClosureCap) {
        throw ClosureOverflow("closure of " + type.name() + " generators exceeds " +
                              std::to_string(kClosureCap) + " elements");
      }
      g.elements.push_back(y);
      queue.push_back(g.elements.size() - 1);
    }
  }

  const std::size_t n = g.order();
  g.product = kernels::multiplication_table(g.elements, tol.dedup);
  g.inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.product[i * n + j] == g.identity_index) {
        g.inverse[i] = j;
        break;
      }
    }
  }

  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  g.class_of.assign(n, unassigned);
  for (std::size_t x = 0; x < n; ++x) {
    if (g.class_of[x] != unassigned) continue;
    const std::size_t c = g.classes.size();
    g.classes.emplace_back();
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t y = g.product[g.product[h * n + x] * n + g.inverse[h]];
      if (g.class_of[y] == unassigned) {
        g.class_of[y] = c;
        g.classes[c].push_back(y);
      }
    }
    std::sort(g.classes[c].begin(), g.classes[c].end());
  }
  return g;
}

namespace {

double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

Complex snap(Complex z) {
  const double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
  return {re, im};
}

bool rows_orthonormal(const Matrix<Complex>& chars, const GammaGroup& g, double tol) {
  const std::size_t k = g.classes.size();
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < k; ++s) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        acc += static_cast<double>(g.classes[j].size()) * chars(r, j) * std::conj(chars(s, j));
      }
      acc /= static_cast<double>(g.order());
      if (std::abs(acc - (r == s ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

}  // namespace

CharacterTable character_table(const GammaGroup& g, std::uint64_t seed, const Tolerances& tol) {
  const std::size_t k = g.classes.size();
  const std::vector<long> a = kernels::class_structure_constants(g);
  std::mt19937_64 rng(seed);

  for (int attempt = 0; attempt < 10; ++attempt) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const double r = next_unit(rng);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) m(j, l) += r * static_cast<double>(a[(i * k + j) * k + l]);
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) continue;
    const Eigen::VectorXcd ev = solver.eigenvalues();
    double scale = 1.0;
    for (std::size_t i = 0; i < k; ++i) scale = std::max(scale, std::abs(ev(i)));
    bool distinct = true;
    for (std::size_t i = 0; i < k && distinct; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (std::abs(ev(i) - ev(j)) < 1e-6 * scale) distinct = false;
    if (!distinct) continue;

    const Eigen::MatrixXcd vecs = solver.eigenvectors();
    CharacterTable t{Matrix<Complex>(k, k), std::vector<double>(k)};
    bool ok = true;
    for (std::size_t r = 0; r < k && ok; ++r) {
      const Complex lead = vecs(0, r);  // class 0 is the identity class
      if (std::abs(lead) < 1e-12) {
        ok = false;
        break;
      }
      double norm = 0.0;
      std::vector<Complex> w(k);
      for (std::size_t l = 0; l < k; ++l) {
        w[l] = vecs(l, r) / lead;
        norm += std::norm(w[l]) / static_cast<double>(g.classes[l].size());
      }
      const double degree = std::sqrt(static_cast<double>(g.order()) / norm);
      for (std::size_t l = 0; l < k; ++l) {
        t.chars(r, l) = snap(degree * w[l] / static_cast<double>(g.classes[l].size()));
      }
    }
    if (!ok || !rows_orthonormal(t.chars, g, tol.integrality)) continue;

    // Deterministic row order: degree, then character values.
    std::vector<std::size_t> order(k);
    for (std::size_t r = 0; r < k; ++r) order[r] = r;
    auto key = [&](std::size_t r) {
      std::vector<double> v;
      for (std::size_t l = 0; l < k; ++l) {
        v.push_back(std::round(t.chars(r, l).real() * 1e6));
        v.push_back(std::round(t.chars(r, l).imag() * 1e6));
      }
      return v;
    };
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
    CharacterTable sorted{Matrix<Complex>(k, k), std::vector<double>(k)};
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t l = 0; l < k; ++l) sorted.chars(r, l) = t.chars(order[r], l);
      sorted.dims[r] = sorted.chars(r, 0).real();
    }
    return sorted;
  }
  throw DegenerateSpectrum("class-matrix combination had a repeated eigenvalue in 10 attempts");
}

IMatrix mckay_adjacency(const GammaGroup& g, const CharacterTable& t, const Tolerances& tol) {
  const std::size_t k = g.classes.size();
  if (t.chars.rows() != k || t.chars.cols() != k) {
    throw ShapeMismatch("character table does not match the group's classes");
  }
  IMatrix adj(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        const Complex chi_q = g.elements[g.classes[j].front()].trace();
        acc += static_cast<double>(g.classes[j].size()) * chi_q * t.chars(a, j) *
               std::conj(t.chars(b, j));
      }
      acc /= static_cast<double>(g.order());
      const double nearest = std::round(acc.real());
      if (std::abs(acc - nearest) > tol.integrality) {
        throw NonIntegralMultiplicity("McKay multiplicity (" + std::to_string(a) + "," +
                                      std::to_string(b) + ") = " + std::to_string(acc.real()) +
                                      " is not integral");
      }
      adj(a, b) = static_cast<long>(nearest);
    }
  }
  return adj;
}

namespace {

bool extend(std::size_t v, std::vector<int>& assign, std::vector<bool>& used, const IMatrix& adj,
            const IMatrix& target, const std::vector<int>& dims, const std::vector<int>& delta) {
  const std::size_t n = assign.size();
  if (v == n) return true;
  for (std::size_t node = 0; node < n; ++node) {
    if (used[node] || delta[node] != dims[v]) continue;
    bool consistent = adj(v, v) == target(node, node);
    for (std::size_t u = 0; u < v && consistent; ++u) {
      consistent = adj(u, v) == target(assign[u], node) && adj(v, u) == target(node, assign[u]);
    }
    if (!consistent) continue;
    assign[v] = static_cast<int>(node);
    used[node] = true;
    if (extend(v + 1, assign, used, adj, target, dims, delta)) return true;
    used[node] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> mckay_isomorphism(const IMatrix& adjacency,
                                                  const std::vector<int>& irrep_dims,
                                                  const DynkinType& type) {
  const IMatrix target = affine_adjacency(type);
  const std::vector<int> delta = marks(type).delta;
  if (adjacency.rows() != target.rows() || irrep_dims.size() != delta.size()) return std::nullopt;
  std::vector<int> assign(delta.size(), -1);
  std::vector<bool> used(delta.size(), false);
  if (!extend(0, assign, used, adjacency, target, irrep_dims, delta)) return std::nullopt;
  return assign;
}

bool verify_mckay(const GammaGroup& g, std::uint64_t seed, const Tolerances& tol) {
  const CharacterTable t = character_table(g, seed, tol);
  const IMatrix adj = mckay_adjacency(g, t, tol);
  std::vector<int> dims;
  for (double d : t.dims) dims.push_back(static_cast<int>(std::lround(d)));
  return mckay_isomorphism(adj, dims, g.type).has_value();
}

}  // namespace ade
