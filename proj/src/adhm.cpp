#include "ade/adhm.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <limits>

#include "ade/errors.hpp"
#include "ade/linalg.hpp"

namespace ade {

std::string to_string(const ArrowKey& k) {
  std::string s = std::to_string(k.from) + "->" + std::to_string(k.to);
  if (k.pair) s += "#" + std::to_string(k.pair);
  return s;
}

N1Representation N1Representation::zero(const DynkinType& type, std::vector<int> dims, bool affine) {
  const int nn = type.node_count(true);
  if (static_cast<int>(dims.size()) != nn) {
    throw ShapeMismatch("dimension vector for " + type.name() + " needs " + std::to_string(nn) +
                        " entries");
  }
  if (!affine && dims[0] != 0) throw ShapeMismatch("finite-quiver representation with dim V_0 != 0");
  N1Representation rep{type, affine, std::move(dims), {}, {}, {}};
  for (int a = 0; a < nn; ++a) {
    rep.psi.emplace_back(rep.dims[a], rep.dims[a]);
    rep.framing.emplace_back(rep.dims[a], 0);
  }
  for (const auto& arrow : mckay_arrows(type, affine)) {
    const ArrowKey key{arrow.source.label, arrow.target.label, arrow.pair_index};
    rep.B.emplace(key, QMatrix(rep.dims[key.to], rep.dims[key.from]));
  }
  return rep;
}

void N1Representation::set_v0(const QMatrix& v0) {
  if (!affine) throw ShapeMismatch("v0 needs the affine node");
  for (auto& f : framing) f = QMatrix(f.rows(), 0);
  framing[0] = v0;
  validate();
}

std::vector<int> N1Representation::nodes() const {
  std::vector<int> out;
  for (int a = affine ? 0 : 1; a < type.node_count(true); ++a) out.push_back(a);
  return out;
}

std::vector<Arrow> N1Representation::arrows() const { return mckay_arrows(type, affine); }

int N1Representation::total_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

void N1Representation::validate() const {
  const int nn = type.node_count(true);
  if (static_cast<int>(dims.size()) != nn || static_cast<int>(psi.size()) != nn ||
      static_cast<int>(framing.size()) != nn) {
    throw ShapeMismatch("representation needs data at all " + std::to_string(nn) + " nodes");
  }
  if (!affine && dims[0] != 0) throw ShapeMismatch("finite-quiver representation with dim V_0 != 0");
  for (int a = 0; a < nn; ++a) {
    if (dims[a] < 0) throw ShapeMismatch("negative dimension at node " + std::to_string(a));
    const std::size_t d = dims[a];
    if (psi[a].rows() != d || psi[a].cols() != d) {
      throw ShapeMismatch("psi at node " + std::to_string(a) + " is " + QMatrix::shape_str(psi[a]) +
                          ", expected " + std::to_string(d) + "x" + std::to_string(d));
    }
    if (framing[a].rows() != d) {
      throw ShapeMismatch("framing at node " + std::to_string(a) + " has vectors of length " +
                          std::to_string(framing[a].rows()) + ", expected " + std::to_string(d));
    }
  }
  const auto expected = arrows();
  if (B.size() != expected.size()) {
    throw ShapeMismatch("representation has " + std::to_string(B.size()) + " arrow maps, quiver has " +
                        std::to_string(expected.size()));
  }
  for (const auto& arrow : expected) {
    const ArrowKey key{arrow.source.label, arrow.target.label, arrow.pair_index};
    auto it = B.find(key);
    if (it == B.end()) throw ShapeMismatch("missing arrow map " + to_string(key));
    if (it->second.rows() != static_cast<std::size_t>(dims[key.to]) ||
        it->second.cols() != static_cast<std::size_t>(dims[key.from])) {
      throw ShapeMismatch("arrow " + to_string(key) + " is " + QMatrix::shape_str(it->second));
    }
  }
}

bool RelationResidual::nodes_vanish() const {
  return std::all_of(node_residuals.begin(), node_residuals.end(),
                     [](const auto& kv) { return kv.second.is_zero(); });
}

bool RelationResidual::edges_vanish() const {
  return std::all_of(edge_residuals.begin(), edge_residuals.end(),
                     [](const auto& kv) { return kv.second.is_zero(); });
}

namespace {
void check_types(const N1Representation& rep, const DeformationParam& d) {
  if (!(rep.type == d.type())) {
    throw InputError("representation type " + rep.type.name() + " differs from deformation type " +
                     d.type().name());
  }
}
}  // namespace

QMatrix node_residual(const N1Representation& rep, const DeformationParam& d, int node) {
  check_types(rep, d);
  rep.validate();
  QMatrix r = d.theta(node)(rep.psi.at(node));
  for (const auto& arrow : rep.arrows()) {
    if (arrow.source.label != node) continue;
    const ArrowKey out{arrow.source.label, arrow.target.label, arrow.pair_index};
    const QMatrix term = rep.B.at(out.reversed()) * rep.B.at(out);
    if (arrow.sign > 0) {
      r += term;
    } else {
      r -= term;
    }
  }
  return r;
}

QMatrix edge_residual(const N1Representation& rep, const ArrowKey& arrow) {
  const QMatrix& b = rep.B.at(arrow);
  return rep.psi.at(arrow.to) * b - b * rep.psi.at(arrow.from);
}

RelationResidual check_relations(const N1Representation& rep, const DeformationParam& d) {
  RelationResidual res;
  for (int a : rep.nodes()) res.node_residuals.emplace(a, node_residual(rep, d, a));
  for (const auto& [key, _] : rep.B) res.edge_residuals.emplace(key, edge_residual(rep, key));
  return res;
}

std::vector<QMatrix> invariant_closure(const N1Representation& rep) {
  rep.validate();
  const int nn = rep.type.node_count(true);
  std::vector<QMatrix> span(nn);
  for (int a = 0; a < nn; ++a) span[a] = column_basis(rep.framing[a]);
  // Each pass either grows some span or terminates; at most total_dim passes.
  for (bool grew = true; grew;) {
    grew = false;
    auto absorb = [&](int node, const QMatrix& images) {
      if (images.cols() == 0) return;
      QMatrix merged = column_basis(hstack(span[node], images));
      if (merged.cols() > span[node].cols()) {
        span[node] = std::move(merged);
        grew = true;
      }
    };
    for (const auto& [key, b] : rep.B) {
      if (span[key.from].cols() > 0) absorb(key.to, b * span[key.from]);
    }
    for (int a = 0; a < nn; ++a) {
      if (span[a].cols() > 0) absorb(a, rep.psi[a] * span[a]);
    }
  }
  return span;
}

bool is_nondegenerate(const N1Representation& rep) {
  const auto span = invariant_closure(rep);
  for (int a = 0; a < rep.type.node_count(true); ++a) {
    if (static_cast<int>(span[a].cols()) != rep.dims[a]) return false;
  }
  return true;
}

N1Representation restrict_finite(const N1Representation& rep) {
  rep.validate();
  std::vector<int> dims = rep.dims;
  dims[0] = 0;
  N1Representation out = N1Representation::zero(rep.type, dims, false);
  for (auto& [key, b] : out.B) b = rep.B.at(key);
  for (int a = 1; a < rep.type.node_count(true); ++a) {
    out.psi[a] = rep.psi[a];
    out.framing[a] = rep.framing[a];
  }
  return out;
}

namespace {
std::vector<Complex> eigenvalues(const QMatrix& m) {
  const Eigen::Index n = static_cast<Eigen::Index>(m.rows());
  std::vector<Complex> out;
  if (n == 0) return out;
  Eigen::MatrixXd dm(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) dm(i, j) = to_double(m(i, j));
  Eigen::EigenSolver<Eigen::MatrixXd> solver(dm, false);
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}
}  // namespace

std::map<int, std::vector<Complex>> support(const N1Representation& rep) {
  std::map<int, std::vector<Complex>> out;
  for (int a : rep.nodes()) out.emplace(a, eigenvalues(rep.psi[a]));
  return out;
}

SupportReport check_support_property(const N1Representation& rep, const DeformationParam& d,
                                     const Tolerances& tol) {
  check_types(rep, d);
  if (rep.affine && rep.dims[0] != 0) {
    throw InputError("support property applies to finite-quiver representations");
  }
  const auto roots = positive_roots(rep.type);
  std::vector<Polynomial> projected;
  for (const auto& eta : roots) projected.push_back(theta_of_root(d, eta));
  SupportReport report;
  for (const auto& [node, values] : support(rep)) {
    for (const Complex& lambda : values) {
      SupportEntry e{node, lambda, roots.front(), std::numeric_limits<double>::infinity(), false};
      for (std::size_t i = 0; i < roots.size(); ++i) {
        const double v = std::abs(projected[i](lambda));
        if (v < e.min_value) {
          e.min_value = v;
          e.best_root = roots[i];
        }
      }
      e.pass = e.min_value < tol.support;
      report.verdict = report.verdict && e.pass;
      report.entries.push_back(e);
    }
  }
  return report;
}

N1Representation direct_sum(const N1Representation& a, const N1Representation& b) {
  if (!(a.type == b.type) || a.affine != b.affine) {
    throw InputError("direct sum of representations of different quivers");
  }
  a.validate();
  b.validate();
  const int nn = a.type.node_count(true);
  std::vector<int> dims(nn);
  for (int i = 0; i < nn; ++i) dims[i] = a.dims[i] + b.dims[i];
  N1Representation out = N1Representation::zero(a.type, dims, a.affine);
  for (auto& [key, m] : out.B) m = block_diagonal(a.B.at(key), b.B.at(key));
  for (int i = 0; i < nn; ++i) {
    out.psi[i] = block_diagonal(a.psi[i], b.psi[i]);
    out.framing[i] = block_diagonal(a.framing[i], b.framing[i]);
  }
  return out;
}

N1Representation conjugate(const N1Representation& rep, const std::vector<QMatrix>& g) {
  rep.validate();
  const int nn = rep.type.node_count(true);
  if (static_cast<int>(g.size()) != nn) throw ShapeMismatch("one base change per node required");
  std::vector<QMatrix> ginv(nn);
  for (int a = 0; a < nn; ++a) {
    if (g[a].rows() != static_cast<std::size_t>(rep.dims[a]) || !g[a].square()) {
      throw ShapeMismatch("base change at node " + std::to_string(a) + " is " + QMatrix::shape_str(g[a]));
    }
    auto inv = inverse(g[a]);
    if (!inv) throw InputError("base change at node " + std::to_string(a) + " is singular");
    ginv[a] = std::move(*inv);
  }
  N1Representation out = rep;
  for (auto& [key, b] : out.B) b = g[key.to] * b * ginv[key.from];
  for (int a = 0; a < nn; ++a) {
    out.psi[a] = g[a] * rep.psi[a] * ginv[a];
    out.framing[a] = g[a] * rep.framing[a];
  }
  return out;
}

}  // namespace ade
