#include "ade/sheaf_corr.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "ade/errors.hpp"
#include "ade/linalg.hpp"

namespace ade {

std::string to_string(const Support& s) {
  if (const auto* q = std::get_if<Rational>(&s)) return to_string(*q);
  const Complex z = std::get<Complex>(s);
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

namespace {

bool support_less(const Support& a, const Support& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* q = std::get_if<Rational>(&a)) return *q < std::get<Rational>(b);
  const Complex x = std::get<Complex>(a), y = std::get<Complex>(b);
  return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
}

bool support_equal(const Support& a, const Support& b) {
  return !support_less(a, b) && !support_less(b, a);
}

}  // namespace

int TorsionSheafData::length() const {
  int n = 0;
  for (const auto& p : points)
    for (int part : p.partition) n += part;
  return n;
}

bool TorsionSheafData::exact() const {
  return std::all_of(points.begin(), points.end(),
                     [](const SheafPoint& p) { return std::holds_alternative<Rational>(p.support); });
}

void TorsionSheafData::validate() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& part = points[i].partition;
    if (part.empty()) throw InputError("empty partition at support " + to_string(points[i].support));
    for (std::size_t k = 0; k < part.size(); ++k) {
      if (part[k] <= 0) throw InputError("nonpositive Jordan block size");
      if (k > 0 && part[k] > part[k - 1]) throw InputError("partition is not nonincreasing");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (support_equal(points[i].support, points[j].support)) {
        throw InputError("repeated support " + to_string(points[i].support));
      }
    }
  }
}

TorsionSheafData TorsionSheafData::canonical() const {
  TorsionSheafData c = *this;
  std::sort(c.points.begin(), c.points.end(),
            [](const SheafPoint& a, const SheafPoint& b) { return support_less(a.support, b.support); });
  return c;
}

bool operator==(const TorsionSheafData& a, const TorsionSheafData& b) {
  const auto ca = a.canonical(), cb = b.canonical();
  if (ca.points.size() != cb.points.size()) return false;
  for (std::size_t i = 0; i < ca.points.size(); ++i) {
    if (!support_equal(ca.points[i].support, cb.points[i].support) ||
        ca.points[i].partition != cb.points[i].partition) {
      return false;
    }
  }
  return true;
}

QMatrix sheaf_to_endo(const TorsionSheafData& s) {
  s.validate();
  if (!s.exact()) throw InputError("exact Jordan matrix needs rational supports");
  const std::size_t n = s.length();
  QMatrix psi(n, n);
  std::size_t offset = 0;
  for (const auto& p : s.points) {
    const Rational& lambda = std::get<Rational>(p.support);
    for (int size : p.partition) {
      for (int i = 0; i < size; ++i) {
        psi(offset + i, offset + i) = lambda;
        if (i + 1 < size) psi(offset + i, offset + i + 1) = 1;
      }
      offset += size;
    }
  }
  return psi;
}

Eigen::MatrixXcd sheaf_to_endo_numeric(const TorsionSheafData& s) {
  s.validate();
  const Eigen::Index n = s.length();
  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(n, n);
  Eigen::Index offset = 0;
  for (const auto& p : s.points) {
    const Complex lambda = std::holds_alternative<Rational>(p.support)
                               ? Complex(to_double(std::get<Rational>(p.support)), 0.0)
                               : std::get<Complex>(p.support);
    for (int size : p.partition) {
      for (int i = 0; i < size; ++i) {
        psi(offset + i, offset + i) = lambda;
        if (i + 1 < size) psi(offset + i, offset + i + 1) = 1.0;
      }
      offset += size;
    }
  }
  return psi;
}

JordanDecomposition endo_to_sheaf(const QMatrix& psi) {
  if (!psi.square()) throw ShapeMismatch("endomorphism must be square");
  const std::size_t n = psi.rows();
  JordanDecomposition out;
  if (n == 0) {
    out.jordan = QMatrix(0, 0);
    out.base_change = QMatrix(0, 0);
    return out;
  }
  const auto eig = rational_roots(char_poly(psi));
  int found = 0;
  for (const auto& e : eig) found += e.second;
  if (found != static_cast<int>(n)) {
    throw NonRationalSpectrum("characteristic polynomial " + char_poly(psi).to_string() +
                              " does not split over Q");
  }

  QMatrix basis(n, 0);
  for (const auto& [lambda, mult] : eig) {
    const QMatrix nil = psi - lambda * QMatrix::identity(n);
    // kernels[j] spans ker nil^j
    std::vector<QMatrix> kernels{QMatrix(n, 0)};
    QMatrix pw = QMatrix::identity(n);
    while (static_cast<int>(kernels.back().cols()) < mult) {
      pw = pw * nil;
      kernels.push_back(nullspace(pw));
    }
    const int depth = static_cast<int>(kernels.size()) - 1;
    auto blocks_at_least = [&](int j) {
      return j > depth ? 0 : static_cast<int>(kernels[j].cols() - kernels[j - 1].cols());
    };

    struct Chain {
      QMatrix top;
      int size;
    };
    std::vector<Chain> chains;
    SheafPoint point{lambda, {}};
    for (int s = depth; s >= 1; --s) {
      const int wanted = blocks_at_least(s) - blocks_at_least(s + 1);
      QMatrix span = kernels[s - 1];
      for (const auto& c : chains) span = hstack(span, power(nil, c.size - s) * c.top);
      int accepted = 0;
      for (std::size_t k = 0; k < kernels[s].cols() && accepted < wanted; ++k) {
        const QMatrix v = kernels[s].column(k);
        if (in_span(span, v)) continue;
        span = hstack(span, v);
        chains.push_back({v, s});
        ++accepted;
      }
      if (accepted != wanted) throw Error("Jordan chain construction failed");
      for (int i = 0; i < wanted; ++i) point.partition.push_back(s);
    }
    for (const auto& c : chains) {
      for (int k = c.size - 1; k >= 0; --k) basis = hstack(basis, power(nil, k) * c.top);
    }
    out.sheaf.points.push_back(std::move(point));
  }

  auto g = inverse(basis);
  if (!g) throw Error("Jordan basis is singular");
  out.base_change = std::move(*g);
  out.jordan = sheaf_to_endo(out.sheaf);
  if (!(out.base_change * psi * basis == out.jordan)) {
    throw Error("Jordan base change does not conjugate to the Jordan form");
  }
  return out;
}

TorsionSheafData endo_to_sheaf_numeric(const QMatrix& psi, const Tolerances& tol) {
  if (!psi.square()) throw ShapeMismatch("endomorphism must be square");
  const Eigen::Index n = static_cast<Eigen::Index>(psi.rows());
  TorsionSheafData out;
  if (n == 0) return out;
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = to_double(psi(i, j));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());

  // A size-k Jordan block splits its eigenvalue by about eps^(1/k), so
  // clusters are merged at the larger of the tolerance and that spread.
  const double radius = std::max(tol.root_cluster, std::cbrt(1e-16) * 10.0 * scale);
  struct Cluster {
    Complex sum;
    int count;
    Complex center() const { return sum / static_cast<double>(count); }
  };
  std::vector<Cluster> clusters;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex z = solver.eigenvalues()(i);
    auto it = std::find_if(clusters.begin(), clusters.end(),
                           [&](const Cluster& c) { return std::abs(c.center() - z) < radius; });
    if (it == clusters.end()) {
      clusters.push_back({z, 1});
    } else {
      it->sum += z;
      it->count += 1;
    }
  }

  for (const auto& c : clusters) {
    const Complex lambda = c.center();
    const Eigen::MatrixXcd nil = m - lambda * Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd pw = Eigen::MatrixXcd::Identity(n, n);
    std::vector<int> kernel_dims{0};
    while (kernel_dims.back() < c.count && static_cast<int>(kernel_dims.size()) <= n) {
      pw = pw * nil;
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pw);
      const auto& sv = svd.singularValues();
      const double ref = tol.rank * std::max(1.0, sv(0));
      int zeros = 0;
      for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) < ref) {
          ++zeros;
        } else if (sv(k) < 1e3 * ref) {
          throw IllConditioned("singular value " + std::to_string(sv(k)) +
                               " inside the rank tolerance band");
        }
      }
      if (zeros <= kernel_dims.back()) throw IllConditioned("kernel chain stalled");
      kernel_dims.push_back(zeros);
    }
    if (kernel_dims.back() != c.count) throw IllConditioned("generalized eigenspace dimension mismatch");
    const int depth = static_cast<int>(kernel_dims.size()) - 1;
    auto at_least = [&](int j) { return j > depth ? 0 : kernel_dims[j] - kernel_dims[j - 1]; };
    SheafPoint point{lambda, {}};
    for (int s = depth; s >= 1; --s)
      for (int i = 0; i < at_least(s) - at_least(s + 1); ++i) point.partition.push_back(s);
    out.points.push_back(std::move(point));
  }
  return out.canonical();
}

void QuiverSheafData::validate() const {
  const int nn = type.node_count(true);
  if (static_cast<int>(node_sheaves.size()) != nn || static_cast<int>(framing.size()) != nn) {
    throw ShapeMismatch("sheaf data needs entries at all " + std::to_string(nn) + " nodes");
  }
  std::vector<QMatrix> jordan;
  for (int a = 0; a < nn; ++a) {
    jordan.push_back(sheaf_to_endo(node_sheaves[a]));
    if (!affine && a == 0 && jordan[0].rows() != 0) {
      throw ShapeMismatch("finite-quiver sheaf data with a nonzero sheaf at node 0");
    }
    if (framing[a].rows() != jordan[a].rows()) {
      throw ShapeMismatch("framing at node " + std::to_string(a) + " has wrong length");
    }
  }
  const auto expected = mckay_arrows(type, affine);
  if (arrow_maps.size() != expected.size()) throw ShapeMismatch("arrow map count mismatch");
  for (const auto& arrow : expected) {
    const ArrowKey key{arrow.source.label, arrow.target.label, arrow.pair_index};
    auto it = arrow_maps.find(key);
    if (it == arrow_maps.end()) throw ShapeMismatch("missing arrow map " + to_string(key));
    const QMatrix& b = it->second;
    if (b.rows() != jordan[key.to].rows() || b.cols() != jordan[key.from].rows()) {
      throw ShapeMismatch("arrow map " + to_string(key) + " has shape " + QMatrix::shape_str(b));
    }
    if (!(jordan[key.to] * b == b * jordan[key.from])) {
      throw EdgeRelationViolated("arrow map " + to_string(key) + " does not intertwine the t-actions");
    }
  }
}

Sheafification quadruple_to_quintuple(const N1Representation& rep) {
  rep.validate();
  for (const auto& [key, _] : rep.B) {
    if (!edge_residual(rep, key).is_zero()) {
      throw EdgeRelationViolated("edge relation fails along " + to_string(key) +
                                 "; B does not descend to the torsion sheaves");
    }
  }
  const int nn = rep.type.node_count(true);
  Sheafification out;
  out.data.type = rep.type;
  out.data.affine = rep.affine;
  std::vector<QMatrix> ginv(nn);
  for (int a = 0; a < nn; ++a) {
    JordanDecomposition jd = endo_to_sheaf(rep.psi[a]);
    out.data.node_sheaves.push_back(std::move(jd.sheaf));
    ginv[a] = *inverse(jd.base_change);
    out.base_change.push_back(std::move(jd.base_change));
  }
  for (const auto& [key, b] : rep.B) {
    out.data.arrow_maps.emplace(key, out.base_change[key.to] * b * ginv[key.from]);
  }
  for (int a = 0; a < nn; ++a) out.data.framing.push_back(out.base_change[a] * rep.framing[a]);
  return out;
}

N1Representation quintuple_to_quadruple(const QuiverSheafData& q) {
  q.validate();
  const int nn = q.type.node_count(true);
  std::vector<int> dims(nn);
  for (int a = 0; a < nn; ++a) dims[a] = q.node_sheaves[a].length();
  N1Representation rep = N1Representation::zero(q.type, dims, q.affine);
  for (int a = 0; a < nn; ++a) {
    rep.psi[a] = sheaf_to_endo(q.node_sheaves[a]);
    rep.framing[a] = q.framing[a];
  }
  for (auto& [key, b] : rep.B) b = q.arrow_maps.at(key);
  return rep;
}

Polynomial char_poly(const QMatrix& psi) {
  if (!psi.square()) throw ShapeMismatch("characteristic polynomial of non-square matrix");
  const std::size_t n = psi.rows();
  // Faddeev-LeVerrier: c[n] = 1, M_k = A M_{k-1} + c[n-k+1] I, c[n-k] = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = psi * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -(psi * m).trace() / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

bool is_regular(const QMatrix& psi) {
  if (!psi.square()) throw ShapeMismatch("regularity of non-square matrix");
  const std::size_t n = psi.rows();
  if (n == 0) return true;
  // Rows are vec(I), vec(A), ..., vec(A^{n-1}); full rank iff deg minpoly = n.
  QMatrix krylov(n, n * n);
  QMatrix pw = QMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) krylov(k, i * n + j) = pw(i, j);
    pw = pw * psi;
  }
  return rank(krylov) == n;
}

}  // namespace ade
