#include "ade/monad.hpp"

#include <algorithm>
#include <numeric>

#include "ade/errors.hpp"

namespace ade {

int degree(Monomial m) {
  switch (m) {
    case Monomial::one:
      return 0;
    case Monomial::x1:
    case Monomial::x2:
    case Monomial::z:
      return 1;
    default:
      return 2;
  }
}

std::string to_string(Monomial m) {
  switch (m) {
    case Monomial::one: return "1";
    case Monomial::x1: return "x1";
    case Monomial::x2: return "x2";
    case Monomial::z: return "z";
    case Monomial::x1x1: return "x1^2";
    case Monomial::x1x2: return "x1x2";
    case Monomial::x2x2: return "x2^2";
    case Monomial::zx1: return "zx1";
    case Monomial::zx2: return "zx2";
    case Monomial::zz: return "z^2";
  }
  return "?";
}

namespace {

// Letters: 1 = x1, 2 = x2, 0 = z.
std::vector<int> word(Monomial m) {
  switch (m) {
    case Monomial::one: return {};
    case Monomial::x1: return {1};
    case Monomial::x2: return {2};
    case Monomial::z: return {0};
    case Monomial::x1x1: return {1, 1};
    case Monomial::x1x2: return {1, 2};
    case Monomial::x2x2: return {2, 2};
    case Monomial::zx1: return {0, 1};
    case Monomial::zx2: return {0, 2};
    case Monomial::zz: return {0, 0};
  }
  return {};
}

Monomial from_sorted(const std::vector<int>& w) {
  for (Monomial m : kAllMonomials) {
    if (word(m) == w) return m;
  }
  throw Error("monomial of degree > 2");
}

int total(const std::vector<int>& dims) { return std::accumulate(dims.begin(), dims.end(), 0); }

std::vector<std::size_t> offsets(const std::vector<int>& dims) {
  std::vector<std::size_t> off(dims.size() + 1, 0);
  for (std::size_t i = 0; i < dims.size(); ++i) off[i + 1] = off[i] + dims[i];
  return off;
}

}  // namespace

NCElement::NCElement(std::vector<int> row_dims, std::vector<int> col_dims)
    : row_dims_(std::move(row_dims)), col_dims_(std::move(col_dims)) {}

NCElement NCElement::term(std::vector<int> row_dims, std::vector<int> col_dims, Monomial m,
                          QMatrix coefficient) {
  NCElement e(std::move(row_dims), std::move(col_dims));
  e.add(m, coefficient);
  return e;
}

std::size_t NCElement::rows() const { return total(row_dims_); }
std::size_t NCElement::cols() const { return total(col_dims_); }

QMatrix NCElement::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QMatrix(rows(), cols()) : it->second;
}

void NCElement::add(Monomial m, const QMatrix& c) {
  if (c.rows() != rows() || c.cols() != cols()) {
    throw ShapeMismatch("coefficient of " + to_string(m) + " has shape " + QMatrix::shape_str(c) +
                        ", expected " + std::to_string(rows()) + "x" + std::to_string(cols()));
  }
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool NCElement::is_zero() const { return terms_.empty(); }

int NCElement::homogeneous_degree() const {
  int d = -1;
  for (const auto& [m, _] : terms_) {
    if (d >= 0 && degree(m) != d) throw Error("element is not homogeneous");
    d = degree(m);
  }
  return d;
}

void NCElement::check_shape(const NCElement& o) const {
  if (row_dims_ != o.row_dims_ || col_dims_ != o.col_dims_) {
    throw ShapeMismatch("adding elements with different block structures");
  }
}

NCElement& NCElement::operator+=(const NCElement& o) {
  check_shape(o);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
  check_shape(o);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

bool operator==(const NCElement& a, const NCElement& b) {
  return a.row_dims_ == b.row_dims_ && a.col_dims_ == b.col_dims_ && a.terms_ == b.terms_;
}

NCElement nc_multiply(const NCElement& u, const NCElement& v, const std::vector<Rational>& lambda) {
  if (u.col_dims() != v.row_dims()) throw ShapeMismatch("block structures do not compose");
  if (lambda.size() != u.row_dims().size()) {
    throw ShapeMismatch("lambda needs one value per row node");
  }
  // Lambda as a block-diagonal scalar on the row space.
  QMatrix lam(u.rows(), u.rows());
  {
    std::size_t r = 0;
    for (std::size_t a = 0; a < lambda.size(); ++a)
      for (int i = 0; i < u.row_dims()[a]; ++i, ++r) lam(r, r) = lambda[a];
  }
  NCElement out(u.row_dims(), v.col_dims());
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) {
      std::vector<int> w = word(mu);
      const auto wv = word(mv);
      w.insert(w.end(), wv.begin(), wv.end());
      if (w.size() > 2) throw Error("product exceeds degree 2");
      const QMatrix c = cu * cv;
      if (w == std::vector<int>{2, 1}) {
        out.add(Monomial::x1x2, c);
        out.add(Monomial::zz, lam * c);
        continue;
      }
      std::sort(w.begin(), w.end());  // z central, x1 x2 already ordered
      out.add(from_sorted(w), c);
    }
  }
  return out;
}

QMatrix node_block(const QMatrix& m, const std::vector<int>& dims, int node) {
  const auto off = offsets(dims);
  return m.block(off[node], off[node], dims[node], dims[node]);
}

namespace {

void check_grading(const QMatrix& m, const std::vector<int>& row_dims,
                   const std::vector<int>& col_dims, int shift, const char* name) {
  const int n = static_cast<int>(row_dims.size());
  const auto ro = offsets(row_dims), co = offsets(col_dims);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      if (n == 1 || ((a + shift) % n + n) % n == b) continue;
      if (!m.block(ro[b], co[a], row_dims[b], col_dims[a]).is_zero()) {
        throw ShapeMismatch(std::string(name) + " has a nonzero block " + std::to_string(a) +
                            " -> " + std::to_string(b) + " off the cyclic grading");
      }
    }
  }
}

}  // namespace

MonadData build_monad(MonadBlocks blk) {
  const int n = blk.nodes;
  if (n < 1) throw ShapeMismatch("cyclic quiver needs at least one node");
  if (static_cast<int>(blk.v_dims.size()) != n || static_cast<int>(blk.w_dims.size()) != n ||
      static_cast<int>(blk.lambda.size()) != n) {
    throw ShapeMismatch("v_dims, w_dims and lambda need one entry per node");
  }
  const std::size_t v = total(blk.v_dims), w = total(blk.w_dims);
  auto expect = [](const QMatrix& m, std::size_t r, std::size_t c, const char* name) {
    if (m.rows() != r || m.cols() != c) {
      throw ShapeMismatch(std::string(name) + " has shape " + QMatrix::shape_str(m) + ", expected " +
                          std::to_string(r) + "x" + std::to_string(c));
    }
  };
  expect(blk.B1, v, v, "B1");
  expect(blk.B2, v, v, "B2");
  expect(blk.I, v, w, "I");
  expect(blk.J, w, v, "J");
  check_grading(blk.B1, blk.v_dims, blk.v_dims, +1, "B1");
  check_grading(blk.B2, blk.v_dims, blk.v_dims, -1, "B2");
  check_grading(blk.I, blk.v_dims, blk.w_dims, 0, "I");
  check_grading(blk.J, blk.w_dims, blk.v_dims, 0, "J");

  const auto& vd = blk.v_dims;
  const auto& wd = blk.w_dims;
  const QMatrix id = QMatrix::identity(v);
  MonadData m;
  m.a[0] = NCElement::term(vd, vd, Monomial::x2, id) - NCElement::term(vd, vd, Monomial::z, blk.B2);
  m.a[1] = NCElement::term(vd, vd, Monomial::z, blk.B1) - NCElement::term(vd, vd, Monomial::x1, id);
  m.a[2] = NCElement::term(wd, vd, Monomial::z, blk.J);
  m.b[0] = NCElement::term(vd, vd, Monomial::z, blk.B1) - NCElement::term(vd, vd, Monomial::x1, id);
  m.b[1] = NCElement::term(vd, vd, Monomial::z, blk.B2) - NCElement::term(vd, vd, Monomial::x2, id);
  m.b[2] = NCElement::term(vd, wd, Monomial::z, blk.I);
  m.blocks = std::move(blk);
  return m;
}

MonadData build_monad(const N1Representation& rep, std::vector<Rational> lambda) {
  if (rep.type.family() != Family::A) {
    throw UnsupportedType("monad check supports cyclic groups only, got " + rep.type.name());
  }
  rep.validate();
  if (!rep.affine) throw UnsupportedType("monad check needs the affine (cyclic) quiver");
  const int n = rep.type.node_count(true);
  MonadBlocks blk;
  blk.nodes = n;
  blk.v_dims = rep.dims;
  for (int a = 0; a < n; ++a) blk.w_dims.push_back(rep.framing_rank(a));
  blk.lambda = std::move(lambda);
  if (static_cast<int>(blk.lambda.size()) != n) throw ShapeMismatch("lambda needs one value per node");
  const auto vo = offsets(blk.v_dims), wo = offsets(blk.w_dims);
  const std::size_t v = vo.back(), w = wo.back();
  blk.B1 = QMatrix(v, v);
  blk.B2 = QMatrix(v, v);
  blk.I = QMatrix(v, w);
  blk.J = QMatrix(w, v);
  for (const auto& arrow : rep.arrows()) {
    const ArrowKey key{arrow.source.label, arrow.target.label, arrow.pair_index};
    const QMatrix& b = rep.B.at(key);
    // Positive sign marks the a -> a+1 direction, including the A1 pairs.
    QMatrix& target = arrow.sign > 0 ? blk.B1 : blk.B2;
    target.set_block(vo[key.to], vo[key.from], b);
  }
  for (int a = 0; a < n; ++a) blk.I.set_block(vo[a], wo[a], rep.framing[a]);
  return build_monad(std::move(blk));
}

MonadCheck compose_and_check(const MonadData& m) {
  const auto& lam = m.blocks.lambda;
  MonadCheck out;
  out.composite = NCElement(m.blocks.v_dims, m.blocks.v_dims);
  for (int k = 0; k < 3; ++k) out.composite += nc_multiply(m.b[k], m.a[k], lam);
  out.vanishes = out.composite.is_zero();
  return out;
}

}  // namespace ade
