#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ade/adhm.hpp"
#include "ade/matrix.hpp"

namespace ade {

// Normal-form monomials of degree <= 2 in x1, x2 and the central z, with the
// ordering x1 before x2 and z in front.
enum class Monomial { one, x1, x2, z, x1x1, x1x2, x2x2, zx1, zx2, zz };

inline constexpr std::array<Monomial, 10> kAllMonomials = {
    Monomial::one,  Monomial::x1,   Monomial::x2,  Monomial::z,   Monomial::x1x1,
    Monomial::x1x2, Monomial::x2x2, Monomial::zx1, Monomial::zx2, Monomial::zz};

int degree(Monomial m);
std::string to_string(Monomial m);

// Element of the quotient algebra with block-matrix coefficients. Rows and
// columns are split into node blocks by row_dims and col_dims.
class NCElement {
 public:
  NCElement() = default;
  NCElement(std::vector<int> row_dims, std::vector<int> col_dims);

  static NCElement term(std::vector<int> row_dims, std::vector<int> col_dims, Monomial m,
                        QMatrix coefficient);

  const std::vector<int>& row_dims() const { return row_dims_; }
  const std::vector<int>& col_dims() const { return col_dims_; }
  std::size_t rows() const;
  std::size_t cols() const;

  // Zero matrix when the monomial is absent.
  QMatrix coefficient(Monomial m) const;
  const std::map<Monomial, QMatrix>& terms() const { return terms_; }
  void add(Monomial m, const QMatrix& c);

  bool is_zero() const;
  // Degree if all nonzero terms share one, -1 for zero, throws otherwise.
  int homogeneous_degree() const;

  NCElement& operator+=(const NCElement& o);
  NCElement& operator-=(const NCElement& o);
  friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
  friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
  friend bool operator==(const NCElement& a, const NCElement& b);

 private:
  void check_shape(const NCElement& o) const;

  std::vector<int> row_dims_, col_dims_;
  std::map<Monomial, QMatrix> terms_;  // only nonzero coefficients
};

// Product u * v followed by the reduction x2 x1 -> x1 x2 + lambda z^2, with
// lambda_a acting on the node-a row block. Total degree must stay <= 2.
NCElement nc_multiply(const NCElement& u, const NCElement& v, const std::vector<Rational>& lambda);

// Framed cyclic quiver data: nodes 0..N-1 with B1 along a -> a+1 and B2
// along a -> a-1 (mod N). N = 1 is the trivial group with B1, B2 loops.
struct MonadBlocks {
  int nodes = 1;
  std::vector<int> v_dims, w_dims;
  QMatrix B1, B2;  // V -> V
  QMatrix I;       // W -> V
  QMatrix J;       // V -> W
  std::vector<Rational> lambda;
};

// Column map a : V -> V + V + W and row map b : V + V + W -> V.
struct MonadData {
  MonadBlocks blocks;
  std::array<NCElement, 3> a;
  std::array<NCElement, 3> b;
};

// a = (x2 - B2 z, B1 z - x1, J z), b = (B1 z - x1, B2 z - x2, I z).
// Throws ShapeMismatch on inconsistent shapes or blocks off the cyclic grading.
MonadData build_monad(MonadBlocks blocks);

// From a type-A representation (J = 0, I = framing vectors). Throws
// UnsupportedType for families D and E; lambda is per node label.
MonadData build_monad(const N1Representation& rep, std::vector<Rational> lambda);

struct MonadCheck {
  NCElement composite;  // b o a in normal form
  bool vanishes = false;
};

MonadCheck compose_and_check(const MonadData& m);

// Node-diagonal block of a block matrix with the given node dimensions.
QMatrix node_block(const QMatrix& m, const std::vector<int>& dims, int node);

}  // namespace ade
