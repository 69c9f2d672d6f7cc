#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ade/matrix.hpp"
#include "ade/rational.hpp"

namespace ade {

using Complex = std::complex<double>;

// Univariate polynomial in t with exact rational coefficients, ascending
// degree. The zero polynomial has no coefficients; otherwise the leading
// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  Complex operator()(Complex t) const;
  // Horner's rule on a square matrix argument.
  QMatrix operator()(const QMatrix& m) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

// Yun's algorithm: returns (factor, multiplicity) with pairwise coprime monic
// squarefree factors and p = leading * prod factor^multiplicity. p nonzero.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

// Complex roots of a squarefree polynomial as eigenvalues of its companion
// matrix, polished by a few Newton steps. Ordered by (real, imag).
std::vector<Complex> companion_roots(const Polynomial& squarefree);

struct PolynomialRoot {
  Complex value;
  int multiplicity;
};

// All complex roots with exact multiplicities (via squarefree decomposition).
// Roots of different squarefree factors closer than cluster_tol are merged.
std::vector<PolynomialRoot> roots_with_multiplicity(const Polynomial& p, double cluster_tol);

// Rational roots of p with multiplicity, exact. Candidates come from
// continued-fraction approximation of numeric roots and are verified exactly.
std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p);

}  // namespace ade
