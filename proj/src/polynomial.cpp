#include "ade/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "ade/errors.hpp"

namespace ade {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Complex Polynomial::operator()(Complex t) const {
  Complex acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + to_double(*it);
  return acc;
}

QMatrix Polynomial::operator()(const QMatrix& m) const {
  if (!m.square()) throw ShapeMismatch("polynomial of non-square matrix");
  const std::size_t n = m.rows();
  QMatrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Rational(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial{}, *this};
  std::vector<Rational> quot(degree() - dd + 1, Rational(0));
  for (int k = degree(); k >= dd; --k) {
    const Rational f = rem[k] / divisor.leading();
    quot[k - dd] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * divisor.coeffs_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const bool unit = mag == 1 && k > 0;
    if (!unit) os << ade::to_string(mag);
    if (k > 0) {
      if (!unit) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw Error("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<Polynomial, int>> out;
  const Polynomial f = p.monic();
  if (f.degree() == 0) return out;
  const Polynomial fp = f.derivative();
  Polynomial a = gcd(f, fp);
  Polynomial b = f.divmod(a).first;
  Polynomial c = fp.divmod(a).first;
  Polynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

namespace {

bool complex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

Complex newton_polish(const Polynomial& q, const Polynomial& dq, Complex x) {
  for (int it = 0; it < 4; ++it) {
    const Complex fx = q(x);
    const Complex dfx = dq(x);
    if (std::abs(dfx) == 0.0) break;
    const Complex next = x - fx / dfx;
    if (std::abs(q(next)) >= std::abs(fx)) break;
    x = next;
  }
  return x;
}

// Convergents of the continued fraction of x with denominator below max_den.
std::vector<Rational> convergents(double x, long max_den) {
  std::vector<Rational> out;
  mpz_class h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  double r = x;
  for (int step = 0; step < 40; ++step) {
    const double fl = std::floor(r);
    if (!std::isfinite(fl) || std::abs(fl) > 1e15) break;
    const mpz_class a(static_cast<long>(fl));
    const mpz_class h = a * h_prev + h_prev2;
    const mpz_class k = a * k_prev + k_prev2;
    if (k > max_den) break;
    out.emplace_back(h, k);
    out.back().canonicalize();
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const double frac = r - fl;
    if (frac < 1e-14) break;
    r = 1.0 / frac;
  }
  return out;
}

}  // namespace

std::vector<Complex> companion_roots(const Polynomial& squarefree) {
  const Polynomial q = squarefree.monic();
  const int n = q.degree();
  std::vector<Complex> roots;
  if (n <= 0) return roots;
  if (n == 1) {
    roots.emplace_back(-to_double(q.coefficient(0)), 0.0);
    return roots;
  }
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -to_double(q.coefficient(i));
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
  const Polynomial dq = q.derivative();
  for (int i = 0; i < n; ++i) roots.push_back(newton_polish(q, dq, solver.eigenvalues()(i)));
  std::sort(roots.begin(), roots.end(), complex_less);
  return roots;
}

std::vector<PolynomialRoot> roots_with_multiplicity(const Polynomial& p, double cluster_tol) {
  std::vector<PolynomialRoot> out;
  if (p.is_zero()) throw Error("roots of the zero polynomial");
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    for (const Complex& z : companion_roots(factor)) {
      auto it = std::find_if(out.begin(), out.end(), [&](const PolynomialRoot& r) {
        return std::abs(r.value - z) < cluster_tol;
      });
      if (it != out.end()) {
        it->multiplicity += mult;
      } else {
        out.push_back({z, mult});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PolynomialRoot& a, const PolynomialRoot& b) { return complex_less(a.value, b.value); });
  return out;
}

std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p) {
  std::vector<std::pair<Rational, int>> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    for (const Complex& z : companion_roots(factor)) {
      if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z.real()))) continue;
      for (const Rational& cand : convergents(z.real(), 100000000L)) {
        // Early convergents can be other roots of the same factor.
        if (std::abs(to_double(cand) - z.real()) > 1e-6 * (1.0 + std::abs(z.real()))) continue;
        if (factor(cand) == 0) {
          const bool seen = std::any_of(out.begin(), out.end(),
                                        [&](const auto& e) { return e.first == cand; });
          if (!seen) out.emplace_back(cand, mult);
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace ade
