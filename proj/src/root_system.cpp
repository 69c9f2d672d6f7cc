#include "ade/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "ade/errors.hpp"
#include "ade/linalg.hpp"

namespace ade {

DynkinType::DynkinType(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
  }
  if (!ok) throw InvalidType("invalid Dynkin type " + name());
}

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidType("invalid Dynkin type '" + std::string(text) + "'");
  Family f;
  switch (text.front()) {
    case 'A': case 'a': f = Family::A; break;
    case 'D': case 'd': f = Family::D; break;
    case 'E': case 'e': f = Family::E; break;
    default: throw InvalidType("invalid Dynkin family in '" + std::string(text) + "'");
  }
  int rank = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9' || rank > 1000) {
      throw InvalidType("invalid Dynkin rank in '" + std::string(text) + "'");
    }
    rank = rank * 10 + (c - '0');
  }
  return DynkinType(f, rank);
}

std::string DynkinType::name() const {
  const char c = family_ == Family::A ? 'A' : family_ == Family::D ? 'D' : 'E';
  return std::string(1, c) + std::to_string(rank_);
}

std::vector<DynkinType> DynkinType::supported() {
  std::vector<DynkinType> out;
  for (int n = 1; n <= 8; ++n) out.emplace_back(Family::A, n);
  for (int n = 4; n <= 8; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) out.emplace_back(Family::E, n);
  return out;
}

std::vector<std::pair<int, int>> dynkin_edges(const DynkinType& type, bool affine) {
  std::vector<std::pair<int, int>> e;
  const int n = type.rank();
  switch (type.family()) {
    case Family::A:
      for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
      if (affine) {
        e.emplace_back(0, 1);
        e.emplace_back(0, n);  // for n = 1 this is the second bond 0-1
      }
      break;
    case Family::D:
      for (int i = 1; i < n - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 2, n - 1);
      e.emplace_back(n - 2, n);
      if (affine) e.emplace_back(0, 2);
      break;
    case Family::E: {
      // Chain 1..n-1 without its last arm node, plus the short arm.
      const int branch = n == 6 ? 2 : n == 7 ? 3 : 5;
      const int chain_end = n == 6 ? 4 : n - 1;
      for (int i = 1; i < chain_end; ++i) e.emplace_back(i, i + 1);
      if (n == 6) {
        e.emplace_back(branch, 5);
        e.emplace_back(5, 6);
      } else {
        e.emplace_back(branch, n);
      }
      if (affine) e.emplace_back(0, 1);
      break;
    }
  }
  std::sort(e.begin(), e.end());
  return e;
}

IMatrix affine_adjacency(const DynkinType& type) {
  const int nn = type.node_count(true);
  IMatrix adj(nn, nn);
  for (auto [a, b] : dynkin_edges(type, true)) {
    adj(a, b) += 1;
    adj(b, a) += 1;
  }
  return adj;
}

CartanMatrix cartan_matrix(const DynkinType& type, bool affine) {
  CartanMatrix c;
  c.affine = affine;
  const int nn = type.node_count(affine);
  const int offset = affine ? 0 : 1;
  for (int i = 0; i < nn; ++i) c.node_labels.push_back(i + offset);
  c.entries = IMatrix(nn, nn);
  for (int i = 0; i < nn; ++i) c.entries(i, i) = 2;
  for (auto [a, b] : dynkin_edges(type, affine)) {
    c.entries(a - offset, b - offset) -= 1;
    c.entries(b - offset, a - offset) -= 1;
  }
  return c;
}

MarksVector marks(const DynkinType& type) {
  const CartanMatrix c = cartan_matrix(type, true);
  const std::size_t nn = c.entries.rows();
  QMatrix q(nn, nn);
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) q(i, j) = Rational(c.entries(i, j));
  const QMatrix kernel = nullspace(q);
  if (kernel.cols() != 1) throw Error("affine Cartan kernel is not one-dimensional");

  // Scale to a primitive integer vector with positive entries.
  mpz_class den_lcm = 1;
  for (std::size_t i = 0; i < nn; ++i) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), kernel(i, 0).get_den_mpz_t());
  std::vector<mpz_class> v(nn);
  mpz_class g = 0;
  for (std::size_t i = 0; i < nn; ++i) {
    v[i] = kernel(i, 0).get_num() * (den_lcm / kernel(i, 0).get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
  }
  if (v[0] < 0) g = -g;
  MarksVector m;
  for (auto& x : v) m.delta.push_back(static_cast<int>(mpz_class(x / g).get_si()));
  return m;
}

int Root::height() const { return std::accumulate(coefficients.begin(), coefficients.end(), 0); }

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < r.coefficients.size(); ++i) os << (i ? "," : "") << r.coefficients[i];
  os << ')';
  return os.str();
}

long cartan_pairing(const CartanMatrix& finite, const std::vector<int>& r, const std::vector<int>& s) {
  long acc = 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) acc += r[i] * finite.entries(i, j) * s[j];
  return acc;
}

std::vector<Root> positive_roots(const DynkinType& type) {
  const CartanMatrix c = cartan_matrix(type, false);
  const int n = type.rank();
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const std::vector<int> beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      // s_i(beta) = beta - <beta, alpha_i> alpha_i
      long pairing = 0;
      for (int j = 0; j < n; ++j) pairing += c.entries(i, j) * beta[j];
      if (pairing == 0) continue;
      std::vector<int> image = beta;
      image[i] -= static_cast<int>(pairing);
      if (image[i] < 0) continue;  // only s_i(alpha_i) = -alpha_i leaves R+
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  std::vector<Root> roots;
  for (const auto& v : seen) roots.push_back(Root{v});
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coefficients < b.coefficients;
  });
  return roots;
}

bool is_positive_root(const DynkinType& type, const std::vector<int>& coefficients) {
  if (static_cast<int>(coefficients.size()) != type.rank()) {
    throw ShapeMismatch("root coefficient vector has " + std::to_string(coefficients.size()) +
                        " entries, expected " + std::to_string(type.rank()));
  }
  const auto roots = positive_roots(type);
  return std::any_of(roots.begin(), roots.end(),
                     [&](const Root& r) { return r.coefficients == coefficients; });
}

Root highest_root(const DynkinType& type) { return positive_roots(type).back(); }

}  // namespace ade
