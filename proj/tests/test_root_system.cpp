#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <functional>

#include "ade/errors.hpp"
#include "ade/root_system.hpp"

using namespace ade;

namespace {

// Perron eigenvector of the affine adjacency (eigenvalue 2), scaled so the
// affine node has mark 1.
std::vector<int> marks_oracle(const DynkinType& t) {
  const IMatrix adj = affine_adjacency(t);
  const int n = static_cast<int>(adj.rows());
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = static_cast<double>(adj(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  Eigen::VectorXd v = es.eigenvectors().col(n - 1);
  CHECK(es.eigenvalues()(n - 1) == doctest::Approx(2.0));
  v /= v(0);
  std::vector<int> out;
  for (int i = 0; i < n; ++i) out.push_back(static_cast<int>(std::lround(v(i))));
  return out;
}

// All nonnegative integer vectors below the finite marks with v^T C v = 2.
std::vector<std::vector<int>> roots_oracle(const DynkinType& t) {
  const auto c = cartan_matrix(t, false).entries;
  const auto delta = marks(t).delta;
  const int n = t.rank();
  std::vector<std::vector<int>> out;
  std::vector<int> v(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      long q = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) q += v[a] * c(a, b) * v[b];
      bool nonzero = std::any_of(v.begin(), v.end(), [](int x) { return x != 0; });
      if (nonzero && q == 2) out.push_back(v);
      return;
    }
    for (int k = 0; k <= delta[i + 1]; ++k) {
      v[i] = k;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("type parsing and validation") {
  CHECK(DynkinType::parse("A2").name() == "A2");
  CHECK(DynkinType::parse("E8").rank() == 8);
  CHECK_THROWS_AS(DynkinType::parse("D3"), InvalidType);
  CHECK_THROWS_AS(DynkinType::parse("E9"), InvalidType);
  CHECK_THROWS_AS(DynkinType::parse("A0"), InvalidType);
  CHECK_THROWS_AS(DynkinType::parse("F4"), InvalidType);
  CHECK_THROWS_AS(DynkinType::parse("A"), InvalidType);
  CHECK(DynkinType::supported().size() == 16);
}

TEST_CASE("Cartan matrices") {
  const auto a2 = cartan_matrix(DynkinType::parse("A2"), false);
  CHECK(a2.entries == IMatrix{{2, -1}, {-1, 2}});
  const auto a1 = cartan_matrix(DynkinType::parse("A1"), true);
  CHECK(a1.entries == IMatrix{{2, -2}, {-2, 2}});
  for (const auto& t : DynkinType::supported()) {
    const auto c = cartan_matrix(t, true).entries;
    CHECK(c == c.transpose());
    const auto delta = marks(t).delta;
    for (std::size_t i = 0; i < c.rows(); ++i) {
      long s = 0;
      for (std::size_t j = 0; j < c.cols(); ++j) s += c(i, j) * delta[j];
      CHECK(s == 0);
    }
  }
}

TEST_CASE("marks agree with the Perron oracle") {
  for (const auto& t : DynkinType::supported()) {
    CAPTURE(t.name());
    CHECK(marks(t).delta == marks_oracle(t));
    CHECK(marks(t).delta[0] == 1);
  }
  CHECK(marks(DynkinType::parse("A2")).delta == std::vector<int>{1, 1, 1});
  CHECK(marks(DynkinType::parse("D4")).delta == std::vector<int>{1, 1, 2, 1, 1});
  CHECK(marks(DynkinType::parse("E8")).delta == std::vector<int>{1, 2, 3, 4, 5, 6, 4, 2, 3});
}

TEST_CASE("positive roots agree with brute-force enumeration") {
  for (const auto& t : DynkinType::supported()) {
    CAPTURE(t.name());
    auto brute = roots_oracle(t);
    std::vector<std::vector<int>> closure;
    for (const auto& r : positive_roots(t)) closure.push_back(r.coefficients);
    std::sort(brute.begin(), brute.end());
    std::sort(closure.begin(), closure.end());
    CHECK(brute == closure);
  }
}

TEST_CASE("root membership and highest root") {
  const auto a2 = DynkinType::parse("A2");
  CHECK(is_positive_root(a2, {1, 1}));
  CHECK_FALSE(is_positive_root(a2, {1, 2}));
  CHECK_FALSE(is_positive_root(a2, {0, 0}));
  CHECK_THROWS_AS(is_positive_root(a2, {1}), ShapeMismatch);
  CHECK(highest_root(DynkinType::parse("D4")).coefficients == std::vector<int>{1, 2, 1, 1});
  const auto roots = positive_roots(DynkinType::parse("E6"));
  for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].height() <= roots[i].height());
}
