#include <doctest.h>

#include <numeric>

#include "ade/errors.hpp"
#include "ade/sheaf_corr.hpp"
#include "instances.hpp"

using namespace ade;
using namespace ade::testing;

namespace {

// det(t I - A) at t by the Leibniz formula.
Rational det_oracle(const QMatrix& a, const Rational& t) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= (i == perm[i] ? t : Rational(0)) - a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TorsionSheafData sheaf(std::vector<SheafPoint> pts) { return TorsionSheafData{std::move(pts)}; }

}  // namespace

TEST_CASE("sheaf to endomorphism") {
  CHECK(sheaf_to_endo(sheaf({{Rational(0), {2}}})) == QMatrix{{0, 1}, {0, 0}});
  CHECK(sheaf_to_endo(sheaf({{Rational(1), {1}}, {Rational(2), {1}}})) == QMatrix{{1, 0}, {0, 2}});
  CHECK(sheaf_to_endo(sheaf({})).rows() == 0);
  CHECK_THROWS_AS(sheaf_to_endo(sheaf({{Rational(0), {1, 2}}})), InputError);
  CHECK_THROWS_AS(sheaf_to_endo(sheaf({{Rational(0), {1}}, {Rational(0), {1}}})), InputError);
  CHECK_THROWS_AS(sheaf_to_endo(sheaf({{Complex(0, 1), {1}}})), InputError);
  const auto num = sheaf_to_endo_numeric(sheaf({{Complex(0, 1), {2}}}));
  CHECK(num(0, 0) == Complex(0, 1));
  CHECK(num(0, 1) == Complex(1, 0));
}

TEST_CASE("endomorphism to sheaf") {
  CHECK(endo_to_sheaf(QMatrix{{0, 1}, {0, 0}}).sheaf == sheaf({{Rational(0), {2}}}));
  CHECK(endo_to_sheaf(QMatrix{{1, 0}, {0, 2}}).sheaf == sheaf({{Rational(2), {1}}, {Rational(1), {1}}}));
  CHECK(endo_to_sheaf(QMatrix(2, 2)).sheaf == sheaf({{Rational(0), {1, 1}}}));
  CHECK_THROWS_AS(endo_to_sheaf(QMatrix{{0, -1}, {1, 0}}), NonRationalSpectrum);
  CHECK_THROWS_AS(endo_to_sheaf(QMatrix{{0, 2}, {1, 0}}), NonRationalSpectrum);
  CHECK(endo_to_sheaf(QMatrix{{Rational(1, 2), 1}, {0, Rational(1, 2)}}).sheaf ==
        sheaf({{Rational(1, 2), {2}}}));
}

TEST_CASE("exact round trips on random sheaves") {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    const TorsionSheafData s = random_sheaf(rng);
    const QMatrix j = sheaf_to_endo(s);
    CHECK(endo_to_sheaf(j).sheaf == s);
    const QMatrix g = random_invertible(rng, j.rows());
    const QMatrix psi = g * j * *inverse(g);
    const auto jd = endo_to_sheaf(psi);
    CHECK(jd.sheaf == s);
    CHECK(jd.base_change * psi * *inverse(jd.base_change) == jd.jordan);
    CHECK(is_regular(psi) == std::all_of(jd.sheaf.points.begin(), jd.sheaf.points.end(),
                                         [](const SheafPoint& p) { return p.partition.size() == 1; }));
    CHECK(jd.sheaf.length() == static_cast<int>(psi.rows()));
  }
}

TEST_CASE("numeric path") {
  const auto s = endo_to_sheaf_numeric(QMatrix{{0, 1}, {0, 0}});
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0].partition == std::vector<int>{2});
  const auto rot = endo_to_sheaf_numeric(QMatrix{{0, -1}, {1, 0}});
  CHECK(rot.points.size() == 2);
  QMatrix near{{0, Rational(1, 1000000000)}, {0, 0}};
  CHECK_THROWS_AS(endo_to_sheaf_numeric(near, Tolerances::uniform(1e-11)), IllConditioned);
}

TEST_CASE("characteristic polynomial and regularity") {
  CHECK(char_poly(QMatrix{{1, 0}, {0, 2}}) == Polynomial{2, -3, 1});
  CHECK(char_poly(QMatrix(2, 2)) == Polynomial{0, 0, 1});
  CHECK(char_poly(QMatrix{{0, 1}, {0, 0}}) == Polynomial{0, 0, 1});
  CHECK(is_regular(QMatrix{{1, 0}, {0, 2}}));
  CHECK_FALSE(is_regular(QMatrix(2, 2)));
  CHECK(is_regular(QMatrix{{0, 1}, {0, 0}}));
  Rng rng(4);
  for (int n = 1; n <= 5; ++n) {
    const QMatrix a = random_matrix(rng, n, n);
    const Polynomial p = char_poly(a);
    for (int t = -2; t <= 2; ++t) CHECK(p(Rational(t)) == det_oracle(a, t));
  }
}

TEST_CASE("quadruple and quintuple") {
  Rng rng(9);
  for (auto name : {"A1", "A2", "D4"}) {
    const auto t = DynkinType::parse(name);
    for (int i = 0; i < 6; ++i) {
      const auto rep = random_edge_solution(rng, t);
      const auto s = quadruple_to_quintuple(rep);
      const auto back = quintuple_to_quadruple(s.data);
      const auto expected = conjugate(rep, s.base_change);
      CHECK(back.B == expected.B);
      CHECK(back.psi == expected.psi);
      CHECK(back.framing == expected.framing);
    }
  }
  N1Representation bad = N1Representation::zero(DynkinType::parse("A2"), {1, 1, 1});
  bad.psi[1] = QMatrix{{1}};
  bad.B[{0, 1, 0}] = QMatrix{{1}};
  CHECK_THROWS_AS(quadruple_to_quintuple(bad), EdgeRelationViolated);

  QuiverSheafData q;
  q.type = DynkinType::parse("A1");
  q.node_sheaves = {sheaf({{Rational(0), {1}}}), sheaf({})};
  q.arrow_maps = {{{0, 1, 0}, QMatrix(0, 1)}, {{1, 0, 0}, QMatrix(1, 0)},
                  {{0, 1, 1}, QMatrix(0, 1)}, {{1, 0, 1}, QMatrix(1, 0)}};
  q.framing = {QMatrix{{1}}, QMatrix(0, 0)};
  const auto r = quintuple_to_quadruple(q);
  CHECK(r.dims == std::vector<int>{1, 0});
  CHECK(r.psi[0] == QMatrix{{0}});
  CHECK(r.framing[0] == QMatrix{{1}});
  q.node_sheaves[1] = sheaf({{Rational(1), {1}}});
  q.arrow_maps[{0, 1, 0}] = QMatrix{{1}};
  q.arrow_maps[{1, 0, 0}] = QMatrix(1, 1);
  q.arrow_maps[{0, 1, 1}] = QMatrix(1, 1);
  q.arrow_maps[{1, 0, 1}] = QMatrix(1, 1);
  q.framing[1] = QMatrix(1, 0);
  CHECK_THROWS_AS(q.validate(), EdgeRelationViolated);
}
