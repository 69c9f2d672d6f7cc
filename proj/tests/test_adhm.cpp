#include <doctest.h>

#include "ade/adhm.hpp"
#include "ade/errors.hpp"
#include "instances.hpp"

using namespace ade;
using namespace ade::testing;

namespace {

QMatrix S(long v) { return QMatrix{{Rational(v)}}; }

// The worked A2 representation: dims 1, Psi = 0, u0 = 1, u1 = 0, u2 = 1,
// w0 = 0, w1 = 0, w2 = 1, v0 = 1.
N1Representation worked_a2(long u2 = 1) {
  N1Representation rep = N1Representation::zero(DynkinType::parse("A2"), {1, 1, 1});
  rep.B[{0, 1, 0}] = S(1);
  rep.B[{1, 2, 0}] = S(0);
  rep.B[{2, 0, 0}] = S(u2);
  rep.B[{1, 0, 0}] = S(0);
  rep.B[{2, 1, 0}] = S(0);
  rep.B[{0, 2, 0}] = S(1);
  rep.set_v0(S(1));
  return rep;
}

DeformationParam worked_theta() {
  return complete_affine_theta(DynkinType::parse("A2"), {{1, Polynomial{0, 1}}, {2, Polynomial{-1, 1}}});
}

}  // namespace

TEST_CASE("worked A2 residuals") {
  const auto res = check_relations(worked_a2(), worked_theta());
  CHECK(res.vanishes());
  const auto bad = check_relations(worked_a2(0), worked_theta());
  CHECK(bad.node_residuals.at(0) == S(1));
  CHECK(bad.node_residuals.at(1) == S(0));
  CHECK(bad.edges_vanish());
  const auto empty = N1Representation::zero(DynkinType::parse("A2"), {0, 0, 0});
  CHECK(check_relations(empty, worked_theta()).vanishes());
}

TEST_CASE("edge residuals") {
  N1Representation rep = N1Representation::zero(DynkinType::parse("A2"), {1, 1, 1});
  rep.psi[1] = S(1);
  rep.B[{0, 1, 0}] = S(1);
  CHECK(edge_residual(rep, {0, 1, 0}) == S(1));
  CHECK(edge_residual(rep, {1, 2, 0}) == S(0));
  rep.psi[0] = S(1);
  rep.B[{0, 1, 0}] = S(7);
  CHECK(edge_residual(rep, {0, 1, 0}) == S(0));
}

TEST_CASE("non-degeneracy") {
  CHECK(is_nondegenerate(worked_a2()));
  N1Representation flat = N1Representation::zero(DynkinType::parse("A2"), {1, 1, 1});
  flat.set_v0(S(1));
  CHECK_FALSE(is_nondegenerate(flat));
  CHECK(invariant_closure(flat)[0].cols() == 1);
  CHECK(invariant_closure(flat)[1].cols() == 0);
  CHECK(is_nondegenerate(N1Representation::zero(DynkinType::parse("A2"), {0, 0, 0})));
  // Psi closes V0 from v0 = e1 when Psi is a shift.
  N1Representation shift = N1Representation::zero(DynkinType::parse("A1"), {2, 0});
  shift.psi[0] = QMatrix{{0, 0}, {1, 0}};
  shift.set_v0(QMatrix{{1}, {0}});
  CHECK(is_nondegenerate(shift));
}

TEST_CASE("direct sum with an unframed summand is degenerate") {
  Rng rng(3);
  const auto d = worked_theta();
  for (int i = 0; i < 10; ++i) {
    N1Representation other = random_representation(rng, d.type(), 1);
    for (auto& f : other.framing) f = QMatrix(f.rows(), 0);
    if (other.total_dim() == 0) continue;
    CHECK_FALSE(is_nondegenerate(direct_sum(worked_a2(), other)));
  }
}

TEST_CASE("restriction and support") {
  const auto fin = restrict_finite(worked_a2());
  CHECK(fin.dims == std::vector<int>{0, 1, 1});
  CHECK(fin.B.size() == 2);
  const auto a1 = restrict_finite(N1Representation::zero(DynkinType::parse("A1"), {1, 1}));
  CHECK(a1.B.empty());
  CHECK(a1.dims == std::vector<int>{0, 1});

  N1Representation r = N1Representation::zero(DynkinType::parse("A2"), {0, 2, 0}, false);
  r.psi[1] = QMatrix{{1, 0}, {0, 2}};
  const auto sp = support(r);
  REQUIRE(sp.at(1).size() == 2);
  CHECK(std::abs(sp.at(1)[0] - Complex(1)) < 1e-9);
  CHECK(std::abs(sp.at(1)[1] - Complex(2)) < 1e-9);

  const auto rep = check_support_property(fin, worked_theta());
  CHECK(rep.verdict);
  N1Representation bad = N1Representation::zero(DynkinType::parse("A1"), {0, 1}, false);
  bad.psi[1] = S(5);
  const auto theta_t = complete_affine_theta(DynkinType::parse("A1"), {{1, Polynomial{0, 1}}});
  CHECK_FALSE(check_support_property(bad, theta_t).verdict);
  CHECK_THROWS(check_support_property(worked_a2(), worked_theta()));
}

TEST_CASE("trace identity on solutions") {
  Rng rng(11);
  for (auto name : {"A1", "A2", "A3", "A4"}) {
    const auto t = DynkinType::parse(name);
    for (int i = 0; i < 10; ++i) {
      const auto d = random_theta(rng, t, 2);
      const auto rep = random_solution_type_a(rng, t, d);
      REQUIRE(check_relations(rep, d).vanishes());
      Rational s = 0;
      for (int a = 0; a < t.node_count(true); ++a) s += d.theta(a)(rep.psi[a]).trace();
      CHECK(s == 0);
    }
  }
}

TEST_CASE("conjugation conjugates residuals") {
  Rng rng(5);
  const auto t = DynkinType::parse("A2");
  const auto d = worked_theta();
  for (int i = 0; i < 10; ++i) {
    const auto rep = random_representation(rng, t, 2);
    const auto g = random_base_change(rng, rep.dims);
    const auto conj = conjugate(rep, g);
    const auto r0 = check_relations(rep, d), r1 = check_relations(conj, d);
    for (const auto& [a, m] : r0.node_residuals) CHECK(r1.node_residuals.at(a) == g[a] * m * *inverse(g[a]));
    for (const auto& [k, m] : r0.edge_residuals)
      CHECK(r1.edge_residuals.at(k) == g[k.to] * m * *inverse(g[k.from]));
    CHECK(is_nondegenerate(rep) == is_nondegenerate(conj));
  }
  CHECK_THROWS(conjugate(worked_a2(), {S(0), S(1), S(1)}));
}

TEST_CASE("shape validation") {
  N1Representation rep = worked_a2();
  rep.B[{0, 1, 0}] = QMatrix(2, 1);
  CHECK_THROWS_AS(rep.validate(), ShapeMismatch);
  CHECK_THROWS_AS(N1Representation::zero(DynkinType::parse("A2"), {1, 1}), ShapeMismatch);
  CHECK_THROWS_AS(node_residual(worked_a2(), complete_affine_theta(DynkinType::parse("A3"),
                                                                   {{1, Polynomial{0}}, {2, Polynomial{0}}, {3, Polynomial{0}}}),
                                0),
                  InputError);
}
