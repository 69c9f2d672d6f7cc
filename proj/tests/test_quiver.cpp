#include <doctest.h>

#include "ade/quiver.hpp"

using namespace ade;

TEST_CASE("McKay quiver arrow counts") {
  for (const auto& t : DynkinType::supported()) {
    const auto q = build_mckay_quiver(t);
    CHECK(q.arrows.size() == 2 * dynkin_edges(t, true).size());
    const auto n1 = build_n1_quiver(t);
    CHECK(n1.count(ArrowKind::loop) == static_cast<std::size_t>(t.node_count(true)));
    const auto ext = build_extended_quiver(t);
    CHECK(ext.count(ArrowKind::framing_in) == static_cast<std::size_t>(t.node_count(true)));
    CHECK(ext.count(ArrowKind::framing_out) == static_cast<std::size_t>(t.node_count(true)));
    CHECK(ext.nodes.size() == 2 * static_cast<std::size_t>(t.node_count(true)));
  }
  CHECK(build_mckay_quiver(DynkinType::parse("A1")).arrows.size() == 4);
  CHECK(build_mckay_quiver(DynkinType::parse("A2")).arrows.size() == 6);
  CHECK(build_mckay_quiver(DynkinType::parse("E8")).arrows.size() == 16);
}

TEST_CASE("signs are antisymmetric per pair") {
  for (const auto& t : DynkinType::supported()) {
    const auto arrows = mckay_arrows(t, true);
    for (const auto& a : arrows) {
      CHECK((a.sign == 1 || a.sign == -1));
      CHECK(mckay_sign(t, a.target.label, a.source.label, a.pair_index) == -a.sign);
    }
  }
  const auto a2 = DynkinType::parse("A2");
  CHECK(mckay_sign(a2, 0, 1, 0) == 1);
  CHECK(mckay_sign(a2, 2, 0, 0) == 1);
  CHECK(mckay_sign(a2, 0, 2, 0) == -1);
  const auto a1 = DynkinType::parse("A1");
  CHECK(mckay_sign(a1, 0, 1, 0) == 1);
  CHECK(mckay_sign(a1, 1, 0, 1) == 1);
}

TEST_CASE("finite arrows avoid node 0") {
  for (const auto& a : mckay_arrows(DynkinType::parse("D5"), false)) {
    CHECK(a.source.label != 0);
    CHECK(a.target.label != 0);
  }
  CHECK(mckay_arrows(DynkinType::parse("A1"), false).empty());
}

TEST_CASE("dot output is stable") {
  const auto dot = to_dot(build_n1_quiver(DynkinType::parse("A1")));
  CHECK(dot.find("digraph \"n1_A1\"") == 0);
  CHECK(dot.find("n0 -> n0 [label=\"psi_0\", style=dashed];") != std::string::npos);
  CHECK(dot == to_dot(build_n1_quiver(DynkinType::parse("A1"))));
  const auto ext = to_dot(build_extended_quiver(DynkinType::parse("A2")));
  CHECK(ext.find("leaf0") != std::string::npos);
}
