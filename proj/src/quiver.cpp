#include "ade/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace ade {

std::string to_string(const NodeId& n) {
  return n.leaf ? "leaf(" + std::to_string(n.label) + ")" : std::to_string(n.label);
}

std::size_t QuiverSpec::count(ArrowKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.kind == kind; }));
}

int mckay_sign(const DynkinType& type, int source, int target, int pair_index) {
  if (type.family() == Family::A) {
    const int n = type.rank();
    if (n == 1) {
      const bool forward = source == 0 && target == 1;
      return (pair_index == 0) == forward ? 1 : -1;
    }
    return target == (source + 1) % (n + 1) ? 1 : -1;
  }
  return source < target ? 1 : -1;
}

std::vector<Arrow> mckay_arrows(const DynkinType& type, bool affine) {
  std::vector<Arrow> arrows;
  int prev_a = -1, prev_b = -1, pair = 0;
  for (auto [a, b] : dynkin_edges(type, true)) {
    pair = (a == prev_a && b == prev_b) ? pair + 1 : 0;
    prev_a = a;
    prev_b = b;
    if (!affine && (a == 0 || b == 0)) continue;
    arrows.push_back({{a, false}, {b, false}, ArrowKind::mckay, mckay_sign(type, a, b, pair), pair});
    arrows.push_back({{b, false}, {a, false}, ArrowKind::mckay, mckay_sign(type, b, a, pair), pair});
  }
  return arrows;
}

QuiverSpec build_mckay_quiver(const DynkinType& type) {
  QuiverSpec q{type, Flavor::mckay, {}, mckay_arrows(type, true)};
  for (int a = 0; a < type.node_count(true); ++a) q.nodes.push_back({a, false});
  return q;
}

QuiverSpec build_extended_quiver(const DynkinType& type) {
  QuiverSpec q = build_mckay_quiver(type);
  q.flavor = Flavor::extended;
  const int nn = type.node_count(true);
  for (int a = 0; a < nn; ++a) {
    q.nodes.push_back({a, true});
    q.arrows.push_back({{a, true}, {a, false}, ArrowKind::framing_in, 0, 0});
    q.arrows.push_back({{a, false}, {a, true}, ArrowKind::framing_out, 0, 0});
  }
  return q;
}

QuiverSpec build_n1_quiver(const DynkinType& type) {
  QuiverSpec q = build_mckay_quiver(type);
  q.flavor = Flavor::n1;
  for (int a = 0; a < type.node_count(true); ++a) {
    q.arrows.push_back({{a, false}, {a, false}, ArrowKind::loop, 0, 0});
  }
  return q;
}

namespace {
std::string dot_id(const NodeId& n) {
  return (n.leaf ? "leaf" : "n") + std::to_string(n.label);
}
const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::mckay: return "mckay";
    case Flavor::extended: return "extended";
    case Flavor::n1: return "n1";
  }
  return "?";
}
}  // namespace

std::string to_dot(const QuiverSpec& q) {
  const auto delta = marks(q.type).delta;
  std::ostringstream os;
  os << "digraph \"" << flavor_name(q.flavor) << '_' << q.type.name() << "\" {\n";
  for (const auto& n : q.nodes) {
    os << "  " << dot_id(n);
    if (n.leaf) {
      os << " [shape=box, label=\"leaf(" << n.label << ")\"];\n";
    } else {
      os << " [shape=circle, label=\"" << n.label << "\\ndelta=" << delta[n.label] << "\"];\n";
    }
  }
  for (const auto& a : q.arrows) {
    os << "  " << dot_id(a.source) << " -> " << dot_id(a.target);
    switch (a.kind) {
      case ArrowKind::mckay:
        os << " [label=\"" << (a.sign > 0 ? "+1" : "-1") << "\"";
        if (a.pair_index > 0) os << ", color=blue";
        os << "];\n";
        break;
      case ArrowKind::loop:
        os << " [label=\"psi_" << a.source.label << "\", style=dashed];\n";
        break;
      case ArrowKind::framing_in:
      case ArrowKind::framing_out:
        os << " [style=dotted];\n";
        break;
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace ade
