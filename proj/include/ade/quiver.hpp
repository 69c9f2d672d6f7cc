#pragma once

#include <string>
#include <vector>

#include "ade/root_system.hpp"

namespace ade {

enum class Flavor { mckay, extended, n1 };
enum class ArrowKind { mckay, framing_in, framing_out, loop };

struct NodeId {
  int label = 0;
  bool leaf = false;  // leaf(label) of the extended quiver

  friend bool operator==(const NodeId&, const NodeId&) = default;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

std::string to_string(const NodeId& n);

struct Arrow {
  NodeId source;
  NodeId target;
  ArrowKind kind = ArrowKind::mckay;
  int sign = 0;        // epsilon for McKay arrows, 0 otherwise
  int pair_index = 0;  // distinguishes the two bonds of affine A1
};

struct QuiverSpec {
  DynkinType type;
  Flavor flavor;
  std::vector<NodeId> nodes;
  std::vector<Arrow> arrows;

  std::size_t count(ArrowKind kind) const;
};

// Sign convention for McKay arrows. Type A_n (n >= 2): +1 along the cyclic
// orientation a -> a+1 (mod n+1), -1 against it. Affine A1: pair 0 has
// 0 -> 1 positive, pair 1 has 1 -> 0 positive. Types D and E: +1 from the
// lower to the higher label.
int mckay_sign(const DynkinType& type, int source, int target, int pair_index);

// One opposite pair of arrows per bond of the affine diagram.
QuiverSpec build_mckay_quiver(const DynkinType& type);
// McKay quiver plus a framing leaf per node, with arrows both ways.
QuiverSpec build_extended_quiver(const DynkinType& type);
// McKay quiver plus one loop per node.
QuiverSpec build_n1_quiver(const DynkinType& type);

// McKay arrows of the affine quiver, or of the finite quiver (node 0 and its
// arrows deleted) when affine is false. Same order as build_mckay_quiver.
std::vector<Arrow> mckay_arrows(const DynkinType& type, bool affine);

// Graphviz rendering with a stable node and arrow order.
std::string to_dot(const QuiverSpec& q);

}  // namespace ade
