#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permutree/decoration.hpp"

namespace permutree {

using Vertex = int;  // vertices are 1-indexed; 0 marks an empty slot (blossom)
inline constexpr Vertex kBlossom = 0;

// Named slots of a vertex.  Which ones exist depends on the vertex kind:
//   one parent  -> A          two parents  -> LA, RA
//   one child   -> D          two children -> LD, RD
enum class Slot : unsigned char { A, LA, RA, D, LD, RD };

inline const char* slot_label(Slot s) {
  switch (s) {
    case Slot::A:  return "A";
    case Slot::LA: return "LA";
    case Slot::RA: return "RA";
    case Slot::D:  return "D";
    case Slot::LD: return "LD";
    case Slot::RD: return "RD";
  }
  return "?";
}

inline bool is_parent_slot(Slot s) { return s == Slot::A || s == Slot::LA || s == Slot::RA; }

enum class Extreme { Min, Max };

// A delta-permutree: a directed planar tree where vertex i has the parent
// and child slots dictated by delta_i.  Each slot holds a vertex id or a
// blossom.  Edges are directed child -> parent.
class Permutree {
 public:
  explicit Permutree(Decoration delta) : delta_(std::move(delta)) {
    require_normalized(delta_);
    slots_.assign(static_cast<std::size_t>(delta_.size()) + 1, VertexSlots{});
  }

  int size() const { return delta_.size(); }
  const Decoration& decoration() const { return delta_; }

  bool has_slot(Vertex v, Slot s) const {
    Kind k = delta_.at(v);
    switch (s) {
      case Slot::A:  return !two_parents(k);
      case Slot::LA: case Slot::RA: return two_parents(k);
      case Slot::D:  return !two_children(k);
      case Slot::LD: case Slot::RD: return two_children(k);
    }
    return false;
  }

  Vertex slot(Vertex v, Slot s) const {
    check_vertex(v);
    if (!has_slot(v, s))
      throw std::invalid_argument("vertex " + std::to_string(v) + " has no slot " + slot_label(s));
    return slots_[static_cast<std::size_t>(v)].get(s);
  }

  // Unchecked write, used by builders and tests constructing defective trees.
  void set_slot(Vertex v, Slot s, Vertex occupant) {
    check_vertex(v);
    if (!has_slot(v, s))
      throw std::invalid_argument("vertex " + std::to_string(v) + " has no slot " + slot_label(s));
    slots_[static_cast<std::size_t>(v)].get(s) = occupant;
  }

  std::vector<Slot> parent_slots(Vertex v) const {
    return two_parents(delta_.at(v)) ? std::vector<Slot>{Slot::LA, Slot::RA}
                                     : std::vector<Slot>{Slot::A};
  }

  std::vector<Slot> child_slots(Vertex v) const {
    return two_children(delta_.at(v)) ? std::vector<Slot>{Slot::LD, Slot::RD}
                                      : std::vector<Slot>{Slot::D};
  }

  // Directed edge child -> parent present?
  bool has_edge(Vertex child, Vertex parent) const {
    check_vertex(child);
    check_vertex(parent);
    for (Slot s : parent_slots(child))
      if (slot(child, s) == parent) return true;
    return false;
  }

  // All directed edges (child, parent), ascending by child then parent.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex v = 1; v <= size(); ++v)
      for (Slot s : parent_slots(v)) {
        Vertex p = slot(v, s);
        if (p != kBlossom) out.emplace_back(v, p);
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Undirected neighbors of v (occupants of all its slots).
  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Slot s : parent_slots(v))
      if (Vertex u = slot(v, s); u != kBlossom) out.push_back(u);
    for (Slot s : child_slots(v))
      if (Vertex u = slot(v, s); u != kBlossom) out.push_back(u);
    return out;
  }

  // The chain 1 -> 2 -> ... -> n (Min) or n -> ... -> 2 -> 1 (Max): each
  // lower vertex in the left-or-sole child slot of its successor for Min,
  // mirrored for Max.  These are the bottom and top of the rotation order.
  static Permutree extreme(const Decoration& delta, Extreme which) {
    Permutree t(delta);
    int n = t.size();
    for (int i = 1; i < n; ++i) {
      if (which == Extreme::Min)
        t.attach(i, i + 1);  // i -> i+1
      else
        t.attach(i + 1, i);  // i+1 -> i
    }
    return t;
  }

  // Builds a tree from directed (child, parent) edges, choosing slots by the
  // label rule (smaller label goes left).  Throws if a needed slot is taken.
  static Permutree from_edges(const Decoration& delta,
                              std::span<const std::pair<Vertex, Vertex>> child_parent) {
    Permutree t(delta);
    for (auto [c, p] : child_parent) t.attach(c, p);
    return t;
  }

  static Permutree from_edges(const Decoration& delta,
                              std::initializer_list<std::pair<Vertex, Vertex>> child_parent) {
    return from_edges(delta, std::span<const std::pair<Vertex, Vertex>>(
                                 child_parent.begin(), child_parent.size()));
  }

  // Violation messages, empty iff the tree satisfies every invariant:
  // slot counts per kind, edge reciprocity, n-1 edges and connectivity,
  // and the label condition at every two-slot vertex.
  std::vector<std::string> validate() const;

  bool is_valid() const { return validate().empty(); }

  bool operator==(const Permutree&) const = default;

 private:
  struct VertexSlots {
    Vertex a = kBlossom, la = kBlossom, ra = kBlossom;
    Vertex d = kBlossom, ld = kBlossom, rd = kBlossom;

    Vertex& get(Slot s) {
      switch (s) {
        case Slot::A:  return a;
        case Slot::LA: return la;
        case Slot::RA: return ra;
        case Slot::D:  return d;
        case Slot::LD: return ld;
        case Slot::RD: return rd;
      }
      return a;  // unreachable
    }
    Vertex get(Slot s) const { return const_cast<VertexSlots&>(*this).get(s); }

    bool operator==(const VertexSlots&) const = default;
  };

  void check_vertex(Vertex v) const {
    if (v < 1 || v > size()) throw std::out_of_range("vertex out of range");
  }

  // Inserts the edge c -> p into the slots picked by the label rule.
  void attach(Vertex c, Vertex p) {
    Slot cs = two_children(delta_.at(p)) ? (c < p ? Slot::LD : Slot::RD) : Slot::D;
    Slot ps = two_parents(delta_.at(c)) ? (p < c ? Slot::LA : Slot::RA) : Slot::A;
    if (slot(p, cs) != kBlossom || slot(c, ps) != kBlossom)
      throw std::invalid_argument("edge " + std::to_string(c) + "->" + std::to_string(p) +
                                  ": slot already occupied");
    set_slot(p, cs, c);
    set_slot(c, ps, p);
  }

  friend Permutree rotate(const Permutree&, Vertex, Vertex);
  friend Permutree rotate_back(const Permutree&, Vertex, Vertex);

  Decoration delta_;
  std::vector<VertexSlots> slots_;
};

namespace detail {

// Component of `start` in the undirected tree with vertex `removed` deleted.
inline std::vector<Vertex> component_without(const Permutree& t, Vertex start, Vertex removed) {
  std::vector<bool> seen(static_cast<std::size_t>(t.size()) + 1, false);
  seen[static_cast<std::size_t>(removed)] = true;
  std::vector<Vertex> stack{start}, out;
  seen[static_cast<std::size_t>(start)] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (Vertex u : t.neighbors(v))
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        stack.push_back(u);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// All j with a directed path j -> ... -> i (transitive closure of the child
// relation), ascending.
inline std::vector<Vertex> strict_descendants(const Permutree& t, Vertex i) {
  std::vector<bool> seen(static_cast<std::size_t>(t.size()) + 1, false);
  std::vector<Vertex> stack{i}, out;
  seen[static_cast<std::size_t>(i)] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Slot s : t.child_slots(v)) {
      Vertex c = t.slot(v, s);
      if (c != kBlossom && !seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = true;
        stack.push_back(c);
        out.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Full connected component hanging off the given slot of i (empty for a
// blossom).  This is the subtree LA_i / RA_i / LD_i / RD_i / A_i / D_i.
inline std::vector<Vertex> subtree(const Permutree& t, Vertex i, Slot s) {
  Vertex o = t.slot(i, s);  // throws if the slot does not exist for delta_i
  if (o == kBlossom) return {};
  return detail::component_without(t, o, i);
}

struct EdgeCut {
  Vertex child = 0, parent = 0;
  std::vector<Vertex> child_side;   // I: includes the child endpoint
  std::vector<Vertex> parent_side;  // J = [n] \ I: includes the parent endpoint

  bool operator==(const EdgeCut&) const = default;
};

// Ordered partition (I || J) induced by deleting the directed edge
// child -> parent; I is the side of the child.
inline EdgeCut edge_cut(const Permutree& t, Vertex child, Vertex parent) {
  if (!t.has_edge(child, parent))
    throw std::invalid_argument("edge_cut: no edge " + std::to_string(child) + "->" +
                                std::to_string(parent));
  EdgeCut cut;
  cut.child = child;
  cut.parent = parent;
  cut.child_side = detail::component_without(t, child, parent);
  std::vector<bool> in_i(static_cast<std::size_t>(t.size()) + 1, false);
  for (Vertex v : cut.child_side) in_i[static_cast<std::size_t>(v)] = true;
  for (Vertex v = 1; v <= t.size(); ++v)
    if (!in_i[static_cast<std::size_t>(v)]) cut.parent_side.push_back(v);
  return cut;
}

inline std::vector<EdgeCut> all_edge_cuts(const Permutree& t) {
  std::vector<EdgeCut> out;
  for (auto [c, p] : t.edges()) out.push_back(edge_cut(t, c, p));
  return out;
}

// Rotation of the edge i -> j (i < j, i a child of j).  The edge flips to
// j -> i; the subtree in i's right/sole child slot moves into the slot of j
// that held i, and the subtree in j's left/sole parent slot moves into the
// slot of i that held j.  Label conditions force every other slot to stay.
inline Permutree rotate(const Permutree& t, Vertex i, Vertex j) {
  if (!(i < j) || !t.has_edge(i, j))
    throw std::invalid_argument("rotate: requires the edge " + std::to_string(i) + "->" +
                                std::to_string(j) + " with i<j");
  const Decoration& delta = t.decoration();
  Slot src_child_of_j = two_children(delta.at(j)) ? Slot::LD : Slot::D;   // held i
  Slot src_parent_of_i = two_parents(delta.at(i)) ? Slot::RA : Slot::A;   // held j
  Slot dst_child_of_i = two_children(delta.at(i)) ? Slot::RD : Slot::D;   // will hold j
  Slot dst_parent_of_j = two_parents(delta.at(j)) ? Slot::LA : Slot::A;   // will hold i

  Permutree out = t;
  Vertex b = out.slot(i, dst_child_of_i);   // displaced child subtree root
  Vertex p = out.slot(j, dst_parent_of_j);  // displaced parent subtree root

  out.set_slot(i, dst_child_of_i, j);
  out.set_slot(j, dst_parent_of_j, i);
  out.set_slot(j, src_child_of_j, b);
  out.set_slot(i, src_parent_of_i, p);
  if (b != kBlossom) {
    for (Slot s : out.parent_slots(b))
      if (out.slot(b, s) == i) {
        out.set_slot(b, s, j);
        break;
      }
  }
  if (p != kBlossom) {
    for (Slot s : out.child_slots(p))
      if (out.slot(p, s) == j) {
        out.set_slot(p, s, i);
        break;
      }
  }
  return out;
}

// Inverse surgery: takes the edge j -> i (i < j, j a child of i) back to
// i -> j.  rotate_back(rotate(t, i, j), i, j) == t.
inline Permutree rotate_back(const Permutree& t, Vertex i, Vertex j) {
  if (!(i < j) || !t.has_edge(j, i))
    throw std::invalid_argument("rotate_back: requires the edge " + std::to_string(j) + "->" +
                                std::to_string(i) + " with i<j");
  const Decoration& delta = t.decoration();
  Slot src_child_of_i = two_children(delta.at(i)) ? Slot::RD : Slot::D;   // held j
  Slot src_parent_of_j = two_parents(delta.at(j)) ? Slot::LA : Slot::A;   // held i
  Slot dst_child_of_j = two_children(delta.at(j)) ? Slot::LD : Slot::D;   // will hold i
  Slot dst_parent_of_i = two_parents(delta.at(i)) ? Slot::RA : Slot::A;   // will hold j

  Permutree out = t;
  Vertex b = out.slot(j, dst_child_of_j);
  Vertex p = out.slot(i, dst_parent_of_i);

  out.set_slot(j, dst_child_of_j, i);
  out.set_slot(i, dst_parent_of_i, j);
  out.set_slot(i, src_child_of_i, b);
  out.set_slot(j, src_parent_of_j, p);
  if (b != kBlossom) {
    for (Slot s : out.parent_slots(b))
      if (out.slot(b, s) == j) {
        out.set_slot(b, s, i);
        break;
      }
  }
  if (p != kBlossom) {
    for (Slot s : out.child_slots(p))
      if (out.slot(p, s) == i) {
        out.set_slot(p, s, j);
        break;
      }
  }
  return out;
}

inline std::vector<std::string> Permutree::validate() const {
  std::vector<std::string> report;
  int n = size();

  // Stray occupants in slots the kind does not provide.
  for (Vertex v = 1; v <= n; ++v) {
    const VertexSlots& sl = slots_[static_cast<std::size_t>(v)];
    for (Slot s : {Slot::A, Slot::LA, Slot::RA, Slot::D, Slot::LD, Slot::RD}) {
      Vertex o = sl.get(s);
      if (o == kBlossom) continue;
      if (!has_slot(v, s)) {
        report.push_back("vertex " + std::to_string(v) + ": slot " + slot_label(s) +
                         " not available for its decoration");
        continue;
      }
      if (o < 1 || o > n || o == v)
        report.push_back("vertex " + std::to_string(v) + ": slot " + slot_label(s) +
                         " holds invalid vertex " + std::to_string(o));
    }
  }
  if (!report.empty()) return report;

  // Reciprocity: child slot of p holds c  <=>  a parent slot of c holds p.
  int edge_count = 0;
  for (Vertex p = 1; p <= n; ++p)
    for (Slot s : child_slots(p)) {
      Vertex c = slot(p, s);
      if (c == kBlossom) continue;
      ++edge_count;
      bool reciprocal = false;
      for (Slot ps : parent_slots(c))
        if (slot(c, ps) == p) reciprocal = true;
      if (!reciprocal)
        report.push_back("edge reciprocity: " + std::to_string(c) + " sits in " + slot_label(s) +
                         "_" + std::to_string(p) + " but no parent slot of " + std::to_string(c) +
                         " holds " + std::to_string(p));
    }
  for (Vertex c = 1; c <= n; ++c)
    for (Slot s : parent_slots(c)) {
      Vertex p = slot(c, s);
      if (p == kBlossom) continue;
      bool reciprocal = false;
      for (Slot cs : child_slots(p))
        if (slot(p, cs) == c) reciprocal = true;
      if (!reciprocal)
        report.push_back("edge reciprocity: " + std::to_string(p) + " sits in " + slot_label(s) +
                         "_" + std::to_string(c) + " but no child slot of " + std::to_string(p) +
                         " holds " + std::to_string(c));
    }
  if (!report.empty()) return report;

  // Tree condition: n-1 edges and connected.
  if (edge_count != n - 1)
    report.push_back("disconnected / edge count: " + std::to_string(edge_count) +
                     " edges, expected " + std::to_string(n - 1));
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<Vertex> stack{1};
  seen[1] = true;
  int reached = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex u : neighbors(v))
      if (u >= 1 && u <= n && !seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        stack.push_back(u);
      }
  }
  if (reached != n)
    report.push_back("disconnected / edge count: only " + std::to_string(reached) + " of " +
                     std::to_string(n) + " vertices reachable from vertex 1");
  if (!report.empty()) return report;

  // Label condition on every directional slot: the whole component hanging
  // off a left slot is below the vertex label, off a right slot above it.
  auto check_side = [&](Vertex v, Slot s, bool want_less) {
    for (Vertex u : subtree(*this, v, s)) {
      bool ok = want_less ? (u < v) : (u > v);
      if (!ok) {
        report.push_back("label condition at " + std::string(slot_label(s)) + "_" +
                         std::to_string(v) + ": vertex " + std::to_string(u) + " on the wrong side");
        return;
      }
    }
  };
  for (Vertex v = 1; v <= n; ++v) {
    if (two_parents(delta_.at(v))) {
      check_side(v, Slot::LA, true);
      check_side(v, Slot::RA, false);
    }
    if (two_children(delta_.at(v))) {
      check_side(v, Slot::LD, true);
      check_side(v, Slot::RD, false);
    }
  }
  return report;
}

}  // namespace permutree
