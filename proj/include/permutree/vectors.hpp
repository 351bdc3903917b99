#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "permutree/pairset.hpp"
#include "permutree/tree.hpp"

namespace permutree {

// Inversion set B(T): pairs (i,j), i<j, with v_j a strict descendant of v_i.
inline PairSet inversion_set(const Permutree& t) {
  PairSet out(t.size());
  for (Vertex i = 1; i < t.size(); ++i)
    for (Vertex j : strict_descendants(t, i))
      if (j > i) out.insert(i, j);
  return out;
}

// b_i = |B_i| for i in [n-1]; the last component is always empty and dropped.
inline std::vector<int> pair_vector(const PairSet& s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(s.vertex_count() > 0 ? s.vertex_count() - 1 : 0));
  for (int i = 1; i < s.vertex_count(); ++i)
    out.push_back(std::popcount(s.row(i)));
  return out;
}

inline std::vector<int> inversion_vector(const Permutree& t) {
  return pair_vector(inversion_set(t));
}

struct CubicData {
  PairSet pairs;            // cubic set C(T)
  std::vector<int> vec;     // c_i = |C_i|, i in [n-1]
};

// Cubic set: component membership instead of the descendant order.  For a
// one-child vertex the sole child component is used (labels above i only),
// for a two-child vertex the right child component.
inline CubicData cubic_data(const Permutree& t) {
  int n = t.size();
  PairSet pairs(n);
  for (Vertex i = 1; i < n; ++i) {
    Slot s = two_children(t.decoration().at(i)) ? Slot::RD : Slot::D;
    for (Vertex j : subtree(t, i, s))
      if (j > i) pairs.insert(i, j);
  }
  return {pairs, pair_vector(pairs)};
}

// Permutreehedron vertex a(T): per coordinate 1+d plus |LD||RD| for a
// two-child vertex minus |LA||RA| for a two-parent vertex.  All quantities
// are subtree-component cardinalities; d is the size of the descendant
// subtree(s), which exceeds the strict descendant count whenever an
// up-slotted vertex sits inside a child component.  Only this reading keeps
// every point on the hyperplane and tight on its own cuts.
inline std::vector<long long> vertex_coordinates(const Permutree& t) {
  int n = t.size();
  std::vector<long long> out(static_cast<std::size_t>(n));
  for (Vertex i = 1; i <= n; ++i) {
    long long d = 0;
    for (Slot s : t.child_slots(i)) d += static_cast<long long>(subtree(t, i, s).size());
    long long a = 1 + d;
    if (two_children(t.decoration().at(i)))
      a += static_cast<long long>(subtree(t, i, Slot::LD).size()) *
           static_cast<long long>(subtree(t, i, Slot::RD).size());
    if (two_parents(t.decoration().at(i)))
      a -= static_cast<long long>(subtree(t, i, Slot::LA).size()) *
           static_cast<long long>(subtree(t, i, Slot::RA).size());
    out[static_cast<std::size_t>(i - 1)] = a;
  }
  return out;
}

// For updown-interior decorations every consecutive pair is adjacent;
// s_i = '0' if v_i is a child of v_{i+1}, '1' if it is its parent.
inline std::string to_binary_sequence(const Permutree& t) {
  const Decoration& delta = t.decoration();
  for (int i = 2; i < t.size(); ++i)
    if (delta.at(i) != Kind::UpDown)
      throw std::invalid_argument("binary sequence requires an updown-interior decoration");
  std::string out;
  for (Vertex i = 1; i < t.size(); ++i) {
    if (t.has_edge(i, i + 1))
      out.push_back('0');
    else if (t.has_edge(i + 1, i))
      out.push_back('1');
    else
      throw std::logic_error("binary sequence: vertices " + std::to_string(i) + " and " +
                             std::to_string(i + 1) + " not adjacent");
  }
  return out;
}

}  // namespace permutree
