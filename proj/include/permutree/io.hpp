#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "permutree/conformance.hpp"
#include "permutree/geometry.hpp"
#include "permutree/order.hpp"
#include "permutree/vectors.hpp"

namespace permutree::io {

using ordered_json = nlohmann::ordered_json;

struct NodeVectors {
  std::vector<int> b, c;
  std::vector<long long> a;
};

inline std::vector<NodeVectors> node_vectors(const Lattice& lat,
                                             const std::vector<Permutree>& trees) {
  std::vector<NodeVectors> out;
  out.reserve(trees.size());
  for (std::size_t v = 0; v < trees.size(); ++v)
    out.push_back({pair_vector(lat.nodes[v]), cubic_data(trees[v]).vec,
                   vertex_coordinates(trees[v])});
  return out;
}

// Self-contained lattice fixture:
// {"delta","n","normalized","nodes":[{"id","inv","b","c","a"}],"covers":[[src,dst,i,j]]}
inline ordered_json lattice_to_json(const Lattice& lat, bool normalized_flag) {
  std::vector<Permutree> trees = lattice_trees(lat);
  std::vector<NodeVectors> vecs = node_vectors(lat, trees);

  ordered_json j;
  j["delta"] = lat.delta.word();
  j["n"] = lat.delta.size();
  j["normalized"] = normalized_flag;
  j["nodes"] = ordered_json::array();
  for (std::size_t v = 0; v < lat.nodes.size(); ++v) {
    ordered_json node;
    node["id"] = v;
    node["inv"] = ordered_json::array();
    for (auto [i, k] : lat.nodes[v].pairs()) node["inv"].push_back({i, k});
    node["b"] = vecs[v].b;
    node["c"] = vecs[v].c;
    node["a"] = vecs[v].a;
    j["nodes"].push_back(std::move(node));
  }
  j["covers"] = ordered_json::array();
  for (const Lattice::Cover& c : lat.covers) j["covers"].push_back({c.src, c.dst, c.i, c.j});
  return j;
}

inline Lattice lattice_from_json(const ordered_json& j) {
  Lattice lat;
  lat.delta = Decoration::parse(j.at("delta").get<std::string>());
  require_normalized(lat.delta);
  int n = j.at("n").get<int>();
  if (n != lat.delta.size()) throw std::invalid_argument("lattice json: n does not match delta");
  for (const auto& node : j.at("nodes")) {
    PairSet e(n);
    for (const auto& pr : node.at("inv")) e.insert(pr.at(0).get<int>(), pr.at(1).get<int>());
    lat.nodes.push_back(std::move(e));
  }
  for (std::size_t v = 1; v < lat.nodes.size(); ++v)
    if (!lat.nodes[v - 1].canonical_less(lat.nodes[v]))
      throw std::invalid_argument("lattice json: nodes not in canonical order");
  for (const auto& c : j.at("covers"))
    lat.covers.push_back({c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>(),
                          c.at(3).get<int>()});
  return lat;
}

inline std::string vector_label(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  return s + ")";
}

// Hasse diagram, drawn bottom-to-top, nodes labeled by the inversion vector.
inline std::string lattice_to_dot(const Lattice& lat) {
  std::ostringstream out;
  out << "digraph permutree_lattice {\n  rankdir=BT;\n";
  for (std::size_t v = 0; v < lat.nodes.size(); ++v)
    out << "  n" << v << " [label=\"" << vector_label(pair_vector(lat.nodes[v])) << "\"];\n";
  for (const Lattice::Cover& c : lat.covers)
    out << "  n" << c.src << " -> n" << c.dst << " [label=\"" << c.i << "-" << c.j << "\"];\n";
  out << "}\n";
  return out.str();
}

// CSV of all three vectors per node: id,b1..b{n-1},c1..c{n-1},a1..a{n}.
inline std::string vectors_to_csv(const Lattice& lat) {
  std::vector<Permutree> trees = lattice_trees(lat);
  std::vector<NodeVectors> vecs = node_vectors(lat, trees);
  int n = lat.delta.size();
  std::ostringstream out;
  out << "id";
  for (int i = 1; i < n; ++i) out << ",b" << i;
  for (int i = 1; i < n; ++i) out << ",c" << i;
  for (int i = 1; i <= n; ++i) out << ",a" << i;
  out << "\n";
  for (std::size_t v = 0; v < vecs.size(); ++v) {
    out << v;
    for (int x : vecs[v].b) out << "," << x;
    for (int x : vecs[v].c) out << "," << x;
    for (long long x : vecs[v].a) out << "," << x;
    out << "\n";
  }
  return out.str();
}

inline ordered_json geometry_to_json(const Lattice& lat, const PolytopeRealization& poly,
                                     const CubicalRealization& cube, bool normalized_flag) {
  ordered_json j;
  j["delta"] = lat.delta.word();
  j["n"] = lat.delta.size();
  j["normalized"] = normalized_flag;
  j["hyperplane"] = poly.hyperplane_rhs;
  j["points"] = poly.points;
  j["facets"] = ordered_json::array();
  for (const auto& f : poly.facets) {
    ordered_json jf;
    jf["I"] = f.members;
    jf["rhs"] = f.rhs;
    j["facets"].push_back(std::move(jf));
  }
  ordered_json jc;
  std::vector<int> box;
  for (int k = 1; k < lat.delta.size(); ++k) box.push_back(lat.delta.size() - k);
  jc["box"] = box;
  jc["vertices"] = cube.vertices;
  jc["edges"] = ordered_json::array();
  for (const auto& e : cube.edges) jc["edges"].push_back({e.src, e.dst, e.axis});
  jc["cells"] = ordered_json::array();
  for (const auto& cell : cube.cells) {
    ordered_json jcell;
    jcell["I"] = cell.child_side;
    jcell["under"] = cell.under;
    jcell["over"] = cell.over;
    jcell["coord"] = cell.coord;
    jcell["value"] = cell.value;
    jcell["members"] = cell.members;
    jc["cells"].push_back(std::move(jcell));
  }
  j["cube"] = std::move(jc);
  return j;
}

namespace detail {

struct Point2 {
  long long x = 0, y = 0;
  int index = 0;  // global vertex index
  bool operator<(const Point2& o) const { return std::tie(x, y) < std::tie(o.x, o.y); }
  bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
};

inline long long cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Counterclockwise boundary cycle including collinear boundary points.
inline std::vector<int> boundary_cycle(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  if (pts.size() <= 2) {
    std::vector<int> out;
    for (const auto& p : pts) out.push_back(p.index);
    return out;
  }
  auto build = [&](bool lower) {
    std::vector<Point2> h;
    auto step = [&](const Point2& p) {
      while (h.size() >= 2 && cross(h[h.size() - 2], h[h.size() - 1], p) < 0) h.pop_back();
      h.push_back(p);
    };
    if (lower)
      for (const auto& p : pts) step(p);
    else
      for (auto it = pts.rbegin(); it != pts.rend(); ++it) step(*it);
    return h;
  };
  std::vector<Point2> lower = build(true), upper = build(false);
  std::vector<int> out;
  for (std::size_t k = 0; k + 1 < lower.size(); ++k) out.push_back(lower[k].index);
  for (std::size_t k = 0; k + 1 < upper.size(); ++k) out.push_back(upper[k].index);
  return out;
}

}  // namespace detail

// OFF mesh of the cubical realization, supported for n-1 <= 3.  For n = 4
// every maximal cell is an axis-plane polygon; for n = 3 the single face
// is the outer polygon; n = 2 degenerates to the two endpoints of a segment.
inline std::string cubical_to_off(const CubicalRealization& cube) {
  int n = cube.n;
  if (n < 2 || n > 4)
    throw std::invalid_argument("off export supports 2 <= n <= 4 (mesh dimension n-1 <= 3)");

  std::vector<std::vector<int>> faces;
  if (n == 4) {
    for (const auto& cell : cube.cells) {
      int free1 = -1, free2 = -1;
      for (int k = 1; k <= 3; ++k) {
        if (k == cell.coord) continue;
        if (free1 < 0)
          free1 = k;
        else
          free2 = k;
      }
      std::vector<detail::Point2> pts;
      for (int v : cell.members)
        pts.push_back({cube.vertices[static_cast<std::size_t>(v)][static_cast<std::size_t>(free1 - 1)],
                       cube.vertices[static_cast<std::size_t>(v)][static_cast<std::size_t>(free2 - 1)],
                       v});
      std::vector<int> cycle = detail::boundary_cycle(std::move(pts));
      if (cell.value == 0 && !cycle.empty()) std::reverse(cycle.begin(), cycle.end());
      faces.push_back(std::move(cycle));
    }
  } else if (n == 3) {
    std::vector<detail::Point2> pts;
    for (std::size_t v = 0; v < cube.vertices.size(); ++v)
      pts.push_back({cube.vertices[v][0], cube.vertices[v][1], static_cast<int>(v)});
    faces.push_back(detail::boundary_cycle(std::move(pts)));
  }

  std::ostringstream out;
  out << "OFF\n" << cube.vertices.size() << " " << faces.size() << " 0\n";
  for (const auto& v : cube.vertices) {
    long long x = v.size() > 0 ? v[0] : 0;
    long long y = v.size() > 1 ? v[1] : 0;
    long long z = v.size() > 2 ? v[2] : 0;
    out << x << " " << y << " " << z << "\n";
  }
  for (const auto& f : faces) {
    out << f.size();
    for (int idx : f) out << " " << idx;
    out << "\n";
  }
  return out.str();
}

inline ordered_json corners_to_json(const Lattice& lat, const CubicalRealization& cube,
                                    bool normalized_flag) {
  int n = lat.delta.size();
  ordered_json j;
  j["delta"] = lat.delta.word();
  j["n"] = n;
  j["normalized"] = normalized_flag;
  j["corners"] = ordered_json::array();
  std::vector<std::vector<int>> corners;
  int dim = n - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
    std::vector<int> r(static_cast<std::size_t>(dim), 0);
    for (int k = 0; k < dim; ++k)
      if ((mask >> k) & 1u) r[static_cast<std::size_t>(k)] = n - 1 - k;
    corners.push_back(std::move(r));
  }
  std::sort(corners.begin(), corners.end());
  for (const auto& r : corners) {
    ordered_json row;
    row["r"] = r;
    row["node"] = extremal_preimage(cube, r);
    j["corners"].push_back(std::move(row));
  }
  return j;
}

inline std::string corners_to_csv(const Lattice& lat, const CubicalRealization& cube) {
  int n = lat.delta.size();
  std::ostringstream out;
  for (int i = 1; i < n; ++i) out << "r" << i << ",";
  out << "id\n";
  std::vector<std::vector<int>> corners;
  int dim = n - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
    std::vector<int> r(static_cast<std::size_t>(dim), 0);
    for (int k = 0; k < dim; ++k)
      if ((mask >> k) & 1u) r[static_cast<std::size_t>(k)] = n - 1 - k;
    corners.push_back(std::move(r));
  }
  std::sort(corners.begin(), corners.end());
  for (const auto& r : corners) {
    for (int x : r) out << x << ",";
    out << extremal_preimage(cube, r) << "\n";
  }
  return out.str();
}

inline ordered_json report_to_json(const oracle::ConformanceReport& rep) {
  ordered_json j;
  j["delta"] = rep.delta_word;
  j["n"] = rep.n;
  j["pass"] = rep.pass;
  j["checks"] = ordered_json::array();
  for (const auto& c : rep.checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["detail"] = c.detail;
    j["checks"].push_back(std::move(jc));
  }
  return j;
}

}  // namespace permutree::io
