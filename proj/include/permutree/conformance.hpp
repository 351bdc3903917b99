#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "permutree/geometry.hpp"
#include "permutree/oracle.hpp"
#include "permutree/order.hpp"

namespace permutree::oracle {

struct ConformanceCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct ConformanceReport {
  std::string delta_word;
  int n = 0;
  bool pass = true;
  std::vector<ConformanceCheck> checks;

  void add(std::string name, bool ok, std::string detail = "") {
    if (!ok) pass = false;
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
};

// Hasse diagram of the inclusion order over an explicit family, computed by
// the definition (no shared cover machinery with the lattice builder).
inline std::vector<std::pair<int, int>> hasse_by_filter(const std::vector<PairSet>& nodes) {
  std::vector<std::pair<int, int>> out;
  int m = static_cast<int>(nodes.size());
  std::vector<int> counts(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) counts[k] = nodes[k].count();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const PairSet& ea = nodes[static_cast<std::size_t>(a)];
      const PairSet& eb = nodes[static_cast<std::size_t>(b)];
      if (counts[static_cast<std::size_t>(a)] >= counts[static_cast<std::size_t>(b)]) continue;
      if (!ea.subset_of(eb)) continue;
      bool covered = true;
      for (int c = 0; c < m && covered; ++c) {
        if (counts[static_cast<std::size_t>(c)] <= counts[static_cast<std::size_t>(a)] ||
            counts[static_cast<std::size_t>(c)] >= counts[static_cast<std::size_t>(b)])
          continue;
        const PairSet& ec = nodes[static_cast<std::size_t>(c)];
        if (ea.subset_of(ec) && ec.subset_of(eb)) covered = false;
      }
      if (covered) out.emplace_back(a, b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Full per-decoration verification: enumeration against the subset filter,
// bounds against the poset scan, the two rotation postconditions on every
// cover, vector inequalities, both geometric realizations, round trips, and
// the classical specializations where the decoration matches one.
inline ConformanceReport run_conformance(const Decoration& delta, EnumerateOptions opt = {}) {
  require_normalized(delta);
  ConformanceReport rep;
  rep.delta_word = delta.word();
  rep.n = delta.size();
  int n = delta.size();

  Lattice lat = enumerate_lattice(delta, opt);
  std::vector<Permutree> trees = lattice_trees(lat);

  // enumeration vs brute force (exponential filter, guarded)
  if (n <= 6) {
    std::vector<PairSet> brute = enumerate_bruteforce(delta);
    bool nodes_equal = brute == lat.nodes;
    rep.add("bfs-equals-bruteforce", nodes_equal,
            "bfs " + std::to_string(lat.nodes.size()) + " nodes, filter " +
                std::to_string(brute.size()));
    std::vector<std::pair<int, int>> bfs_edges;
    for (const Lattice::Cover& c : lat.covers) bfs_edges.emplace_back(c.src, c.dst);
    std::sort(bfs_edges.begin(), bfs_edges.end());
    rep.add("hasse-equals-bruteforce", nodes_equal && bfs_edges == hasse_by_filter(brute),
            std::to_string(lat.covers.size()) + " covers");
  } else {
    rep.add("bfs-equals-bruteforce", true, "skipped (n > 6)");
  }

  // meet/join against poset bounds; also tracks whether the bare transitive
  // closure of the union already equals the join (closed-form flag)
  {
    bool ok = true;
    bool closure_is_join = true;
    std::string detail;
    long long pairs = 0;
    for (std::size_t a = 0; a < lat.nodes.size() && ok; ++a)
      for (std::size_t b = a; b < lat.nodes.size() && ok; ++b) {
        ++pairs;
        auto [glb, lub] = poset_glb_lub(lat.nodes, lat.nodes[a], lat.nodes[b]);
        if (!glb || !lub) {
          ok = false;
          detail = "missing bound at nodes " + std::to_string(a) + "," + std::to_string(b);
        } else if (!(meet(lat.nodes[a], lat.nodes[b], delta) == *glb)) {
          ok = false;
          detail = "meet != glb at nodes " + std::to_string(a) + "," + std::to_string(b);
        } else if (!(join(lat.nodes[a], lat.nodes[b], delta) == *lub)) {
          ok = false;
          detail = "join != lub at nodes " + std::to_string(a) + "," + std::to_string(b);
        } else if (!(transitive_closure(lat.nodes[a].unite(lat.nodes[b])) == *lub)) {
          closure_is_join = false;
        }
      }
    if (ok)
      detail = std::to_string(pairs) + " pairs" +
               (closure_is_join ? "; closure of the union is already the join"
                                : "; join needed forcing beyond the closure");
    rep.add("lattice-bounds", ok, detail);
  }

  // rotation postconditions on every cover edge
  {
    bool ok = true;
    std::string detail;
    for (const Lattice::Cover& cov : lat.covers) {
      const Permutree& t = trees[static_cast<std::size_t>(cov.src)];
      if (!t.has_edge(cov.i, cov.j)) {
        ok = false;
        detail = "rotated pair is not a tree edge at cover " + std::to_string(cov.src) + "->" +
                 std::to_string(cov.dst);
        break;
      }
      Permutree rotated = rotate(t, cov.i, cov.j);
      if (!rotated.is_valid()) {
        ok = false;
        detail = "rotation produced an invalid tree";
        break;
      }
      PairSet closure = lat.nodes[static_cast<std::size_t>(cov.src)];
      closure.insert(cov.i, cov.j);
      closure = transitive_closure(closure);
      if (!(inversion_set(rotated) == lat.nodes[static_cast<std::size_t>(cov.dst)]) ||
          !(closure == lat.nodes[static_cast<std::size_t>(cov.dst)])) {
        ok = false;
        detail = "inversion closure mismatch at cover " + std::to_string(cov.src) + "->" +
                 std::to_string(cov.dst);
        break;
      }
      // the cut multiset changes only at the rotated edge
      std::vector<std::vector<Vertex>> before, after;
      for (const EdgeCut& c : all_edge_cuts(t)) before.push_back(c.child_side);
      for (const EdgeCut& c : all_edge_cuts(rotated)) after.push_back(c.child_side);
      auto remove_one = [](std::vector<std::vector<Vertex>>& sets, const std::vector<Vertex>& x) {
        auto it = std::find(sets.begin(), sets.end(), x);
        if (it == sets.end()) return false;
        sets.erase(it);
        return true;
      };
      bool cut_ok = remove_one(before, edge_cut(t, cov.i, cov.j).child_side) &&
                    remove_one(after, edge_cut(rotated, cov.j, cov.i).child_side);
      std::sort(before.begin(), before.end());
      std::sort(after.begin(), after.end());
      if (!cut_ok || before != after) {
        ok = false;
        detail = "cut multiset changed away from the rotated edge at cover " +
                 std::to_string(cov.src) + "->" + std::to_string(cov.dst);
        break;
      }
      if (!(rotate_back(rotated, cov.i, cov.j) == t)) {
        ok = false;
        detail = "rotate_back does not invert rotate";
        break;
      }
    }
    if (ok) detail = std::to_string(lat.covers.size()) + " covers";
    rep.add("rotation-contract", ok, detail);
  }

  // per-node vector facts: B_i inside C_i, b <= c <= n-i, coordinate sum
  {
    bool ok = true;
    std::string detail;
    for (std::size_t v = 0; v < lat.nodes.size() && ok; ++v) {
      CubicData cd = cubic_data(trees[v]);
      if (!lat.nodes[v].subset_of(cd.pairs)) {
        ok = false;
        detail = "inversion set not inside cubic set at node " + std::to_string(v);
      }
      auto b = pair_vector(lat.nodes[v]);
      for (int k = 0; k < n - 1 && ok; ++k)
        if (b[static_cast<std::size_t>(k)] > cd.vec[static_cast<std::size_t>(k)] ||
            cd.vec[static_cast<std::size_t>(k)] > n - 1 - k) {
          ok = false;
          detail = "vector bounds b <= c <= n-i fail at node " + std::to_string(v);
        }
      if (ok && !(inversion_set(trees[v]) == lat.nodes[v])) {
        ok = false;
        detail = "tree reconstruction does not round-trip at node " + std::to_string(v);
      }
      if (ok && !(tree_from_inversion_set(lat.nodes[v], delta) == trees[v])) {
        ok = false;
        detail = "tree -> set -> tree changed the tree at node " + std::to_string(v);
      }
    }
    if (ok) detail = std::to_string(lat.nodes.size()) + " nodes";
    rep.add("vectors-and-roundtrip", ok, detail);
  }

  PolytopeRealization poly = build_polytope(lat, trees);
  {
    GeometryReport g = verify_polytope(poly, trees);
    rep.add("polytope", g.pass, g.pass ? std::to_string(poly.facets.size()) + " facets"
                                       : g.failures.front());
  }
  {
    CubicalRealization cube = build_cubical(lat, trees);
    GeometryReport g = check_cube(lat, cube, poly);
    rep.add("cubical", g.pass, g.pass ? std::to_string(cube.cells.size()) + " cells"
                                      : g.failures.front());
  }

  // classical specializations when the decoration matches one
  {
    bool uniform_none = true, uniform_down = true, uniform_updown = true, cambrian = n > 2;
    for (int i = 2; i < n; ++i) {
      Kind k = delta.at(i);
      uniform_none &= k == Kind::None;
      uniform_down &= k == Kind::Down;
      uniform_updown &= k == Kind::UpDown;
      cambrian &= k == Kind::Down || k == Kind::Up;
    }
    auto run = [&](Family f) {
      OracleReport r = specialization_check(f, n);
      rep.add(std::string("specialization-") + family_name(f), r.pass, r.counterexample);
    };
    if (n <= 7) {
      if (uniform_none) run(Family::Permutation);
      if (uniform_down && n > 2) run(Family::Tamari);
      if (uniform_updown && n > 2) run(Family::Boolean);
      if (cambrian && !uniform_down)
        rep.add("specialization-CAMBRIAN-count",
                lat.nodes.size() == detail::catalan(n),
                std::to_string(lat.nodes.size()) + " nodes");
    }
  }
  return rep;
}

}  // namespace permutree::oracle
