#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permutree/decoration.hpp"
#include "permutree/pairset.hpp"
#include "permutree/tree.hpp"
#include "permutree/vectors.hpp"

namespace permutree {

// Thrown when an enumeration would exceed the configured size guard.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidityResult {
  bool ok = true;
  std::string violation;  // first violated condition, empty when ok
};

// The four conditions characterizing inversion sets of delta-permutrees:
//  1. transitivity, 2. cotransitivity, and for every i<j<k
//  3. delta_j in {down,updown}: (i,j) absent and (j,k) present forbid (i,k),
//  4. delta_j in {up,updown}:   (i,j) present and (j,k) absent forbid (i,k).
inline ValidityResult is_valid_inversion_set(const PairSet& e, const Decoration& delta) {
  int n = delta.size();
  if (e.vertex_count() != n)
    throw std::invalid_argument("inversion set size does not match decoration");

  auto triple = [](const char* what, int i, int j, int k) {
    return std::string(what) + " at (" + std::to_string(i) + "," + std::to_string(j) + "," +
           std::to_string(k) + ")";
  };

  for (int j = 2; j < n; ++j) {
    std::uint64_t row_j = e.row(j);
    std::uint64_t comp_j = ~row_j & PairSet::above_mask(j, n);
    bool down_like = two_children(delta.at(j));
    bool up_like = two_parents(delta.at(j));
    for (int i = 1; i < j; ++i) {
      std::uint64_t row_i = e.row(i);
      std::uint64_t comp_i = ~row_i & PairSet::above_mask(i, n);
      if (e.contains(i, j)) {
        if (std::uint64_t miss = row_j & ~row_i)
          return {false, triple("transitivity", i, j, std::countr_zero(miss))};
        if (up_like) {
          if (std::uint64_t bad = comp_j & row_i)
            return {false, triple("decoration condition 4", i, j, std::countr_zero(bad))};
        }
      } else {
        if (std::uint64_t miss = comp_j & ~comp_i)
          return {false, triple("cotransitivity", i, j, std::countr_zero(miss))};
        if (down_like) {
          if (std::uint64_t bad = row_j & row_i)
            return {false, triple("decoration condition 3", i, j, std::countr_zero(bad))};
        }
      }
    }
  }
  return {};
}

// Rotation order == inclusion order on inversion sets.
inline bool leq(const PairSet& a, const PairSet& b) { return a.subset_of(b); }

// Explicit meet.  A common pair survives iff no increasing chain joins its
// endpoints through non-common pairs: the complement of the meet is the
// transitive closure of the union of the two complements.  Equivalently,
// the betweenness filter "every l strictly between has (i,l) or (l,j) in
// common" iterated to its greatest fixpoint.  The result is the greatest
// lower bound in inclusion order.
inline PairSet meet(const PairSet& e1, const PairSet& e2, const Decoration& delta) {
  (void)delta;  // the formula is decoration-free; validity follows from the inputs'
  int n = e1.vertex_count();
  PairSet common = e1.intersect(e2);
  PairSet complement(n);
  for (int i = 1; i < n; ++i)
    complement.set_row(i, ~common.row(i) & PairSet::above_mask(i, n));
  complement = transitive_closure(complement);
  PairSet out(n);
  for (int i = 1; i < n; ++i) out.set_row(i, common.row(i) & ~complement.row(i));
  return out;
}

// Least upper bound by forced-pair ascent from the transitive closure of the
// union: a triple violating one of the four conditions relative to a superset
// determines a pair that every valid superset must contain, so the fixpoint
// is the smallest valid superset.
inline PairSet join(const PairSet& e1, const PairSet& e2, const Decoration& delta) {
  int n = delta.size();
  PairSet u = transitive_closure(e1.unite(e2));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 2; j < n && !changed; ++j) {
      bool down_like = two_children(delta.at(j));
      bool up_like = two_parents(delta.at(j));
      for (int i = 1; i < j && !changed; ++i) {
        if (u.contains(i, j)) {
          // transitivity: (i,j),(j,k) force (i,k)
          if ((u.row(j) & ~u.row(i)) != 0) {
            u.set_row(i, u.row(i) | u.row(j));
            changed = true;
          } else if (up_like) {
            // condition 4: (i,j),(i,k) with delta_j up-like force (j,k)
            std::uint64_t forced = u.row(i) & PairSet::above_mask(j, n) & ~u.row(j);
            if (forced) {
              u.set_row(j, u.row(j) | forced);
              changed = true;
            }
          }
        } else if (down_like) {
          // condition 3: (j,k),(i,k) with delta_j down-like force (i,j)
          if (u.row(i) & u.row(j)) {
            u.insert(i, j);
            changed = true;
          }
        }
      }
    }
  }
  // Cotransitivity survives the closure of a union of cotransitive sets, so
  // the fixpoint of the forced rules is valid; anything else is a bug.
  if (auto v = is_valid_inversion_set(u, delta); !v.ok)
    throw std::logic_error("join: forced ascent reached an invalid set (" + v.violation + ")");
  return u;
}

// All covers of a valid set: inclusion-minimal valid closures tc(E u {p})
// over absent pairs p, each tagged with its unique generating (rotated) pair.
struct CoverStep {
  std::pair<int, int> rotated;
  PairSet target;
};

inline std::vector<CoverStep> covers(const PairSet& e, const Decoration& delta) {
  int n = delta.size();
  std::vector<std::pair<std::pair<int, int>, PairSet>> candidates;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (e.contains(i, j)) continue;
      PairSet c = e;
      c.insert(i, j);
      c = transitive_closure(c);
      if (is_valid_inversion_set(c, delta).ok) candidates.emplace_back(std::make_pair(i, j), c);
    }
  std::vector<CoverStep> out;
  for (const auto& [p, c] : candidates) {
    bool minimal = true;
    for (const auto& [q, d] : candidates)
      if (d != c && d.subset_of(c)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    bool seen = false;
    for (const auto& step : out)
      if (step.target == c) {
        seen = true;
        break;
      }
    if (seen)
      throw std::logic_error("covers: two generating pairs for one cover (contradicts the "
                             "rotation characterization)");
    out.push_back({p, c});
  }
  std::sort(out.begin(), out.end(),
            [](const CoverStep& a, const CoverStep& b) { return a.rotated < b.rotated; });
  return out;
}

// Rotation lattice of a decoration: nodes are the valid inversion sets in
// canonical order, covers the Hasse diagram edges tagged with rotated pairs.
struct Lattice {
  Decoration delta;
  std::vector<PairSet> nodes;
  struct Cover {
    int src = 0, dst = 0;
    int i = 0, j = 0;  // rotated pair
  };
  std::vector<Cover> covers;

  int index_of(const PairSet& e) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), e, CanonicalLess{});
    if (it == nodes.end() || !(*it == e)) throw std::invalid_argument("node not in lattice");
    return static_cast<int>(it - nodes.begin());
  }
};

struct EnumerateOptions {
  int max_n = 10;
};

// Breadth-first closure of the cover relation upward from the empty set.
inline Lattice enumerate_lattice(const Decoration& delta, EnumerateOptions opt = {}) {
  require_normalized(delta);
  int n = delta.size();
  if (n > opt.max_n)
    throw ResourceLimitError("enumerate: n=" + std::to_string(n) + " exceeds bound " +
                             std::to_string(opt.max_n));

  std::map<PairSet, std::vector<CoverStep>, CanonicalLess> discovered;
  std::vector<PairSet> frontier{PairSet(n)};
  discovered.emplace(PairSet(n), std::vector<CoverStep>{});
  while (!frontier.empty()) {
    std::vector<PairSet> next;
    for (const PairSet& e : frontier) {
      auto steps = covers(e, delta);
      for (const CoverStep& s : steps)
        if (discovered.emplace(s.target, std::vector<CoverStep>{}).second) next.push_back(s.target);
      discovered[e] = std::move(steps);
    }
    frontier = std::move(next);
  }

  Lattice lat;
  lat.delta = delta;
  lat.nodes.reserve(discovered.size());
  for (const auto& [e, ignored] : discovered) lat.nodes.push_back(e);
  for (const auto& [e, steps] : discovered) {
    int src = lat.index_of(e);
    for (const CoverStep& s : steps)
      lat.covers.push_back({src, lat.index_of(s.target), s.rotated.first, s.rotated.second});
  }
  std::sort(lat.covers.begin(), lat.covers.end(), [](const Lattice::Cover& a, const Lattice::Cover& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });

  if (!(lat.nodes.front() == PairSet(n)) || !(lat.nodes.back() == PairSet::full(n)))
    throw std::logic_error("enumerate: lattice bounds missing (expected empty and full sets)");
  return lat;
}

// Reconstructs the unique tree with the given inversion set by greedy
// rotation ascent from the minimal chain: rotate any edge whose closure
// stays inside the target until the target is reached.
inline Permutree tree_from_inversion_set(const PairSet& e, const Decoration& delta) {
  require_normalized(delta);
  if (auto v = is_valid_inversion_set(e, delta); !v.ok)
    throw std::invalid_argument("tree_from_inversion_set: invalid inversion set (" + v.violation +
                                ")");
  Permutree t = Permutree::extreme(delta, Extreme::Min);
  PairSet current(delta.size());
  int guard = e.count() + 1;
  while (!(current == e)) {
    if (--guard < 0)
      throw std::logic_error("tree_from_inversion_set: ascent exceeded |E| rotations");
    bool progressed = false;
    for (auto [c, p] : t.edges()) {
      if (c >= p) continue;  // rotatable edges are i -> j with i < j
      PairSet step = current;
      step.insert(c, p);
      step = transitive_closure(step);
      if (step.subset_of(e)) {
        t = rotate(t, c, p);
        current = std::move(step);
        progressed = true;
        break;
      }
    }
    if (!progressed)
      throw std::logic_error("tree_from_inversion_set: no admissible rotation below target "
                             "(contradicts the inversion-set bijection)");
  }
  return t;
}

// Exhaustive meet/join certification against the poset bounds computed by
// direct scan over the enumerated nodes.
struct LatticeCheckReport {
  Decoration delta;
  int node_count = 0;
  long long pairs_checked = 0;
  bool pass = true;
  std::string counterexample;
};

inline LatticeCheckReport check_lattice(const Decoration& delta, EnumerateOptions opt = {}) {
  Lattice lat = enumerate_lattice(delta, opt);
  LatticeCheckReport rep;
  rep.delta = delta;
  rep.node_count = static_cast<int>(lat.nodes.size());

  auto fail = [&](const std::string& msg) {
    if (rep.pass) {
      rep.pass = false;
      rep.counterexample = msg;
    }
  };

  int m = static_cast<int>(lat.nodes.size());
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      const PairSet& ea = lat.nodes[static_cast<std::size_t>(a)];
      const PairSet& eb = lat.nodes[static_cast<std::size_t>(b)];
      ++rep.pairs_checked;

      std::optional<PairSet> glb, lub;
      for (const PairSet& x : lat.nodes) {
        if (x.subset_of(ea) && x.subset_of(eb) && (!glb || glb->subset_of(x))) glb = x;
        if (ea.subset_of(x) && eb.subset_of(x) && (!lub || x.subset_of(*lub))) lub = x;
      }
      // The running candidate is the extremum iff it dominates every bound.
      bool glb_unique = glb.has_value(), lub_unique = lub.has_value();
      for (const PairSet& x : lat.nodes) {
        if (glb && x.subset_of(ea) && x.subset_of(eb) && !x.subset_of(*glb)) glb_unique = false;
        if (lub && ea.subset_of(x) && eb.subset_of(x) && !lub->subset_of(x)) lub_unique = false;
      }

      if (!glb || !glb_unique) {
        fail("no greatest lower bound for nodes " + std::to_string(a) + "," + std::to_string(b));
        continue;
      }
      if (!lub || !lub_unique) {
        fail("no least upper bound for nodes " + std::to_string(a) + "," + std::to_string(b));
        continue;
      }
      if (!(meet(ea, eb, delta) == *glb))
        fail("meet formula disagrees with poset glb at nodes " + std::to_string(a) + "," +
             std::to_string(b));
      if (!(join(ea, eb, delta) == *lub))
        fail("join ascent disagrees with poset lub at nodes " + std::to_string(a) + "," +
             std::to_string(b));
    }
  }
  return rep;
}

}  // namespace permutree
