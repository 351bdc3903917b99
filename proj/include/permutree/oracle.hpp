#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permutree/decoration.hpp"
#include "permutree/order.hpp"
#include "permutree/pairset.hpp"
#include "permutree/tree.hpp"
#include "permutree/vectors.hpp"

// Ground-truth oracles kept independent of the lattice machinery they check:
// validity is re-implemented as a plain triple loop, enumeration as a filter
// over every subset, and bounds as direct poset scans.  Only the core value
// types are shared.
namespace permutree::oracle {

struct OracleReport {
  std::string property;
  std::string delta_word;
  int n = 0;
  bool pass = true;
  std::string counterexample;  // present iff !pass
};

namespace detail {

// The four inversion-set conditions, written as the naive i<j<k loops.
inline bool valid_by_definition(const PairSet& e, const Decoration& delta) {
  int n = delta.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        bool ij = e.contains(i, j), jk = e.contains(j, k), ik = e.contains(i, k);
        if (ij && jk && !ik) return false;                            // transitivity
        if (!ij && !jk && ik) return false;                           // cotransitivity
        if (two_children(delta.at(j)) && !ij && jk && ik) return false;  // condition 3
        if (two_parents(delta.at(j)) && ij && !jk && ik) return false;   // condition 4
      }
  return true;
}

inline unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

inline unsigned long long catalan(int n) {
  // C(0)=1, C(m+1) = C(m)*2(2m+1)/(m+2); exact for the desk-scale range.
  unsigned long long c = 1;
  for (int m = 0; m < n; ++m) c = c * 2 * (2 * static_cast<unsigned long long>(m) + 1) / (m + 2);
  return c;
}

}  // namespace detail

// Every subset of the strict upper triangle that satisfies the four
// conditions, in canonical order.  Exponential: guarded at n <= 6.
inline std::vector<PairSet> enumerate_bruteforce(const Decoration& delta) {
  require_normalized(delta);
  int n = delta.size();
  if (n > 6)
    throw ResourceLimitError("enumerate_bruteforce: n=" + std::to_string(n) + " exceeds bound 6");
  int bits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> index_to_pair;
  index_to_pair.reserve(static_cast<std::size_t>(bits));
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) index_to_pair.emplace_back(i, j);

  std::vector<PairSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    PairSet e(n);
    for (int b = 0; b < bits; ++b)
      if ((mask >> b) & 1u) e.insert(index_to_pair[static_cast<std::size_t>(b)].first,
                                     index_to_pair[static_cast<std::size_t>(b)].second);
    if (detail::valid_by_definition(e, delta)) out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

// Greatest lower / least upper bound of two members under inclusion over an
// explicit node family; absent when no bound dominates all others.
inline std::pair<std::optional<PairSet>, std::optional<PairSet>> poset_glb_lub(
    const std::vector<PairSet>& nodes, const PairSet& e1, const PairSet& e2) {
  std::optional<PairSet> glb, lub;
  for (const PairSet& x : nodes) {
    if (x.subset_of(e1) && x.subset_of(e2) && (!glb || glb->subset_of(x))) glb = x;
    if (e1.subset_of(x) && e2.subset_of(x) && (!lub || x.subset_of(*lub))) lub = x;
  }
  for (const PairSet& x : nodes) {
    if (glb && x.subset_of(e1) && x.subset_of(e2) && !x.subset_of(*glb)) glb.reset();
    if (lub && e1.subset_of(x) && e2.subset_of(x) && !lub->subset_of(x)) lub.reset();
  }
  return {std::move(glb), std::move(lub)};
}

enum class Family { Permutation, Tamari, Boolean, Cambrian };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Permutation: return "PERMUTATION";
    case Family::Tamari:      return "TAMARI";
    case Family::Boolean:     return "BOOLEAN";
    case Family::Cambrian:    return "CAMBRIAN";
  }
  return "?";
}

// Checks the classical specializations that the permutree lattice must
// reproduce: weak order (counts, Lehmer code), Tamari lattice (counts,
// bracket characterization, componentwise meet, Loday coordinates),
// binary sequences (counts, subset-lattice isomorphism), Cambrian counts.
inline OracleReport specialization_check(Family family, int n) {
  OracleReport rep;
  rep.property = std::string("specialization/") + family_name(family);
  rep.n = n;
  if (n > 7) throw ResourceLimitError("specialization_check: n exceeds bound 7");

  auto fail = [&](const std::string& msg) {
    if (rep.pass) {
      rep.pass = false;
      rep.counterexample = msg;
    }
  };

  auto run_delta = [&](const Decoration& delta) {
    Lattice lat = enumerate_lattice(delta);
    switch (family) {
      case Family::Permutation: {
        if (lat.nodes.size() != detail::factorial(n))
          fail("node count " + std::to_string(lat.nodes.size()) + " != n!");
        // each cover flips one adjacent pair of values; totals n!(n-1)/2
        unsigned long long expected_covers = detail::factorial(n) * (n - 1) / 2;
        if (lat.covers.size() != expected_covers)
          fail("cover count " + std::to_string(lat.covers.size()) + " != n!(n-1)/2");
        for (const PairSet& e : lat.nodes) {
          Permutree t = tree_from_inversion_set(e, delta);
          if (pair_vector(e) != cubic_data(t).vec)
            fail("Lehmer code: b != c at node " + e.to_string());
        }
        break;
      }
      case Family::Tamari: {
        if (lat.nodes.size() != detail::catalan(n))
          fail("node count " + std::to_string(lat.nodes.size()) + " != Catalan(n)");
        for (const PairSet& e : lat.nodes) {
          // bracket characterization: components are intervals starting at
          // i+1 and nest along membership
          for (int i = 1; i < n; ++i) {
            auto bi = e.component(i);
            for (std::size_t x = 0; x < bi.size(); ++x)
              if (bi[x] != i + 1 + static_cast<int>(x))
                fail("bracket component " + std::to_string(i) + " of " + e.to_string() +
                     " is not an interval {i+1,...}");
            for (int j : bi) {
              std::uint64_t rj = e.row(j);
              if ((rj & ~e.row(i)) != 0)
                fail("bracket nesting fails at (" + std::to_string(i) + "," + std::to_string(j) +
                     ") of " + e.to_string());
            }
          }
          Permutree t = tree_from_inversion_set(e, delta);
          if (pair_vector(e) != cubic_data(t).vec) fail("bracket vector: b != c at " + e.to_string());
          // Loday coordinates: leaf products (l_i r_i) with the endpoint
          // vertices contributing their sole component on the inner side
          auto a = vertex_coordinates(t);
          for (int i = 1; i <= n; ++i) {
            long long l = 1, r = 1;
            if (two_children(delta.at(i))) {
              l = static_cast<long long>(subtree(t, i, Slot::LD).size()) + 1;
              r = static_cast<long long>(subtree(t, i, Slot::RD).size()) + 1;
            } else if (i == 1) {
              r = static_cast<long long>(subtree(t, i, Slot::D).size()) + 1;
            } else if (i == n) {
              l = static_cast<long long>(subtree(t, i, Slot::D).size()) + 1;
            }
            if (a[static_cast<std::size_t>(i - 1)] != l * r)
              fail("Loday coordinate mismatch at vertex " + std::to_string(i) + " of " +
                   e.to_string());
          }
        }
        // componentwise intersection computes the meet
        for (const PairSet& e1 : lat.nodes)
          for (const PairSet& e2 : lat.nodes)
            if (!(meet(e1, e2, delta) == e1.intersect(e2)))
              fail("componentwise meet mismatch at " + e1.to_string() + " vs " + e2.to_string());
        break;
      }
      case Family::Boolean: {
        std::size_t expected = std::size_t{1} << (n - 1);
        if (lat.nodes.size() != expected)
          fail("node count " + std::to_string(lat.nodes.size()) + " != 2^(n-1)");
        // order-isomorphic to the subset lattice via the binary sequence
        std::vector<std::uint64_t> masks;
        for (const PairSet& e : lat.nodes) {
          std::string s = to_binary_sequence(tree_from_inversion_set(e, delta));
          std::uint64_t m = 0;
          for (std::size_t b = 0; b < s.size(); ++b)
            if (s[b] == '1') m |= std::uint64_t{1} << b;
          masks.push_back(m);
        }
        for (std::size_t a = 0; a < lat.nodes.size(); ++a)
          for (std::size_t b = 0; b < lat.nodes.size(); ++b) {
            bool set_le = lat.nodes[a].subset_of(lat.nodes[b]);
            bool mask_le = (masks[a] & ~masks[b]) == 0;
            if (set_le != mask_le)
              fail("binary sequence map is not an order isomorphism at nodes " +
                   std::to_string(a) + "," + std::to_string(b));
          }
        std::vector<std::uint64_t> dedup = masks;
        std::sort(dedup.begin(), dedup.end());
        if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end())
          fail("binary sequence map is not injective");
        break;
      }
      case Family::Cambrian: {
        if (lat.nodes.size() != detail::catalan(n))
          fail("node count " + std::to_string(lat.nodes.size()) + " != Catalan(n) for " +
               delta.word());
        break;
      }
    }
  };

  switch (family) {
    case Family::Permutation:
      rep.delta_word = uniform_decoration(Kind::None, n).word();
      run_delta(uniform_decoration(Kind::None, n));
      break;
    case Family::Tamari:
      rep.delta_word = uniform_decoration(Kind::Down, n).word();
      run_delta(uniform_decoration(Kind::Down, n));
      break;
    case Family::Boolean:
      rep.delta_word = uniform_decoration(Kind::UpDown, n).word();
      run_delta(uniform_decoration(Kind::UpDown, n));
      break;
    case Family::Cambrian: {
      rep.delta_word = "(all interior {u,d} words, n=" + std::to_string(n) + ")";
      int interior = n > 2 ? n - 2 : 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << interior); ++mask) {
        std::vector<Kind> e(static_cast<std::size_t>(n), Kind::None);
        for (int b = 0; b < interior; ++b)
          e[static_cast<std::size_t>(b) + 1] = ((mask >> b) & 1u) ? Kind::Up : Kind::Down;
        run_delta(Decoration(std::move(e)));
      }
      break;
    }
  }
  return rep;
}

}  // namespace permutree::oracle
