#include <catch2/catch_amalgamated.hpp>

#include "permutree/pairset.hpp"

using namespace permutree;

TEST_CASE("pair set basics") {
  PairSet s(5);
  CHECK(s.empty());
  s.insert(2, 4);
  s.insert(3, 4);
  CHECK(s.contains(2, 4));
  CHECK_FALSE(s.contains(2, 3));
  CHECK(s.count() == 2);
  CHECK(s.to_string() == "2-4,3-4");
  CHECK(s.component(2) == std::vector<int>{4});

  CHECK_THROWS_AS(s.insert(4, 4), std::out_of_range);
  CHECK_THROWS_AS(s.insert(0, 2), std::out_of_range);
  CHECK_THROWS_AS(s.insert(1, 6), std::out_of_range);
}

TEST_CASE("pair set parsing") {
  PairSet s = PairSet::parse(5, "2-3,2-4,2-5,3-4");
  CHECK(s.count() == 4);
  CHECK(s.to_string() == "2-3,2-4,2-5,3-4");
  CHECK(PairSet::parse(4, "").empty());
  CHECK_THROWS_AS(PairSet::parse(4, "1-5"), std::invalid_argument);
  CHECK_THROWS_AS(PairSet::parse(4, "3-2"), std::invalid_argument);
  CHECK_THROWS_AS(PairSet::parse(4, "1,2"), std::invalid_argument);
}

TEST_CASE("full set and subset tests") {
  PairSet full = PairSet::full(4);
  CHECK(full.count() == 6);
  PairSet s = PairSet::parse(4, "1-2,3-4");
  CHECK(s.subset_of(full));
  CHECK_FALSE(full.subset_of(s));
  CHECK(s.intersect(full) == s);
  CHECK(s.unite(full) == full);
}

TEST_CASE("canonical order is lexicographic on the pair sequence") {
  // bit strings over the pair sequence (1,2),(1,3),(2,3) with 0 < 1:
  // {} = 000 < {2-3} = 001 < {1-3} = 010 < {1-2} = 100 < full = 111
  PairSet a(3), b(3), c(3), d(3);
  b.insert(1, 2);
  c.insert(2, 3);
  d.insert(1, 3);
  CHECK(a.canonical_less(b));
  CHECK(a.canonical_less(c));
  CHECK(c.canonical_less(d));
  CHECK(d.canonical_less(b));
  CHECK(b.canonical_less(PairSet::full(3)));
  CHECK_FALSE(b.canonical_less(b));
}

TEST_CASE("transitive closure") {
  SECTION("chain closes") {
    PairSet s = PairSet::parse(3, "1-2,2-3");
    CHECK(transitive_closure(s) == PairSet::full(3));
  }
  SECTION("empty set is closed") {
    CHECK(transitive_closure(PairSet(4)) == PairSet(4));
  }
  SECTION("reachability over four vertices") {
    // oracle: only (1,4) is newly reachable, via 1 -> 2 -> 4
    PairSet s = PairSet::parse(4, "1-2,2-4,3-4");
    CHECK(transitive_closure(s) == PairSet::parse(4, "1-2,1-4,2-4,3-4"));
  }
  SECTION("long chain") {
    PairSet s = PairSet::parse(6, "1-2,2-3,3-4,4-5,5-6");
    CHECK(transitive_closure(s) == PairSet::full(6));
  }
}
