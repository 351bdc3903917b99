#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "permutree/geometry.hpp"

using namespace permutree;

namespace {
Decoration dec(const char* w) { return Decoration::parse(w); }
}  // namespace

TEST_CASE("polytope construction") {
  SECTION("hexagon: 6 points, every proper subset is a cut") {
    Lattice lat = enumerate_lattice(dec("nnn"));
    PolytopeRealization poly = build_polytope(lat);
    CHECK(poly.points.size() == 6);
    CHECK(poly.facets.size() == 6);
    CHECK(poly.hyperplane_rhs == 6);
  }

  SECTION("pentagon and square facet counts") {
    CHECK(build_polytope(enumerate_lattice(dec("ndn"))).facets.size() == 5);
    CHECK(build_polytope(enumerate_lattice(dec("nbn"))).facets.size() == 4);
  }

  SECTION("verification report is clean for small mixed lattices") {
    for (const char* w : {"nnn", "ndn", "nbn", "nbun", "nudn"}) {
      Lattice lat = enumerate_lattice(dec(w));
      auto trees = lattice_trees(lat);
      GeometryReport rep = verify_polytope(build_polytope(lat, trees), trees);
      INFO(w);
      CHECK(rep.pass);
    }
  }

  SECTION("pentagon points are strict on every facet except their own cuts") {
    Lattice lat = enumerate_lattice(dec("ndn"));
    auto trees = lattice_trees(lat);
    PolytopeRealization poly = build_polytope(lat, trees);
    for (std::size_t v = 0; v < trees.size(); ++v) {
      std::vector<std::vector<Vertex>> own;
      for (const EdgeCut& c : all_edge_cuts(trees[v])) own.push_back(c.child_side);
      for (const auto& f : poly.facets) {
        long long s = 0;
        for (Vertex i : f.members) s += poly.points[v][static_cast<std::size_t>(i - 1)];
        bool is_own = std::find(own.begin(), own.end(), f.members) != own.end();
        if (is_own)
          CHECK(s == f.rhs);
        else
          CHECK(s > f.rhs);
      }
    }
  }

  SECTION("tightness of the minimal chain on its own cuts") {
    Lattice lat = enumerate_lattice(dec("nnn"));
    auto trees = lattice_trees(lat);
    // node 0 is the bottom chain with a = (1,2,3)
    CHECK(build_polytope(lat, trees).points[0] == std::vector<long long>{1, 2, 3});
    Permutree t = trees[0];
    EdgeCut c1 = edge_cut(t, 1, 2);
    CHECK(c1.child_side == std::vector<Vertex>{1});  // sum 1 = (2 choose 2)
    EdgeCut c2 = edge_cut(t, 2, 3);
    CHECK(c2.child_side == std::vector<Vertex>{1, 2});  // sum 3 = (3 choose 2)
  }
}

TEST_CASE("cubical realization") {
  SECTION("boolean square fills the rectangle") {
    Lattice lat = enumerate_lattice(dec("nbn"));
    CubicalRealization cube = build_cubical(lat);
    std::vector<std::vector<int>> verts = cube.vertices;
    std::sort(verts.begin(), verts.end());
    CHECK(verts == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {2, 0}, {2, 1}});
    CHECK(cube.cells.size() == 4);
    CHECK(cube.edges.size() == 4);
    for (const auto& e : cube.edges) CHECK((e.axis == 1 || e.axis == 2));
  }

  SECTION("weak order on three letters fills the integer box") {
    Lattice lat = enumerate_lattice(dec("nnn"));
    CubicalRealization cube = build_cubical(lat);
    std::vector<std::vector<int>> verts = cube.vertices;
    std::sort(verts.begin(), verts.end());
    CHECK(verts == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
    CHECK(cube.cells.size() == 6);
  }

  SECTION("tamari pentagon lands on the bracket-vector embedding") {
    Lattice lat = enumerate_lattice(dec("ndn"));
    CubicalRealization cube = build_cubical(lat);
    std::vector<std::vector<int>> verts = cube.vertices;
    std::sort(verts.begin(), verts.end());
    CHECK(verts == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {2, 0}, {2, 1}});
  }

  SECTION("cells carry their supporting hyperplane") {
    Lattice lat = enumerate_lattice(dec("nbn"));
    CubicalRealization cube = build_cubical(lat);
    for (const auto& cell : cube.cells) {
      bool n_in_i = std::find(cell.child_side.begin(), cell.child_side.end(), 3) !=
                    cell.child_side.end();
      if (!n_in_i) CHECK(cell.value == 0);
      for (int v : cell.members)
        CHECK(cube.vertices[static_cast<std::size_t>(v)]
                           [static_cast<std::size_t>(cell.coord - 1)] == cell.value);
    }
  }
}

TEST_CASE("cube checks") {
  SECTION("square: all four trees are extremal") {
    Lattice lat = enumerate_lattice(dec("nbn"));
    auto trees = lattice_trees(lat);
    GeometryReport rep = check_cube(lat, build_cubical(lat, trees), build_polytope(lat, trees));
    CHECK(rep.pass);
  }

  SECTION("nbun: ten trees, eight corners attained once each") {
    Lattice lat = enumerate_lattice(dec("nbun"));
    auto trees = lattice_trees(lat);
    CubicalRealization cube = build_cubical(lat, trees);
    GeometryReport rep = check_cube(lat, cube, build_polytope(lat, trees));
    INFO((rep.failures.empty() ? std::string() : rep.failures.front()));
    CHECK(rep.pass);
    CHECK(lat.nodes.size() == 10);
    int extremal = 0;
    for (const auto& v : cube.vertices) {
      bool corner = true;
      for (int k = 0; k < 3; ++k)
        if (v[static_cast<std::size_t>(k)] != 0 && v[static_cast<std::size_t>(k)] != 3 - k)
          corner = false;
      if (corner) ++extremal;
    }
    CHECK(extremal == 8);
  }

  SECTION("permutations on four letters: 24 vertices, 8 corners") {
    Lattice lat = enumerate_lattice(dec("nnnn"));
    auto trees = lattice_trees(lat);
    CubicalRealization cube = build_cubical(lat, trees);
    GeometryReport rep = check_cube(lat, cube, build_polytope(lat, trees));
    INFO((rep.failures.empty() ? std::string() : rep.failures.front()));
    CHECK(rep.pass);
    CHECK(cube.vertices.size() == 24);
  }

  SECTION("lex order does not imply an edge: (1,0,1) vs (1,1,1)") {
    Lattice lat = enumerate_lattice(dec("nnnn"));
    CubicalRealization cube = build_cubical(lat);
    int a = -1, b = -1;
    for (std::size_t v = 0; v < cube.vertices.size(); ++v) {
      if (cube.vertices[v] == std::vector<int>{1, 0, 1}) a = static_cast<int>(v);
      if (cube.vertices[v] == std::vector<int>{1, 1, 1}) b = static_cast<int>(v);
    }
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    for (const auto& e : cube.edges) CHECK_FALSE((e.src == a && e.dst == b));
  }
}

TEST_CASE("extremal preimages") {
  SECTION("all-zero corner is the bottom, staircase corner the top") {
    Decoration delta = dec("nbun");
    CHECK(extremal_permutree(delta, {0, 0, 0}) == Permutree::extreme(delta, Extreme::Min));
    CHECK(extremal_permutree(delta, {3, 2, 1}) == Permutree::extreme(delta, Extreme::Max));
  }

  SECTION("malformed corners are rejected") {
    Lattice lat = enumerate_lattice(dec("nbn"));
    CubicalRealization cube = build_cubical(lat);
    CHECK_THROWS_AS(extremal_preimage(cube, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(extremal_preimage(cube, {0, 0, 0}), std::invalid_argument);
  }

  SECTION("seven-vertex corner fixture has a unique preimage") {
    Decoration delta = Decoration::normalize("dunbndu").decoration;
    Permutree t = extremal_permutree(delta, {6, 0, 0, 0, 2, 1});
    CHECK(t.is_valid());
    CHECK(cubic_data(t).vec == std::vector<int>{6, 0, 0, 0, 2, 1});
  }
}
