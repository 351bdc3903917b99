#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <string>

#include "permutree/io.hpp"

using namespace permutree;

namespace {
Decoration dec(const char* w) { return Decoration::parse(w); }
}  // namespace

TEST_CASE("lattice json") {
  Lattice lat = enumerate_lattice(dec("nbn"));
  io::ordered_json j = io::lattice_to_json(lat, false);

  SECTION("schema essentials") {
    CHECK(j["delta"] == "nbn");
    CHECK(j["n"] == 3);
    CHECK(j["normalized"] == false);
    REQUIRE(j["nodes"].size() == 4);
    CHECK(j["nodes"][0]["id"] == 0);
    CHECK(j["nodes"][0]["inv"].empty());
    CHECK(j["nodes"][0]["b"] == io::ordered_json::array({0, 0}));
    CHECK(j["covers"].size() == 4);
    for (const auto& c : j["covers"]) REQUIRE(c.size() == 4);
  }

  SECTION("byte determinism") {
    CHECK(j.dump() == io::lattice_to_json(enumerate_lattice(dec("nbn")), false).dump());
  }

  SECTION("round trip through parse") {
    Lattice back = io::lattice_from_json(j);
    CHECK(back.nodes == lat.nodes);
    REQUIRE(back.covers.size() == lat.covers.size());
    for (std::size_t k = 0; k < lat.covers.size(); ++k) {
      CHECK(back.covers[k].src == lat.covers[k].src);
      CHECK(back.covers[k].dst == lat.covers[k].dst);
      CHECK(back.covers[k].i == lat.covers[k].i);
      CHECK(back.covers[k].j == lat.covers[k].j);
    }
  }

  SECTION("geometry built from a reloaded lattice is byte-identical") {
    Lattice back = io::lattice_from_json(j);
    auto fresh = io::geometry_to_json(lat, build_polytope(lat), build_cubical(lat), false);
    auto reloaded = io::geometry_to_json(back, build_polytope(back), build_cubical(back), false);
    CHECK(fresh.dump() == reloaded.dump());
  }
}

TEST_CASE("dot output") {
  std::string dot = io::lattice_to_dot(enumerate_lattice(dec("nbn")));
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("label=\"(0,0)\"") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("csv vectors") {
  std::string csv = io::vectors_to_csv(enumerate_lattice(dec("nbn")));
  CHECK(csv.rfind("id,b1,b2,c1,c2,a1,a2,a3\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 nodes
  CHECK(csv.find("0,0,0,0,0,1,2,3\n") != std::string::npos);
}

TEST_CASE("off export") {
  SECTION("square mesh for n=3") {
    Lattice lat = enumerate_lattice(dec("nbn"));
    std::string off = io::cubical_to_off(build_cubical(lat));
    CHECK(off.rfind("OFF\n4 1 0\n", 0) == 0);
  }

  SECTION("pentagon keeps the collinear boundary vertex") {
    Lattice lat = enumerate_lattice(dec("ndn"));
    std::string off = io::cubical_to_off(build_cubical(lat));
    CHECK(off.rfind("OFF\n5 1 0\n", 0) == 0);
    // the single face cycles through all five boundary points
    auto last_line_start = off.find_last_of('\n', off.size() - 2);
    CHECK(off.substr(last_line_start + 1, 1) == "5");
  }

  SECTION("3d mesh for n=4 has one face per cell") {
    Lattice lat = enumerate_lattice(dec("nnnn"));
    CubicalRealization cube = build_cubical(lat);
    std::string off = io::cubical_to_off(cube);
    std::string expected_header =
        "OFF\n" + std::to_string(cube.vertices.size()) + " " +
        std::to_string(cube.cells.size()) + " 0\n";
    CHECK(off.rfind(expected_header, 0) == 0);
  }

  SECTION("dimension guard") {
    Lattice lat = enumerate_lattice(dec("nnnnn"));
    CHECK_THROWS_AS(io::cubical_to_off(build_cubical(lat)), std::invalid_argument);
  }
}

TEST_CASE("corner tables") {
  Lattice lat = enumerate_lattice(dec("nbn"));
  CubicalRealization cube = build_cubical(lat);

  io::ordered_json j = io::corners_to_json(lat, cube, false);
  REQUIRE(j["corners"].size() == 4);
  CHECK(j["corners"][0]["r"] == io::ordered_json::array({0, 0}));
  CHECK(j["corners"][0]["node"] == 0);

  std::string csv = io::corners_to_csv(lat, cube);
  CHECK(csv.rfind("r1,r2,id\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("conformance report json") {
  oracle::ConformanceReport rep = oracle::run_conformance(dec("nbn"));
  io::ordered_json j = io::report_to_json(rep);
  CHECK(j["delta"] == "nbn");
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() >= 5);
}
