#include "test_util.hpp"
#include "tridom/decompose.hpp"

using namespace tridom;
using tt::fan;
using tt::irreducible7;
using tt::k4_disc;
using tt::mop_from_diagonals;

TEST_CASE("find_reducible_edge: MOPs have none, K4 has the least one") {
  CHECK_FALSE(find_reducible_edge(fan(8)).has_value());
  CHECK_FALSE(find_reducible_edge(mop_from_diagonals(5, {{0, 2}, {2, 4}})).has_value());

  auto e = find_reducible_edge(k4_disc());
  REQUIRE(e.has_value());
  CHECK(e->lo() == 0);
  CHECK(e->hi() == 1);  // all three qualify; lexicographic least wins
}

TEST_CASE("the 7-vertex irreducible example is irreducible") {
  CHECK_FALSE(find_reducible_edge(irreducible7()).has_value());
  CHECK(irreducible7().interior_count() == 1);
}

TEST_CASE("regions of a MOP are its empty triangles") {
  auto g = fan(7);
  auto regions = boundary_subgraph_regions(g);
  CHECK(regions.size() == 5);  // n-2 triangles
  for (auto& r : regions) {
    CHECK(r.polygon.size() == 3);
    CHECK(r.empty());
  }
}

TEST_CASE("K4 has a single non-empty region") {
  auto regions = boundary_subgraph_regions(k4_disc());
  REQUIRE(regions.size() == 1);
  CHECK(regions[0].polygon.size() == 3);
  CHECK(regions[0].interior == std::vector<VertexId>{3});
}

TEST_CASE("region count agrees with Euler's formula on T[C]") {
  auto g = irreducible7();
  auto regions = boundary_subgraph_regions(g);
  // T[C]: 6 boundary vertices, 6 boundary edges + 3 diagonals
  int vb = 6, eb = 9;
  CHECK(static_cast<int>(regions.size()) == eb - vb + 1);
  int nonempty = 0;
  for (auto& r : regions) nonempty += !r.empty();
  CHECK(nonempty == 1);
}

TEST_CASE("terminal polygon of the irreducible 7-vertex example") {
  auto g = irreducible7();
  auto td = find_terminal_polygon(g);
  CHECK(td.side_count() == 3);
  std::vector<VertexId> corners(td.polygon);
  std::sort(corners.begin(), corners.end());
  CHECK(corners == std::vector<VertexId>{0, 1, 2});
  CHECK(td.interior == std::vector<VertexId>{3});
  CHECK(td.special_index == -1);
  for (int j = 0; j < 3; ++j) {
    CHECK(td.flank_orders[j] == 3);
    CHECK(td.flank_is_mop[j]);
    auto in = td.inner(g, j);
    CHECK(in.order() + td.flank_orders[j] == g.order() + 2);
    CHECK(in.order() >= 6);
  }
  // Canonical rotation starts at the least corner.
  CHECK(td.polygon[0] == 0);
}

TEST_CASE("find_terminal_polygon rejects MOPs and reducible graphs") {
  CHECK_THROWS_AS(find_terminal_polygon(fan(6)), Error);
  CHECK_THROWS_AS(find_terminal_polygon(k4_disc()), Error);
}

TEST_CASE("trichotomy: every instance is reducible, irreducible, or a MOP") {
  std::vector<NearTriangulation> zoo = {fan(5), fan(9), k4_disc(), irreducible7(),
                                        mop_from_diagonals(6, {{0, 2}, {2, 4}, {4, 0}})};
  for (const auto& g : zoo) {
    bool mop = g.is_mop();
    bool red = find_reducible_edge(g).has_value();
    bool irr = !mop && !red;
    CHECK((mop ? 1 : 0) + (red ? 1 : 0) + (irr ? 1 : 0) == 1);
    if (irr) CHECK(g.order() >= 7);
  }
}
