#include "test_util.hpp"

using namespace tridom;
using tt::fan;
using tt::irreducible7;
using tt::k4_disc;
using tt::mop_from_diagonals;

TEST_CASE("triangle is the smallest valid near-triangulation") {
  RawEmbedding r;
  r.n = 3;
  r.rotation = {{1, 2}, {2, 0}, {0, 1}};
  r.outer = {0, 1, 2};
  REQUIRE(validate(r).empty());
  auto g = NearTriangulation::build(std::move(r));
  CHECK(g.is_mop());
  CHECK(g.is_triangulation());
  CHECK(g.interior_count() == 0);
}

TEST_CASE("4-cycle with one diagonal is a valid MOP of order 4") {
  auto g = mop_from_diagonals(4, {{0, 2}});
  CHECK(g.is_mop());
  CHECK(g.edge_count() == 5);
}

TEST_CASE("4-cycle without a diagonal fails with NonTriangularInnerFace") {
  RawEmbedding r;
  r.n = 4;
  r.rotation = {{1, 3}, {2, 0}, {3, 1}, {0, 2}};
  r.outer = {0, 1, 2, 3};
  auto issues = validate(r);
  REQUIRE_FALSE(issues.empty());
  bool found = false;
  for (auto& i : issues) found |= i.kind == IssueKind::NonTriangularInnerFace;
  CHECK(found);
}

TEST_CASE("two triangles glued at a vertex are rejected as not biconnected") {
  // Bowtie: 0-1-2 and 0-3-4, articulation at 0. Outer walk repeats 0, so the
  // declared outer cycle cannot be simple; validation must reject it.
  RawEmbedding r;
  r.n = 5;
  r.rotation = {{1, 2, 3, 4}, {2, 0}, {0, 1}, {4, 0}, {0, 3}};
  r.outer = {0, 1, 2, 0, 3, 4};
  auto issues = validate(r);
  REQUIRE_FALSE(issues.empty());
}

TEST_CASE("edge classification partitions the edge set") {
  auto g = irreducible7();
  int boundary = 0, diagonal = 0, interior = 0;
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v : g.neighbors(u)) {
      if (u > v) continue;
      switch (g.classify_edge({u, v})) {
        case EdgeClass::Boundary: ++boundary; break;
        case EdgeClass::Diagonal: ++diagonal; break;
        case EdgeClass::InteriorEdge: ++interior; break;
      }
    }
  CHECK(boundary == 6);
  CHECK(diagonal == 3);   // the triangle sides 0-1, 1-2, 2-0
  CHECK(interior == 3);   // spokes of the interior vertex
  CHECK(boundary + diagonal + interior == g.edge_count());
  CHECK(g.classify_edge({3, 0}) == EdgeClass::InteriorEdge);
  CHECK_THROWS_AS(g.classify_edge({4, 5}), Error);
}

TEST_CASE("remove_vertex: fan tip, and degree-2 vertices of the irreducible 7") {
  auto f5 = fan(5);
  auto g = remove_vertex(f5, 4);
  CHECK(g.order() == 4);
  CHECK(g.is_mop());

  auto ir = irreducible7();
  for (VertexId v : {4, 5, 6}) {
    auto h = remove_vertex(ir, v);
    CHECK(h.order() == 6);
    CHECK(h.interior_count() == 1);
  }
}

TEST_CASE("remove_vertex result matches independent re-validation") {
  // Removing a diagonal endpoint of a MOP can disconnect the boundary walk;
  // the operation must then throw rather than return garbage.
  auto g = mop_from_diagonals(6, {{0, 2}, {2, 4}, {4, 0}});
  for (VertexId v = 0; v < 6; ++v) {
    try {
      auto h = remove_vertex(g, v);
      CHECK(validate(h.raw()).empty());
      CHECK(h.order() == 5);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ResultNotNearTriangulation);
    }
  }
}

TEST_CASE("remove_edge: K4 boundary edge exposes the interior vertex") {
  auto g = k4_disc();
  auto h = remove_edge(g, {0, 1});
  CHECK(h.order() == 4);
  CHECK(h.is_mop());
  CHECK(h.interior_count() == 0);
}

TEST_CASE("remove_edge: MOPs have no reducible edge") {
  auto g = fan(6);
  CHECK_THROWS_AS(remove_edge(g, {1, 2}), Error);
}

TEST_CASE("contract_edge: MOP boundary edge away from the diagonal") {
  auto g = mop_from_diagonals(4, {{0, 2}});
  auto res = contract_edge(g, {2, 3});
  CHECK(res.graph.order() == 3);
  CHECK(res.graph.is_mop());
  CHECK(res.merged_label == 4);  // fresh label
  CHECK(res.graph.has_label(4));
  CHECK_FALSE(res.graph.has_label(2));
}

TEST_CASE("contract_edge: boundary edge whose endpoint has all neighbors on C") {
  auto g = fan(7);
  // vertex 3 (a rim vertex) has all neighbors on the boundary
  auto res = contract_edge(g, {3, 4});
  CHECK(res.graph.order() == 6);
  CHECK(validate(res.graph.raw()).empty());
}

TEST_CASE("contract_edge refuses when a separating pair would appear") {
  // Contracting the base of two stacked ears creates parallel edges.
  auto g0 = mop_from_diagonals(4, {{0, 2}});
  auto e1 = attach_ear(g0, 0, 1);  // ear 4 on 0-1
  auto g = e1.graph;
  // 0 and 2 share neighbors 1, 3 and the diagonal 0-2 cuts the disc; the
  // contraction of 0-2 must merge faces on both sides and is still fine.
  // A genuinely bad one: contract 0-1 in a graph where 0,1 share the far
  // apex 2 through two different faces.
  auto bad = mop_from_diagonals(5, {{0, 2}, {2, 4}});
  // Contracting the diagonal 0-2 pinches the disc: vertex 1 keeps only the
  // merged vertex as neighbor and the boundary walk repeats it.
  CHECK_FALSE(is_contractible(bad, {0, 2}));
  // 0 and 3 in the hexagon with long diagonals: contracting the diagonal 0-3
  // of mop_from_diagonals(6, {{0,2},{0,3},{0,4}}) shares apexes only; but
  // contracting 2-6? Use a near-triangulation: contract the spoke of K4.
  auto k4 = k4_disc();
  auto res = contract_edge(k4, {3, 0});
  CHECK(res.graph.order() == 3);
}

TEST_CASE("non-contractible edge exists: diagonal with far common neighbor") {
  // Pentagon with diagonals 0-2, 0-3. Add ear on 2-3 -> vertex 5. Now
  // contract 2-3: faces (0,2,3)? no: faces at 2-3: (0,3,2)? apexes 0 and 5.
  // Both adjacent collapses fine. Instead take 0-2 with apexes 1 and 3:
  // 0 and 2 also share neighbor 5? no. Build an explicit failing case:
  // two interior vertices both adjacent to u and v.
  auto g0 = k4_disc();
  auto g1 = split_inner_face(g0, 0, 1);  // vertex 4 adjacent to 0,1,3
  // now 0 and 1 share neighbors 3 (no: 0-1 face apexes are 4 and outer?) --
  // faces on edge 0-1: inner (0,1,4) and outer. 0,1 also both adjacent to 3.
  // Contracting 0-1 would give two copies of the edge to 3 around vertex 4:
  // a separating-pair configuration.
  CHECK_FALSE(is_contractible(g1, {0, 1}));
  CHECK(is_contractible(g1, {0, 4}));
}

TEST_CASE("distance is a metric and matches hand values") {
  auto g = irreducible7();
  CHECK(g.distance(0, 0) == 0);
  CHECK(g.distance(0, 1) == 1);
  CHECK(g.distance(4, 5) == 2);  // two ears through a shared triangle corner
  for (VertexId a = 0; a < g.order(); ++a)
    for (VertexId b = 0; b < g.order(); ++b) {
      CHECK(g.distance(a, b) == g.distance(b, a));
      for (VertexId c = 0; c < g.order(); ++c)
        CHECK(g.distance(a, c) <= g.distance(a, b) + g.distance(b, c));
    }
}

TEST_CASE("attach_ear keeps labels stable and mints a fresh one") {
  auto g = fan(5);
  auto res = attach_ear(g, 2, 3);
  CHECK(res.graph.order() == 6);
  CHECK(res.graph.label_of(res.ear) == 5);
  CHECK(res.graph.is_mop());
  CHECK(res.graph.degree(res.ear) == 2);
  // boundary runs ..., 2, ear, 3, ...
  CHECK(res.graph.boundary_succ(2) == res.ear);
  CHECK(res.graph.boundary_succ(res.ear) == 3);
}

TEST_CASE("split_at_diagonal returns complementary MOP pieces") {
  auto g = fan(8);
  auto split = split_at_diagonal(g, 0, 4);
  CHECK(split.arc_side.order() == 5);   // arc 0,1,2,3,4
  CHECK(split.other_side.order() == 5); // arc 4,5,6,7,0
  CHECK(split.arc_side.order() + split.other_side.order() == g.order() + 2);
  CHECK(split.arc_side.is_mop());
  CHECK(split.other_side.is_mop());
  // labels identify original vertices
  std::vector<Label> got(split.arc_side.labels());
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<Label>{0, 1, 2, 3, 4});
}

TEST_CASE("split_at_diagonal separates interior vertices correctly") {
  // K4 disc with an ear chain making the diagonal 0-1 meaningful: build a
  // hexagon with one interior vertex on one side.
  auto g0 = mop_from_diagonals(6, {{0, 2}, {2, 5}, {2, 4}});
  auto g = split_inner_face(g0, 2, 5);  // interior vertex inside face (2,5,?)
  REQUIRE(g.order() == 7);
  REQUIRE(g.interior_count() == 1);
  auto split = split_at_diagonal(g, 0, 2);
  // arc side 0,1,2 is an empty triangle; other side holds the interior vertex
  CHECK(split.arc_side.order() == 3);
  CHECK(split.arc_side.interior_count() == 0);
  CHECK(split.other_side.order() == 6);
  CHECK(split.other_side.interior_count() == 1);
}

TEST_CASE("split_inner_face raises the order and keeps validity") {
  auto g = k4_disc();
  auto h = split_inner_face(g, 0, 1);
  CHECK(h.order() == 5);
  CHECK(h.interior_count() == 2);
  CHECK(validate(h.raw()).empty());
}

TEST_CASE("canonical code identifies isomorphic MOPs") {
  // the two triangulations of the square are isomorphic
  auto a = mop_from_diagonals(4, {{0, 2}});
  auto b = mop_from_diagonals(4, {{1, 3}});
  CHECK(isomorphic(a, b));
  // order-5: fan at 0 vs fan at 2 (rotated), isomorphic
  auto f0 = mop_from_diagonals(5, {{0, 2}, {0, 3}});
  auto f2 = mop_from_diagonals(5, {{2, 4}, {2, 0}});
  CHECK(isomorphic(f0, f2));
  CHECK_FALSE(isomorphic(a, f0));
}

TEST_CASE("euler relation holds on traced faces for assorted instances") {
  for (auto g : {fan(9), irreducible7(), k4_disc()}) {
    auto faces = detail::trace_faces(g.raw().rotation);
    int F = static_cast<int>(faces.size());
    CHECK(g.order() - g.edge_count() + F == 2);
  }
}
