#include "test_util.hpp"
#include "tridom/family_f.hpp"
#include "tridom/generators.hpp"
#include "tridom/oracle.hpp"
#include "tridom/paired.hpp"

using namespace tridom;
using tt::fan;
using tt::irreducible7;
using tt::k4_disc;
using tt::mop_from_diagonals;

namespace {

void check_instance(const NearTriangulation& g, SolveStats* st = nullptr) {
  auto d = compute_paired(g, st);
  INFO("n=" << g.order() << " m=" << g.interior_count());
  CHECK(verify_paired(g, d).empty());
  CHECK(d.size() <= paired_bound(g.order()));
}

}  // namespace

TEST_CASE("K4: one adjacent pair") {
  auto d = compute_paired(k4_disc());
  CHECK(d.size() == 2);
  CHECK(verify_paired(k4_disc(), d).empty());
}

TEST_CASE("the 7-vertex irreducible instance needs exactly one pair") {
  auto g = irreducible7();
  auto d = compute_paired(g);
  CHECK(d.size() == 2);  // bound 2*floor(7/4) = 2, oracle confirms 2
  CHECK(verify_paired(g, d).empty());
  CHECK(exact_gamma_pr(g) == 2);
}

TEST_CASE("compute_paired rejects n < 4") {
  RawEmbedding r;
  r.n = 3;
  r.rotation = {{1, 2}, {2, 0}, {0, 1}};
  r.outer = {0, 1, 2};
  auto g = NearTriangulation::build(std::move(r));
  CHECK_THROWS_AS(compute_paired(g), Error);
}

TEST_CASE("exhaustive MOPs n=4..10 stay within the bound") {
  for (int n = 4; n <= 10; ++n)
    for (const auto& g : enumerate_mops(n)) check_instance(g);
}

TEST_CASE("fan family up to order 40") {
  for (int n : {12, 17, 23, 40}) check_instance(fan(n));
}

TEST_CASE("constructive size never beats the oracle") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 5 + static_cast<int>(rng.below(9));
    int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 4)));
    auto g = random_near_triangulation(n, m, rng.next());
    auto d = compute_paired(g);
    CHECK(verify_paired(g, d).empty());
    CHECK(d.size() >= exact_gamma_pr(g));
    CHECK(d.size() <= paired_bound(n));
  }
}

TEST_CASE("random near-triangulations up to order 48") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 7 + static_cast<int>(rng.below(42));
    int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, n / 2))));
    auto g = random_near_triangulation(n, m, rng.next());
    check_instance(g);
  }
}

TEST_CASE("scripted terminal instances drive specific cases") {
  SolveStats st;
  // single-flank sizes 4..8 and the two-flank residues
  std::vector<std::vector<int>> layouts = {
      {4, 3, 3}, {6, 3, 3}, {7, 3, 3}, {8, 3, 3}, {9, 5, 3},
      {3, 3, 3}, {5, 3, 3}, {5, 5, 5}, {3, 5, 3, 5}, {10, 3, 3},
  };
  int idx = 0;
  for (const auto& sizes : layouts) {
    for (std::uint64_t seed : {1, 2, 3, 4}) {
      TerminalInstanceSpec spec;
      spec.flank_sizes = sizes;
      spec.seed = seed + 100 * ++idx;
      spec.extra_interior = static_cast<int>(seed % 3);
      auto g = terminal_polygon_instance(spec);
      check_instance(g, &st);
    }
  }
  for (const char* key : {"paired.case1", "paired.case3", "paired.case4", "paired.case5",
                          "paired.case6", "paired.case7"})
    CHECK(st.get(key) > 0);
}

TEST_CASE("case1 gadget shape") {
  auto g = irreducible7();
  auto td = find_terminal_polygon(g);
  // inner of side 0, base edge removed, plus the gadget
  auto tj = td.inner(g, 0);
  Label vj = g.label_of(td.corner(0)), vj1 = g.label_of(td.corner(1));
  auto tjm = remove_edge(tj, {tj.index_of_label(vj), tj.index_of_label(vj1)});
  Label v = tjm.label_of(tjm.boundary_pred(tjm.index_of_label(vj)));
  auto gadget = case1_gadget(tjm, v, vj);
  CHECK(gadget.graph.order() == tjm.order() + 2);
  // x and y are on the boundary, y has degree 2
  auto& gg = gadget.graph;
  CHECK(gg.on_boundary(gg.index_of_label(gadget.x)));
  CHECK(gg.on_boundary(gg.index_of_label(gadget.y)));
  CHECK(gg.degree(gg.index_of_label(gadget.y)) == 2);
  CHECK(gg.has_edge(gg.index_of_label(gadget.x), gg.index_of_label(vj)));
  CHECK(gg.has_edge(gg.index_of_label(gadget.y), gg.index_of_label(vj)));
  CHECK(gg.has_edge(gg.index_of_label(gadget.x), gg.index_of_label(v)));
}

TEST_CASE("case 8 fires on a menagerie of all-five layouts") {
  SolveStats st;
  for (std::uint64_t seed = 1; seed <= 40 && st.get("paired.case8") == 0; ++seed) {
    TerminalInstanceSpec spec;
    spec.flank_sizes = {5, 5, 5};
    spec.seed = seed;
    spec.extra_interior = static_cast<int>(seed % 4);
    auto g = terminal_polygon_instance(spec);
    check_instance(g, &st);
  }
  CHECK(st.get("paired.case8") > 0);
}

TEST_CASE("case 2 (contractible five-flank) is reachable") {
  SolveStats st;
  for (std::uint64_t seed = 1; seed <= 60 && st.get("paired.case2") == 0; ++seed) {
    TerminalInstanceSpec spec;
    spec.flank_sizes = {5, 3, 3};
    spec.seed = seed;
    spec.extra_interior = static_cast<int>(seed % 4);
    auto g = terminal_polygon_instance(spec);
    check_instance(g, &st);
  }
  for (const auto& ci : irreducible_corpus(60, 2024, 24)) check_instance(ci.graph, &st);
  CHECK(st.get("paired.case2") > 0);
}
