#include "test_util.hpp"
#include "tridom/generators.hpp"
#include "tridom/oracle.hpp"
#include "tridom/semipaired.hpp"

using namespace tridom;
using tt::fan;
using tt::irreducible7;
using tt::k4_disc;
using tt::mop_from_diagonals;

namespace {

void check_instance(const NearTriangulation& g, SolveStats* st = nullptr) {
  auto d = compute_semipaired(g, st);
  INFO("n=" << g.order() << " m=" << g.interior_count());
  CHECK(verify_semipaired(g, d).empty());
  CHECK(d.size() <= semipaired_bound(g.order()));
}

}  // namespace

TEST_CASE("order-5 fan: a single 2-set") {
  auto d = compute_semipaired(fan(5));
  CHECK(d.size() == 2);
  CHECK(verify_semipaired(fan(5), d).empty());
}

TEST_CASE("family-F members are rejected with IsFamilyF") {
  const auto& m = enumerate_family_f().front();
  try {
    compute_semipaired(m.mop);
    FAIL("expected IsFamilyF");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IsFamilyF);
  }
}

TEST_CASE("too-small inputs are rejected") {
  CHECK_THROWS_AS(compute_semipaired(k4_disc()), Error);
}

TEST_CASE("exhaustive MOPs n=5..10 outside family F") {
  for (int n = 5; n <= 10; ++n)
    for (const auto& g : enumerate_mops(n)) {
      if (is_in_family_f(g)) continue;
      check_instance(g);
    }
}

TEST_CASE("semipaired on the irreducible 7-vertex example") { check_instance(irreducible7()); }

TEST_CASE("restored family-F instances get size-2 sets via the reducible escape") {
  SolveStats st;
  for (const auto& g : restored_family_f_instances()) {
    auto d = compute_semipaired(g, &st);
    CHECK(d.size() == 2);
    CHECK(verify_semipaired(g, d).empty());
  }
  CHECK(st.get("semi.f_reducible") > 0);
}

TEST_CASE("the order-14 coverage instances hit the family-F branches") {
  SolveStats st;
  check_instance(family_f_case2_instance(), &st);
  CHECK(st.get("semi.f_case2") > 0);
  check_instance(family_f_case6_instance(), &st);
  CHECK(st.get("semi.f_case6") > 0);
}

TEST_CASE("fans and larger MOPs recurse through the splitting lemma") {
  SolveStats st;
  for (int n : {17, 21, 26, 40}) check_instance(fan(n), &st);
  CHECK(st.get("semi.mop_base") > 0);
}

TEST_CASE("semipaired constructive size never beats the oracle") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 6 + static_cast<int>(rng.below(8));
    int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 5)));
    auto g = random_near_triangulation(n, m, rng.next());
    if (is_in_family_f(g)) continue;
    auto d = compute_semipaired(g);
    CHECK(verify_semipaired(g, d).empty());
    CHECK(d.size() >= exact_gamma_pr2(g));
    CHECK(d.size() <= semipaired_bound(n));
  }
}

TEST_CASE("semipaired random near-triangulations up to order 48") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 7 + static_cast<int>(rng.below(42));
    int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, n / 2))));
    auto g = random_near_triangulation(n, m, rng.next());
    if (is_in_family_f(g)) continue;
    check_instance(g);
  }
}

TEST_CASE("scripted terminal instances cover the dispatch table") {
  SolveStats st;
  std::vector<std::vector<int>> layouts = {
      {4, 3, 3}, {6, 3, 3}, {7, 3, 3}, {8, 3, 3}, {9, 3, 3}, {10, 3, 3},
      {3, 3, 3}, {5, 3, 5}, {3, 5, 3, 5}, {5, 5, 5}, {12, 3, 3},
  };
  int idx = 0;
  for (const auto& sizes : layouts) {
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
      TerminalInstanceSpec spec;
      spec.flank_sizes = sizes;
      spec.seed = seed + 1000 * ++idx;
      spec.extra_interior = static_cast<int>(seed % 3);
      auto g = terminal_polygon_instance(spec);
      check_instance(g, &st);
    }
  }
  for (const char* key : {"semi.case1", "semi.case2", "semi.case3", "semi.case4",
                          "semi.case5", "semi.case6", "semi.case7"})
    CHECK(st.get(key) > 0);
}

TEST_CASE("dispatch totality on a generated irreducible corpus") {
  for (const auto& ci : irreducible_corpus(40, 555, 28)) {
    auto td = find_terminal_polygon(ci.graph);
    auto sel = case_dispatch_semipaired(ci.graph, td);
    CHECK(sel.case_id >= 1);
    CHECK(sel.case_id <= 7);
    if (!is_in_family_f(ci.graph)) check_instance(ci.graph);
  }
}

TEST_CASE("recombine_pairs enforces its preconditions") {
  auto g = fan(8);
  // distance(1, 3) is 2 through the center, not 3
  CHECK_THROWS_AS(recombine_pairs(g, 0, 1, {{3, 5}}), Error);
  auto rec = recombine_pairs(g, 0, 1, {});
  CHECK(rec.sets.empty());
  CHECK_FALSE(rec.mixed.has_value());
}

TEST_CASE("recombine_pairs splits pairs across the contracted edge") {
  // Octagon with the edge (0,1) as contraction target: 6 and 7 see only 0,
  // while 2 and 3 see only 1, giving genuine distance-3 pairs that collapse
  // to distance 2 after the contraction.
  auto g = mop_from_diagonals(8, {{0, 6}, {1, 3}, {1, 4}, {1, 5}, {0, 5}});
  REQUIRE(g.distance(3, 6) == 3);
  REQUIRE(g.distance(2, 7) == 3);
  REQUIRE(is_contractible(g, {0, 1}));
  {
    auto rec = recombine_pairs(g, 0, 1, {{6, 3}, {7, 2}});
    REQUIRE(rec.sets.size() == 2);
    CHECK_FALSE(rec.mixed.has_value());
    for (auto [a, b] : rec.sets)
      CHECK(g.distance(g.index_of_label(a), g.index_of_label(b)) <= 2);
  }
  {
    // odd count: exactly one flagged mixed pair remains
    auto rec = recombine_pairs(g, 0, 1, {{6, 3}});
    CHECK(rec.sets.empty());
    REQUIRE(rec.mixed.has_value());
    CHECK(rec.mixed->first == 6);   // the N(0) side
    CHECK(rec.mixed->second == 3);  // the N(1) side
  }
}
