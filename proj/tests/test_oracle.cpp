#include "test_util.hpp"
#include "tridom/generators.hpp"
#include "tridom/oracle.hpp"

using namespace tridom;
using tt::fan;
using tt::irreducible7;
using tt::k4_disc;
using tt::mop_from_diagonals;

TEST_CASE("predicates on whole and single-vertex sets") {
  auto g = fan(6);
  std::vector<VertexId> all{0, 1, 2, 3, 4, 5};
  CHECK(is_dominating(g, all));
  CHECK(is_total_dominating(g, all));
  CHECK(is_dominating(g, {0}));          // fan center dominates everything
  CHECK_FALSE(is_total_dominating(g, {0}));  // 0 itself has no neighbor in the set
  CHECK_FALSE(paired_feasible(g, {0}).has_value());  // odd
}

TEST_CASE("K4 exact values") {
  auto g = k4_disc();
  CHECK(exact_gamma(g) == 1);
  CHECK(exact_gamma_pr(g) == 2);
  CHECK(exact_gamma_pr2(g) == 2);
}

TEST_CASE("irreducible 7-vertex example has gamma_pr 2") {
  CHECK(exact_gamma_pr(irreducible7()) == 2);
}

TEST_CASE("paired feasibility returns a real matching certificate") {
  auto g = fan(8);
  auto got = paired_feasible(g, {0, 1, 4, 5});
  REQUIRE(got.has_value());
  std::vector<char> seen(8, 0);
  for (auto [a, b] : *got) {
    CHECK(g.has_edge(a, b));
    CHECK_FALSE(seen[a]);
    CHECK_FALSE(seen[b]);
    seen[a] = seen[b] = 1;
  }
}

TEST_CASE("semipaired feasibility measures distance in the full graph") {
  auto g = fan(8);
  // 1 and 3 are at distance 2 through the center 0 even though the set
  // {1, 3} induces no edge.
  auto got = semipaired_feasible(g, {1, 3});
  REQUIRE(got.has_value());
  CHECK_FALSE(paired_feasible(g, {1, 3}).has_value());
}

TEST_CASE("matcher agrees with the naive pairing enumeration on small sets") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int m = 2 + 2 * static_cast<int>(rng.below(4));  // 2..8
    std::vector<std::uint32_t> adj(m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (rng.below(2)) {
          adj[i] |= 1u << j;
          adj[j] |= 1u << i;
        }
    detail::PairMatcher pm(m, adj);
    bool fast = pm.find().has_value();
    bool slow = detail::pairing_exists_reference(m, adj, (1u << m) - 1);
    CHECK(fast == slow);
  }
}

TEST_CASE("oracle respects the inequality chain and parity on random instances") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 5 + static_cast<int>(rng.below(8));
    int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, n - 4))));
    if (n - m < 3) m = 0;
    auto g = random_near_triangulation(n, m, rng.next());
    auto rep = exact_report(g);
    CHECK(rep.gamma <= rep.gamma_pr2);
    CHECK(rep.gamma_pr2 <= rep.gamma_pr);
    CHECK(rep.gamma_pr % 2 == 0);
    CHECK(rep.gamma_pr2 % 2 == 0);
    CHECK(is_dominating(g, rep.witness_gamma));
    auto pm = paired_feasible(g, rep.witness_pr);
    CHECK(pm.has_value());
    auto sm = semipaired_feasible(g, rep.witness_pr2);
    CHECK(sm.has_value());
  }
}

TEST_CASE("oracle rejects instances above the cap") {
  auto g = fan(18);
  CHECK_THROWS_AS(exact_gamma(g), Error);
  CHECK(exact_gamma(g, 20) >= 1);
}

TEST_CASE("random dominating predicate against a definition transcription") {
  SplitMix64 rng(13);
  auto g = random_near_triangulation(10, 2, 99);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<VertexId> set;
    for (VertexId v = 0; v < g.order(); ++v)
      if (rng.below(2)) set.push_back(v);
    bool slow = true;
    for (VertexId v = 0; v < g.order(); ++v) {
      bool in = std::find(set.begin(), set.end(), v) != set.end();
      if (in) continue;
      bool adj = false;
      for (VertexId u : set) adj |= g.has_edge(u, v);
      if (!adj) slow = false;
    }
    CHECK(is_dominating(g, set) == slow);
  }
}
