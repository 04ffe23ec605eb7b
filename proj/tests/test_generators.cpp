#include "test_util.hpp"
#include "tridom/generators.hpp"

using namespace tridom;

TEST_CASE("splitmix64 matches the published test vectors for seed 0") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFull);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
  CHECK(rng.next() == 0x06C45D188009454Full);
}

TEST_CASE("enumerate_mops counts are Catalan numbers") {
  CHECK(enumerate_mops(4).size() == 2);
  CHECK(enumerate_mops(5).size() == 5);
  CHECK(enumerate_mops(6).size() == 14);
  CHECK(enumerate_mops(8).size() == 132);
  CHECK(enumerate_mops(12).size() == 16796);
  CHECK(enumerate_mops(4, true).size() == 1);
  CHECK(enumerate_mops(6, true).size() == 3);
  for (const auto& g : enumerate_mops(7)) CHECK(validate(g.raw()).empty());
  CHECK_THROWS_AS(enumerate_mops(16), Error);
}

TEST_CASE("random_mop is valid, deterministic, and roughly uniform at n=5") {
  auto a = random_mop(30, 42);
  auto b = random_mop(30, 42);
  CHECK(a.order() == 30);
  CHECK(a.is_mop());
  CHECK(validate(a.raw()).empty());
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(a.raw().rotation == b.raw().rotation);

  // chi-square over the 5 triangulations of the pentagon, 10^4 draws,
  // df = 4; 18.47 is the 0.999 quantile.
  auto all = enumerate_mops(5);
  std::vector<int> counts(all.size(), 0);
  std::vector<std::vector<std::uint8_t>> keys;
  std::vector<std::vector<std::uint8_t>> raws;
  for (const auto& g : all) raws.push_back(canonical_code(g));
  // canonical codes collide across isomorphic triangulations; key on the
  // diagonal set instead.
  auto diag_key = [](const NearTriangulation& g) {
    std::vector<std::uint8_t> k;
    for (VertexId u = 0; u < g.order(); ++u)
      for (VertexId v : g.neighbors(u))
        if (u < v && !g.is_boundary_edge(u, v)) {
          k.push_back(static_cast<std::uint8_t>(u));
          k.push_back(static_cast<std::uint8_t>(v));
        }
    return k;
  };
  for (const auto& g : all) keys.push_back(diag_key(g));
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    auto g = random_mop(5, 1000 + i);
    auto k = diag_key(g);
    auto it = std::find(keys.begin(), keys.end(), k);
    REQUIRE(it != keys.end());
    counts[it - keys.begin()]++;
  }
  double expected = draws / 5.0;
  double chi2 = 0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  CHECK(chi2 < 18.47);
}

TEST_CASE("random_near_triangulation hits the requested vertex mix and validates") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 5 + static_cast<int>(rng.below(25));
    int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, n - 3))));
    if (n - m < 3) m = n - 3;
    auto g = random_near_triangulation(n, m, rng.next());
    CHECK(g.order() == n);
    CHECK(g.interior_count() == m);
    CHECK(validate(g.raw()).empty());
  }
}

TEST_CASE("the 7-vertex irreducible shape is reachable from (n,m)=(7,1)") {
  bool found = false;
  for (std::uint64_t seed = 0; seed < 400 && !found; ++seed) {
    auto g = random_near_triangulation(7, 1, seed);
    found = !find_reducible_edge(g) && !g.is_mop();
  }
  CHECK(found);
}

TEST_CASE("irreducible_corpus yields irreducible instances") {
  auto corpus = irreducible_corpus(12, 77, 30);
  CHECK(corpus.size() == 12);
  for (const auto& ci : corpus) {
    CHECK(ci.graph.interior_count() >= 1);
    CHECK_FALSE(find_reducible_edge(ci.graph).has_value());
  }
}

TEST_CASE("terminal_polygon_instance builds the requested flank layout") {
  TerminalInstanceSpec spec;
  spec.flank_sizes = {4, 6, 3, 7, 5};
  spec.extra_interior = 1;
  spec.seed = 9;
  auto g = terminal_polygon_instance(spec);
  CHECK_FALSE(find_reducible_edge(g).has_value());
  auto td = find_terminal_polygon(g);
  CHECK(td.side_count() == 5);
  std::vector<int> sizes(td.flank_orders.begin(), td.flank_orders.end());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{3, 4, 5, 6, 7});
}

TEST_CASE("family-F coverage instances are irreducible order-14 graphs") {
  auto a = family_f_case2_instance();
  CHECK(a.order() == 14);
  CHECK(a.interior_count() == 1);
  auto b = family_f_case6_instance();
  CHECK(b.order() == 14);
  CHECK(b.interior_count() == 4);
}
