#include "test_util.hpp"
#include "tridom/family_f.hpp"
#include "tridom/oracle.hpp"

using namespace tridom;
using tt::fan;

TEST_CASE("family F members are order-9 MOPs with three ears") {
  const auto& members = enumerate_family_f();
  REQUIRE(!members.empty());
  for (const auto& m : members) {
    CHECK(m.mop.order() == 9);
    CHECK(m.mop.is_mop());
    CHECK(m.ears.size() == 3);
    int deg2 = 0;
    for (VertexId v = 0; v < 9; ++v) deg2 += m.mop.degree(v) == 2;
    CHECK(deg2 == 3);
    for (Label e : m.ears) CHECK(m.mop.degree(m.mop.index_of_label(e)) == 2);
  }
}

TEST_CASE("membership census agrees with an exhaustive order-9 scan") {
  int by_recognizer = 0, by_structure = 0;
  std::vector<std::vector<std::uint8_t>> distinct;
  for (const auto& g : enumerate_mops(9)) {
    bool a = is_in_family_f(g);
    bool b = looks_like_family_f(g);
    CHECK(a == b);
    if (a) {
      ++by_recognizer;
      auto code = canonical_code(g);
      if (std::find(distinct.begin(), distinct.end(), code) == distinct.end())
        distinct.push_back(code);
    }
    by_structure += b;
  }
  CHECK(by_recognizer == by_structure);
  CHECK(distinct.size() == enumerate_family_f().size());
  CHECK(!distinct.empty());
}

TEST_CASE("non-members short-circuit") {
  CHECK_FALSE(is_in_family_f(fan(8)));
  CHECK_FALSE(is_in_family_f(fan(9)));
  CHECK(exact_gamma_pr2(fan(9)) == 2);
}

TEST_CASE("members have gamma_pr2 = 4; all other order-9 MOPs have 2") {
  // The exceptional property plus the parity-forced converse.
  for (const auto& m : enumerate_family_f()) CHECK(exact_gamma_pr2(m.mop) == 4);
  int checked = 0;
  for (const auto& g : enumerate_mops(9)) {
    if (is_in_family_f(g)) continue;
    if (++checked % 7 != 0) continue;  // sample; the acceptance suite is exhaustive
    CHECK(exact_gamma_pr2(g) == 2);
  }
}

TEST_CASE("near-dominating pairs exist for every member and ear") {
  for (const auto& m : enumerate_family_f()) {
    for (Label ear : m.ears) {
      VertexId u = m.mop.index_of_label(ear);
      auto [v, w] = near_domset_for_degree2(m.mop, u);
      CHECK(v != u);
      CHECK(w != u);
      CHECK(m.mop.distance(u, v) == 2);
      CHECK(m.mop.distance(u, w) == 2);
      CHECK(m.mop.distance(v, w) <= 2);
      std::vector<char> hit(9, 0);
      hit[v] = hit[w] = hit[u] = 1;
      for (VertexId x : m.mop.neighbors(v)) hit[x] = 1;
      for (VertexId x : m.mop.neighbors(w)) hit[x] = 1;
      for (VertexId x = 0; x < 9; ++x) CHECK(hit[x]);
    }
  }
}

TEST_CASE("near_domset_for_degree2 rejects non-degree-2 anchors") {
  const auto& m = enumerate_family_f().front();
  VertexId hub = 0;
  REQUIRE(m.mop.degree(hub) > 2);
  CHECK_THROWS_AS(near_domset_for_degree2(m.mop, hub), Error);
}

TEST_CASE("restored instances admit a size-2 semi-PD-set") {
  auto restored = restored_family_f_instances();
  REQUIRE(!restored.empty());
  for (const auto& g : restored) {
    CHECK(g.order() == 9);
    CHECK(g.interior_count() == 1);
    auto d = semipd2_after_edge_restore(g);
    CHECK(d.size() == 2);
    CHECK(verify_semipaired(g, d).empty());
  }
}

TEST_CASE("semipd2_after_edge_restore rejects the fan") {
  CHECK_THROWS_AS(semipd2_after_edge_restore(fan(9)), Error);
}
