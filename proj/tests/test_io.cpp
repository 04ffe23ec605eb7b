#include "test_util.hpp"
#include "tridom/generators.hpp"
#include "tridom/io.hpp"
#include "tridom/svg.hpp"

#include <cstdio>

using namespace tridom;
using tt::fan;
using tt::irreducible7;

TEST_CASE("ntri round-trip preserves structure") {
  for (const auto& g : {fan(9), irreducible7(), random_near_triangulation(14, 3, 5)}) {
    auto j = serialize_ntri(g);
    auto doc = parse_ntri(j);
    CHECK(doc.graph.order() == g.order());
    CHECK(doc.graph.outer_cycle() == g.outer_cycle());
    CHECK(doc.graph.labels() == g.labels());
    for (VertexId v = 0; v < g.order(); ++v)
      CHECK(doc.graph.neighbors(v) == g.neighbors(v));
  }
}

TEST_CASE("unknown top-level keys are rejected") {
  auto j = serialize_ntri(fan(5));
  j["color"] = "green";
  CHECK_THROWS_AS(parse_ntri(j), Error);
}

TEST_CASE("malformed documents produce FormatError") {
  Json j;
  j["n"] = 4;  // missing outer and rotation
  try {
    parse_ntri(j);
    FAIL("expected FormatError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FormatError);
  }
}

TEST_CASE("invalid embeddings are rejected at parse time") {
  Json j;
  j["n"] = 4;
  j["outer"] = {0, 1, 2, 3};
  j["rotation"] = {{"0", {1, 3}}, {"1", {2, 0}}, {"2", {3, 1}}, {"3", {0, 2}}};
  CHECK_THROWS_AS(parse_ntri(j), Error);  // hollow quadrilateral
}

TEST_CASE("coords are accepted and optional") {
  auto j = serialize_ntri(fan(4));
  j["coords"] = {{"0", {0.0, 1.0}}, {"1", {1.0, 0.0}}, {"2", {0.0, -1.0}}, {"3", {-1.0, 0.0}}};
  auto doc = parse_ntri(j);
  CHECK(doc.coords.size() == 4);
  CHECK(doc.coords[0].second == 1.0);
}

TEST_CASE("manifest round-trip") {
  std::string path = "/tmp/tridom_test_manifest.jsonl";
  std::vector<NearTriangulation> instances{fan(5), fan(6), irreducible7()};
  Json meta;
  meta["seed"] = 7;
  write_manifest(path, meta, instances);
  auto m = load_instances(path);
  REQUIRE(m.instances.size() == 3);
  CHECK(m.meta["seed"] == 7);
  CHECK(m.instances[2].graph.order() == 7);
  std::remove(path.c_str());
}

TEST_CASE("a bare single-instance file loads too") {
  std::string path = "/tmp/tridom_test_single.json";
  {
    std::ofstream out(path);
    out << serialize_ntri(fan(8)).dump(2) << "\n";  // pretty-printed
  }
  auto m = load_instances(path);
  REQUIRE(m.instances.size() == 1);
  CHECK(m.instances[0].graph.order() == 8);
  std::remove(path.c_str());
}

TEST_CASE("svg rendering writes a parseable file") {
  std::string path = "/tmp/tridom_test_render.svg";
  RenderOptions opt;
  opt.highlight = {0, 1};
  opt.arcs = {{0, 1}};
  render_svg(irreducible7(), path, opt);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto text = buf.str();
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text.find("</svg>") != std::string::npos);
  CHECK(text.find("circle") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("report serialization carries slack fields") {
  auto g = tt::k4_disc();
  auto rep = exact_report(g);
  rep.constructive_pr = 2;
  auto j = report_to_json(rep);
  CHECK(j["gamma"] == 1);
  CHECK(j["gamma_pr"] == 2);
  CHECK(j["slack_pr"] == 0);
  CHECK(j["constructive_pr2"].is_null());
}
