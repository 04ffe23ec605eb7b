// Command-line surface: instance generation, the two constructive solvers,
// the exact oracle, set verification, SVG rendering, and a small benchmark.
// All machine output is JSON (one line per instance); diagnostics go to
// stderr as JSON. Exit codes: 0 ok, 2 verification failure, 3 format error,
// 4 internal assertion.

#include <chrono>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "tridom/family_f.hpp"
#include "tridom/generators.hpp"
#include "tridom/io.hpp"
#include "tridom/oracle.hpp"
#include "tridom/paired.hpp"
#include "tridom/semipaired.hpp"
#include "tridom/svg.hpp"

using namespace tridom;

namespace {

int code_to_exit(ErrorCode c) {
  switch (c) {
    case ErrorCode::FormatError: return 3;
    case ErrorCode::InternalAssert: return 4;
    default: return 2;
  }
}

void emit_error(const Error& e) {
  Json j;
  j["error"] = error_code_name(e.code());
  j["detail"] = e.what();
  std::cerr << j.dump() << "\n";
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  require(out.good(), ErrorCode::FormatError, "cannot open " + path + " for writing");
  return out;
}

// Runs fn over [0, count) with the requested parallelism; results are
// collected per index so output order stays deterministic.
template <typename Fn>
void parallel_for(int count, int jobs, Fn fn) {
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      while (true) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

int cmd_gen(const std::string& kind, int n, int m, int count, std::uint64_t seed,
            const std::string& out_path) {
  std::vector<NearTriangulation> instances;
  Json meta;
  meta["kind"] = kind;
  meta["seed"] = seed;
  if (kind == "mop") {
    require(n >= 3, ErrorCode::FormatError, "--n must be at least 3");
    SplitMix64 rng(seed);
    for (int i = 0; i < count; ++i) instances.push_back(random_mop(n, rng.next()));
    meta["n"] = n;
    meta["count"] = count;
  } else if (kind == "ntri") {
    require(n - m >= 3 && m >= 0, ErrorCode::FormatError, "need m >= 0 and n - m >= 3");
    SplitMix64 rng(seed);
    for (int i = 0; i < count; ++i)
      instances.push_back(random_near_triangulation(n, m, rng.next()));
    meta["n"] = n;
    meta["m"] = m;
    meta["count"] = count;
  } else if (kind == "irreducible") {
    for (auto& ci : irreducible_corpus(count, seed, std::max(10, n)))
      instances.push_back(std::move(ci.graph));
    meta["max_order"] = std::max(10, n);
    meta["count"] = count;
  } else if (kind == "family-f") {
    for (const auto& mem : enumerate_family_f()) instances.push_back(mem.mop);
    meta["count"] = static_cast<int>(instances.size());
  } else if (kind == "enumerate") {
    instances = enumerate_mops(n);
    meta["n"] = n;
    meta["count"] = static_cast<int>(instances.size());
  } else {
    fail(ErrorCode::FormatError, "unknown --kind " + kind);
  }
  write_manifest(out_path, meta, instances);
  Json done;
  done["written"] = static_cast<int>(instances.size());
  done["path"] = out_path;
  std::cout << done.dump() << "\n";
  return 0;
}

int cmd_solve(const std::string& mode, const std::string& in_path, const std::string& out_path,
              bool verify, int jobs, bool pretty) {
  auto manifest = load_instances(in_path);
  int count = static_cast<int>(manifest.instances.size());
  std::vector<Json> results(count);
  std::vector<int> exits(count, 0);
  parallel_for(count, jobs, [&](int i) {
    const auto& g = manifest.instances[i].graph;
    Json j;
    j["index"] = i;
    j["n"] = g.order();
    j["m"] = g.interior_count();
    j["mode"] = mode;
    try {
      if (mode == "paired") {
        auto d = compute_paired(g);
        j["size"] = d.size();
        j["bound"] = paired_bound(g.order());
        j["pairs"] = pairs_to_json(d.pairs);
        if (verify) {
          auto problems = verify_paired(g, d);
          bool ok = problems.empty() && d.size() <= paired_bound(g.order());
          j["ok"] = ok;
          if (!ok) {
            j["problems"] = problems;
            exits[i] = 2;
          }
        }
      } else {
        auto d = compute_semipaired(g);
        j["size"] = d.size();
        j["bound"] = semipaired_bound(g.order());
        j["twosets"] = pairs_to_json(d.twosets);
        if (verify) {
          auto problems = verify_semipaired(g, d);
          bool ok = problems.empty() && d.size() <= semipaired_bound(g.order());
          j["ok"] = ok;
          if (!ok) {
            j["problems"] = problems;
            exits[i] = 2;
          }
        }
      }
    } catch (const Error& e) {
      j["error"] = error_code_name(e.code());
      j["detail"] = e.what();
      exits[i] = code_to_exit(e.code());
    }
    results[i] = std::move(j);
  });
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file = open_out(out_path);
    out = &file;
  }
  for (auto& j : results) {
    if (pretty) {
      *out << "# n=" << j["n"] << " size=" << (j.contains("size") ? j["size"].dump() : "-")
           << " bound=" << (j.contains("bound") ? j["bound"].dump() : "-")
           << (j.contains("error") ? " error=" + j["error"].get<std::string>() : "") << "\n";
    }
    *out << j.dump() << "\n";
  }
  int rc = 0;
  for (int e : exits) rc = std::max(rc, e);
  return rc;
}

int cmd_exact(const std::string& in_path, int cap, const std::string& out_path, int jobs) {
  auto manifest = load_instances(in_path);
  int count = static_cast<int>(manifest.instances.size());
  std::vector<Json> results(count);
  std::vector<int> exits(count, 0);
  parallel_for(count, jobs, [&](int i) {
    const auto& g = manifest.instances[i].graph;
    Json j;
    try {
      auto rep = exact_report(g, cap);
      rep.constructive_pr = g.order() >= 4 ? compute_paired(g).size() : -1;
      if (g.order() >= 5 && !is_in_family_f(g))
        rep.constructive_pr2 = compute_semipaired(g).size();
      j = report_to_json(rep);
      j["family_f"] = is_in_family_f(g);
    } catch (const Error& e) {
      j["error"] = error_code_name(e.code());
      j["detail"] = e.what();
      exits[i] = code_to_exit(e.code());
    }
    j["index"] = i;
    results[i] = std::move(j);
  });
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file = open_out(out_path);
    out = &file;
  }
  for (auto& j : results) *out << j.dump() << "\n";
  int rc = 0;
  for (int e : exits) rc = std::max(rc, e);
  return rc;
}

int cmd_verify(const std::string& in_path, const std::string& set_json) {
  auto manifest = load_instances(in_path);
  require(!manifest.instances.empty(), ErrorCode::FormatError, "no instance in input");
  const auto& g = manifest.instances.front().graph;
  auto parsed = Json::parse(set_json, nullptr, false);
  require(!parsed.is_discarded() && parsed.is_object(), ErrorCode::FormatError,
          "--set must be a JSON object");

  Json out;
  int rc = 0;
  auto to_pairs = [](const Json& arr) {
    std::vector<std::pair<Label, Label>> ps;
    for (const auto& p : arr) ps.push_back({p[0].get<Label>(), p[1].get<Label>()});
    return ps;
  };
  std::vector<VertexId> ids;
  if (parsed.contains("vertices")) {
    for (const auto& l : parsed["vertices"]) ids.push_back(g.index_of_label(l.get<Label>()));
  }
  if (parsed.contains("pairs")) {
    PairedDomSet d{to_pairs(parsed["pairs"])};
    auto problems = verify_paired(g, d);
    out["paired_ok"] = problems.empty();
    if (!problems.empty()) {
      out["paired_problems"] = problems;
      rc = 2;
    }
    for (Label l : d.vertices()) ids.push_back(g.index_of_label(l));
  }
  if (parsed.contains("twosets")) {
    SemipairedDomSet d{to_pairs(parsed["twosets"])};
    auto problems = verify_semipaired(g, d);
    out["semipaired_ok"] = problems.empty();
    if (!problems.empty()) {
      out["semipaired_problems"] = problems;
      rc = 2;
    }
    for (Label l : d.vertices()) ids.push_back(g.index_of_label(l));
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  out["dominating"] = is_dominating(g, ids);
  out["total_dominating"] = is_total_dominating(g, ids);
  out["paired_feasible"] = paired_feasible(g, ids).has_value();
  out["semipaired_feasible"] = semipaired_feasible(g, ids).has_value();
  if (parsed.contains("vertices") && !out["dominating"].get<bool>()) rc = 2;
  std::cout << out.dump() << "\n";
  return rc;
}

int cmd_render(const std::string& in_path, const std::string& out_path,
               const std::string& set_json, int index) {
  auto manifest = load_instances(in_path);
  require(index >= 0 && index < static_cast<int>(manifest.instances.size()),
          ErrorCode::FormatError, "instance index out of range");
  const auto& doc = manifest.instances[index];
  RenderOptions opt;
  opt.coords = doc.coords;
  if (!set_json.empty()) {
    auto parsed = Json::parse(set_json, nullptr, false);
    require(!parsed.is_discarded() && parsed.is_object(), ErrorCode::FormatError,
            "--set must be a JSON object");
    auto add_arcs = [&](const Json& arr) {
      for (const auto& p : arr) {
        opt.arcs.push_back({p[0].get<Label>(), p[1].get<Label>()});
        opt.highlight.push_back(p[0].get<Label>());
        opt.highlight.push_back(p[1].get<Label>());
      }
    };
    if (parsed.contains("pairs")) add_arcs(parsed["pairs"]);
    if (parsed.contains("twosets")) add_arcs(parsed["twosets"]);
    if (parsed.contains("vertices"))
      for (const auto& l : parsed["vertices"]) opt.highlight.push_back(l.get<Label>());
  }
  render_svg(doc.graph, out_path, opt);
  Json done;
  done["path"] = out_path;
  std::cout << done.dump() << "\n";
  return 0;
}

int cmd_bench(const std::string& suite) {
  using Clock = std::chrono::steady_clock;
  SolveStats stats;
  auto t0 = Clock::now();
  long solved = 0;
  int max_n = suite == "full" ? 12 : 10;
  for (int n = 4; n <= max_n; ++n) {
    for (const auto& g : enumerate_mops(n)) {
      compute_paired(g, &stats);
      if (n >= 5 && !is_in_family_f(g)) compute_semipaired(g, &stats);
      ++solved;
    }
  }
  int random_count = suite == "full" ? 2000 : 300;
  SplitMix64 rng(4242);
  for (int i = 0; i < random_count; ++i) {
    int n = 7 + static_cast<int>(rng.below(54));
    int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, n / 2))));
    auto g = random_near_triangulation(n, m, rng.next());
    compute_paired(g, &stats);
    if (!is_in_family_f(g)) compute_semipaired(g, &stats);
    ++solved;
  }
  for (const auto& g : restored_family_f_instances()) {
    compute_semipaired(g, &stats);
    ++solved;
  }
  compute_semipaired(family_f_case2_instance(), &stats);
  compute_semipaired(family_f_case6_instance(), &stats);
  solved += 2;
  auto t1 = Clock::now();
  Json j;
  j["suite"] = suite;
  j["instances"] = solved;
  j["seconds"] = std::chrono::duration<double>(t1 - t0).count();
  Json hist = Json::object();
  for (const auto& [k, v] : stats.counts) hist[k] = v;
  j["dispatch_histogram"] = std::move(hist);
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paired / semipaired domination on near-triangulations"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate instance corpora");
  std::string kind = "mop", out_path = "corpus.jsonl";
  int n = 8, m = 0, count = 1, cap = 16, jobs = 1, index = 0;
  std::uint64_t seed = 1;
  gen->add_option("--kind", kind, "mop|ntri|irreducible|family-f|enumerate");
  gen->add_option("--n", n, "order");
  gen->add_option("--m", m, "interior vertices (ntri)");
  gen->add_option("--count", count, "number of instances");
  gen->add_option("--seed", seed, "64-bit seed");
  gen->add_option("-o,--out", out_path, "output manifest path")->required();

  auto* solve = app.add_subcommand("solve", "run a constructive solver");
  std::string mode = "paired", in_path, solve_out;
  bool verify = false, pretty = false;
  solve->add_option("--mode", mode, "paired|semipaired")
      ->check(CLI::IsMember({"paired", "semipaired"}));
  solve->add_option("-i,--in", in_path, "instance or manifest path")->required();
  solve->add_option("-o,--out", solve_out, "output path (default stdout)");
  solve->add_flag("--verify", verify, "re-check every output set and bound");
  solve->add_option("--jobs", jobs, "parallel instance workers");
  solve->add_flag("--pretty", pretty, "human-readable summary lines");

  auto* exact = app.add_subcommand("exact", "exact domination report");
  std::string exact_in, exact_out;
  exact->add_option("-i,--in", exact_in, "instance or manifest path")->required();
  exact->add_option("--cap", cap, "max order for exact search");
  exact->add_option("-o,--out", exact_out, "output path (default stdout)");
  exact->add_option("--jobs", jobs, "parallel instance workers");

  auto* verify_cmd = app.add_subcommand("verify", "check a user-supplied set");
  std::string verify_in, set_json;
  verify_cmd->add_option("-i,--in", verify_in, "instance path")->required();
  verify_cmd->add_option("--set", set_json, "JSON set description")->required();

  auto* render = app.add_subcommand("render", "draw an instance as SVG");
  std::string render_in, render_out, render_set;
  render->add_option("-i,--in", render_in, "instance path")->required();
  render->add_option("-o,--out", render_out, "SVG output path")->required();
  render->add_option("--set", render_set, "JSON set to highlight");
  render->add_option("--index", index, "instance index within a manifest");

  auto* bench = app.add_subcommand("bench", "runtime and coverage statistics");
  std::string suite = "small";
  bench->add_option("--suite", suite, "small|full")->check(CLI::IsMember({"small", "full"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(kind, n, m, count, seed, out_path);
    if (solve->parsed()) return cmd_solve(mode, in_path, solve_out, verify, jobs, pretty);
    if (exact->parsed()) return cmd_exact(exact_in, cap, exact_out, jobs);
    if (verify_cmd->parsed()) return cmd_verify(verify_in, set_json);
    if (render->parsed()) return cmd_render(render_in, render_out, render_set, index);
    if (bench->parsed()) return cmd_bench(suite);
  } catch (const Error& e) {
    emit_error(e);
    return code_to_exit(e.code());
  } catch (const std::exception& e) {
    Json j;
    j["error"] = "InternalAssert";
    j["detail"] = e.what();
    std::cerr << j.dump() << "\n";
    return 4;
  }
  return 0;
}
