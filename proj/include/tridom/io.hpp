#pragma once

// Persistence: the .ntri JSON instance format, JSON-lines corpus manifests,
// and report serialization. The .ntri contract is strict: unknown top-level
// keys are rejected so format drift fails loudly.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tridom/domset.hpp"
#include "tridom/graph.hpp"
#include "tridom/oracle.hpp"

namespace tridom {

using Json = nlohmann::json;

struct NtriDocument {
  NearTriangulation graph;
  std::map<VertexId, std::pair<double, double>> coords;  // rendering only
};

inline NtriDocument parse_ntri(const Json& j) {
  require(j.is_object(), ErrorCode::FormatError, ".ntri document must be a JSON object");
  static const std::vector<std::string> known = {"n", "outer", "rotation", "coords", "labels"};
  for (auto it = j.begin(); it != j.end(); ++it)
    require(std::find(known.begin(), known.end(), it.key()) != known.end(),
            ErrorCode::FormatError, "unknown top-level key: " + it.key());
  require(j.contains("n") && j["n"].is_number_integer(), ErrorCode::FormatError,
          "missing integer key \"n\"");
  require(j.contains("outer") && j["outer"].is_array(), ErrorCode::FormatError,
          "missing array key \"outer\"");
  require(j.contains("rotation") && j["rotation"].is_object(), ErrorCode::FormatError,
          "missing object key \"rotation\"");

  RawEmbedding raw;
  raw.n = j["n"].get<int>();
  require(raw.n >= 3, ErrorCode::FormatError, "n must be at least 3");
  raw.rotation.resize(raw.n);
  std::vector<char> seen(raw.n, 0);
  for (auto it = j["rotation"].begin(); it != j["rotation"].end(); ++it) {
    int v = -1;
    try {
      v = std::stoi(it.key());
    } catch (...) {
      fail(ErrorCode::FormatError, "rotation key is not a vertex id: " + it.key());
    }
    require(v >= 0 && v < raw.n && !seen[v], ErrorCode::FormatError,
            "bad or repeated rotation key: " + it.key());
    seen[v] = 1;
    require(it.value().is_array(), ErrorCode::FormatError, "rotation values must be arrays");
    for (const auto& u : it.value()) {
      require(u.is_number_integer(), ErrorCode::FormatError, "rotation entries must be ints");
      raw.rotation[v].push_back(u.get<int>());
    }
  }
  for (int v = 0; v < raw.n; ++v)
    require(seen[v], ErrorCode::FormatError, "rotation missing vertex " + std::to_string(v));
  for (const auto& u : j["outer"]) {
    require(u.is_number_integer(), ErrorCode::FormatError, "outer entries must be ints");
    raw.outer.push_back(u.get<int>());
  }
  if (j.contains("labels")) {
    require(j["labels"].is_array() && static_cast<int>(j["labels"].size()) == raw.n,
            ErrorCode::FormatError, "labels must be an array of n integers");
    for (const auto& l : j["labels"]) raw.labels.push_back(l.get<Label>());
  }

  NtriDocument doc{NearTriangulation::build(std::move(raw)), {}};
  if (j.contains("coords")) {
    require(j["coords"].is_object(), ErrorCode::FormatError, "coords must be an object");
    for (auto it = j["coords"].begin(); it != j["coords"].end(); ++it) {
      int v = std::stoi(it.key());
      require(v >= 0 && v < doc.graph.order() && it.value().is_array() &&
                  it.value().size() == 2,
              ErrorCode::FormatError, "coords entries must map vertex ids to [x, y]");
      doc.coords[v] = {it.value()[0].get<double>(), it.value()[1].get<double>()};
    }
  }
  return doc;
}

inline Json serialize_ntri(const NearTriangulation& g) {
  Json j;
  j["n"] = g.order();
  j["outer"] = g.outer_cycle();
  Json rot = Json::object();
  for (VertexId v = 0; v < g.order(); ++v) rot[std::to_string(v)] = g.neighbors(v);
  j["rotation"] = std::move(rot);
  bool identity = true;
  for (VertexId v = 0; v < g.order(); ++v) identity &= g.label_of(v) == v;
  if (!identity) j["labels"] = g.labels();
  return j;
}

// ---------------------------------------------------------------------------
// Corpus manifests: a JSON-lines file whose first line carries generation
// metadata under the key "manifest" and whose remaining lines are plain
// .ntri objects. A bare single-document .ntri file is also accepted.
// ---------------------------------------------------------------------------

struct Manifest {
  Json meta;  // {"manifest": {...}} header payload, may be null
  std::vector<NtriDocument> instances;
};

inline Manifest parse_manifest_text(const std::string& text) {
  Manifest m;
  m.meta = nullptr;
  // Whole-file parse first: a single .ntri document may be pretty-printed.
  {
    auto parsed = Json::parse(text, nullptr, false);
    if (!parsed.is_discarded() && parsed.is_object() && parsed.contains("n")) {
      m.instances.push_back(parse_ntri(parsed));
      return m;
    }
  }
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto parsed = Json::parse(line, nullptr, false);
    require(!parsed.is_discarded(), ErrorCode::FormatError, "malformed JSON line");
    if (first && parsed.is_object() && parsed.contains("manifest")) {
      m.meta = parsed["manifest"];
      first = false;
      continue;
    }
    first = false;
    m.instances.push_back(parse_ntri(parsed));
  }
  return m;
}

inline Manifest load_instances(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::FormatError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_manifest_text(buf.str());
}

inline void write_manifest(const std::string& path, const Json& meta,
                           const std::vector<NearTriangulation>& instances) {
  std::ofstream out(path);
  require(out.good(), ErrorCode::FormatError, "cannot open " + path + " for writing");
  Json header;
  header["manifest"] = meta;
  out << header.dump() << "\n";
  for (const auto& g : instances) out << serialize_ntri(g).dump() << "\n";
}

// ---------------------------------------------------------------------------
// Report serialization.
// ---------------------------------------------------------------------------

inline Json report_to_json(const DominationReport& r) {
  Json j;
  j["n"] = r.n;
  j["gamma"] = r.gamma;
  j["gamma_pr"] = r.gamma_pr;
  j["gamma_pr2"] = r.gamma_pr2;
  j["witness_gamma"] = r.witness_gamma;
  j["witness_pr"] = r.witness_pr;
  j["witness_pr2"] = r.witness_pr2;
  j["paired_bound"] = r.paired_bound;
  j["semipaired_bound"] = r.semipaired_bound;
  if (r.constructive_pr >= 0) {
    j["constructive_pr"] = r.constructive_pr;
    j["slack_pr"] = r.paired_bound - r.constructive_pr;
  } else {
    j["constructive_pr"] = nullptr;
  }
  if (r.constructive_pr2 >= 0) {
    j["constructive_pr2"] = r.constructive_pr2;
    j["slack_pr2"] = r.semipaired_bound - r.constructive_pr2;
  } else {
    j["constructive_pr2"] = nullptr;
  }
  return j;
}

inline Json pairs_to_json(const std::vector<std::pair<Label, Label>>& pairs) {
  Json arr = Json::array();
  for (auto [a, b] : pairs) arr.push_back(Json::array({a, b}));
  return arr;
}

}  // namespace tridom
