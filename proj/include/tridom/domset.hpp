#pragma once

// Certified output types of the two solvers. Both carry their pairing
// structure explicitly, in label space, so a set computed on a derived graph
// remains meaningful for the original instance.

#include "tridom/graph.hpp"
#include "tridom/oracle.hpp"

namespace tridom {

/// Dominating set with a perfect matching on its vertices; every pair is an
/// edge of the host graph.
struct PairedDomSet {
  std::vector<std::pair<Label, Label>> pairs;

  std::vector<Label> vertices() const {
    std::vector<Label> out;
    for (auto [a, b] : pairs) {
      out.push_back(a);
      out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  int size() const { return 2 * static_cast<int>(pairs.size()); }
  bool contains(Label l) const {
    for (auto [a, b] : pairs)
      if (a == l || b == l) return true;
    return false;
  }
  std::optional<Label> partner_of(Label l) const {
    for (auto [a, b] : pairs) {
      if (a == l) return b;
      if (b == l) return a;
    }
    return std::nullopt;
  }
  void add_pair(Label a, Label b) { pairs.push_back({a, b}); }
  /// Removes the pair containing l and returns the other element.
  Label remove_pair_of(Label l) {
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (pairs[i].first == l || pairs[i].second == l) {
        Label other = pairs[i].first == l ? pairs[i].second : pairs[i].first;
        pairs.erase(pairs.begin() + static_cast<long>(i));
        return other;
      }
    }
    fail(ErrorCode::InternalAssert, "remove_pair_of: label not present");
  }
  /// Swaps one vertex of its pair for another: l leaves, repl enters.
  void replace_in_pair(Label l, Label repl) {
    for (auto& [a, b] : pairs) {
      if (a == l) {
        a = repl;
        return;
      }
      if (b == l) {
        b = repl;
        return;
      }
    }
    fail(ErrorCode::InternalAssert, "replace_in_pair: label not present");
  }
};

/// Dominating set partitioned into 2-sets of vertices at distance <= 2.
struct SemipairedDomSet {
  std::vector<std::pair<Label, Label>> twosets;

  std::vector<Label> vertices() const {
    std::vector<Label> out;
    for (auto [a, b] : twosets) {
      out.push_back(a);
      out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  int size() const { return 2 * static_cast<int>(twosets.size()); }
  bool contains(Label l) const {
    for (auto [a, b] : twosets)
      if (a == l || b == l) return true;
    return false;
  }
  std::optional<Label> partner_of(Label l) const {
    for (auto [a, b] : twosets) {
      if (a == l) return b;
      if (b == l) return a;
    }
    return std::nullopt;
  }
  void add_pair(Label a, Label b) { twosets.push_back({a, b}); }
  Label remove_pair_of(Label l) {
    for (size_t i = 0; i < twosets.size(); ++i) {
      if (twosets[i].first == l || twosets[i].second == l) {
        Label other = twosets[i].first == l ? twosets[i].second : twosets[i].first;
        twosets.erase(twosets.begin() + static_cast<long>(i));
        return other;
      }
    }
    fail(ErrorCode::InternalAssert, "remove_pair_of: label not present");
  }
  void replace_in_pair(Label l, Label repl) {
    for (auto& [a, b] : twosets) {
      if (a == l) {
        a = repl;
        return;
      }
      if (b == l) {
        b = repl;
        return;
      }
    }
    fail(ErrorCode::InternalAssert, "replace_in_pair: label not present");
  }
};

namespace detail {

inline std::optional<std::vector<VertexId>> set_indices(
    const NearTriangulation& g, const std::vector<std::pair<Label, Label>>& pairs,
    std::vector<std::string>& problems) {
  std::vector<VertexId> ids;
  std::vector<char> used(g.order(), 0);
  for (auto [a, b] : pairs) {
    for (Label l : {a, b}) {
      if (!g.has_label(l)) {
        problems.push_back("label " + std::to_string(l) + " not in graph");
        return std::nullopt;
      }
      VertexId v = g.index_of_label(l);
      if (used[v]) problems.push_back("vertex appears in two pairs: " + std::to_string(l));
      used[v] = 1;
      ids.push_back(v);
    }
  }
  return ids;
}

}  // namespace detail

/// All violated conditions, empty when the set is a valid PD-set of g.
inline std::vector<std::string> verify_paired(const NearTriangulation& g,
                                              const PairedDomSet& d) {
  std::vector<std::string> problems;
  auto ids = detail::set_indices(g, d.pairs, problems);
  if (!ids) return problems;
  for (auto [a, b] : d.pairs)
    if (!g.has_edge(g.index_of_label(a), g.index_of_label(b)))
      problems.push_back("pair not an edge: " + std::to_string(a) + "," + std::to_string(b));
  if (!is_dominating(g, *ids)) problems.push_back("set is not dominating");
  return problems;
}

/// All violated conditions, empty when the set is a valid semi-PD-set of g.
/// Distances are measured in g itself.
inline std::vector<std::string> verify_semipaired(const NearTriangulation& g,
                                                  const SemipairedDomSet& d) {
  std::vector<std::string> problems;
  auto ids = detail::set_indices(g, d.twosets, problems);
  if (!ids) return problems;
  for (auto [a, b] : d.twosets) {
    int dist = g.distance(g.index_of_label(a), g.index_of_label(b));
    if (dist > 2)
      problems.push_back("2-set at distance " + std::to_string(dist) + ": " +
                         std::to_string(a) + "," + std::to_string(b));
  }
  if (!is_dominating(g, *ids)) problems.push_back("set is not dominating");
  return problems;
}

}  // namespace tridom
