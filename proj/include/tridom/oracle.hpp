#pragma once

// Ground truth for small instances: exact domination, paired-domination and
// semipaired-domination numbers by subset enumeration (sizes ascending,
// subsets in colex order, domination-closure pruning), plus the feasibility
// predicates shared with the constructive solvers' verifiers.

#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_set>

#include "tridom/graph.hpp"

namespace tridom {

// ---------------------------------------------------------------------------
// Predicates on arbitrary-size instances.
// ---------------------------------------------------------------------------

inline bool is_dominating(const NearTriangulation& g, const std::vector<VertexId>& set) {
  std::vector<char> in(g.order(), 0), hit(g.order(), 0);
  for (VertexId v : set) in[v] = 1;
  for (VertexId v : set)
    for (VertexId u : g.neighbors(v)) hit[u] = 1;
  for (VertexId v = 0; v < g.order(); ++v)
    if (!in[v] && !hit[v]) return false;
  return true;
}

inline bool is_total_dominating(const NearTriangulation& g, const std::vector<VertexId>& set) {
  std::vector<char> hit(g.order(), 0);
  for (VertexId v : set)
    for (VertexId u : g.neighbors(v)) hit[u] = 1;
  for (VertexId v = 0; v < g.order(); ++v)
    if (!hit[v]) return false;
  return true;
}

namespace detail {

// Perfect matching over an explicit small adjacency relation, deterministic
// (lowest unmatched vertex first, smallest partner first). Infeasible
// submask memoization keeps the search linear in practice.
class PairMatcher {
 public:
  PairMatcher(int m, std::vector<std::uint32_t> adj) : m_(m), adj_(std::move(adj)) {}

  std::optional<std::vector<std::pair<int, int>>> find() {
    if (m_ % 2 != 0) return std::nullopt;
    dead_.clear();
    pairs_.clear();
    if (!search((1u << m_) - 1)) return std::nullopt;
    return pairs_;
  }

 private:
  bool search(std::uint32_t remaining) {
    if (remaining == 0) return true;
    if (dead_.count(remaining)) return false;
    int v = std::countr_zero(remaining);
    std::uint32_t cands = adj_[v] & remaining;
    while (cands) {
      int u = std::countr_zero(cands);
      cands &= cands - 1;
      pairs_.push_back({v, u});
      if (search(remaining & ~(1u << v) & ~(1u << u))) return true;
      pairs_.pop_back();
    }
    dead_.insert(remaining);
    return false;
  }

  int m_;
  std::vector<std::uint32_t> adj_;
  std::unordered_set<std::uint32_t> dead_;
  std::vector<std::pair<int, int>> pairs_;
};

// Reference implementation kept deliberately naive: enumerate pairings of
// the lowest element with every other element, no memoization.
inline bool pairing_exists_reference(int m, const std::vector<std::uint32_t>& adj,
                                     std::uint32_t remaining) {
  if (remaining == 0) return true;
  int v = std::countr_zero(remaining);
  std::uint32_t cands = adj[v] & remaining & ~(1u << v);
  while (cands) {
    int u = std::countr_zero(cands);
    cands &= cands - 1;
    if (pairing_exists_reference(m, adj, remaining & ~(1u << v) & ~(1u << u))) return true;
  }
  return false;
}

}  // namespace detail

/// Perfect matching inside the induced subgraph on `set`, or nullopt.
inline std::optional<std::vector<std::pair<VertexId, VertexId>>> paired_feasible(
    const NearTriangulation& g, const std::vector<VertexId>& set) {
  int m = static_cast<int>(set.size());
  if (m % 2 != 0 || m > 30) return std::nullopt;
  std::vector<std::uint32_t> adj(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && g.has_edge(set[i], set[j])) adj[i] |= 1u << j;
  detail::PairMatcher pm(m, std::move(adj));
  auto got = pm.find();
  if (!got) return std::nullopt;
  std::vector<std::pair<VertexId, VertexId>> out;
  for (auto [i, j] : *got) out.push_back({set[i], set[j]});
  return out;
}

/// Partition of `set` into 2-sets at graph distance <= 2, or nullopt.
inline std::optional<std::vector<std::pair<VertexId, VertexId>>> semipaired_feasible(
    const NearTriangulation& g, const std::vector<VertexId>& set) {
  int m = static_cast<int>(set.size());
  if (m % 2 != 0 || m > 30) return std::nullopt;
  std::vector<std::uint32_t> adj(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && g.distance(set[i], set[j]) <= 2) adj[i] |= 1u << j;
  detail::PairMatcher pm(m, std::move(adj));
  auto got = pm.find();
  if (!got) return std::nullopt;
  std::vector<std::pair<VertexId, VertexId>> out;
  for (auto [i, j] : *got) out.push_back({set[i], set[j]});
  return out;
}

// ---------------------------------------------------------------------------
// Exact minima by bounded subset enumeration.
// ---------------------------------------------------------------------------

enum class DomKind { Plain, Paired, Semipaired };

struct ExactResult {
  int value = -1;
  std::vector<VertexId> witness;
};

namespace detail {

struct ExactSearch {
  const NearTriangulation& g;
  DomKind kind;
  int n;
  std::vector<std::uint32_t> closed;   // N[v]
  std::vector<std::uint32_t> cover;    // cover[m] = union of N[v], v < m
  std::vector<std::uint32_t> pairadj;  // pairing relation (edges / dist<=2)
  std::uint32_t all;
  std::vector<VertexId> chosen;
  std::vector<VertexId> found;

  explicit ExactSearch(const NearTriangulation& graph, DomKind k) : g(graph), kind(k) {
    n = g.order();
    all = n == 32 ? ~0u : (1u << n) - 1;
    closed.assign(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      closed[v] = 1u << v;
      for (VertexId u : g.neighbors(v)) closed[v] |= 1u << u;
    }
    cover.assign(n + 1, 0);
    for (int m = 0; m < n; ++m) cover[m + 1] = cover[m] | closed[m];
    if (kind != DomKind::Plain) {
      pairadj.assign(n, 0);
      for (VertexId v = 0; v < n; ++v)
        for (VertexId u = 0; u < n; ++u) {
          if (u == v) continue;
          bool ok = kind == DomKind::Paired ? g.has_edge(u, v) : g.distance(u, v) <= 2;
          if (ok) pairadj[v] |= 1u << u;
        }
    }
  }

  bool feasible(std::uint32_t mask) {
    if (kind == DomKind::Plain) return true;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) members.push_back(v);
    int m = static_cast<int>(members.size());
    std::vector<std::uint32_t> adj(m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j && (pairadj[members[i]] & (1u << members[j]))) adj[i] |= 1u << j;
    PairMatcher pm(m, std::move(adj));
    return pm.find().has_value();
  }

  // Colex enumeration: the largest element of the subset is chosen first and
  // scans upward, recursing into the prefix below it.
  bool rec(int rem, int maxv, std::uint32_t mask, std::uint32_t dominated) {
    if (rem == 0) {
      if (dominated != all || !feasible(mask)) return false;
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) found.push_back(v);
      return true;
    }
    if (maxv < rem) return false;
    if ((~dominated & all & ~cover[maxv]) != 0) return false;  // closure pruning
    for (int top = rem - 1; top < maxv; ++top)
      if (rec(rem - 1, top, mask | (1u << top), dominated | closed[top])) return true;
    return false;
  }

  ExactResult run(int cap) {
    require(n <= cap && n <= 30, ErrorCode::TooLarge,
            "exact oracle: order " + std::to_string(n) + " exceeds cap");
    int step = kind == DomKind::Plain ? 1 : 2;
    int start = kind == DomKind::Plain ? 1 : 2;
    for (int s = start; s <= n; s += step) {
      found.clear();
      if (rec(s, n, 0, 0)) return {s, found};
    }
    fail(ErrorCode::InternalAssert, "exact oracle found no solution at size n");
  }
};

}  // namespace detail

inline ExactResult exact_gamma_witness(const NearTriangulation& g, int cap = 16) {
  return detail::ExactSearch(g, DomKind::Plain).run(cap);
}
inline ExactResult exact_gamma_pr_witness(const NearTriangulation& g, int cap = 16) {
  return detail::ExactSearch(g, DomKind::Paired).run(cap);
}
inline ExactResult exact_gamma_pr2_witness(const NearTriangulation& g, int cap = 16) {
  return detail::ExactSearch(g, DomKind::Semipaired).run(cap);
}

inline int exact_gamma(const NearTriangulation& g, int cap = 16) {
  return exact_gamma_witness(g, cap).value;
}
inline int exact_gamma_pr(const NearTriangulation& g, int cap = 16) {
  return exact_gamma_pr_witness(g, cap).value;
}
inline int exact_gamma_pr2(const NearTriangulation& g, int cap = 16) {
  return exact_gamma_pr2_witness(g, cap).value;
}

/// Exact values plus constructive results and bound slack for one instance.
/// Constructive fields are filled by the caller (solver layer); -1 means the
/// solver was not applicable (semipaired on a family-F member).
struct DominationReport {
  int n = 0;
  int gamma = 0;
  int gamma_pr = 0;
  int gamma_pr2 = 0;
  std::vector<VertexId> witness_gamma, witness_pr, witness_pr2;
  int constructive_pr = -1;
  int constructive_pr2 = -1;
  int paired_bound = 0;      // 2*floor(n/4)
  int semipaired_bound = 0;  // floor(2n/5)
  int slack_pr = 0;
  int slack_pr2 = 0;

  void check_invariants() const {
    internal_check(gamma <= gamma_pr2 && gamma_pr2 <= gamma_pr, "gamma chain violated");
    internal_check(gamma_pr % 2 == 0 && gamma_pr2 % 2 == 0, "paired values must be even");
  }
};

inline DominationReport exact_report(const NearTriangulation& g, int cap = 16) {
  DominationReport r;
  r.n = g.order();
  auto a = exact_gamma_witness(g, cap);
  auto b = exact_gamma_pr_witness(g, cap);
  auto c = exact_gamma_pr2_witness(g, cap);
  r.gamma = a.value;
  r.gamma_pr = b.value;
  r.gamma_pr2 = c.value;
  r.witness_gamma = a.witness;
  r.witness_pr = b.witness;
  r.witness_pr2 = c.witness;
  r.paired_bound = 2 * (r.n / 4);
  r.semipaired_bound = 2 * r.n / 5;
  r.check_invariants();
  return r;
}

}  // namespace tridom
