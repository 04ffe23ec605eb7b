#pragma once

// Constant-size building blocks used by both solvers: size-2 total
// dominating sets in MOPs of order 5/6/7 and the diagonal-splitting walk
// that cuts a piece of controlled order off a larger MOP. The TD-sets are
// found by exhaustive search over vertex pairs; the lemmas guarantee
// existence, so a failed search is an internal error.

#include <optional>

#include "tridom/graph.hpp"
#include "tridom/oracle.hpp"

namespace tridom {

/// Adjacent pair totally dominating the MOP. The two vertices of any size-2
/// TD-set are necessarily adjacent, which is what lets callers pair them.
struct Td2Set {
  VertexId a, b;
  std::vector<VertexId> vertices() const { return {a, b}; }
};

namespace detail {

inline void require_mop_of_order(const NearTriangulation& g, int order, const char* who) {
  require(g.order() == order, ErrorCode::BadOrder, std::string(who) + ": wrong order");
  require(g.is_mop(), ErrorCode::NotMop, std::string(who) + ": not a MOP");
}

inline std::optional<Td2Set> td2_search(const NearTriangulation& g,
                                        std::optional<VertexId> must_contain,
                                        std::optional<EdgeRef> exactly_one_of) {
  for (VertexId a = 0; a < g.order(); ++a)
    for (VertexId b = a + 1; b < g.order(); ++b) {
      if (!g.has_edge(a, b)) continue;
      if (must_contain && *must_contain != a && *must_contain != b) continue;
      if (exactly_one_of) {
        int hits = (a == exactly_one_of->u || a == exactly_one_of->v) +
                   (b == exactly_one_of->u || b == exactly_one_of->v);
        if (hits != 1) continue;
      }
      if (is_total_dominating(g, {a, b})) return Td2Set{a, b};
    }
  return std::nullopt;
}

}  // namespace detail

/// Size-2 TD-set of an order-5 MOP containing the anchor u.
inline Td2Set td2_pentagon(const NearTriangulation& g, VertexId u) {
  detail::require_mop_of_order(g, 5, "td2_pentagon");
  require(u >= 0 && u < 5, ErrorCode::PreconditionViolated, "td2_pentagon: bad anchor");
  auto got = detail::td2_search(g, u, std::nullopt);
  internal_check(got.has_value(), "td2_pentagon: no TD-set found");
  return *got;
}

/// Size-2 TD-set of an order-6 MOP containing exactly one endpoint of the
/// boundary edge e.
inline Td2Set td2_hexagon(const NearTriangulation& g, const EdgeRef& e) {
  detail::require_mop_of_order(g, 6, "td2_hexagon");
  require(g.has_edge(e), ErrorCode::EdgeNotPresent, "td2_hexagon: edge missing");
  require(g.classify_edge(e) == EdgeClass::Boundary, ErrorCode::NotBoundaryEdge,
          "td2_hexagon: edge not on the boundary");
  auto got = detail::td2_search(g, std::nullopt, e);
  internal_check(got.has_value(), "td2_hexagon: no TD-set found");
  return *got;
}

/// Size-2 TD-set of an order-7 MOP.
inline Td2Set td2_heptagon(const NearTriangulation& g) {
  detail::require_mop_of_order(g, 7, "td2_heptagon");
  auto got = detail::td2_search(g, std::nullopt, std::nullopt);
  internal_check(got.has_value(), "td2_heptagon: no TD-set found");
  return *got;
}

/// Least adjacent dominating pair (a PD-set of size 2), if one exists.
inline std::optional<std::pair<VertexId, VertexId>> dominating_adjacent_pair(
    const NearTriangulation& g) {
  for (VertexId a = 0; a < g.order(); ++a)
    for (VertexId b = a + 1; b < g.order(); ++b)
      if (g.has_edge(a, b) && is_dominating(g, {a, b})) return std::pair{a, b};
  return std::nullopt;
}

/// Least dominating pair at distance <= 2 (a semi-PD-set of size 2).
inline std::optional<std::pair<VertexId, VertexId>> dominating_semipair(
    const NearTriangulation& g) {
  for (VertexId a = 0; a < g.order(); ++a)
    for (VertexId b = a + 1; b < g.order(); ++b)
      if (g.distance(a, b) <= 2 && is_dominating(g, {a, b})) return std::pair{a, b};
  return std::nullopt;
}

struct MopSplit {
  EdgeRef diagonal;            // in host vertex ids
  NearTriangulation piece;     // order in [l+1, 2l-1], excludes edge e
  NearTriangulation remainder; // complementary side, contains e
};

/// Splits a MOP of order n >= 2l along a diagonal so that the piece not
/// containing the boundary edge e has order in {l+1, ..., 2l-1}. Follows the
/// iterative walk of the splitting lemma: step from the triangle on e and
/// descend into the larger side until it is small enough.
inline MopSplit split_by_diagonal(const NearTriangulation& g, const EdgeRef& e, int l) {
  require(g.is_mop(), ErrorCode::NotMop, "split_by_diagonal: not a MOP");
  require(g.order() >= 2 * l, ErrorCode::TooSmall, "split_by_diagonal: order below 2l");
  require(g.has_edge(e) && g.classify_edge(e) == EdgeClass::Boundary,
          ErrorCode::NotBoundaryEdge, "split_by_diagonal: e must be a boundary edge");

  int n = g.order();
  auto cyc_dist = [&](VertexId from, VertexId to) {
    return (g.boundary_pos(to) - g.boundary_pos(from) + n) % n;
  };
  // Directed clockwise version of e.
  VertexId x = e.u, y = e.v;
  if (g.boundary_succ(x) != y) std::swap(x, y);

  while (true) {
    VertexId v = g.apex_right_of(x, y);
    // Candidate pieces avoid the edge (x, y): arc y -> v and arc v -> x.
    int r2 = cyc_dist(y, v) + 1;
    int r1 = cyc_dist(v, x) + 1;
    internal_check(r1 + r2 == cyc_dist(y, x) + 2, "split walk arithmetic off");
    VertexId big_from, big_to;  // piece = clockwise arc big_from -> big_to
    int big_order;
    if (r1 <= r2) {
      big_from = y;
      big_to = v;
      big_order = r2;
    } else {
      big_from = v;
      big_to = x;
      big_order = r1;
    }
    if (big_order <= 2 * l - 1) {
      internal_check(big_order >= l + 1, "split walk undershot");
      auto sp = split_at_diagonal(g, big_from, big_to);
      return MopSplit{EdgeRef{big_from, big_to}, std::move(sp.arc_side),
                      std::move(sp.other_side)};
    }
    // Recurse into the big piece; its closing boundary edge runs big_to ->
    // big_from in its own clockwise order.
    x = big_to;
    y = big_from;
  }
}

}  // namespace tridom
