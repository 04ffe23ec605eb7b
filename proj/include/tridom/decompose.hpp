#pragma once

// Reducibility and the terminal-polygon decomposition of irreducible
// near-triangulations. The diagonals of T[C] (the subgraph induced by the
// boundary) cut the disc into regions; a non-empty region flanked by MOPs on
// all but at most one side is terminal, and both solvers recurse on it.

#include <optional>

#include "tridom/graph.hpp"

namespace tridom {

/// First boundary edge (lowest (min,max) endpoint pair) whose inner-triangle
/// apex is interior, or nullopt when the graph is a MOP or irreducible.
inline std::optional<EdgeRef> find_reducible_edge(const NearTriangulation& g) {
  const auto& C = g.outer_cycle();
  int h = static_cast<int>(C.size());
  std::optional<EdgeRef> best;
  for (int i = 0; i < h; ++i) {
    VertexId u = C[i], v = C[(i + 1) % h];
    VertexId w = g.apex_right_of(u, v);
    if (g.on_boundary(w)) continue;
    EdgeRef e{std::min(u, v), std::max(u, v)};
    if (!best || std::pair(e.u, e.v) < std::pair(best->u, best->v)) best = e;
  }
  return best;
}

struct Region {
  std::vector<VertexId> polygon;        // corner cycle, clockwise
  std::vector<VertexId> interior;       // interior vertices of T inside it
  bool empty() const { return interior.empty(); }
};

/// The bounded faces of T[C], each tagged with the interior vertices of T it
/// contains. Union of regions covers every interior vertex exactly once.
inline std::vector<Region> boundary_subgraph_regions(const NearTriangulation& g) {
  int n = g.order();
  std::vector<std::vector<VertexId>> brot(n);
  for (VertexId v : g.outer_cycle())
    for (VertexId u : g.neighbors(v))
      if (g.on_boundary(u)) brot[v].push_back(u);
  auto faces = detail::trace_faces(brot);

  const auto& C = g.outer_cycle();
  int outer_face = -1;
  for (size_t f = 0; f < faces.size(); ++f)
    for (auto& de : faces[f])
      if (de.first == C[1] && de.second == C[0]) outer_face = static_cast<int>(f);
  internal_check(outer_face >= 0, "regions: outer face of T[C] not found");

  std::vector<Region> regions;
  std::vector<char> interior_seen(n, 0);
  for (size_t f = 0; f < faces.size(); ++f) {
    if (static_cast<int>(f) == outer_face) continue;
    Region reg;
    for (auto& de : faces[f]) reg.polygon.push_back(de.first);

    // Census walk over the faces of T inside this region. Crossing an edge
    // is allowed unless both its endpoints are boundary vertices (such an
    // edge belongs to T[C] and walls the region off).
    std::vector<std::vector<char>> seen(n);
    for (VertexId v = 0; v < n; ++v) seen[v].assign(g.neighbors(v).size(), 0);
    auto mark = [&](VertexId u, VertexId v) {
      const auto& rot = g.neighbors(u);
      size_t i = static_cast<size_t>(std::find(rot.begin(), rot.end(), v) - rot.begin());
      if (seen[u][i]) return false;
      seen[u][i] = 1;
      return true;
    };
    std::vector<std::pair<VertexId, VertexId>> stack{{faces[f][0].first, faces[f][0].second}};
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      if (!mark(x, y)) continue;
      auto face = g.face_from(x, y);
      internal_check(face.size() == 3, "region census crossed into the outer face");
      for (size_t i = 0; i < face.size(); ++i) {
        VertexId a = face[i], b = face[(i + 1) % face.size()];
        mark(a, b);
        if (!g.on_boundary(a) && !interior_seen[a]) {
          interior_seen[a] = 1;
          reg.interior.push_back(a);
        }
        if (!(g.on_boundary(a) && g.on_boundary(b))) stack.push_back({b, a});
      }
    }
    std::sort(reg.interior.begin(), reg.interior.end());
    regions.push_back(std::move(reg));
  }
  int total = 0;
  for (const auto& r : regions) total += static_cast<int>(r.interior.size());
  internal_check(total == g.interior_count(), "region census lost interior vertices");
  return regions;
}

/// A terminal polygon P with its flanking pieces. Side j runs from
/// polygon[j] to polygon[(j+1)%k]; flank j is T_out(P, side j), the piece of
/// the disc beyond that side. At most one flank contains interior vertices;
/// when one does, the labeling is rotated so it sits at index k-1.
struct TerminalDecomposition {
  std::vector<VertexId> polygon;            // corners, clockwise in the host
  std::vector<VertexId> interior;           // interior vertices of P
  std::vector<NearTriangulation> flanks;    // M_j, order >= 3 each
  std::vector<int> flank_orders;
  std::vector<char> flank_is_mop;
  int special_index = -1;                   // unique non-MOP flank, or -1

  int side_count() const { return static_cast<int>(polygon.size()); }
  EdgeRef side(int j) const {
    int k = side_count();
    return {polygon[j % k], polygon[(j + 1) % k]};
  }
  VertexId corner(int j) const { return polygon[((j % side_count()) + side_count()) % side_count()]; }

  /// T_in(P, side j): the host minus the strict inside of flank j. The flank
  /// occupies the clockwise arc polygon[j] -> polygon[j+1], so T_in is the
  /// complementary split side.
  NearTriangulation inner(const NearTriangulation& g, int j) const {
    auto e = side(j);
    auto sp = split_at_diagonal(g, e.u, e.v);
    internal_check(sp.arc_side.order() == flank_orders[j], "flank/inner split mismatch");
    return std::move(sp.other_side);
  }
};

/// Decomposes an irreducible near-triangulation around a terminal polygon.
/// Deterministic: among all terminal polygons the one with the smallest
/// corner-id set is returned.
inline TerminalDecomposition find_terminal_polygon(const NearTriangulation& g) {
  require(g.interior_count() >= 1 && !find_reducible_edge(g), ErrorCode::NotIrreducible,
          "terminal polygons exist only in irreducible near-triangulations");

  auto regions = boundary_subgraph_regions(g);
  std::vector<int> candidates;
  for (size_t i = 0; i < regions.size(); ++i)
    if (!regions[i].empty()) candidates.push_back(static_cast<int>(i));
  internal_check(!candidates.empty(), "irreducible graph with no non-empty region");

  struct Built {
    int region;
    std::vector<NearTriangulation> flanks;
    int special = -1;
  };
  std::optional<Built> chosen;
  std::vector<VertexId> chosen_key;
  for (int ri : candidates) {
    const auto& reg = regions[ri];
    int k = static_cast<int>(reg.polygon.size());
    Built b{ri, {}, -1};
    bool terminal = true;
    for (int j = 0; j < k && terminal; ++j) {
      VertexId x = reg.polygon[j], y = reg.polygon[(j + 1) % k];
      internal_check(!g.is_boundary_edge(x, y), "non-empty region with a boundary side");
      auto sp = split_at_diagonal(g, x, y);
      auto flank = std::move(sp.arc_side);  // clockwise arc x -> y side
      internal_check(flank.order() >= 3, "flank of order < 3");
      if (flank.interior_count() > 0) {
        if (b.special >= 0) terminal = false;
        b.special = j;
      }
      b.flanks.push_back(std::move(flank));
    }
    if (!terminal) continue;
    std::vector<VertexId> key(reg.polygon);
    std::sort(key.begin(), key.end());
    if (!chosen || key < chosen_key) {
      chosen = std::move(b);
      chosen_key = std::move(key);
    }
  }
  internal_check(chosen.has_value(), "no terminal polygon found");

  const auto& reg = regions[chosen->region];
  int k = static_cast<int>(reg.polygon.size());
  // Canonical rotation: the special flank goes last; with no special flank,
  // start at the smallest corner id.
  int shift = 0;
  if (chosen->special >= 0) {
    shift = (chosen->special + 1) % k;
  } else {
    for (int j = 1; j < k; ++j)
      if (reg.polygon[j] < reg.polygon[shift]) shift = j;
  }
  TerminalDecomposition td;
  td.interior = reg.interior;
  for (int j = 0; j < k; ++j) {
    int src = (shift + j) % k;
    td.polygon.push_back(reg.polygon[src]);
    td.flanks.push_back(std::move(chosen->flanks[src]));
  }
  td.special_index = chosen->special >= 0 ? k - 1 : -1;
  for (int j = 0; j < k; ++j) {
    td.flank_orders.push_back(td.flanks[j].order());
    td.flank_is_mop.push_back(td.flanks[j].is_mop() ? 1 : 0);
    int inner_order = g.order() + 2 - td.flank_orders[j];
    internal_check(inner_order >= 6, "T_in of order < 6 contradicts irreducibility");
  }
  if (td.special_index >= 0)
    internal_check(td.flank_orders[td.special_index] >= 6, "non-MOP flank of order < 6");
  return td;
}

}  // namespace tridom
