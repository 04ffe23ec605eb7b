#pragma once

// The exceptional family F: order-9 MOPs built by adding a degree-2 ear on
// each of three alternating boundary edges of an order-6 MOP. These are the
// only near-triangulations the semipaired bound excludes; the solver needs
// to recognize them and to use their near-dominating pairs when an induction
// step lands on one.

#include "tridom/domset.hpp"
#include "tridom/generators.hpp"
#include "tridom/graph.hpp"

namespace tridom {

struct FamilyFMember {
  NearTriangulation mop;          // order 9
  std::vector<Label> hexagon;     // the six base vertices (labels 0..5)
  std::vector<Label> ears;        // the three added vertices
};

/// All members of family F, deduplicated up to isomorphism: every hexagon
/// triangulation times both alternating-edge phases.
inline const std::vector<FamilyFMember>& enumerate_family_f() {
  static const std::vector<FamilyFMember> members = [] {
    std::vector<FamilyFMember> out;
    std::vector<std::vector<std::uint8_t>> codes;
    for (const auto& hex : enumerate_mops(6)) {
      for (int phase = 0; phase < 2; ++phase) {
        auto g = hex;
        std::vector<Label> ears;
        for (int i = 0; i < 3; ++i) {
          Label p = (phase + 2 * i) % 6, q = (phase + 2 * i + 1) % 6;
          auto res = attach_ear(g, g.index_of_label(p), g.index_of_label(q));
          ears.push_back(res.ear_label);
          g = std::move(res.graph);
        }
        auto code = canonical_code(g);
        if (std::find(codes.begin(), codes.end(), code) != codes.end()) continue;
        codes.push_back(std::move(code));
        out.push_back({std::move(g), {0, 1, 2, 3, 4, 5}, std::move(ears)});
      }
    }
    return out;
  }();
  return members;
}

inline bool is_in_family_f(const NearTriangulation& g) {
  if (g.order() != 9 || !g.is_mop()) return false;
  static const std::vector<std::vector<std::uint8_t>> codes = [] {
    std::vector<std::vector<std::uint8_t>> cs;
    for (const auto& m : enumerate_family_f()) cs.push_back(canonical_code(m.mop));
    return cs;
  }();
  auto code = canonical_code(g);
  return std::find(codes.begin(), codes.end(), code) != codes.end();
}

/// Structural recognizer used as an independent cross-check in tests:
/// exactly three degree-2 vertices whose removal leaves an order-6 MOP, each
/// sitting on a boundary edge of it, with the three base edges pairwise
/// disjoint (alternating).
inline bool looks_like_family_f(const NearTriangulation& g) {
  if (g.order() != 9 || !g.is_mop()) return false;
  std::vector<VertexId> deg2;
  for (VertexId v = 0; v < 9; ++v)
    if (g.degree(v) == 2) deg2.push_back(v);
  if (deg2.size() != 3) return false;
  std::vector<VertexId> bases;
  for (VertexId v : deg2) {
    VertexId a = g.neighbors(v)[0], b = g.neighbors(v)[1];
    if (!g.has_edge(a, b)) return false;
    bases.push_back(a);
    bases.push_back(b);
  }
  std::sort(bases.begin(), bases.end());
  return std::adjacent_find(bases.begin(), bases.end()) == bases.end();
}

/// Pair {v, w} dominating V minus {u} with d(v,w) <= 2 and both at distance
/// exactly 2 from u. `required` restricts the search to pairs containing
/// that vertex.
inline std::pair<VertexId, VertexId> near_domset_for_degree2(
    const NearTriangulation& g, VertexId u,
    std::optional<VertexId> required = std::nullopt) {
  require(u >= 0 && u < g.order() && g.degree(u) == 2, ErrorCode::NotDegreeTwo,
          "near_domset_for_degree2 needs a degree-2 vertex");
  auto dominates_except = [&](VertexId v, VertexId w) {
    std::vector<char> ok(g.order(), 0);
    ok[v] = ok[w] = ok[u] = 1;
    for (VertexId x : g.neighbors(v)) ok[x] = 1;
    for (VertexId x : g.neighbors(w)) ok[x] = 1;
    for (VertexId x = 0; x < g.order(); ++x)
      if (!ok[x]) return false;
    return true;
  };
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.distance(u, v) != 2) continue;
    for (VertexId w = v + 1; w < g.order(); ++w) {
      if (required && *required != v && *required != w) continue;
      if (g.distance(u, w) != 2 || g.distance(v, w) > 2) continue;
      if (dominates_except(v, w)) return {v, w};
    }
  }
  fail(ErrorCode::InternalAssert, "no near-dominating pair found (graph not in family F?)");
}

/// For an order-9 near-triangulation with a boundary edge whose removal
/// lands in family F: the size-2 semi-PD-set promised by that structure.
inline SemipairedDomSet semipd2_after_edge_restore(const NearTriangulation& g) {
  require(g.order() == 9, ErrorCode::BadOrder, "semipd2_after_edge_restore needs order 9");
  const auto& C = g.outer_cycle();
  int h = static_cast<int>(C.size());
  for (int i = 0; i < h; ++i) {
    VertexId a = C[i], b = C[(i + 1) % h];
    VertexId apex = g.apex_right_of(a, b);
    if (g.on_boundary(apex)) continue;  // not removable
    auto stripped = remove_edge(g, {a, b});
    if (!is_in_family_f(stripped)) continue;
    // One endpoint has degree 2 in the stripped MOP; the other is at
    // distance 2 from it and must belong to the near-dominating pair so the
    // restored edge covers u.
    VertexId u, z;
    if (stripped.degree(a) == 2) {
      u = a;
      z = b;
    } else {
      internal_check(stripped.degree(b) == 2, "restored edge lacks a degree-2 endpoint");
      u = b;
      z = a;
    }
    internal_check(stripped.distance(u, z) == 2, "restored edge endpoints not at distance 2");
    auto [v, w] = near_domset_for_degree2(stripped, u, z);
    return SemipairedDomSet{{{g.label_of(v), g.label_of(w)}}};
  }
  fail(ErrorCode::NoSuchEdge, "no boundary-edge removal lands in family F");
}

/// Order-9 near-triangulations obtained from each family-F member by
/// restoring a legal boundary edge (ear to a vertex two boundary steps
/// away). These exercise the reducible-step family-F escape.
inline std::vector<NearTriangulation> restored_family_f_instances() {
  std::vector<NearTriangulation> out;
  for (const auto& m : enumerate_family_f()) {
    const auto& g = m.mop;
    for (Label ear : m.ears) {
      VertexId u = g.index_of_label(ear);
      for (VertexId z : {g.boundary_succ(g.boundary_succ(u)),
                         g.boundary_pred(g.boundary_pred(u))}) {
        if (g.has_edge(u, z)) continue;
        out.push_back(add_outer_chord(g, u, z));
      }
    }
  }
  return out;
}

}  // namespace tridom
