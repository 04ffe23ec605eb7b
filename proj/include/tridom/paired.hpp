#pragma once

// Constructive paired domination: a PD-set of size at most 2*floor(n/4) for
// every near-triangulation of order n >= 4. The recursion strips reducible
// edges, then dispatches on the flank sizes around a terminal polygon:
//   1: a flank of order 4            (x/y gadget, same order, one interior less)
//   2: order 5, base contractible    (contract the base, pentagon TD-set)
//   3: order 6                       (hexagon TD-set anchored at the base)
//   4: order 7                       (heptagon TD-set)
//   5: order >= 8                    (split off a 5/6/7 piece, reuse 2-4)
//   6: two adjacent order-3 flanks   (w' gadget)
//   7: adjacent 5+3 flanks           (drop the shared corner, pentagon TD-set)
//   8: adjacent 5+5 flanks           (drop corner + interior partner)
// MOPs recurse by the splitting lemma with the same absorption steps.
//
// Every recursion level re-verifies its output set and the size bound, and
// asserts that the (order, interior-count) measure strictly decreased.

#include <map>

#include "tridom/decompose.hpp"
#include "tridom/domset.hpp"
#include "tridom/small_mops.hpp"

namespace tridom {

struct SolveStats {
  std::map<std::string, long> counts;
  void bump(const std::string& key) { ++counts[key]; }
  long get(const std::string& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
  }
  void merge(const SolveStats& other) {
    for (auto& [k, v] : other.counts) counts[k] += v;
  }
};

inline int paired_bound(int n) { return 2 * (n / 4); }

struct Case1Gadget {
  NearTriangulation graph;
  Label x, y;
};

/// The x/y gadget: on input with boundary ..., v, a, ... (or ..., a, v, ...)
/// attaches x adjacent to v and a, then y adjacent to x and a. min_fresh
/// keeps the two new labels clear of any host graph the caller tracks.
inline Case1Gadget case1_gadget(const NearTriangulation& g, Label v_label, Label a_label,
                                Label min_fresh = 0) {
  VertexId v = g.index_of_label(v_label), a = g.index_of_label(a_label);
  require(g.on_boundary(v) && g.on_boundary(a), ErrorCode::PreconditionViolated,
          "case1_gadget: attachment vertices must be on the boundary");
  if (g.boundary_succ(v) == a) {
    auto e1 = attach_ear(g, v, a, min_fresh);
    Label x = e1.ear_label;
    auto e2 = attach_ear(e1.graph, e1.graph.index_of_label(x),
                         e1.graph.index_of_label(a_label), min_fresh);
    return {std::move(e2.graph), x, e2.ear_label};
  }
  require(g.boundary_succ(a) == v, ErrorCode::PreconditionViolated,
          "case1_gadget: v and a must be boundary-consecutive");
  auto e1 = attach_ear(g, a, v, min_fresh);
  Label x = e1.ear_label;
  auto e2 = attach_ear(e1.graph, e1.graph.index_of_label(a_label),
                       e1.graph.index_of_label(x), min_fresh);
  return {std::move(e2.graph), x, e2.ear_label};
}

/// Everything the order-4 flank case needs for its lift-back: the gadget
/// graph T' plus the labels of the actors. `a` is the flank base endpoint
/// with degree 3, `near`/`far` its flank neighbors, `v` the boundary
/// neighbor of a outside the flank, and x/y the two gadget vertices.
struct Case1Context {
  NearTriangulation tprime;
  Label a, near_w, far_w, v, x, y;
};

inline Case1Context build_case1_context(const NearTriangulation& g,
                                        const TerminalDecomposition& td, int j) {
  const auto& flank = td.flanks[j];
  Label vj = g.label_of(td.corner(j)), vj1 = g.label_of(td.corner(j + 1));
  const auto& arc = flank.outer_cycle();
  internal_check(flank.order() == 4, "case1 expects an order-4 flank");
  Label w1 = flank.label_of(arc[1]), w2 = flank.label_of(arc[2]);
  internal_check(flank.label_of(arc[0]) == vj && flank.label_of(arc[3]) == vj1,
                 "case1 flank arc misaligned");
  bool vj_deg3 = flank.has_edge(flank.index_of_label(vj), flank.index_of_label(w2));
  Label a = vj_deg3 ? vj : vj1;
  Label near_w = vj_deg3 ? w1 : w2;  // flank boundary neighbor of a
  Label far_w = vj_deg3 ? w2 : w1;   // diagonal partner of a
  VertexId a_idx = g.index_of_label(a);
  Label v = vj_deg3 ? g.label_of(g.boundary_pred(a_idx)) : g.label_of(g.boundary_succ(a_idx));

  auto tj = td.inner(g, j);
  auto tjm = remove_edge(tj, {tj.index_of_label(vj), tj.index_of_label(vj1)});
  auto gadget = case1_gadget(tjm, v, a, g.max_label() + 1);
  internal_check(gadget.graph.order() == g.order() &&
                     gadget.graph.interior_count() == g.interior_count() - 1,
                 "case1 gadget has wrong vertex mix");
  return Case1Context{std::move(gadget.graph), a, near_w, far_w, v, gadget.x, gadget.y};
}

inline std::optional<Label> least_free_neighbor_paired(const NearTriangulation& g, Label of,
                                                       const PairedDomSet& d) {
  std::optional<Label> best;
  for (VertexId u : g.neighbors(g.index_of_label(of))) {
    Label l = g.label_of(u);
    if (!d.contains(l) && (!best || l < *best)) best = l;
  }
  return best;
}

/// Pure lift-back of the order-4 flank case: maps a PD-set of the gadget
/// graph to one of the original instance.
inline PairedDomSet paired_case1_lift(const NearTriangulation& g, const Case1Context& ctx,
                                      PairedDomSet d, SolveStats* stats = nullptr) {
  auto bump = [&](const char* key) {
    if (stats) stats->bump(key);
  };
  Label a = ctx.a, near_w = ctx.near_w, far_w = ctx.far_w, v = ctx.v, x = ctx.x, y = ctx.y;
  bool has_a = d.contains(a), has_x = d.contains(x), has_y = d.contains(y);
  if (has_a) {
    if (!has_x && !has_y) {
      bump("paired.case1.A1");
      return d;
    }
    if (!has_x && has_y) {
      bump("paired.case1.A2");
      internal_check(d.partner_of(y) == a, "case1: y paired off its only candidates");
      d.replace_in_pair(y, near_w);
      return d;
    }
    if (has_x && !has_y) {
      Label p = *d.partner_of(x);
      if (p == a) {
        bump("paired.case1.A3a");
        d.replace_in_pair(x, far_w);
        return d;
      }
      internal_check(p == v, "case1: x paired off its neighbors");
      if (auto vp = least_free_neighbor_paired(g, v, d)) {
        bump("paired.case1.A3b");
        d.replace_in_pair(x, *vp);
        return d;
      }
      bump("paired.case1.A3c");
      d.remove_pair_of(x);  // drops both x and v
      return d;
    }
    // x and y both present
    if (d.partner_of(x) == y) {
      bump("paired.case1.A4m");
      d.remove_pair_of(x);
      return d;
    }
    bump("paired.case1.A4");
    internal_check(d.partner_of(y) == a && d.partner_of(x) == v,
                   "case1: unexpected pairing of the gadget");
    d.remove_pair_of(y);
    d.remove_pair_of(x);
    d.add_pair(v, a);
    return d;
  }
  if (!has_y) {
    bump("paired.case1.B1");
    internal_check(has_x && d.partner_of(x) == v, "case1: forced x-v pairing missing");
    d.replace_in_pair(x, a);
    return d;
  }
  bump("paired.case1.B2");
  internal_check(has_x && d.partner_of(y) == x, "case1: forced x-y pairing missing");
  d.remove_pair_of(x);
  d.add_pair(a, far_w);
  return d;
}

struct Case6Gadget {
  NearTriangulation graph;
  Label wprime;
};

/// For adjacent order-3 flanks on corners (vj, vj1, vj2) with apexes w1, w2:
/// removes w2 and the side (vj1, vj2), attaches w' on (w1, vj1).
inline Case6Gadget case6_gadget(const NearTriangulation& g, Label w1, Label w2, Label vj1,
                                Label vj2) {
  auto sp = split_at_diagonal(g, g.index_of_label(vj1), g.index_of_label(vj2));
  internal_check(sp.arc_side.order() == 3 && sp.arc_side.has_label(w2),
                 "case6_gadget: flank on (vj1, vj2) is not the order-3 one");
  auto t0 = std::move(sp.other_side);
  auto t1 = remove_edge(t0, {t0.index_of_label(vj1), t0.index_of_label(vj2)});
  auto ear = attach_ear(t1, t1.index_of_label(w1), t1.index_of_label(vj1),
                        g.max_label() + 1);
  return {std::move(ear.graph), ear.ear_label};
}

namespace detail {

struct PairedSolver {
  SolveStats* stats;
  const char* last_case = "";

  void bump(const char* key) {
    if (stats) stats->bump(key);
    last_case = key;
  }

  static Label lab(const NearTriangulation& g, VertexId v) { return g.label_of(v); }

  PairedDomSet solve(const NearTriangulation& g) {
    require(g.order() >= 4, ErrorCode::TooSmall, "paired domination needs n >= 4");
    PairedDomSet d = dispatch(g);
    auto problems = verify_paired(g, d);
    if (!problems.empty())
      fail(ErrorCode::InternalAssert, std::string("paired solver produced invalid set [") +
                                          last_case + ", n=" + std::to_string(g.order()) +
                                          ", m=" + std::to_string(g.interior_count()) +
                                          "]: " + problems[0]);
    internal_check(d.size() <= paired_bound(g.order()), "paired bound violated");
    return d;
  }

  /// Recursive call that enforces the strictly decreasing (n, m) measure.
  PairedDomSet recurse(const NearTriangulation& parent, const NearTriangulation& child) {
    bool smaller = child.order() < parent.order() ||
                   (child.order() == parent.order() &&
                    child.interior_count() < parent.interior_count());
    internal_check(smaller, "paired recursion measure did not decrease");
    return solve(child);
  }

  PairedDomSet tagged(const char* key, PairedDomSet d) {
    last_case = key;
    return d;
  }

  PairedDomSet dispatch(const NearTriangulation& g) {
    if (g.is_mop()) return mop(g);
    if (auto e = find_reducible_edge(g)) {
      bump("paired.reducible");
      return tagged("paired.reducible", recurse(g, remove_edge(g, *e)));
    }
    auto td = find_terminal_polygon(g);
    int k = td.side_count();
    auto corner = [&](int j) { return lab(g, td.corner(j)); };

    // Cases 1-5: a single MOP flank.
    for (int j = 0; j < k; ++j)
      if (td.flank_is_mop[j] && td.flank_orders[j] == 4) {
        bump("paired.case1");
        return tagged("paired.case1", case1(g, td, j));
      }
    for (int j = 0; j < k; ++j)
      if (td.flank_is_mop[j] && td.flank_orders[j] == 5) {
        auto tj = td.inner(g, j);
        EdgeRef dj{tj.index_of_label(corner(j)), tj.index_of_label(corner(j + 1))};
        if (is_contractible(tj, dj)) {
          bump("paired.case2");
          return tagged("paired.case2", absorb(g, td.flanks[j], corner(j), corner(j + 1)));
        }
      }
    for (int j = 0; j < k; ++j)
      if (td.flank_is_mop[j] && td.flank_orders[j] == 6) {
        bump("paired.case3");
        return tagged("paired.case3", absorb(g, td.flanks[j], corner(j), corner(j + 1)));
      }
    for (int j = 0; j < k; ++j)
      if (td.flank_is_mop[j] && td.flank_orders[j] == 7) {
        bump("paired.case4");
        return tagged("paired.case4", absorb(g, td.flanks[j], corner(j), corner(j + 1)));
      }
    for (int j = 0; j < k; ++j)
      if (td.flank_is_mop[j] && td.flank_orders[j] >= 8) {
        bump("paired.case5");
        const auto& flank = td.flanks[j];
        EdgeRef base{flank.index_of_label(corner(j)), flank.index_of_label(corner(j + 1))};
        auto sp = split_by_diagonal(flank, base, 4);
        Label du = lab(flank, sp.diagonal.u), dv = lab(flank, sp.diagonal.v);
        return tagged("paired.case5", absorb(g, sp.piece, du, dv));
      }

    // Cases 6-8: two cyclically adjacent MOP flanks (the labeling of which
    // flank is "last" is free, so the scan wraps around).
    auto pair_ok = [&](int j) {
      return td.flank_is_mop[j] && td.flank_is_mop[(j + 1) % k];
    };
    for (int j = 0; j < k; ++j)
      if (pair_ok(j) && td.flank_orders[j] == 3 && td.flank_orders[(j + 1) % k] == 3) {
        bump("paired.case6");
        return tagged("paired.case6", case6(g, td, j));
      }
    for (int j = 0; j < k; ++j) {
      if (!pair_ok(j)) continue;
      int a = td.flank_orders[j], b = td.flank_orders[(j + 1) % k];
      if (a == 5 && b == 3) {
        bump("paired.case7");
        return tagged("paired.case7", case7(g, td, j, /*five_first=*/true));
      }
      if (a == 3 && b == 5) {
        bump("paired.case7");
        return tagged("paired.case7", case7(g, td, j, /*five_first=*/false));
      }
    }
    for (int j = 0; j < k; ++j)
      if (pair_ok(j) && td.flank_orders[j] == 5 && td.flank_orders[(j + 1) % k] == 5) {
        bump("paired.case8");
        return tagged("paired.case8", case8(g, td, j));
      }
    fail(ErrorCode::InternalAssert, "paired dispatch is not total on this instance");
  }

  // ---- MOP base -----------------------------------------------------------

  PairedDomSet mop(const NearTriangulation& g) {
    internal_check(g.is_mop(), "mop() on non-MOP");
    int n = g.order();
    if (n <= 7) {
      bump("paired.mop_base");
      auto p = dominating_adjacent_pair(g);
      internal_check(p.has_value(), "small MOP without a dominating adjacent pair");
      return PairedDomSet{{{lab(g, p->first), lab(g, p->second)}}};
    }
    EdgeRef e = least_boundary_edge(g);
    auto sp = split_by_diagonal(g, e, 4);
    int r = sp.piece.order();
    if (r == 7 && n == 8) {
      bump("paired.mop_split7_small");
      // Remainder is a triangle {da, db, t}; patch it directly.
      auto d2 = td2_heptagon(sp.piece);
      Label p = lab(sp.piece, d2.a), q = lab(sp.piece, d2.b);
      Label da = lab(g, sp.diagonal.u), db = lab(g, sp.diagonal.v);
      Label t = -1;
      for (Label l : sp.remainder.labels())
        if (l != da && l != db) t = l;
      internal_check(t >= 0, "triangle remainder without a third vertex");
      int hits = (p == da || p == db) + (q == da || q == db);
      PairedDomSet d{{{p, q}}};
      if (hits == 1) {
        Label shared = (p == da || p == db) ? p : q;
        Label other_end = shared == da ? db : da;
        d.add_pair(t, other_end);
      } else if (hits == 0) {
        d.add_pair(t, da);
      }
      return d;
    }
    const char* tag =
        r == 5 ? "paired.mop_split5" : r == 6 ? "paired.mop_split6" : "paired.mop_split7";
    bump(tag);
    return tagged(tag, absorb(g, sp.piece, lab(g, sp.diagonal.u), lab(g, sp.diagonal.v)));
  }

  static EdgeRef least_boundary_edge(const NearTriangulation& g) {
    const auto& C = g.outer_cycle();
    int h = static_cast<int>(C.size());
    EdgeRef best{C[0], C[1]};
    for (int i = 0; i < h; ++i) {
      EdgeRef e{C[i], C[(i + 1) % h]};
      if (std::pair(e.lo(), e.hi()) < std::pair(best.lo(), best.hi())) best = e;
    }
    return best;
  }

  // ---- Shared absorption of a 5/6/7 flank cut by edge (du, dv) ------------

  PairedDomSet absorb(const NearTriangulation& t, const NearTriangulation& piece, Label du,
                      Label dv, int recursion_floor = 4) {
    int r = piece.order();
    internal_check(r >= 5 && r <= 7, "absorb: piece size out of range");
    auto sp = split_at_diagonal(t, t.index_of_label(du), t.index_of_label(dv));
    // The remainder is the side that is not the piece: identify it by a
    // piece-only label.
    Label probe = -1;
    for (Label l : piece.labels())
      if (l != du && l != dv) probe = l;
    const NearTriangulation& rem = sp.arc_side.has_label(probe) ? sp.other_side : sp.arc_side;
    internal_check(rem.order() + r == t.order() + 2, "absorb split sizes off");
    internal_check(rem.order() >= recursion_floor, "absorb remainder too small");

    if (r == 5) return absorb5(t, piece, rem, du, dv);
    if (r == 6) return absorb6(t, piece, rem, du, dv);
    return absorb7(t, piece, rem, du, dv);
  }

  PairedDomSet absorb5(const NearTriangulation& t, const NearTriangulation& piece,
                       const NearTriangulation& rem, Label du, Label dv) {
    auto cr = contract_edge(rem, {rem.index_of_label(du), rem.index_of_label(dv)});
    Label w = cr.merged_label;
    PairedDomSet dprime = recurse(t, cr.graph);
    if (!dprime.contains(w)) {
      auto d2 = td2_search(piece, std::nullopt, std::nullopt);
      internal_check(d2.has_value(), "pentagon without a TD-set");
      dprime.add_pair(lab(piece, d2->a), lab(piece, d2->b));
      return dprime;
    }
    Label z = *dprime.partner_of(w);
    // The partner is adjacent in t to one of the base endpoints.
    auto adj_t = [&](Label p, Label q) {
      return t.has_edge(t.index_of_label(p), t.index_of_label(q));
    };
    Label b, a;
    if (adj_t(z, dv)) {
      b = dv;
      a = du;
    } else {
      internal_check(adj_t(z, du), "contracted partner adjacent to neither endpoint");
      b = du;
      a = dv;
    }
    auto d2 = td2_pentagon(piece, piece.index_of_label(a));
    Label p = lab(piece, d2.a), q = lab(piece, d2.b);
    dprime.remove_pair_of(w);
    if (p != b && q != b) {
      dprime.add_pair(z, b);
      dprime.add_pair(p, q);
    } else {
      // The pentagon set is exactly {a, b}: pair b with z and a with its
      // flank-arc neighbor.
      Label nb = arc_neighbor_of(piece, a, b);
      dprime.add_pair(z, b);
      dprime.add_pair(a, nb);
    }
    return dprime;
  }

  PairedDomSet absorb6(const NearTriangulation& t, const NearTriangulation& piece,
                       const NearTriangulation& rem, Label du, Label dv) {
    auto d2 = td2_hexagon(piece, EdgeRef{piece.index_of_label(du), piece.index_of_label(dv)});
    Label p = lab(piece, d2.a), q = lab(piece, d2.b);
    Label s = (p == du || p == dv) ? p : q;  // the base endpoint in the set
    Label u2 = s == p ? q : p;               // the inside vertex
    PairedDomSet dprime = recurse(t, rem);
    if (!dprime.contains(s)) {
      dprime.add_pair(s, u2);
      return dprime;
    }
    Label v2 = free_arc_neighbor(piece, u2, dprime, {p, q});
    dprime.add_pair(u2, v2);
    return dprime;
  }

  PairedDomSet absorb7(const NearTriangulation& t, const NearTriangulation& piece,
                       const NearTriangulation& rem, Label du, Label dv) {
    auto d2 = td2_heptagon(piece);
    Label p = lab(piece, d2.a), q = lab(piece, d2.b);
    PairedDomSet dprime = recurse(t, rem);
    int inside = dprime.contains(p) + dprime.contains(q);
    if (inside == 0) {
      dprime.add_pair(p, q);
    } else if (inside == 1) {
      Label u2 = dprime.contains(p) ? q : p;
      internal_check(dprime.contains(p) ? (p == du || p == dv) : (q == du || q == dv),
                     "absorb7: solver set meets the piece off the base");
      Label v2 = free_arc_neighbor(piece, u2, dprime, {p, q});
      dprime.add_pair(u2, v2);
    }
    return dprime;
  }

  /// Boundary neighbor of `inner` in the piece that avoids the current set
  /// and the TD-set; existence is part of the theorem's argument.
  static Label free_arc_neighbor(const NearTriangulation& piece, Label inner,
                                 const PairedDomSet& d, std::pair<Label, Label> td) {
    VertexId v = piece.index_of_label(inner);
    for (VertexId cand : {piece.boundary_pred(v), piece.boundary_succ(v)}) {
      Label cl = piece.label_of(cand);
      if (!d.contains(cl) && cl != td.first && cl != td.second) return cl;
    }
    fail(ErrorCode::InternalAssert, "no free boundary neighbor in the flank");
  }

  /// Flank-arc neighbor of base endpoint `a` (the one that is not the other
  /// base endpoint `b`).
  static Label arc_neighbor_of(const NearTriangulation& piece, Label a, Label b) {
    VertexId v = piece.index_of_label(a);
    for (VertexId cand : {piece.boundary_pred(v), piece.boundary_succ(v)}) {
      Label cl = piece.label_of(cand);
      if (cl != b) return cl;
    }
    fail(ErrorCode::InternalAssert, "base endpoint without an arc neighbor");
  }

  // ---- Case 1: a flank of order 4 ----------------------------------------

  PairedDomSet case1(const NearTriangulation& g, const TerminalDecomposition& td, int j) {
    auto ctx = build_case1_context(g, td, j);
    PairedDomSet d = recurse(g, ctx.tprime);
    return paired_case1_lift(g, ctx, std::move(d), stats);
  }

  // ---- Case 6: adjacent order-3 flanks ------------------------------------

  PairedDomSet case6(const NearTriangulation& g, const TerminalDecomposition& td, int j) {
    int k = td.side_count();
    Label vj = lab(g, td.corner(j)), vj1 = lab(g, td.corner(j + 1)),
          vj2 = lab(g, td.corner(j + 2));
    Label w1 = lab(td.flanks[j], td.flanks[j].outer_cycle()[1]);
    Label w2 = lab(td.flanks[(j + 1) % k], td.flanks[(j + 1) % k].outer_cycle()[1]);

    auto gadget = case6_gadget(g, w1, w2, vj1, vj2);
    internal_check(gadget.graph.order() == g.order() &&
                       gadget.graph.interior_count() == g.interior_count() - 1,
                   "case6 gadget has wrong vertex mix");
    Label wp = gadget.wprime;
    PairedDomSet d = recurse(g, gadget.graph);

    if (d.contains(wp)) {
      Label p = *d.partner_of(wp);
      if (p == vj1) {
        d.replace_in_pair(wp, w2);
        return d;
      }
      internal_check(p == w1, "case6: w' paired off its neighbors");
      d.remove_pair_of(wp);  // drops w' and w1
      if (!d.contains(vj1)) d.add_pair(vj1, w2);
      return d;
    }
    if (d.contains(vj1)) return d;
    internal_check(d.contains(w1) && d.partner_of(w1) == vj,
                   "case6: w1 must be paired with vj");
    d.replace_in_pair(w1, vj1);
    return d;
  }

  // ---- Case 7: adjacent 5 + 3 flanks --------------------------------------

  PairedDomSet case7(const NearTriangulation& g, const TerminalDecomposition& td, int j,
                     bool five_first) {
    int k = td.side_count();
    const auto& five = five_first ? td.flanks[j] : td.flanks[(j + 1) % k];
    const auto& three = five_first ? td.flanks[(j + 1) % k] : td.flanks[j];
    Label shared = lab(g, td.corner(j + 1));
    Label far = five_first ? lab(g, td.corner(j)) : lab(g, td.corner(j + 2));

    // Remove the five-flank inside, the three-flank apex, then the shared
    // corner itself.
    auto t0 = strip_two_flanks(g, td, j);
    internal_check(t0.order() == g.order() - 4, "case7: T0 has wrong order");
    auto tprime = remove_vertex(t0, t0.index_of_label(shared));
    internal_check(tprime.order() >= 4, "case7: T' too small");
    PairedDomSet d = recurse(g, tprime);

    auto d2 = td2_pentagon(five, five.index_of_label(shared));
    Label p = lab(five, d2.a), q = lab(five, d2.b);
    if (d.contains(far) && (p == far || q == far)) {
      d.add_pair(shared, arc_neighbor_of(five, shared, far));
      return d;
    }
    internal_check(!d.contains(p) && !d.contains(q), "case7: TD-set collides with D'");
    d.add_pair(p, q);
    return d;
  }

  // ---- Case 8: adjacent non-contractible 5 + 5 flanks ----------------------

  PairedDomSet case8(const NearTriangulation& g, const TerminalDecomposition& td, int j) {
    int k = td.side_count();
    const auto& f1 = td.flanks[j];
    const auto& f2 = td.flanks[(j + 1) % k];
    Label vj = lab(g, td.corner(j)), vj1 = lab(g, td.corner(j + 1));
    Label w3 = lab(f1, f1.outer_cycle()[3]);
    Label w5 = lab(f2, f2.outer_cycle()[2]), w6 = lab(f2, f2.outer_cycle()[3]);

    auto t0 = strip_two_flanks(g, td, j);
    internal_check(t0.order() == g.order() - 6, "case8: T0 has wrong order");

    // An interior vertex adjacent to the shared corner whose joint removal
    // stays a near-triangulation (Lemma on non-contractible boundary edges).
    VertexId shared_idx = t0.index_of_label(vj1);
    std::vector<VertexId> candidates;
    for (VertexId v : t0.neighbors(shared_idx))
      if (!t0.on_boundary(v)) candidates.push_back(v);
    std::sort(candidates.begin(), candidates.end(),
              [&](VertexId a, VertexId b) { return t0.label_of(a) < t0.label_of(b); });
    std::optional<NearTriangulation> tprime;
    for (VertexId v : candidates) {
      try {
        tprime = remove_vertices(t0, {shared_idx, v});
        break;
      } catch (const Error& err) {
        if (err.code() != ErrorCode::ResultNotNearTriangulation) throw;
      }
    }
    internal_check(tprime.has_value(), "case8: no removable interior partner");
    internal_check(tprime->order() >= 4, "case8: T' too small");
    PairedDomSet d = recurse(g, *tprime);

    auto d2 = td2_pentagon(f1, f1.index_of_label(vj1));
    Label p = lab(f1, d2.a), q = lab(f1, d2.b);
    if (d.contains(vj) && (p == vj || q == vj)) {
      d.add_pair(vj1, w3);
    } else {
      internal_check(!d.contains(p) && !d.contains(q), "case8: TD-set collides with D'");
      d.add_pair(p, q);
    }
    d.add_pair(w5, w6);
    return d;
  }

  /// Removes the strict insides of flanks j and j+1 (their arcs), keeping
  /// all polygon corners.
  NearTriangulation strip_two_flanks(const NearTriangulation& g,
                                     const TerminalDecomposition& td, int j) {
    int k = td.side_count();
    auto first = td.inner(g, j);
    Label u = lab(g, td.corner(j + 1)), v = lab(g, td.corner(j + 2));
    auto sp = split_at_diagonal(first, first.index_of_label(u), first.index_of_label(v));
    internal_check(sp.arc_side.order() == td.flank_orders[(j + 1) % k],
                   "strip_two_flanks: second flank went missing");
    return std::move(sp.other_side);
  }
};

}  // namespace detail

/// PD-set of size at most 2*floor(n/4), n >= 4.
inline PairedDomSet compute_paired(const NearTriangulation& g, SolveStats* stats = nullptr) {
  detail::PairedSolver solver{stats};
  return solver.solve(g);
}

/// MOP-only entry point (the recursion's base family).
inline PairedDomSet mop_paired(const NearTriangulation& g, SolveStats* stats = nullptr) {
  require(g.is_mop(), ErrorCode::NotMop, "mop_paired needs a MOP");
  require(g.order() >= 4, ErrorCode::TooSmall, "mop_paired needs n >= 4");
  detail::PairedSolver solver{stats};
  return solver.solve(g);
}

}  // namespace tridom
