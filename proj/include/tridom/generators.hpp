#pragma once

// Instance generators: exhaustive enumeration of polygon triangulations,
// uniform random MOPs (Remy's algorithm over binary trees), random
// near-triangulations grown by face splits and edge flips, and the scripted
// terminal-polygon instances used for dispatch-coverage corpora.
//
// All randomness comes from SplitMix64 with a 64-bit seed. The generator is
// pinned by test vectors so corpora are reproducible; ranges are reduced by
// plain modulo.

#include <functional>

#include "tridom/decompose.hpp"
#include "tridom/graph.hpp"

namespace tridom {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  /// Uniform value in [0, n) by modulo reduction.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

/// MOP on the convex n-gon 0..n-1 (clockwise) with the given diagonals.
inline NearTriangulation convex_mop(int n, const std::vector<std::pair<int, int>>& diagonals) {
  RawEmbedding r;
  r.n = n;
  r.rotation.resize(n);
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    adj[i].push_back((i + 1) % n);
    adj[i].push_back((i + n - 1) % n);
  }
  for (auto [a, b] : diagonals) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adj[v].begin(), adj[v].end(),
              [&](int x, int y) { return (x - v + n) % n < (y - v + n) % n; });
    r.rotation[v] = std::move(adj[v]);
  }
  for (int i = 0; i < n; ++i) r.outer.push_back(i);
  return NearTriangulation::build(std::move(r));
}

/// All triangulations of the convex n-gon: Catalan(n-2) instances, 3<=n<=15.
/// With dedupe, one representative per isomorphism class.
inline std::vector<NearTriangulation> enumerate_mops(int n, bool dedupe = false) {
  require(n >= 3 && n <= 15, ErrorCode::TooLarge, "enumerate_mops supports 3 <= n <= 15");
  std::vector<NearTriangulation> out;
  std::vector<std::pair<int, int>> diags;
  // Triangulate the polygon arc a..b (b - a >= 2): pick the triangle apex on
  // the chord (a, b) and recurse into both sub-arcs.
  std::function<void(int, int, std::function<void()>)> go = [&](int a, int b,
                                                                std::function<void()> done) {
    if (b - a < 2) {
      done();
      return;
    }
    for (int m = a + 1; m < b; ++m) {
      int pushed = 0;
      if (m - a >= 2) {
        diags.push_back({a, m});
        ++pushed;
      }
      if (b - m >= 2) {
        diags.push_back({m, b});
        ++pushed;
      }
      go(a, m, [&] { go(m, b, done); });
      while (pushed--) diags.pop_back();
    }
  };
  go(0, n - 1, [&] { out.push_back(convex_mop(n, diags)); });
  if (dedupe) {
    std::vector<NearTriangulation> uniq;
    std::vector<std::vector<std::uint8_t>> codes;
    for (auto& g : out) {
      auto code = canonical_code(g);
      if (std::find(codes.begin(), codes.end(), code) == codes.end()) {
        codes.push_back(std::move(code));
        uniq.push_back(std::move(g));
      }
    }
    return uniq;
  }
  return out;
}

namespace detail {

struct RemyNode {
  int child[2] = {-1, -1};
  bool leaf() const { return child[0] < 0; }
};

}  // namespace detail

/// Uniformly random triangulation of the convex n-gon. Remy's algorithm
/// grows a uniform binary tree with n-1 leaves; leaves map to boundary edges
/// and internal nodes to triangles.
inline NearTriangulation random_mop(int n, std::uint64_t seed) {
  require(n >= 3, ErrorCode::BadOrder, "random_mop needs n >= 3");
  SplitMix64 rng(seed);
  int leaves = n - 1;
  std::vector<detail::RemyNode> nodes;
  nodes.push_back({});  // single leaf
  int root = 0;
  std::vector<int> parent{-1};
  for (int step = 1; step < leaves; ++step) {
    int pick = static_cast<int>(rng.below(nodes.size()));
    int side = static_cast<int>(rng.below(2));
    int fresh_leaf = static_cast<int>(nodes.size());
    nodes.push_back({});
    parent.push_back(-1);
    int internal = static_cast<int>(nodes.size());
    nodes.push_back({});
    parent.push_back(parent[pick]);
    nodes[internal].child[side] = pick;
    nodes[internal].child[1 - side] = fresh_leaf;
    if (parent[pick] < 0) {
      root = internal;
    } else {
      auto& pc = nodes[parent[pick]].child;
      pc[pc[0] == pick ? 0 : 1] = internal;
    }
    parent[pick] = internal;
    parent[fresh_leaf] = internal;
  }
  // Assign leaf spans in left-to-right order; each internal node spanning
  // leaves i..j yields the chord (i, j+1).
  std::vector<std::pair<int, int>> diags;
  int next_leaf = 0;
  std::function<std::pair<int, int>(int)> span = [&](int node) -> std::pair<int, int> {
    if (nodes[node].leaf()) {
      int k = next_leaf++;
      return {k, k};
    }
    auto l = span(nodes[node].child[0]);
    auto r = span(nodes[node].child[1]);
    internal_check(l.second + 1 == r.first, "remy spans out of order");
    if (node != root && r.second + 1 - l.first >= 2) diags.push_back({l.first, r.second + 1});
    return {l.first, r.second};
  };
  span(root);
  return convex_mop(n, diags);
}

struct NtriParams {
  int flips_per_vertex = 2;  // flip attempts = flips_per_vertex * n
};

/// Random near-triangulation of order n with exactly m interior vertices:
/// random MOP of order n-m, m random inner-face splits, then random flips.
inline NearTriangulation random_near_triangulation(int n, int m, std::uint64_t seed,
                                                   NtriParams params = {}) {
  require(m >= 0 && n - m >= 3, ErrorCode::PreconditionViolated,
          "random_near_triangulation: need m >= 0 and n - m >= 3");
  SplitMix64 rng(seed);
  auto g = random_mop(n - m, rng.next());
  for (int k = 0; k < m; ++k) {
    // Pick a uniform inner face, addressed by a directed edge on it.
    auto faces = inner_face_seeds(g);
    auto [a, b] = faces[rng.below(faces.size())];
    g = split_inner_face(g, a, b);
  }
  int attempts = params.flips_per_vertex * n;
  for (int k = 0; k < attempts; ++k) {
    std::vector<EdgeRef> candidates;
    for (VertexId u = 0; u < g.order(); ++u)
      for (VertexId v : g.neighbors(u))
        if (u < v && !g.is_boundary_edge(u, v)) candidates.push_back({u, v});
    if (candidates.empty()) break;
    auto e = candidates[rng.below(candidates.size())];
    if (auto flipped = try_flip_edge(g, e)) g = std::move(*flipped);
  }
  internal_check(g.order() == n && g.interior_count() == m,
                 "random_near_triangulation changed the vertex mix");
  return g;
}

struct CorpusInstance {
  NearTriangulation graph;
  std::uint64_t seed;
  int n, m;
};

/// Rejection-samples random near-triangulations until irreducible (no
/// reducible edge, at least one interior vertex).
inline std::vector<CorpusInstance> irreducible_corpus(int count, std::uint64_t seed,
                                                      int max_order = 40) {
  std::vector<CorpusInstance> out;
  SplitMix64 rng(seed);
  while (static_cast<int>(out.size()) < count) {
    int n = 7 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_order - 6)));
    int max_m = std::min(n - 3, n / 2);
    if (max_m < 1) continue;
    int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_m)));
    std::uint64_t s = rng.next();
    auto g = random_near_triangulation(n, m, s);
    if (!g.is_mop() && !find_reducible_edge(g)) out.push_back({std::move(g), s, n, m});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scripted instances with a prescribed terminal polygon. The polygon is a
// k-gon with a fan of interior vertices; each side carries a MOP flank of
// chosen size built by ear stacking and optionally shuffled by in-flank
// flips that keep T[C] and irreducibility intact.
// ---------------------------------------------------------------------------

/// k-gon disc: corners 0..k-1 clockwise, one interior vertex adjacent to all.
inline NearTriangulation polygon_disc(int k) {
  require(k >= 3, ErrorCode::BadOrder, "polygon_disc needs k >= 3");
  RawEmbedding r;
  r.n = k + 1;
  r.rotation.resize(k + 1);
  for (int i = 0; i < k; ++i) {
    r.rotation[i] = {(i + 1) % k, k, (i + k - 1) % k};
    r.outer.push_back(i);
    r.rotation[k].push_back(i);
  }
  return NearTriangulation::build(std::move(r));
}

struct TerminalInstanceSpec {
  std::vector<int> flank_sizes;  // one per polygon side, each >= 3
  int extra_interior = 0;        // interior vertices beyond the central one
  std::uint64_t seed = 1;
  int flank_flips = 6;           // per flank, attempts
  int interior_flips = 4;        // inside the polygon, attempts
};

/// Irreducible near-triangulation whose terminal polygon is the k-gon with
/// corners labeled 0..k-1 and the requested flank sizes. Flank shapes are
/// shuffled by flips confined to one flank (these always preserve the
/// decomposition); interior flips are rejected if they change T[C] or make
/// the instance reducible.
inline NearTriangulation terminal_polygon_instance(const TerminalInstanceSpec& spec) {
  int k = static_cast<int>(spec.flank_sizes.size());
  auto g = polygon_disc(k);
  SplitMix64 rng(spec.seed);
  for (int t = 0; t < spec.extra_interior; ++t) {
    auto faces = inner_face_seeds(g);
    auto [a, b] = faces[rng.below(faces.size())];
    g = split_inner_face(g, a, b);
  }
  // Attach fan flanks by ear stacking and remember each flank's label set.
  std::vector<std::vector<Label>> flank_labels(k);
  for (int j = 0; j < k; ++j) {
    Label p = j, q = (j + 1) % k;
    int size = spec.flank_sizes[j];
    require(size >= 3, ErrorCode::BadOrder, "flank sizes must be >= 3");
    flank_labels[j] = {p, q};
    Label attach_to = q;
    for (int t = 0; t < size - 2; ++t) {
      auto res = attach_ear(g, g.index_of_label(p), g.index_of_label(attach_to));
      attach_to = res.ear_label;
      flank_labels[j].push_back(attach_to);
      g = std::move(res.graph);
    }
  }
  // In-flank flips: both endpoints inside one flank, never the base side.
  for (int j = 0; j < k; ++j) {
    std::vector<char> in_flank(g.order() + 8, 0);
    for (Label l : flank_labels[j]) in_flank[g.index_of_label(l)] = 1;
    EdgeRef base{g.index_of_label(j), g.index_of_label((j + 1) % k)};
    for (int t = 0; t < spec.flank_flips; ++t) {
      std::vector<EdgeRef> cands;
      for (VertexId u = 0; u < g.order(); ++u)
        for (VertexId v : g.neighbors(u))
          if (u < v && in_flank[u] && in_flank[v] && !g.is_boundary_edge(u, v) &&
              !(EdgeRef{u, v} == base))
            cands.push_back({u, v});
      if (cands.empty()) break;
      auto e = cands[rng.below(cands.size())];
      if (auto flipped = try_flip_edge(g, e)) g = std::move(*flipped);
    }
  }
  // Interior flips: at least one interior endpoint; no new boundary chords,
  // no reducible edge afterwards.
  for (int t = 0; t < spec.interior_flips; ++t) {
    std::vector<EdgeRef> cands;
    for (VertexId u = 0; u < g.order(); ++u)
      for (VertexId v : g.neighbors(u))
        if (u < v && (!g.on_boundary(u) || !g.on_boundary(v))) cands.push_back({u, v});
    if (cands.empty()) break;
    auto e = cands[rng.below(cands.size())];
    VertexId a = g.apex_right_of(e.u, e.v), b = g.apex_right_of(e.v, e.u);
    if (g.on_boundary(a) && g.on_boundary(b)) continue;
    if (auto flipped = try_flip_edge(g, e)) {
      if (!find_reducible_edge(*flipped)) g = std::move(*flipped);
    }
  }
  internal_check(!g.is_mop() && !find_reducible_edge(g),
                 "terminal_polygon_instance must be irreducible");
  return g;
}

// ---------------------------------------------------------------------------
// Deterministic order-14 instances that steer the semipaired solver into its
// family-F branches (the contraction case and the two-flank 5+3 case). Both
// consist of a terminal polygon whose collapse leaves the order-9 hexagon-
// with-three-ears shape.
// ---------------------------------------------------------------------------

/// Quadrilateral polygon A,B,C,D with central vertex and flanks sized
/// (6, 3, 5, 3); contracting a corner of the 6-flank's side into the center
/// yields a family-F member.
inline NearTriangulation family_f_case2_instance() {
  // ids: A=0, B=1, C=2, D=3, center v=4; flank vertices get labels 5+.
  auto g = polygon_disc(4);
  auto ear = [&](Label p, Label q) {
    auto res = attach_ear(g, g.index_of_label(p), g.index_of_label(q));
    g = std::move(res.graph);
    return res.ear_label;
  };
  // 6-flank on (A=0, B=1): fan from A.
  Label f = ear(0, 1);
  f = ear(0, f);
  f = ear(0, f);
  f = ear(0, f);
  // 3-flank on (B=1, C=2).
  ear(1, 2);
  // 5-flank on (C=2, D=3) with triangles (C,g3,D), (C,g1,g3), (g1,g2,g3).
  Label g3 = ear(2, 3);
  Label g1 = ear(2, g3);
  ear(g1, g3);
  // 3-flank on (D=3, A=0).
  ear(3, 0);
  internal_check(g.order() == 14 && !find_reducible_edge(g) && !g.is_mop(),
                 "family_f_case2_instance malformed");
  return g;
}

/// Triangle polygon with four interior vertices fanned from one corner and
/// flanks sized (5, 5, 3); removing that corner together with one 5-flank
/// and the 3-flank apex leaves a family-F member.
inline NearTriangulation family_f_case6_instance() {
  // Corners: B=0, A=1, s=2 (clockwise boundary 1,0,2 -> polygon ids chosen so
  // the (5,3) flank pair sharing s is scanned first). Interior u2=3 first.
  RawEmbedding r;
  r.n = 4;
  // clockwise outer A(1), B(0), s(2)? Use outer = {0, 2, 1}: B, s, A
  // clockwise; interior 3 adjacent to all corners.
  r.rotation = {{2, 3, 1}, {0, 3, 2}, {1, 3, 0}, {0, 2, 1}};
  r.outer = {0, 2, 1};
  auto g = NearTriangulation::build(std::move(r));
  // Vertices: B=0, s=2, A=1 on the boundary (clockwise), u2=3 interior
  // adjacent to all three. Add u1 inside face (B,s,u2), then u3 inside
  // (s,A,u2)-side faces, then u4, matching the face script:
  //   (A,B,u2), (B,s,u1), (u1,s,u2), (B,u1,u2), (A,u2,u3), (u2,s,u3),
  //   (s,A,u4), (A,u3,u4), (u3,s,u4)
  auto face_edge = [&](Label a, Label b) {
    return std::pair{g.index_of_label(a), g.index_of_label(b)};
  };
  {
    auto [a, b] = face_edge(0, 2);  // face (B,s,u2): split -> u1 = label 4
    g = split_inner_face(g, a, b);
  }
  {
    auto [a, b] = face_edge(2, 1);  // face (s,A,u2): split -> u3 = label 5
    g = split_inner_face(g, a, b);
  }
  {
    auto [a, b] = face_edge(2, 1);  // face (s,A,u3): split -> u4 = label 6
    g = split_inner_face(g, a, b);
  }
  auto ear = [&](Label p, Label q) {
    auto res = attach_ear(g, g.index_of_label(p), g.index_of_label(q));
    g = std::move(res.graph);
    return res.ear_label;
  };
  // 5-flank on (B=0, s=2): fan from s.
  Label t = ear(0, 2);
  // boundary now B, g1, s, ...: add ears on (g1, s) then (g2, s).
  t = ear(t, 2);
  ear(t, 2);
  // 3-flank on (s=2, A=1).
  ear(2, 1);
  // 5-flank on (A=1, B=0): pentagon A,f1,f2,f3,B with f2 an ear on (f1,f3)
  // and diagonals f1-f3, A-f3.
  Label f3 = ear(1, 0);
  Label f1 = ear(1, f3);
  ear(f1, f3);
  internal_check(g.order() == 14 && !find_reducible_edge(g) && !g.is_mop(),
                 "family_f_case6_instance malformed");
  return g;
}

}  // namespace tridom
