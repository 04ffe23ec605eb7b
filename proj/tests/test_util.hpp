#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "tridom/graph.hpp"

namespace tt {

using namespace tridom;

// Convex-polygon MOP from a diagonal list: boundary 0..n-1 clockwise,
// neighbors sorted by cyclic offset from each vertex.
inline NearTriangulation mop_from_diagonals(int n, const std::vector<std::pair<int, int>>& diags) {
  RawEmbedding r;
  r.n = n;
  r.rotation.resize(n);
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    adj[i].push_back((i + 1) % n);
    adj[i].push_back((i + n - 1) % n);
  }
  for (auto [a, b] : diags) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (int v = 0; v < n; ++v) {
    auto& nb = adj[v];
    std::sort(nb.begin(), nb.end(), [&](int x, int y) {
      return (x - v + n) % n < (y - v + n) % n;
    });
    r.rotation[v] = nb;
  }
  for (int i = 0; i < n; ++i) r.outer.push_back(i);
  return NearTriangulation::build(std::move(r));
}

/// Fan MOP with center c = 0: 0 adjacent to all of 1..n-1.
inline NearTriangulation fan(int n) {
  std::vector<std::pair<int, int>> diags;
  for (int k = 2; k + 1 < n; ++k) diags.push_back({0, k});
  return mop_from_diagonals(n, diags);
}

/// Triangle + one interior vertex adjacent to all corners (K4 as a disc).
inline NearTriangulation k4_disc() {
  RawEmbedding r;
  r.n = 4;
  r.rotation = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};
  r.outer = {0, 1, 2};
  return NearTriangulation::build(std::move(r));
}

/// The smallest irreducible near-triangulation: triangle 0,1,2 with interior
/// vertex 3 and degree-2 ears 4,5,6 on the triangle sides.
inline NearTriangulation irreducible7() {
  auto g = k4_disc();
  auto e1 = attach_ear(g, 0, 1);
  auto e2 = attach_ear(e1.graph, 1, 2);
  auto e3 = attach_ear(e2.graph, 2, 0);
  return e3.graph;
}

}  // namespace tt
