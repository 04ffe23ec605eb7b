#pragma once

// Combinatorial model of triangulated discs: a rotation system (clockwise
// neighbor order per vertex) plus an explicit outer cycle. All faces except
// the outer one must be triangles. Surgery (vertex/edge removal, edge
// contraction, ear attachment, diagonal splits) returns new values and
// re-validates the result; vertices carry stable labels that survive surgery
// so sets computed in a derived graph can be mapped back to the original.
//
// Face-tracing convention used throughout: for a directed edge (u -> v) the
// next edge of the same face is (v -> w) where w is the predecessor of u in
// the clockwise rotation of v. With clockwise rotations this walks every
// inner face in clockwise order and the outer face counterclockwise, i.e.
// the outer face is the reversed outer cycle. The face traced from (u -> v)
// lies to the right of u -> v.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tridom {

using VertexId = int;
using Label = std::int64_t;

enum class ErrorCode {
  TooSmall,
  TooLarge,
  BadOrder,
  NotMop,
  NotBoundaryEdge,
  EdgeNotPresent,
  NotReducibleEdge,
  NotContractible,
  ResultNotNearTriangulation,
  NotIrreducible,
  IsFamilyF,
  NoSuchEdge,
  NotDegreeTwo,
  PreconditionViolated,
  FormatError,
  InternalAssert,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::NotMop: return "NotMop";
    case ErrorCode::NotBoundaryEdge: return "NotBoundaryEdge";
    case ErrorCode::EdgeNotPresent: return "EdgeNotPresent";
    case ErrorCode::NotReducibleEdge: return "NotReducibleEdge";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::ResultNotNearTriangulation: return "ResultNotNearTriangulation";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::IsFamilyF: return "IsFamilyF";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::NotDegreeTwo: return "NotDegreeTwo";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::InternalAssert: return "InternalAssert";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& what) { throw Error(c, what); }

inline void require(bool ok, ErrorCode c, const std::string& what) {
  if (!ok) fail(c, what);
}

// Internal invariant check; firing one means a bug, not bad input.
inline void internal_check(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InternalAssert, what);
}

/// Unordered pair of vertex ids.
struct EdgeRef {
  VertexId u = -1, v = -1;
  EdgeRef() = default;
  EdgeRef(VertexId a, VertexId b) : u(a), v(b) {}
  VertexId lo() const { return std::min(u, v); }
  VertexId hi() const { return std::max(u, v); }
  bool operator==(const EdgeRef& o) const {
    return (u == o.u && v == o.v) || (u == o.v && v == o.u);
  }
};

enum class EdgeClass { Boundary, Diagonal, InteriorEdge };

enum class IssueKind {
  MultiEdge,
  NotPlanarEmbedding,
  NonTriangularInnerFace,
  NotBiconnected,
  BadOuterCycle,
};

struct ValidationIssue {
  IssueKind kind;
  int detail_a = -1;
  int detail_b = -1;
  std::string to_string() const {
    std::string s;
    switch (kind) {
      case IssueKind::MultiEdge: s = "MultiEdge"; break;
      case IssueKind::NotPlanarEmbedding: s = "NotPlanarEmbedding"; break;
      case IssueKind::NonTriangularInnerFace: s = "NonTriangularInnerFace"; break;
      case IssueKind::NotBiconnected: s = "NotBiconnected"; break;
      case IssueKind::BadOuterCycle: s = "BadOuterCycle"; break;
    }
    if (detail_a >= 0) s += "(" + std::to_string(detail_a) + (detail_b >= 0 ? "," + std::to_string(detail_b) : "") + ")";
    return s;
  }
};

/// Unvalidated embedding data as read from input or assembled by surgery.
struct RawEmbedding {
  int n = 0;
  std::vector<std::vector<VertexId>> rotation;  // clockwise neighbor order
  std::vector<VertexId> outer;                  // clockwise outer cycle
  std::vector<Label> labels;                    // empty means identity
};

class NearTriangulation;
std::vector<ValidationIssue> validate(const RawEmbedding& raw);

class NearTriangulation {
 public:
  static NearTriangulation build(RawEmbedding raw) {
    auto issues = validate(raw);
    if (!issues.empty()) {
      std::string what;
      for (const auto& i : issues) {
        if (!what.empty()) what += ", ";
        what += i.to_string();
      }
      fail(ErrorCode::ResultNotNearTriangulation, what);
    }
    return NearTriangulation(std::move(raw));
  }

  int order() const { return n_; }
  int boundary_length() const { return static_cast<int>(outer_.size()); }
  int interior_count() const { return n_ - boundary_length(); }
  bool is_mop() const { return boundary_length() == n_; }
  bool is_triangulation() const { return boundary_length() == 3; }

  const std::vector<VertexId>& outer_cycle() const { return outer_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return rotation_[v]; }
  int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }
  bool on_boundary(VertexId v) const { return boundary_pos_[v] >= 0; }
  int boundary_pos(VertexId v) const { return boundary_pos_[v]; }

  Label label_of(VertexId v) const { return labels_[v]; }
  const std::vector<Label>& labels() const { return labels_; }
  VertexId index_of_label(Label l) const {
    for (VertexId v = 0; v < n_; ++v)
      if (labels_[v] == l) return v;
    fail(ErrorCode::InternalAssert, "label not present: " + std::to_string(l));
  }
  bool has_label(Label l) const {
    for (VertexId v = 0; v < n_; ++v)
      if (labels_[v] == l) return true;
    return false;
  }
  Label max_label() const {
    Label m = 0;
    for (Label l : labels_) m = std::max(m, l);
    return m;
  }

  bool has_edge(VertexId u, VertexId v) const {
    const auto& smaller = degree(u) <= degree(v) ? rotation_[u] : rotation_[v];
    VertexId target = degree(u) <= degree(v) ? v : u;
    return std::find(smaller.begin(), smaller.end(), target) != smaller.end();
  }
  bool has_edge(const EdgeRef& e) const { return has_edge(e.u, e.v); }

  int edge_count() const {
    int d = 0;
    for (VertexId v = 0; v < n_; ++v) d += degree(v);
    return d / 2;
  }

  /// Boundary successor (clockwise) of a boundary vertex.
  VertexId boundary_succ(VertexId v) const {
    int p = boundary_pos_[v];
    internal_check(p >= 0, "boundary_succ of interior vertex");
    return outer_[(p + 1) % outer_.size()];
  }
  VertexId boundary_pred(VertexId v) const {
    int p = boundary_pos_[v];
    internal_check(p >= 0, "boundary_pred of interior vertex");
    return outer_[(p + outer_.size() - 1) % outer_.size()];
  }

  bool is_boundary_edge(VertexId u, VertexId v) const {
    return on_boundary(u) && on_boundary(v) && (boundary_succ(u) == v || boundary_succ(v) == u);
  }

  EdgeClass classify_edge(const EdgeRef& e) const {
    require(has_edge(e), ErrorCode::EdgeNotPresent,
            "no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    if (is_boundary_edge(e.u, e.v)) return EdgeClass::Boundary;
    if (on_boundary(e.u) && on_boundary(e.v)) return EdgeClass::Diagonal;
    return EdgeClass::InteriorEdge;
  }

  /// Third vertex of the inner face on the directed edge u -> v (the face to
  /// the right of u -> v). For a clockwise boundary edge this is the apex of
  /// its inner triangle.
  VertexId apex_right_of(VertexId u, VertexId v) const {
    const auto& rot = rotation_[v];
    auto it = std::find(rot.begin(), rot.end(), u);
    internal_check(it != rot.end(), "apex_right_of: edge missing");
    size_t i = static_cast<size_t>(it - rot.begin());
    return rot[(i + rot.size() - 1) % rot.size()];
  }

  /// Walk the face containing directed edge u -> v; returns the vertex cycle.
  std::vector<VertexId> face_from(VertexId u, VertexId v) const {
    std::vector<VertexId> walk;
    VertexId a = u, b = v;
    do {
      walk.push_back(a);
      VertexId c = apex_right_of(a, b);
      a = b;
      b = c;
    } while (!(a == u && b == v));
    return walk;
  }

  int distance(VertexId x, VertexId y) const {
    internal_check(x >= 0 && x < n_ && y >= 0 && y < n_, "distance: bad vertex");
    if (x == y) return 0;
    std::vector<int> dist(n_, -1);
    std::queue<VertexId> q;
    dist[x] = 0;
    q.push(x);
    while (!q.empty()) {
      VertexId a = q.front();
      q.pop();
      for (VertexId b : rotation_[a]) {
        if (dist[b] < 0) {
          dist[b] = dist[a] + 1;
          if (b == y) return dist[b];
          q.push(b);
        }
      }
    }
    fail(ErrorCode::InternalAssert, "distance: disconnected");
  }

  int distance_labels(Label x, Label y) const { return distance(index_of_label(x), index_of_label(y)); }

  RawEmbedding raw() const {
    RawEmbedding r;
    r.n = n_;
    r.rotation = rotation_;
    r.outer = outer_;
    r.labels = labels_;
    return r;
  }

 private:
  explicit NearTriangulation(RawEmbedding raw)
      : n_(raw.n), rotation_(std::move(raw.rotation)), outer_(std::move(raw.outer)),
        labels_(std::move(raw.labels)) {
    if (labels_.empty()) {
      labels_.resize(n_);
      for (VertexId v = 0; v < n_; ++v) labels_[v] = v;
    }
    boundary_pos_.assign(n_, -1);
    for (size_t i = 0; i < outer_.size(); ++i) boundary_pos_[outer_[i]] = static_cast<int>(i);
  }

  int n_;
  std::vector<std::vector<VertexId>> rotation_;
  std::vector<VertexId> outer_;
  std::vector<Label> labels_;
  std::vector<int> boundary_pos_;
};

namespace detail {

// Traces all faces of the rotation system. Each directed edge belongs to
// exactly one face; faces are returned as directed-edge cycles.
inline std::vector<std::vector<std::pair<VertexId, VertexId>>> trace_faces(
    const std::vector<std::vector<VertexId>>& rot) {
  int n = static_cast<int>(rot.size());
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + static_cast<int>(rot[v].size());
  auto dir_index = [&](VertexId u, VertexId v) {
    const auto& r = rot[u];
    auto it = std::find(r.begin(), r.end(), v);
    return offset[u] + static_cast<int>(it - r.begin());
  };
  std::vector<char> used(offset[n], 0);
  std::vector<std::vector<std::pair<VertexId, VertexId>>> faces;
  for (int u = 0; u < n; ++u) {
    for (VertexId v : rot[u]) {
      if (used[dir_index(u, v)]) continue;
      std::vector<std::pair<VertexId, VertexId>> face;
      VertexId a = u, b = v;
      while (true) {
        int di = dir_index(a, b);
        if (used[di]) break;
        used[di] = 1;
        face.push_back({a, b});
        const auto& rb = rot[b];
        auto it = std::find(rb.begin(), rb.end(), a);
        size_t i = static_cast<size_t>(it - rb.begin());
        VertexId c = rb[(i + rb.size() - 1) % rb.size()];
        a = b;
        b = c;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

inline bool cycles_equal(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  if (a.size() != b.size()) return false;
  size_t n = a.size();
  for (size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = a[i] == b[(i + shift) % n];
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

inline std::vector<ValidationIssue> validate(const RawEmbedding& raw) {
  std::vector<ValidationIssue> issues;
  int n = raw.n;
  if (n < 3 || static_cast<int>(raw.rotation.size()) != n) {
    issues.push_back({IssueKind::BadOuterCycle, n});
    return issues;
  }
  if (!raw.labels.empty()) {
    if (static_cast<int>(raw.labels.size()) != n) {
      issues.push_back({IssueKind::BadOuterCycle, -1});
      return issues;
    }
    auto sorted = raw.labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      issues.push_back({IssueKind::BadOuterCycle, -1});
      return issues;
    }
  }

  // Adjacency structure: ids in range, no loops, no parallel edges, symmetric.
  bool structural_ok = true;
  for (int v = 0; v < n && structural_ok; ++v) {
    std::vector<VertexId> seen;
    for (VertexId u : raw.rotation[v]) {
      if (u < 0 || u >= n || u == v) {
        issues.push_back({IssueKind::NotPlanarEmbedding, v, u});
        structural_ok = false;
        break;
      }
      if (std::find(seen.begin(), seen.end(), u) != seen.end()) {
        issues.push_back({IssueKind::MultiEdge, v, u});
        structural_ok = false;
        break;
      }
      seen.push_back(u);
    }
  }
  if (!structural_ok) return issues;
  for (int v = 0; v < n; ++v) {
    for (VertexId u : raw.rotation[v]) {
      const auto& ru = raw.rotation[u];
      if (std::find(ru.begin(), ru.end(), v) == ru.end()) {
        issues.push_back({IssueKind::NotPlanarEmbedding, v, u});
        return issues;
      }
    }
  }

  // Connectivity.
  {
    std::vector<char> vis(n, 0);
    std::queue<VertexId> q;
    vis[0] = 1;
    q.push(0);
    int cnt = 1;
    while (!q.empty()) {
      VertexId a = q.front();
      q.pop();
      for (VertexId b : raw.rotation[a])
        if (!vis[b]) {
          vis[b] = 1;
          ++cnt;
          q.push(b);
        }
    }
    if (cnt != n) {
      issues.push_back({IssueKind::NotBiconnected, cnt});
      return issues;
    }
  }

  // Outer cycle sanity.
  {
    int h = static_cast<int>(raw.outer.size());
    bool ok = h >= 3 && h <= n;
    std::vector<char> seen(n, 0);
    for (int i = 0; ok && i < h; ++i) {
      VertexId v = raw.outer[i];
      if (v < 0 || v >= n || seen[v]) ok = false;
      else seen[v] = 1;
    }
    for (int i = 0; ok && i < h; ++i) {
      VertexId a = raw.outer[i], b = raw.outer[(i + 1) % h];
      const auto& ra = raw.rotation[a];
      if (std::find(ra.begin(), ra.end(), b) == ra.end()) ok = false;
    }
    if (!ok) {
      issues.push_back({IssueKind::BadOuterCycle, -1});
      return issues;
    }
  }

  // Planarity of the embedding via Euler's formula on traced faces.
  auto faces = detail::trace_faces(raw.rotation);
  int E = 0;
  for (int v = 0; v < n; ++v) E += static_cast<int>(raw.rotation[v].size());
  E /= 2;
  int F = static_cast<int>(faces.size());
  if (n - E + F != 2) {
    issues.push_back({IssueKind::NotPlanarEmbedding, n - E + F});
    return issues;
  }

  // The outer face must be exactly the reversed outer cycle; every other
  // face must be a triangle.
  {
    int h = static_cast<int>(raw.outer.size());
    std::vector<VertexId> reversed(raw.outer.rbegin(), raw.outer.rend());
    int outer_face = -1;
    for (int f = 0; f < F; ++f) {
      for (const auto& de : faces[f]) {
        if (de.first == raw.outer[1 % h] && de.second == raw.outer[0]) {
          outer_face = f;
          break;
        }
      }
      if (outer_face >= 0) break;
    }
    if (outer_face < 0) {
      issues.push_back({IssueKind::BadOuterCycle, -1});
      return issues;
    }
    std::vector<VertexId> walk;
    for (const auto& de : faces[outer_face]) walk.push_back(de.first);
    if (!detail::cycles_equal(walk, reversed)) {
      issues.push_back({IssueKind::BadOuterCycle, outer_face});
      return issues;
    }
    for (int f = 0; f < F; ++f) {
      if (f == outer_face) continue;
      if (faces[f].size() != 3) issues.push_back({IssueKind::NonTriangularInnerFace, f});
    }
    if (!issues.empty()) return issues;
  }

  // Biconnectivity (no articulation vertices).
  {
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    int timer = 0;
    bool cut = false;
    // Iterative DFS from vertex 0.
    std::vector<std::pair<VertexId, size_t>> stack;
    disc[0] = low[0] = timer++;
    stack.push_back({0, 0});
    int root_children = 0;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < raw.rotation[v].size()) {
        VertexId u = raw.rotation[v][idx++];
        if (disc[u] < 0) {
          parent[u] = v;
          if (v == 0) ++root_children;
          disc[u] = low[u] = timer++;
          stack.push_back({u, 0});
        } else if (u != parent[v]) {
          low[v] = std::min(low[v], disc[u]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          VertexId p = stack.back().first;
          low[p] = std::min(low[p], low[v]);
          if (p != 0 && low[v] >= disc[p]) cut = true;
        }
      }
    }
    if (root_children > 1) cut = true;
    if (cut) issues.push_back({IssueKind::NotBiconnected, -1});
  }

  return issues;
}

// ---------------------------------------------------------------------------
// Surgery. All operations return fresh values and fully re-validate.
// ---------------------------------------------------------------------------

namespace detail {

inline RawEmbedding drop_vertices(const NearTriangulation& g, const std::vector<VertexId>& gone) {
  std::vector<char> dead(g.order(), 0);
  for (VertexId v : gone) dead[v] = 1;
  std::vector<VertexId> remap(g.order(), -1);
  RawEmbedding r;
  for (VertexId v = 0; v < g.order(); ++v)
    if (!dead[v]) {
      remap[v] = r.n++;
      r.labels.push_back(g.label_of(v));
    }
  r.rotation.resize(r.n);
  for (VertexId v = 0; v < g.order(); ++v) {
    if (dead[v]) continue;
    for (VertexId u : g.neighbors(v))
      if (!dead[u]) r.rotation[remap[v]].push_back(remap[u]);
  }
  return r;
}

// Retraces the outer face of an embedding after surgery near the boundary.
// (sa -> sb) must be a surviving directed edge of the old outer-face walk,
// given in new ids. Returns the new clockwise outer cycle.
inline std::vector<VertexId> retrace_outer(const RawEmbedding& r, VertexId sa, VertexId sb) {
  std::vector<VertexId> walk;
  VertexId a = sa, b = sb;
  size_t guard = 0;
  do {
    walk.push_back(a);
    const auto& rb = r.rotation[b];
    auto it = std::find(rb.begin(), rb.end(), a);
    if (it == rb.end()) fail(ErrorCode::ResultNotNearTriangulation, "outer retrace lost an edge");
    size_t i = static_cast<size_t>(it - rb.begin());
    VertexId c = rb[(i + rb.size() - 1) % rb.size()];
    a = b;
    b = c;
    if (++guard > 4u * r.rotation.size() + 8u)
      fail(ErrorCode::ResultNotNearTriangulation, "outer retrace does not close");
  } while (!(a == sa && b == sb));
  std::reverse(walk.begin(), walk.end());
  return walk;  // outer face walks counterclockwise; reversed it is clockwise
}

}  // namespace detail

/// Removes a boundary vertex. The result is re-validated unconditionally;
/// degenerate outcomes raise ResultNotNearTriangulation.
inline NearTriangulation remove_vertex(const NearTriangulation& g, VertexId u) {
  require(u >= 0 && u < g.order(), ErrorCode::PreconditionViolated, "vertex out of range");
  require(g.on_boundary(u), ErrorCode::PreconditionViolated, "remove_vertex needs a boundary vertex");
  require(g.order() >= 4, ErrorCode::TooSmall, "cannot remove from a triangle");

  // A surviving directed edge of the old outer-face walk: (q -> p) for
  // consecutive boundary p -> q with both different from u.
  const auto& C = g.outer_cycle();
  int h = static_cast<int>(C.size());
  VertexId p = -1, q = -1;
  for (int i = 0; i < h; ++i) {
    VertexId a = C[i], b = C[(i + 1) % h];
    if (a != u && b != u) {
      p = a;
      q = b;
      break;
    }
  }
  require(p >= 0, ErrorCode::ResultNotNearTriangulation, "no surviving boundary edge");

  RawEmbedding r = detail::drop_vertices(g, {u});
  std::vector<VertexId> remap(g.order(), -1);
  {
    int next = 0;
    for (VertexId v = 0; v < g.order(); ++v)
      if (v != u) remap[v] = next++;
  }
  r.outer = detail::retrace_outer(r, remap[q], remap[p]);
  return NearTriangulation::build(std::move(r));
}

/// Removes a set of vertices in one step and retraces the outer face from a
/// surviving boundary edge. Used where intermediate single removals may be
/// degenerate although the combined removal is sound.
inline NearTriangulation remove_vertices(const NearTriangulation& g,
                                         const std::vector<VertexId>& gone) {
  std::vector<char> dead(g.order(), 0);
  for (VertexId v : gone) dead[v] = 1;
  const auto& C = g.outer_cycle();
  int h = static_cast<int>(C.size());
  VertexId p = -1, q = -1;
  for (int i = 0; i < h; ++i) {
    VertexId a = C[i], b = C[(i + 1) % h];
    if (!dead[a] && !dead[b]) {
      p = a;
      q = b;
      break;
    }
  }
  require(p >= 0, ErrorCode::ResultNotNearTriangulation, "no surviving boundary edge");
  RawEmbedding r = detail::drop_vertices(g, gone);
  std::vector<VertexId> remap(g.order(), -1);
  {
    int next = 0;
    for (VertexId v = 0; v < g.order(); ++v)
      if (!dead[v]) remap[v] = next++;
  }
  r.outer = detail::retrace_outer(r, remap[q], remap[p]);
  return NearTriangulation::build(std::move(r));
}

/// Removes a reducible boundary edge: order preserved, the inner-triangle
/// apex (which must be interior) joins the boundary.
inline NearTriangulation remove_edge(const NearTriangulation& g, const EdgeRef& e) {
  require(g.has_edge(e), ErrorCode::EdgeNotPresent, "remove_edge: edge missing");
  require(g.classify_edge(e) == EdgeClass::Boundary, ErrorCode::NotReducibleEdge,
          "remove_edge needs a boundary edge");
  VertexId u = e.u, v = e.v;
  if (g.boundary_succ(u) != v) std::swap(u, v);  // u -> v clockwise
  VertexId w = g.apex_right_of(u, v);
  require(!g.on_boundary(w), ErrorCode::NotReducibleEdge, "inner-triangle apex is not interior");

  RawEmbedding r = g.raw();
  auto erase_from = [&](VertexId a, VertexId b) {
    auto& rot = r.rotation[a];
    rot.erase(std::find(rot.begin(), rot.end(), b));
  };
  erase_from(u, v);
  erase_from(v, u);
  std::vector<VertexId> outer;
  for (VertexId c : g.outer_cycle()) {
    outer.push_back(c);
    if (c == u) outer.push_back(w);
  }
  r.outer = std::move(outer);
  return NearTriangulation::build(std::move(r));
}

struct ContractResult {
  NearTriangulation graph;
  Label merged_label;
};

/// Contracts edge e; the merged vertex gets a fresh label (max label + 1).
/// Throws NotContractible when the result is not a near-triangulation.
inline ContractResult contract_edge(const NearTriangulation& g, const EdgeRef& e) {
  require(g.has_edge(e), ErrorCode::EdgeNotPresent, "contract_edge: edge missing");
  require(g.order() >= 4, ErrorCode::NotContractible, "contracting a triangle");
  VertexId u = e.u, v = e.v;

  // Merged clockwise rotation: u's neighbors after v, then v's after u, with
  // the two face apexes (cyclically adjacent duplicates) collapsed.
  auto part_after = [&](VertexId a, VertexId skip) {
    const auto& rot = g.neighbors(a);
    auto it = std::find(rot.begin(), rot.end(), skip);
    internal_check(it != rot.end(), "contract: endpoints not adjacent");
    size_t i = static_cast<size_t>(it - rot.begin());
    std::vector<VertexId> out;
    for (size_t k = 1; k < rot.size(); ++k) out.push_back(rot[(i + k) % rot.size()]);
    return out;
  };
  std::vector<VertexId> merged = part_after(u, v);
  for (VertexId x : part_after(v, u)) merged.push_back(x);
  // Collapse cyclically adjacent duplicates.
  for (int pass = 0; pass < 2; ++pass) {
    size_t m = merged.size();
    bool changed = false;
    for (size_t i = 0; i < m && !changed; ++i) {
      if (merged[i] == merged[(i + 1) % m]) {
        merged.erase(merged.begin() + static_cast<long>((i + 1) % m == 0 ? 0 : i + 1));
        changed = true;
      }
    }
    if (!changed) break;
  }
  {
    auto sorted = merged;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorCode::NotContractible, "contraction yields a multi-edge");
  }

  int n = g.order();
  std::vector<VertexId> remap(n, -1);
  int next = 0;
  for (VertexId x = 0; x < n; ++x)
    if (x != u && x != v) remap[x] = next++;
  VertexId w = next;  // merged vertex is last

  RawEmbedding r;
  r.n = n - 1;
  r.rotation.resize(r.n);
  r.labels.resize(r.n);
  for (VertexId x = 0; x < n; ++x) {
    if (x == u || x == v) continue;
    r.labels[remap[x]] = g.label_of(x);
    auto& rot = r.rotation[remap[x]];
    for (VertexId y : g.neighbors(x)) rot.push_back(y == u || y == v ? -2 : remap[y]);
    // Merge duplicated -2 entries (common neighbors of u and v).
    for (size_t i = 0; i < rot.size();) {
      if (rot[i] == -2 && rot[(i + 1) % rot.size()] == -2)
        rot.erase(rot.begin() + static_cast<long>((i + 1) % rot.size() == 0 ? 0 : i + 1));
      else
        ++i;
    }
    int holes = 0;
    for (auto& y : rot)
      if (y == -2) {
        y = w;
        ++holes;
      }
    if (holes > 1) fail(ErrorCode::NotContractible, "contraction separates at a common neighbor");
  }
  r.labels[w] = g.max_label() + 1;
  r.rotation[w].reserve(merged.size());
  for (VertexId x : merged) r.rotation[w].push_back(remap[x]);

  // Outer cycle: replace boundary occurrences of u/v by w (consecutive pair
  // collapses to a single w).
  std::vector<VertexId> outer;
  for (VertexId c : g.outer_cycle()) {
    VertexId mapped = (c == u || c == v) ? w : remap[c];
    if (!outer.empty() && outer.back() == mapped) continue;
    outer.push_back(mapped);
  }
  while (outer.size() > 1 && outer.front() == outer.back()) outer.pop_back();
  r.outer = std::move(outer);

  auto issues = validate(r);
  if (!issues.empty()) {
    std::string what;
    for (const auto& i : issues) what += i.to_string() + " ";
    fail(ErrorCode::NotContractible, what);
  }
  Label wl = r.labels[w];
  return ContractResult{NearTriangulation::build(std::move(r)), wl};
}

inline bool is_contractible(const NearTriangulation& g, const EdgeRef& e) {
  require(g.has_edge(e), ErrorCode::EdgeNotPresent, "is_contractible: edge missing");
  try {
    contract_edge(g, e);
    return true;
  } catch (const Error& err) {
    if (err.code() == ErrorCode::NotContractible) return false;
    throw;
  }
}

struct EarResult {
  NearTriangulation graph;
  VertexId ear;
  Label ear_label;
};

/// Attaches a degree-2 ear on the boundary edge p -> q (clockwise
/// consecutive). The new boundary runs ..., p, z, q, ... The fresh label is
/// max_label + 1, raised to at least min_fresh so callers working relative
/// to a larger host graph can avoid label collisions.
inline EarResult attach_ear(const NearTriangulation& g, VertexId p, VertexId q,
                            Label min_fresh = 0) {
  require(g.on_boundary(p) && g.on_boundary(q) && g.boundary_succ(p) == q,
          ErrorCode::NotBoundaryEdge, "attach_ear needs clockwise boundary edge");
  RawEmbedding r = g.raw();
  VertexId z = r.n++;
  r.labels.push_back(std::max(g.max_label() + 1, min_fresh));
  r.rotation.push_back({q, p});
  {
    auto& rp = r.rotation[p];
    rp.insert(std::find(rp.begin(), rp.end(), q), z);
    auto& rq = r.rotation[q];
    rq.insert(std::next(std::find(rq.begin(), rq.end(), p)), z);
  }
  std::vector<VertexId> outer;
  for (VertexId c : g.outer_cycle()) {
    outer.push_back(c);
    if (c == p) outer.push_back(z);
  }
  r.outer = std::move(outer);
  Label zl = r.labels.back();
  return EarResult{NearTriangulation::build(std::move(r)), z, zl};
}

/// Splits a vertex into an inner face: the new vertex is adjacent to the
/// face's three corners. The face is given by a directed edge a -> b on it.
inline NearTriangulation split_inner_face(const NearTriangulation& g, VertexId a, VertexId b) {
  VertexId c = g.apex_right_of(a, b);
  internal_check(g.apex_right_of(b, c) == a, "split_inner_face: not a triangle");
  RawEmbedding r = g.raw();
  VertexId w = r.n++;
  r.labels.push_back(g.max_label() + 1);
  r.rotation.push_back({a, b, c});
  auto insert_between = [&](VertexId at, VertexId before, VertexId after) {
    auto& rot = r.rotation[at];
    // face trace puts `before` immediately ahead of `after` in rot(at)
    auto it = std::find(rot.begin(), rot.end(), after);
    internal_check(it != rot.end(), "split_inner_face: rotation entry missing");
    rot.insert(it, w);
    (void)before;
  };
  // Face (a,b,c) clockwise: rotations contain ...,b,c,... at a; ...,c,a,... at b; ...,a,b,... at c.
  insert_between(a, b, c);
  insert_between(b, c, a);
  insert_between(c, a, b);
  return NearTriangulation::build(std::move(r));
}

/// One directed edge per inner face (the face to the right of each seed).
inline std::vector<std::pair<VertexId, VertexId>> inner_face_seeds(const NearTriangulation& g) {
  auto faces = detail::trace_faces(g.raw().rotation);
  const auto& C = g.outer_cycle();
  std::vector<std::pair<VertexId, VertexId>> seeds;
  for (auto& f : faces) {
    bool outer = false;
    for (auto& de : f)
      if (de.first == C[1] && de.second == C[0]) outer = true;
    if (!outer) seeds.push_back(f[0]);
  }
  return seeds;
}

/// Adds the edge u-z across the outer face. u and z must be at boundary
/// distance exactly 2; the bypassed vertex between them becomes interior and
/// the new inner face is the triangle (u, bypassed, z).
inline NearTriangulation add_outer_chord(const NearTriangulation& g, VertexId u, VertexId z) {
  require(g.on_boundary(u) && g.on_boundary(z), ErrorCode::PreconditionViolated,
          "add_outer_chord: both endpoints must be on the boundary");
  require(!g.has_edge(u, z), ErrorCode::PreconditionViolated, "add_outer_chord: edge exists");
  VertexId m = -1;
  if (g.boundary_succ(g.boundary_succ(u)) == z) m = g.boundary_succ(u);
  else if (g.boundary_pred(g.boundary_pred(u)) == z) m = g.boundary_pred(u);
  require(m >= 0, ErrorCode::PreconditionViolated,
          "add_outer_chord: endpoints not at boundary distance 2");
  RawEmbedding r = g.raw();
  auto insert_after_pred = [&](VertexId at, VertexId added) {
    auto& rot = r.rotation[at];
    auto it = std::find(rot.begin(), rot.end(), g.boundary_pred(at));
    rot.insert(std::next(it), added);
  };
  insert_after_pred(u, z);
  insert_after_pred(z, u);
  std::vector<VertexId> outer;
  for (VertexId c : g.outer_cycle())
    if (c != m) outer.push_back(c);
  r.outer = std::move(outer);
  return NearTriangulation::build(std::move(r));
}

/// Replaces the shared edge of two adjacent inner triangles by the opposite
/// diagonal. Returns nullopt when the edge is on the boundary, the opposite
/// diagonal already exists, or the flipped embedding fails validation.
inline std::optional<NearTriangulation> try_flip_edge(const NearTriangulation& g,
                                                      const EdgeRef& e) {
  if (!g.has_edge(e)) return std::nullopt;
  if (g.classify_edge(e) == EdgeClass::Boundary) return std::nullopt;
  VertexId u = e.u, v = e.v;
  VertexId a = g.apex_right_of(u, v);  // face (u, v, a)
  VertexId b = g.apex_right_of(v, u);  // face (v, u, b)
  if (a == b || g.has_edge(a, b)) return std::nullopt;
  RawEmbedding r = g.raw();
  auto erase_from = [&](VertexId at, VertexId gone) {
    auto& rot = r.rotation[at];
    rot.erase(std::find(rot.begin(), rot.end(), gone));
  };
  erase_from(u, v);
  erase_from(v, u);
  {
    // rot(a) holds ..., u, v, ... and rot(b) holds ..., v, u, ...
    auto& ra = r.rotation[a];
    ra.insert(std::find(ra.begin(), ra.end(), v), b);
    auto& rb = r.rotation[b];
    rb.insert(std::find(rb.begin(), rb.end(), u), a);
  }
  if (!validate(r).empty()) return std::nullopt;
  return NearTriangulation::build(std::move(r));
}

struct DiagonalSplit {
  NearTriangulation arc_side;    // side containing the clockwise arc a -> b
  NearTriangulation other_side;  // side containing the clockwise arc b -> a
};

namespace detail {

// Collects the vertex set of the split side seeded by the inner face on the
// directed edge seed_a -> seed_b, flooding across every edge except (a, b).
inline std::vector<char> flood_side(const NearTriangulation& g, VertexId a, VertexId b,
                                    VertexId seed_a, VertexId seed_b) {
  std::vector<char> in_side(g.order(), 0);
  in_side[a] = in_side[b] = 1;
  // Flood faces: represent a face by one of its directed edges.
  std::vector<std::vector<char>> seen(g.order());
  for (VertexId v = 0; v < g.order(); ++v) seen[v].assign(g.neighbors(v).size(), 0);
  auto mark = [&](VertexId u, VertexId v) {
    const auto& rot = g.neighbors(u);
    size_t i = static_cast<size_t>(std::find(rot.begin(), rot.end(), v) - rot.begin());
    if (seen[u][i]) return false;
    seen[u][i] = 1;
    return true;
  };
  std::vector<std::pair<VertexId, VertexId>> stack{{seed_a, seed_b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (!mark(x, y)) continue;
    auto face = g.face_from(x, y);
    internal_check(face.size() == 3, "flood crossed into a non-triangle");
    for (size_t i = 0; i < face.size(); ++i) {
      VertexId u = face[i], v = face[(i + 1) % face.size()];
      mark(u, v);
      in_side[u] = 1;
      // Cross edge (u, v) unless it is the cut diagonal or a boundary edge.
      bool is_cut = (u == a && v == b) || (u == b && v == a);
      if (!is_cut && !(g.on_boundary(u) && g.on_boundary(v) && g.is_boundary_edge(u, v)))
        stack.push_back({v, u});
    }
  }
  return in_side;
}

inline NearTriangulation build_side(const NearTriangulation& g, VertexId a, VertexId b,
                                    const std::vector<char>& in_side,
                                    const std::vector<VertexId>& arc) {
  RawEmbedding r;
  std::vector<VertexId> remap(g.order(), -1);
  for (VertexId v = 0; v < g.order(); ++v)
    if (in_side[v]) {
      remap[v] = r.n++;
      r.labels.push_back(g.label_of(v));
    }
  r.rotation.resize(r.n);
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!in_side[v]) continue;
    if (v == a || v == b) {
      for (VertexId u : g.neighbors(v))
        if (in_side[u]) r.rotation[remap[v]].push_back(remap[u]);
    } else {
      for (VertexId u : g.neighbors(v)) {
        internal_check(in_side[u], "split side leaks an edge");
        r.rotation[remap[v]].push_back(remap[u]);
      }
    }
  }
  r.outer.reserve(arc.size());
  for (VertexId v : arc) r.outer.push_back(remap[v]);
  return NearTriangulation::build(std::move(r));
}

}  // namespace detail

/// Splits the disc along edge (a, b) whose endpoints both lie on the
/// boundary. Each side keeps the edge; outer cycles close through it.
inline DiagonalSplit split_at_diagonal(const NearTriangulation& g, VertexId a, VertexId b) {
  require(g.has_edge(a, b), ErrorCode::EdgeNotPresent, "split: edge missing");
  require(g.on_boundary(a) && g.on_boundary(b), ErrorCode::PreconditionViolated,
          "split: both endpoints must be boundary vertices");
  const auto& C = g.outer_cycle();
  int h = static_cast<int>(C.size());
  int pa = g.boundary_pos(a), pb = g.boundary_pos(b);
  std::vector<VertexId> arc_ab, arc_ba;
  for (int i = pa;; i = (i + 1) % h) {
    arc_ab.push_back(C[i]);
    if (i == pb) break;
  }
  for (int i = pb;; i = (i + 1) % h) {
    arc_ba.push_back(C[i]);
    if (i == pa) break;
  }
  // The face on directed edge (b -> a) lies on the arc a -> b side.
  auto in_ab = detail::flood_side(g, a, b, b, a);
  auto in_ba = detail::flood_side(g, a, b, a, b);
  for (VertexId v = 0; v < g.order(); ++v)
    internal_check(in_ab[v] || in_ba[v], "split: vertex on neither side");
  return DiagonalSplit{detail::build_side(g, a, b, in_ab, arc_ab),
                       detail::build_side(g, a, b, in_ba, arc_ba)};
}

// ---------------------------------------------------------------------------
// Canonical form (isomorphism up to boundary rotation/reflection). Used for
// deduplicating generated MOPs and recognizing fixed families. Both graphs
// being compared must be near-triangulations; the outer cycle serves as the
// canonical frame, so only 2h relabelings are tried.
// ---------------------------------------------------------------------------

inline std::vector<std::uint8_t> canonical_code(const NearTriangulation& g) {
  const auto& C = g.outer_cycle();
  int h = static_cast<int>(C.size());
  int n = g.order();
  std::vector<std::uint8_t> best;
  auto try_frame = [&](int start, int dir) {
    // Boundary vertices first in frame order, then interior vertices by BFS
    // from the boundary in frame order (deterministic tie-break by discovery).
    std::vector<VertexId> order;
    order.reserve(n);
    std::vector<int> pos(n, -1);
    for (int i = 0; i < h; ++i) {
      VertexId v = C[(start + dir * i % h + h) % h];
      pos[v] = static_cast<int>(order.size());
      order.push_back(v);
    }
    for (size_t head = 0; head < order.size(); ++head) {
      VertexId v = order[head];
      // Scan neighbors in rotation order (reversed for reflected frames).
      const auto& rot = g.neighbors(v);
      int d = static_cast<int>(rot.size());
      for (int k = 0; k < d; ++k) {
        VertexId u = rot[dir > 0 ? k : d - 1 - k];
        if (pos[u] < 0) {
          pos[u] = static_cast<int>(order.size());
          order.push_back(u);
        }
      }
    }
    internal_check(static_cast<int>(order.size()) == n, "canonical_code: frame missed vertices");
    std::vector<std::uint8_t> code;
    code.push_back(static_cast<std::uint8_t>(h));
    for (int i = 0; i < n; ++i) {
      std::vector<int> nb;
      for (VertexId u : g.neighbors(order[i])) nb.push_back(pos[u]);
      std::sort(nb.begin(), nb.end());
      code.push_back(0xFF);
      for (int x : nb) code.push_back(static_cast<std::uint8_t>(x));
    }
    if (best.empty() || code < best) best = std::move(code);
  };
  for (int start = 0; start < h; ++start) {
    try_frame(start, +1);
    try_frame(start, -1);
  }
  return best;
}

inline bool isomorphic(const NearTriangulation& a, const NearTriangulation& b) {
  if (a.order() != b.order() || a.boundary_length() != b.boundary_length()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace tridom
