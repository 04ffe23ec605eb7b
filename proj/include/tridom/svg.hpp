#pragma once

// SVG rendering with a Tutte-style barycentric layout: the outer cycle is
// pinned to a regular polygon and interior vertices relax to the average of
// their neighbors (200 iterations). Input coordinates override the layout.
// Dominating sets are highlighted; pairs and 2-sets are drawn as arcs.

#include <cmath>
#include <fstream>
#include <iomanip>

#include "tridom/domset.hpp"
#include "tridom/graph.hpp"

namespace tridom {

struct RenderOptions {
  double size = 560.0;
  double margin = 40.0;
  int iterations = 200;
  std::vector<Label> highlight;                         // set vertices
  std::vector<std::pair<Label, Label>> arcs;            // pairs / 2-sets
  std::map<VertexId, std::pair<double, double>> coords; // overrides layout
};

inline std::vector<std::pair<double, double>> barycentric_layout(const NearTriangulation& g,
                                                                 const RenderOptions& opt) {
  int n = g.order();
  std::vector<std::pair<double, double>> pos(n, {0.0, 0.0});
  const auto& C = g.outer_cycle();
  int h = static_cast<int>(C.size());
  double r = (opt.size - 2 * opt.margin) / 2.0;
  double cx = opt.size / 2.0, cy = opt.size / 2.0;
  for (int i = 0; i < h; ++i) {
    // clockwise on screen (SVG y grows downward)
    double ang = -M_PI / 2.0 + 2.0 * M_PI * i / h;
    pos[C[i]] = {cx + r * std::cos(ang), cy + r * std::sin(ang)};
  }
  std::vector<char> fixed(n, 0);
  for (VertexId v : C) fixed[v] = 1;
  for (int it = 0; it < opt.iterations; ++it) {
    for (VertexId v = 0; v < n; ++v) {
      if (fixed[v]) continue;
      double sx = 0, sy = 0;
      for (VertexId u : g.neighbors(v)) {
        sx += pos[u].first;
        sy += pos[u].second;
      }
      int d = g.degree(v);
      pos[v] = {sx / d, sy / d};
    }
  }
  for (auto& [v, p] : opt.coords) pos[v] = p;
  return pos;
}

inline void render_svg(const NearTriangulation& g, const std::string& path,
                       const RenderOptions& opt = {}) {
  auto pos = barycentric_layout(g, opt);
  std::ofstream out(path);
  require(out.good(), ErrorCode::FormatError, "cannot open " + path + " for writing");
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.size
      << "\" height=\"" << opt.size << "\" viewBox=\"0 0 " << opt.size << " " << opt.size
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v : g.neighbors(u)) {
      if (u > v) continue;
      out << "<line x1=\"" << pos[u].first << "\" y1=\"" << pos[u].second << "\" x2=\""
          << pos[v].first << "\" y2=\"" << pos[v].second
          << "\" stroke=\"#888\" stroke-width=\"1.2\"/>\n";
    }
  auto idx = [&](Label l) { return g.index_of_label(l); };
  for (auto [a, b] : opt.arcs) {
    auto [x1, y1] = pos[idx(a)];
    auto [x2, y2] = pos[idx(b)];
    double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
    double dx = x2 - x1, dy = y2 - y1;
    double len = std::max(1.0, std::hypot(dx, dy));
    double ox = -dy / len * len * 0.25, oy = dx / len * len * 0.25;
    out << "<path d=\"M " << x1 << " " << y1 << " Q " << mx + ox << " " << my + oy << " " << x2
        << " " << y2 << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2.4\"/>\n";
  }
  std::vector<char> hot(g.order(), 0);
  for (Label l : opt.highlight) hot[idx(l)] = 1;
  for (VertexId v = 0; v < g.order(); ++v) {
    out << "<circle cx=\"" << pos[v].first << "\" cy=\"" << pos[v].second << "\" r=\""
        << (hot[v] ? 9.0 : 6.0) << "\" fill=\"" << (hot[v] ? "#d62728" : "#1f77b4")
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << pos[v].first + 10 << "\" y=\"" << pos[v].second - 8
        << "\" font-size=\"11\" font-family=\"sans-serif\">" << g.label_of(v) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace tridom
