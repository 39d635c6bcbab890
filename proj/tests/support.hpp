#pragma once

#include <deque>
#include <unordered_map>

#include "latpack/coloring.hpp"
#include "latpack/lattice.hpp"

namespace latpack::testing {

// Breadth-first distances from `source` to every vertex of `box`, searching
// inside `box` widened by `margin`.
inline std::unordered_map<Vertex, Int, VertexHash> bfs_distances(LatticeKind kind, Vertex source, const Window& box,
                                                                 Int margin) {
  const Window wide(box.a_min - margin, box.a_max + margin, box.b_min - margin, box.b_max + margin);
  std::unordered_map<Vertex, Int, VertexHash> dist;
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : neighbors(kind, v)) {
      if (!wide.contains(w) || dist.count(w)) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

// Pairwise check of a periodic coloring inside a window: any two vertices of
// one color must be farther apart than its value. Returns the number of
// violating pairs.
inline Int brute_force_violations(const PeriodicColoring& col, const Window& w) {
  std::vector<std::vector<Vertex>> classes(col.color_count());
  for (Int b = w.b_min; b <= w.b_max; ++b)
    for (Int a = w.a_min; a <= w.a_max; ++a) classes[static_cast<std::size_t>(col.color_at({a, b}))].push_back({a, b});
  Int bad = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Int r = col.values[c];
    const auto& pts = classes[c];
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (distance(col.kind, pts[i], pts[j]) <= r) ++bad;
  }
  return bad;
}

}  // namespace latpack::testing
