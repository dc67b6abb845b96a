#pragma once

#include <cstdint>
#include <utility>

#include "wideness/graph.hpp"

namespace wideness::detail {

// Frontier-at-a-time BFS over bit rows. `or_row_into(u, words)` must OR the
// out-neighbourhood of u into `words`; everything else is word-parallel.
template <class OrRowInto>
DistanceVector layered_bfs(std::size_t n, Vertex source, Radius max_depth,
                           OrRowInto&& or_row_into) {
  DistanceVector dist(n);
  VertexSet visited(n);
  VertexSet frontier(n);
  VertexSet next(n);
  visited.insert(source);
  frontier.insert(source);
  dist[source] = Distance(0);
  for (std::uint64_t depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
    for (Word& w : next.words()) w = 0;
    frontier.for_each([&](Vertex u) { or_row_into(u, next.words()); });
    next -= visited;
    next.for_each([&](Vertex v) { dist[v] = Distance(static_cast<std::uint32_t>(depth)); });
    visited |= next;
    std::swap(frontier, next);
  }
  return dist;
}

}  // namespace wideness::detail
