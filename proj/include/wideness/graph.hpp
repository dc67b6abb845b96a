#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wideness/vertex_set.hpp"

namespace wideness {

using Edge = std::pair<Vertex, Vertex>;
using Radius = std::uint32_t;

/// Shortest-path length, or a sentinel for unreachable that compares greater
/// than every finite value.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t hops) : value_(hops) {}

  static constexpr Distance unreachable() { return Distance(); }

  constexpr bool reachable() const { return value_ != kUnreachable; }
  constexpr std::uint32_t value() const { return value_; }
  /// True iff the distance is strictly greater than r (always for unreachable).
  constexpr bool exceeds(Radius r) const { return value_ > r; }

  friend constexpr auto operator<=>(Distance, Distance) = default;

 private:
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t value_ = kUnreachable;
};

using DistanceVector = std::vector<Distance>;

/**
 * Loop-free undirected graph on 0..n-1 stored as one bit row per vertex.
 *
 * Every mutator keeps the rows symmetric and the diagonal clear.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept;

  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].contains(v); }
  const VertexSet& row(Vertex v) const noexcept { return rows_[v]; }
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);

  /// Complement every unordered pair {u,v}, u != v, with one end in a and the
  /// other in b. A pair matched in both orientations is still toggled once.
  void toggle_between(const VertexSet& a, const VertexSet& b);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::vector<VertexSet> rows_;
};

/// Row v of the adjacency. Throws Errc::out_of_range.
VertexSet neighborhood(const Graph& g, Vertex v);

/// Exact single-source distances. Throws Errc::out_of_range.
DistanceVector bfs_distances(const Graph& g, Vertex source);

/// Like bfs_distances but stops expanding after max_depth layers; vertices
/// beyond are reported unreachable.
DistanceVector bfs_distances_within(const Graph& g, Vertex source, Radius max_depth);

/// Induced subgraph on V \ S together with the relabeling both ways.
struct Deletion {
  Graph graph;
  std::vector<std::optional<Vertex>> new_index;  // old -> new, nullopt if deleted
  std::vector<Vertex> original;                  // new -> old

  /// Members that survive, in new labels.
  VertexSet to_new(const VertexSet& old_set) const;
  VertexSet to_old(const VertexSet& new_set) const;
};

Deletion delete_vertices(const Graph& g, const VertexSet& removed);

/// True iff every two distinct members of b are at distance > r in g.
bool is_r_independent(const Graph& g, const VertexSet& b, Radius r);

struct Biclique {
  VertexSet left;
  VertexSet right;
};

inline constexpr unsigned kMaxExhaustiveBicliqueSide = 4;
inline constexpr std::size_t kMaxExhaustiveBicliqueOrder = std::size_t{1} << 12;

/// Finds a (not necessarily induced) K_{t,t} subgraph. Exhaustive within
/// t <= 4 and n <= 4096, otherwise Errc::too_large. The left side is the
/// lexicographically first t-set with t common neighbours; the right side is
/// the first t of those neighbours.
std::optional<Biclique> contains_biclique(const Graph& g, unsigned t);

/// Same search with the left side drawn from `left_pool` and the right side
/// from `right_pool`. No size limit; callers own the cost.
std::optional<Biclique> find_biclique_between(const Graph& g, const VertexSet& left_pool,
                                              const VertexSet& right_pool, unsigned t);

}  // namespace wideness
