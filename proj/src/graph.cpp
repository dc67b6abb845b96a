#include "wideness/graph.hpp"

#include <limits>
#include <string>

#include "wideness/detail/bfs.hpp"
#include "wideness/error.hpp"

namespace wideness {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order())
    throw Error(Errc::out_of_range, "vertex " + std::to_string(v) +
                                        " outside graph of order " +
                                        std::to_string(g.order()));
}

bool biclique_search(const Graph& g, const VertexSet& left_pool, unsigned t,
                     std::vector<Vertex>& chosen, const VertexSet& common, Vertex start,
                     Biclique& out) {
  if (chosen.size() == t) {
    out.left = VertexSet::of(g.order(), chosen);
    out.right = VertexSet(g.order());
    unsigned taken = 0;
    for (Vertex y = common.first(); taken < t; y = common.next(y), ++taken) out.right.insert(y);
    return true;
  }
  for (Vertex v = start; v < g.order(); v = left_pool.next(v)) {
    if (!left_pool.contains(v)) continue;
    VertexSet narrowed = common & g.row(v);
    if (narrowed.count() < t) continue;
    chosen.push_back(v);
    if (biclique_search(g, left_pool, t, chosen, narrowed, left_pool.next(v), out)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    rows_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

void Graph::check_pair(Vertex u, Vertex v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw Error(Errc::loop_rejected, "loop at vertex " + std::to_string(u));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[u].insert(v);
  rows_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[u].erase(v);
  rows_[v].erase(u);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[u].flip(v);
  rows_[v].flip(u);
}

void Graph::toggle_between(const VertexSet& a, const VertexSet& b) {
  const VertexSet a_fit = a.resized(order());
  const VertexSet b_fit = b.resized(order());
  // Row u toggles (b if u in a) union (a if u in b); the union gives the
  // once-per-pair semantics and keeps the rows symmetric.
  const VertexSet both = a_fit | b_fit;
  both.for_each([&](Vertex u) {
    VertexSet toggled(order());
    if (a_fit.contains(u)) toggled |= b_fit;
    if (b_fit.contains(u)) toggled |= a_fit;
    toggled.erase(u);
    rows_[u] ^= toggled;
  });
}

VertexSet neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.row(v);
}

DistanceVector bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances_within(g, source, std::numeric_limits<Radius>::max());
}

DistanceVector bfs_distances_within(const Graph& g, Vertex source, Radius max_depth) {
  check_vertex(g, source);
  return detail::layered_bfs(g.order(), source, max_depth, [&](Vertex u, std::span<Word> acc) {
    const auto row = g.row(u).words();
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] |= row[i];
  });
}

VertexSet Deletion::to_new(const VertexSet& old_set) const {
  VertexSet out(graph.order());
  old_set.for_each([&](Vertex v) {
    if (v < new_index.size() && new_index[v]) out.insert(*new_index[v]);
  });
  return out;
}

VertexSet Deletion::to_old(const VertexSet& new_set) const {
  VertexSet out(new_index.size());
  new_set.for_each([&](Vertex v) { out.insert(original.at(v)); });
  return out;
}

Deletion delete_vertices(const Graph& g, const VertexSet& removed) {
  Deletion d;
  d.new_index.assign(g.order(), std::nullopt);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (removed.contains(v)) continue;
    d.new_index[v] = static_cast<Vertex>(d.original.size());
    d.original.push_back(v);
  }
  d.graph = Graph(d.original.size());
  for (Vertex nu = 0; nu < d.original.size(); ++nu)
    g.row(d.original[nu]).for_each([&](Vertex ov) {
      if (const auto nv = d.new_index[ov]; nv && nu < *nv) d.graph.add_edge(nu, *nv);
    });
  return d;
}

bool is_r_independent(const Graph& g, const VertexSet& b, Radius r) {
  bool independent = true;
  b.for_each([&](Vertex u) {
    if (!independent) return;
    check_vertex(g, u);
    const auto dist = bfs_distances_within(g, u, r);
    b.for_each([&](Vertex v) {
      if (v != u && !dist[v].exceeds(r)) independent = false;
    });
  });
  return independent;
}

std::optional<Biclique> find_biclique_between(const Graph& g, const VertexSet& left_pool,
                                              const VertexSet& right_pool, unsigned t) {
  if (t == 0) throw Error(Errc::invalid_argument, "biclique side must be at least 1");
  const VertexSet left = left_pool.resized(g.order());
  const VertexSet right = right_pool.resized(g.order());
  if (left.count() < t || right.count() < t) return std::nullopt;
  std::vector<Vertex> chosen;
  Biclique out;
  if (biclique_search(g, left, t, chosen, right, left.first(), out)) return out;
  return std::nullopt;
}

std::optional<Biclique> contains_biclique(const Graph& g, unsigned t) {
  if (t == 0) throw Error(Errc::invalid_argument, "biclique side must be at least 1");
  if (t > kMaxExhaustiveBicliqueSide || g.order() > kMaxExhaustiveBicliqueOrder)
    throw Error(Errc::too_large, "exhaustive biclique search supports t <= 4 and n <= 4096");
  const VertexSet all = VertexSet::full(g.order());
  return find_biclique_between(g, all, all, t);
}

}  // namespace wideness
