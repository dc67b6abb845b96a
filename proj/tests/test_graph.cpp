#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "wideness/error.hpp"
#include "wideness/graph.hpp"
#include "wideness/witness.hpp"

using namespace wideness;

namespace {

Graph cycle4() { return Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
Graph path5() { return Graph::from_edge_list(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}}); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::malformed;
}

std::vector<std::uint32_t> values(const DistanceVector& d) {
  std::vector<std::uint32_t> out;
  for (Distance x : d) out.push_back(x.reachable() ? x.value() : 999);
  return out;
}

}  // namespace

TEST_CASE("vertex set basics") {
  VertexSet s(130);
  CHECK(s.empty());
  s.insert(0);
  s.insert(64);
  s.insert(129);
  CHECK(s.count() == 3);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(65));
  CHECK_FALSE(s.contains(500));
  CHECK(s.first() == 0);
  CHECK(s.next(0) == 64);
  CHECK(s.next(129) == 130);
  CHECK(s.to_vector() == std::vector<Vertex>{0, 64, 129});

  const VertexSet t = VertexSet::of(130, {64, 100});
  CHECK((s & t).to_vector() == std::vector<Vertex>{64});
  CHECK((s | t).count() == 4);
  CHECK((s - t).to_vector() == std::vector<Vertex>{0, 129});
  CHECK((s ^ t).to_vector() == std::vector<Vertex>{0, 100, 129});
  CHECK((s & t).is_subset_of(s));
  CHECK(s.intersects(t));
  CHECK(VertexSet::full(130).count() == 130);
  CHECK(VertexSet(0).first() == 0);

  CHECK(code_of([] { (void)VertexSet::of(3, {3}); }) == Errc::out_of_range);
  CHECK(s.resized(200).count() == 3);
  CHECK(code_of([&] { (void)s.resized(100); }) == Errc::out_of_range);
}

TEST_CASE("from_edge_list") {
  const Graph c4 = cycle4();
  CHECK(c4.order() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.adjacent(3, 0));
  CHECK(c4.adjacent(0, 3));

  const Graph empty = Graph::from_edge_list(3, {});
  CHECK(empty.edge_count() == 0);
  for (Vertex v = 0; v < 3; ++v) CHECK(empty.row(v).empty());

  CHECK(code_of([] { (void)Graph::from_edge_list(2, std::vector<Edge>{{0, 2}}); }) == Errc::out_of_range);
  CHECK(code_of([] { (void)Graph::from_edge_list(2, std::vector<Edge>{{1, 1}}); }) == Errc::loop_rejected);

  const Graph dup = Graph::from_edge_list(3, std::vector<Edge>{{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("bfs distances") {
  CHECK(values(bfs_distances(path5(), 0)) == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
  CHECK(values(bfs_distances(Graph(3), 1)) == std::vector<std::uint32_t>{999, 0, 999});
  CHECK(values(bfs_distances(cycle4(), 0)) == std::vector<std::uint32_t>{0, 1, 2, 1});
  CHECK(values(bfs_distances_within(path5(), 0, 2)) == std::vector<std::uint32_t>{0, 1, 2, 999, 999});
  CHECK(code_of([] { (void)bfs_distances(Graph(3), 3); }) == Errc::out_of_range);

  CHECK(Distance::unreachable() > Distance(1000000));
  CHECK(Distance::unreachable().exceeds(std::numeric_limits<Radius>::max() - 1));
}

TEST_CASE("bfs agrees with Floyd-Warshall and is edge-consistent") {
  gen::Rng rng(11);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = gen::uniform(rng, 1, 64);
    const Graph g = gen::random_graph(rng, n, 0.02 + 0.2 * (round % 5) / 4.0);
    const auto fw = oracle::floyd_warshall(oracle::matrix_of(g));
    for (Vertex s = 0; s < n; ++s) {
      const auto d = bfs_distances(g, s);
      CHECK(d[s] == Distance(0));
      for (Vertex v = 0; v < n; ++v) {
        if (fw[s][v] >= oracle::kInf) {
          CHECK_FALSE(d[v].reachable());
        } else {
          CHECK(d[v].value() == static_cast<std::uint32_t>(fw[s][v]));
        }
      }
      for (const auto& [u, v] : g.edges()) {
        if (!d[u].reachable()) continue;
        CHECK(d[v].value() <= d[u].value() + 1);
        CHECK(d[u].value() <= d[v].value() + 1);
      }
    }
  }
}

TEST_CASE("graph invariants after mutation") {
  gen::Rng rng(5);
  Graph g = gen::random_graph(rng, 70, 0.3);
  g.toggle_edge(3, 66);
  g.remove_edge(1, 2);
  g.add_edge(0, 69);
  g.toggle_between(gen::random_set(rng, 70, 0.5), gen::random_set(rng, 70, 0.5));
  for (Vertex u = 0; u < 70; ++u) {
    CHECK_FALSE(g.adjacent(u, u));
    for (Vertex v = 0; v < 70; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
  }
  CHECK(code_of([&] { g.add_edge(4, 4); }) == Errc::loop_rejected);
  CHECK(code_of([&] { g.add_edge(4, 70); }) == Errc::out_of_range);
}

TEST_CASE("neighborhood") {
  CHECK(neighborhood(gen::star(3), 0).to_vector() == std::vector<Vertex>{1, 2, 3});
  CHECK(neighborhood(Graph(4), 2).empty());
  CHECK(neighborhood(cycle4(), 0).to_vector() == std::vector<Vertex>{1, 3});
  CHECK(code_of([] { (void)neighborhood(Graph(2), 2); }) == Errc::out_of_range);
}

TEST_CASE("delete_vertices keeps a relabeling map") {
  const Graph c4 = cycle4();
  const Deletion d = delete_vertices(c4, VertexSet::of(4, {0}));
  CHECK(d.graph == Graph::from_edge_list(3, std::vector<Edge>{{0, 1}, {1, 2}}));
  CHECK(d.original == std::vector<Vertex>{1, 2, 3});
  CHECK_FALSE(d.new_index[0].has_value());
  CHECK(*d.new_index[3] == 2);
  CHECK(d.to_old(VertexSet::of(3, {0, 2})).to_vector() == std::vector<Vertex>{1, 3});
  CHECK(d.to_new(VertexSet::of(4, {0, 3})).to_vector() == std::vector<Vertex>{2});

  CHECK(delete_vertices(c4, VertexSet(4)).graph == c4);
  CHECK(delete_vertices(c4, VertexSet::full(4)).graph.order() == 0);

  gen::Rng rng(3);
  for (int round = 0; round < 20; ++round) {
    const Graph g = gen::random_graph(rng, 40, 0.2);
    const VertexSet s = gen::random_set(rng, 40, 0.3);
    const Deletion del = delete_vertices(g, s);
    for (Vertex u = 0; u < del.graph.order(); ++u)
      for (Vertex v = 0; v < del.graph.order(); ++v)
        CHECK(del.graph.adjacent(u, v) == g.adjacent(del.original[u], del.original[v]));
  }
}

TEST_CASE("is_r_independent") {
  CHECK(is_r_independent(path5(), VertexSet::of(5, {0, 4}), 3));
  CHECK_FALSE(is_r_independent(path5(), VertexSet::of(5, {0, 4}), 4));
  CHECK(is_r_independent(path5(), VertexSet::of(5, {2}), 100));
  CHECK(is_r_independent(path5(), VertexSet(5), 0));
  CHECK(is_r_independent(Graph(3), VertexSet::full(3), 1000));
}

TEST_CASE("r-independence matches an edgeless closeness graph") {
  gen::Rng rng(21);
  for (int round = 0; round < 80; ++round) {
    const std::size_t n = gen::uniform(rng, 2, 30);
    const Graph g = gen::random_graph(rng, n, 0.1);
    const VertexSet b = gen::random_set(rng, n, 0.3);
    const auto r = static_cast<Radius>(gen::uniform(rng, 0, 5));
    const auto cg = closeness_graph(g, b, r);
    CHECK(is_r_independent(g, b, r) == (cg.local.edge_count() == 0));
    CHECK(is_r_independent(g, b, r) ==
          oracle::r_independent(oracle::matrix_of(g), oracle::members_of(b), static_cast<int>(r)));
  }
}

TEST_CASE("contains_biclique examples") {
  const auto c4 = contains_biclique(cycle4(), 2);
  REQUIRE(c4);
  CHECK(c4->left.to_vector() == std::vector<Vertex>{0, 2});
  CHECK(c4->right.to_vector() == std::vector<Vertex>{1, 3});

  gen::Rng rng(8);
  for (int i = 0; i < 10; ++i) CHECK_FALSE(contains_biclique(gen::random_tree(rng, 30), 2));

  const Graph k35 = gen::subdivided_biclique(3, 5, 0);
  const auto found = contains_biclique(k35, 3);
  REQUIRE(found);
  CHECK(oracle::is_biclique(oracle::matrix_of(k35), oracle::members_of(found->left),
                            oracle::members_of(found->right), 3));
  CHECK_FALSE(contains_biclique(k35, 4));

  CHECK(code_of([] { (void)contains_biclique(Graph(10), 5); }) == Errc::too_large);
  CHECK(code_of([] { (void)contains_biclique(Graph(5000), 2); }) == Errc::too_large);
  CHECK(code_of([] { (void)contains_biclique(Graph(3), 0); }) == Errc::invalid_argument);
}

TEST_CASE("contains_biclique agrees with subset enumeration") {
  gen::Rng rng(99);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = gen::uniform(rng, 1, 20);
    const unsigned t = static_cast<unsigned>(gen::uniform(rng, 1, 3));
    const Graph g = gen::random_graph(rng, n, 0.15 + 0.1 * (round % 6));
    const auto m = oracle::matrix_of(g);
    const auto found = contains_biclique(g, t);
    CHECK(found.has_value() == oracle::has_biclique(m, t));
    if (found) CHECK(oracle::is_biclique(m, oracle::members_of(found->left), oracle::members_of(found->right), t));
  }
}
