#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "wideness/error.hpp"
#include "wideness/flip.hpp"

using namespace wideness;

namespace {

Graph cycle4() { return Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
Graph complete(std::size_t n) { return generate({family::Complete{n}}); }

Flip flip_of(std::size_t n, std::initializer_list<Vertex> a, std::initializer_list<Vertex> b) {
  return {VertexSet::of(n, a), VertexSet::of(n, b)};
}

std::vector<std::vector<std::size_t>> atom_lists(const AtomPartition& p) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& atom : p.atoms) {
    std::vector<std::size_t> members;
    atom.for_each([&](Vertex v) { members.push_back(v); });
    out.push_back(members);
  }
  return out;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::malformed;
}

}  // namespace

TEST_CASE("apply_flip examples") {
  Graph expected = cycle4();
  expected.add_edge(0, 2);
  CHECK(apply_flip(cycle4(), flip_of(4, {0}, {2})) == expected);
  CHECK(apply_flip(cycle4(), Flip{VertexSet(4), VertexSet::full(4)}) == cycle4());
  CHECK(apply_flip(complete(3), Flip{VertexSet::full(3), VertexSet::full(3)}) == Graph(3));
  CHECK(code_of([] { (void)apply_flip(Graph(3), flip_of(4, {3}, {0})); }) == Errc::out_of_range);
}

TEST_CASE("apply_flips examples") {
  const Flip f = flip_of(4, {0, 1}, {1, 2});
  const Flip g = flip_of(4, {3}, {0, 1, 2});
  CHECK(apply_flips(cycle4(), FlipSet{f, f}) == cycle4());
  CHECK(apply_flips(cycle4(), FlipSet{f, g}) == apply_flips(cycle4(), FlipSet{g, f}));
  CHECK(apply_flips(cycle4(), FlipSet{}) == cycle4());
}

TEST_CASE("flips agree with the matrix definition, commute and are involutions") {
  gen::Rng rng(1);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = gen::uniform(rng, 1, 64);
    const Graph g = gen::random_graph(rng, n, 0.3);
    const Flip f = gen::random_flip(rng, n);
    const Flip h = gen::random_flip(rng, n);
    CHECK(oracle::matrix_of(apply_flip(g, f)) == oracle::flipped(oracle::matrix_of(g), {f}));
    CHECK(apply_flips(g, FlipSet{f, h}) == apply_flips(g, FlipSet{h, f}));
    CHECK(apply_flips(g, FlipSet{f, f}) == g);
  }
}

TEST_CASE("atom_partition examples") {
  const FlipSet two{flip_of(6, {0, 1}, {2, 3}), flip_of(6, {1, 2}, {3, 4})};
  using L = std::vector<std::vector<std::size_t>>;
  CHECK(atom_lists(atom_partition(two, 6)) == L{{0}, {1}, {2}, {3}, {4}, {5}});
  CHECK(atom_lists(atom_partition(FlipSet{}, 4)) == L{{0, 1, 2, 3}});
  CHECK(atom_lists(atom_partition(FlipSet{flip_of(4, {0, 1}, {0, 1})}, 4)) == L{{0, 1}, {2, 3}});
  CHECK(atom_partition(FlipSet{}, 0).size() == 0);
}

TEST_CASE("atom_partition matches signature classes") {
  gen::Rng rng(2);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = gen::uniform(rng, 1, 64);
    const FlipSet flips = gen::random_flips(rng, n, gen::uniform(rng, 0, 4));
    const AtomPartition p = atom_partition(flips, n);
    CHECK(atom_lists(p) == oracle::atoms(flips, n));
    CHECK(p.size() <= (std::size_t{1} << (2 * flips.size())) + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      p.atoms[i].for_each([&](Vertex v) { CHECK(p.atom_of[v] == i); });
      for (const Flip& f : flips) {
        CHECK((p.atoms[i].is_subset_of(f.a) || !p.atoms[i].intersects(f.a)));
        CHECK((p.atoms[i].is_subset_of(f.b) || !p.atoms[i].intersects(f.b)));
      }
    }
  }
}

TEST_CASE("normalize examples") {
  const FlipSet two{flip_of(6, {0, 1}, {2, 3}), flip_of(6, {1, 2}, {3, 4})};
  const NormalizedFlipSet nf = normalize(two, 6);
  CHECK(nf.toggles() == std::vector<AtomPair>{{0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {2, 4}});
  CHECK_FALSE(nf.toggled(1, 3));
  std::size_t odd_pairs = 0;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) odd_pairs += oracle::toggle_count(two, u, v) % 2;
  CHECK(nf.toggles().size() == odd_pairs);

  const Flip f = flip_of(5, {0, 3}, {1});
  CHECK(normalize(FlipSet{f, f}, 5).toggles().empty());

  const NormalizedFlipSet internal = normalize(FlipSet{flip_of(2, {0, 1}, {0, 1})}, 2);
  CHECK(internal.partition().size() == 1);
  CHECK(internal.toggles() == std::vector<AtomPair>{{0, 0}});
  CHECK(internal.has_reflexive_toggle());
  CHECK(materialize(FlippedView(Graph(2), internal)) == complete(2));
}

TEST_CASE("normalization is sound, bounded and covers each pair at most once") {
  gen::Rng rng(3);
  for (int round = 0; round < 120; ++round) {
    const std::size_t n = gen::uniform(rng, 1, 64);
    const std::size_t k = gen::uniform(rng, 0, 4);
    const Graph g = gen::random_graph(rng, n, 0.25);
    const FlipSet flips = gen::random_flips(rng, n, k);
    const NormalizedFlipSet nf = normalize(flips, n);

    CHECK(materialize(FlippedView(g, nf)) == apply_flips(g, flips));
    CHECK(apply_flips(g, nf.as_flips()) == apply_flips(g, flips));
    CHECK(BigInt(nf.toggles().size()) <= normalized_toggle_bound(k));
    CHECK(nf.source_flip_count() == k);

    const FlipSet as_flips = nf.as_flips();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        const std::size_t covering = oracle::toggle_count(as_flips, u, v);
        CHECK(covering <= 1);
        CHECK(covering == oracle::toggle_count(flips, u, v) % 2);
      }
  }
}

TEST_CASE("normalized toggle bound matches Pascal's triangle") {
  for (std::size_t k = 0; k <= 4; ++k)
    CHECK(normalized_toggle_bound(k) == oracle::pascal((std::size_t{1} << (2 * k)) + 1, 2));
}

TEST_CASE("flipped adjacency") {
  const FlippedView view(cycle4(), normalize(FlipSet{flip_of(4, {0}, {2})}, 4));
  CHECK(flipped_adjacency(view, 0, 2));
  CHECK(flipped_adjacency(view, 0, 1));
  CHECK_FALSE(flipped_adjacency(view, 1, 3));
  CHECK(code_of([&] { (void)flipped_adjacency(view, 1, 1); }) == Errc::loop_query);
  CHECK(code_of([&] { (void)flipped_adjacency(view, 1, 4); }) == Errc::out_of_range);

  const FlippedView identity(cycle4());
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 0; v < 4; ++v)
      if (u != v) CHECK(flipped_adjacency(identity, u, v) == cycle4().adjacent(u, v));
}

TEST_CASE("flipped bfs examples") {
  auto values = [](const DistanceVector& d) {
    std::vector<std::uint32_t> out;
    for (Distance x : d) out.push_back(x.reachable() ? x.value() : 999);
    return out;
  };
  const FlippedView chord(cycle4(), normalize(FlipSet{flip_of(4, {0}, {2})}, 4));
  CHECK(values(flipped_bfs(chord, 0)) == std::vector<std::uint32_t>{0, 1, 1, 1});
  CHECK(values(flipped_bfs(FlippedView(cycle4()), 2)) == values(bfs_distances(cycle4(), 2)));
  const FlippedView emptied(complete(3), normalize(FlipSet{Flip{VertexSet::full(3), VertexSet::full(3)}}, 3));
  CHECK(values(flipped_bfs(emptied, 0)) == std::vector<std::uint32_t>{0, 999, 999});
  CHECK(code_of([&] { (void)flipped_bfs(emptied, 3); }) == Errc::out_of_range);
  CHECK(code_of([&] { (void)FlippedView(Graph(3), normalize(FlipSet{}, 4)); }) == Errc::out_of_range);
}

TEST_CASE("lazy flipped bfs equals bfs on the materialized graph") {
  gen::Rng rng(4);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = gen::uniform(rng, 1, 256);
    const Graph g = gen::random_graph(rng, n, 2.5 / static_cast<double>(n));
    const FlipSet flips = gen::random_flips(rng, n, gen::uniform(rng, 0, 3));
    const FlippedView view(g, normalize(flips, n));
    const auto matrix = oracle::flipped(oracle::matrix_of(g), flips);
    const auto fw = n <= 96 ? oracle::floyd_warshall(matrix) : std::vector<std::vector<int>>{};
    const Graph materialized = oracle::graph_of(matrix);
    for (int s = 0; s < 4; ++s) {
      const auto source = static_cast<Vertex>(gen::uniform(rng, 0, n - 1));
      const auto lazy = flipped_bfs(view, source);
      CHECK(lazy == bfs_distances(materialized, source));
      if (!fw.empty())
        for (Vertex v = 0; v < n; ++v)
          CHECK(lazy[v] == (fw[source][v] >= oracle::kInf ? Distance::unreachable()
                                                          : Distance(static_cast<std::uint32_t>(fw[source][v]))));
    }
  }
}

TEST_CASE("star product") {
  const Graph c4 = cycle4();
  const Graph doubled = star_product(c4, FlipSet{});
  CHECK(doubled.order() == 8);
  CHECK(doubled.edge_count() == 8);
  for (const auto& [u, v] : c4.edges()) {
    CHECK(doubled.adjacent(u, v));
    CHECK(doubled.adjacent(u + 4, v + 4));
  }
  CHECK(star_product(Graph(1), FlipSet{flip_of(1, {0}, {0})}) == Graph::from_edge_list(2, std::vector<Edge>{{0, 1}}));

  gen::Rng rng(5);
  for (int round = 0; round < 30; ++round) {
    const std::size_t n = gen::uniform(rng, 1, 30);
    const Graph g = gen::random_graph(rng, n, 0.3);
    const FlipSet flips = gen::random_flips(rng, n, gen::uniform(rng, 0, 3));
    const Graph p = star_product(g, flips);
    CHECK(p.order() == 2 * n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        if (u != v) {
          CHECK(p.adjacent(u, v) == g.adjacent(u, v));
          CHECK(p.adjacent(u + n, v + n) == g.adjacent(u, v));
        }
        std::size_t toggles = 0;
        for (const Flip& f : flips) toggles += f.a.contains(u) && f.b.contains(v) ? 1 : 0;
        CHECK(p.adjacent(u, v + n) == (toggles % 2 == 1));
      }
  }
}

TEST_CASE("isolating flips examples") {
  const FlipSet star_flips = isolating_flips(gen::star(3), std::vector<Vertex>{0});
  REQUIRE(star_flips.size() == 1);
  CHECK(star_flips[0] == flip_of(4, {0}, {1, 2, 3}));
  CHECK(apply_flips(gen::star(3), star_flips) == Graph(4));

  CHECK(isolating_flips(cycle4(), std::vector<Vertex>{}).empty());

  const FlipSet k3 = isolating_flips(complete(3), std::vector<Vertex>{0, 1});
  REQUIRE(k3.size() == 2);
  CHECK(k3[1] == flip_of(3, {1}, {2}));
  CHECK(apply_flips(complete(3), k3) == Graph(3));

  CHECK(code_of([] { (void)isolating_flips(Graph(3), std::vector<Vertex>{1, 1}); }) == Errc::duplicate_vertex);
  CHECK(code_of([] { (void)isolating_flips(Graph(3), std::vector<Vertex>{3}); }) == Errc::out_of_range);
}

TEST_CASE("isolating flips isolate S and leave the rest induced") {
  gen::Rng rng(6);
  for (int round = 0; round < 80; ++round) {
    const std::size_t n = gen::uniform(rng, 1, 40);
    const Graph g = gen::random_graph(rng, n, 0.3);
    const VertexSet s = gen::random_subset_of_size(rng, n, gen::uniform(rng, 0, std::min<std::size_t>(n, 5)));
    std::vector<Vertex> order = s.to_vector();
    std::shuffle(order.begin(), order.end(), rng);
    const Graph flipped = apply_flips(g, isolating_flips(g, order));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        if (s.contains(u) || s.contains(v)) CHECK_FALSE(flipped.adjacent(u, v));
        else CHECK(flipped.adjacent(u, v) == g.adjacent(u, v));
      }
  }
}

TEST_CASE("restricting flips commutes with deletion") {
  gen::Rng rng(7);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = gen::uniform(rng, 1, 50);
    const Graph g = gen::random_graph(rng, n, 0.3);
    const FlipSet flips = gen::random_flips(rng, n, gen::uniform(rng, 0, 3));
    const VertexSet s = gen::random_set(rng, n, 0.3);
    const Deletion d = delete_vertices(g, s);
    CHECK(apply_flips(d.graph, restrict_flips(flips, d)) == delete_vertices(apply_flips(g, flips), s).graph);
  }
}
