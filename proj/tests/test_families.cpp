#include <doctest.h>

#include <random>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "wideness/error.hpp"
#include "wideness/families.hpp"
#include "wideness/ramsey.hpp"

using namespace wideness;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::malformed;
}

void check_invariants(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    CHECK_FALSE(g.adjacent(u, u));
    for (Vertex v = u + 1; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
  }
}

}  // namespace

TEST_CASE("generator examples") {
  const Graph half = generate({family::HalfGraph{3}});
  CHECK(half.order() == 6);
  CHECK(half.edges() == std::vector<Edge>{{0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 5}});

  const Graph sub = generate(subdivided({family::Biclique{2, 3}}, 1));
  CHECK(sub.order() == 11);
  CHECK(sub.edge_count() == 12);

  CHECK(generate({family::Complete{4}}).edge_count() == 6);
  CHECK(generate({family::Path{1}}).edge_count() == 0);
  CHECK(generate({family::Cycle{5}}).edge_count() == 5);
  CHECK(generate({family::Star{4}}).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(generate(subdivided({family::Path{3}}, 0)) == generate({family::Path{3}}));
}

TEST_CASE("subdivision numbering") {
  const Graph g = generate(subdivided({family::Biclique{1, 2}}, 2));
  CHECK(g.order() == 7);
  CHECK(g.edges() == std::vector<Edge>{{0, 3}, {0, 5}, {1, 4}, {2, 6}, {3, 4}, {5, 6}});
  const auto d = bfs_distances(g, 1);
  CHECK(d[2] == Distance(6));
}

TEST_CASE("invalid specs") {
  CHECK(code_of([] { (void)generate({family::Cycle{2}}); }) == Errc::invalid_spec);
  CHECK(code_of([] { (void)generate({family::Complete{0}}); }) == Errc::invalid_spec);
  CHECK(code_of([] { (void)generate({family::Biclique{0, 3}}); }) == Errc::invalid_spec);
  CHECK(code_of([] { (void)generate({family::Random{5, 1.5, 1}}); }) == Errc::invalid_spec);
  CHECK(code_of([] { (void)generate({family::Subdivided{nullptr, 1}}); }) == Errc::invalid_spec);
}

TEST_CASE("family text form") {
  const FamilySpec spec = parse_family("subdivided(biclique(2,6),2)");
  CHECK(to_string(spec) == "subdivided(biclique(2,6),2)");
  CHECK(generate(spec) == generate(subdivided({family::Biclique{2, 6}}, 2)));
  CHECK(to_string(parse_family(" half_graph( 4 ) ")) == "half_graph(4)");
  CHECK_FALSE(is_randomized(spec));

  CHECK(code_of([] { (void)parse_family("random(10,0.5)"); }) == Errc::invalid_spec);
  const FamilySpec seeded = parse_family("random(10,0.5)", 42);
  CHECK(is_randomized(seeded));
  CHECK(to_string(seeded) == "random(10,0.5,42)");
  CHECK(generate(parse_family(to_string(seeded))) == generate(seeded));
  CHECK(is_randomized(parse_family("subdivided(random(5,0.1,3),1)")));

  for (const char* bad : {"", "wheel(5)", "path(5", "path(5))", "path(x)", "biclique(2)", "path(-1)",
                          "random(5,abc,1)", "complete(3) extra"})
    CHECK(code_of([&] { (void)parse_family(bad); }) == Errc::invalid_spec);
}

TEST_CASE("random graphs follow the documented draw") {
  for (std::uint64_t seed : {0ULL, 1ULL, 12345ULL}) {
    const Graph g = generate({family::Random{30, 0.3, seed}});
    std::mt19937_64 rng(seed);
    for (Vertex u = 0; u < 30; ++u)
      for (Vertex v = u + 1; v < 30; ++v) {
        const double x = static_cast<double>(rng() >> 11) / 9007199254740992.0;
        CHECK(g.adjacent(u, v) == (x < 0.3));
      }
    check_invariants(g);
  }
  CHECK(generate({family::Random{20, 0.0, 7}}).edge_count() == 0);
  CHECK(generate({family::Random{20, 1.0, 7}}).edge_count() == 190);
}

TEST_CASE("bicliques contain exactly their balanced biclique") {
  for (std::size_t s = 1; s <= 4; ++s)
    for (std::size_t n = 1; n <= 5; ++n) {
      const Graph g = generate({family::Biclique{s, n}});
      check_invariants(g);
      const std::size_t t = std::min(s, n);
      CHECK(contains_biclique(g, static_cast<unsigned>(t)).has_value());
      if (t + 1 <= kMaxExhaustiveBicliqueSide) CHECK_FALSE(contains_biclique(g, static_cast<unsigned>(t + 1)));
      CHECK(oracle::has_biclique(oracle::matrix_of(g), t));
      CHECK_FALSE(oracle::has_biclique(oracle::matrix_of(g), t + 1));
    }
}

TEST_CASE("subdivided bicliques exclude K_{2,2}") {
  for (std::size_t s = 1; s <= 3; ++s)
    for (std::size_t n = 1; n <= 12; ++n) {
      const Graph g = generate(subdivided({family::Biclique{s, n}}, s));
      if (g.order() > 200) continue;
      check_invariants(g);
      CHECK(g.order() == s + n + s * n * s);
      CHECK_FALSE(contains_biclique(g, 2).has_value());
    }
}

TEST_CASE("ramsey_upper") {
  CHECK(ramsey_upper(3, 3) == 6);
  for (std::uint64_t m = 1; m <= 50; ++m) {
    CHECK(ramsey_upper(m, 2) == m);
    CHECK(ramsey_upper(2, m) == m);
    for (std::uint64_t n = 1; n <= 50; ++n) {
      CHECK(ramsey_upper(m, n) == ramsey_upper(n, m));
      CHECK(ramsey_upper(m, n) == oracle::pascal(m + n - 2, m - 1));
      if (m >= 2 && n >= 2) CHECK(ramsey_upper(m, n) == ramsey_upper(m - 1, n) + ramsey_upper(m, n - 1));
    }
  }
  CHECK(code_of([] { (void)ramsey_upper(0, 3); }) == Errc::invalid_argument);
  CHECK(code_of([] { (void)ramsey_upper(3, 0); }) == Errc::invalid_argument);
  CHECK(code_of([] { (void)ramsey_upper(2000, 2000, 64); }) == Errc::overflow);
}

TEST_CASE("iterated_ramsey_upper") {
  CHECK(iterated_ramsey_upper(0, 7, 11) == 11);
  CHECK(iterated_ramsey_upper(1, 3, 3) == 6);
  CHECK(iterated_ramsey_upper(2, 3, 3) == 21);
  CHECK(iterated_ramsey_upper(3, 3, 3) == oracle::pascal(22, 2));
  CHECK(code_of([] { (void)iterated_ramsey_upper(30, 4, 10); }) == Errc::overflow);
}

TEST_CASE("binomial") {
  for (std::size_t n = 0; n <= 60; ++n)
    for (std::size_t k = 0; k <= n + 1; ++k) CHECK(binomial(n, k) == oracle::pascal(n, k));
}

TEST_CASE("counterexample experiment examples") {
  const ExperimentReport a = counterexample_experiment(2, 6, 6, 2);
  REQUIRE(a.budgets.size() == 3);
  CHECK_FALSE(a.budgets[0].success);
  CHECK_FALSE(a.budgets[1].success);
  CHECK(a.budgets[2].success);
  REQUIRE(a.min_budget);
  CHECK(*a.min_budget == 2);
  REQUIRE(a.budgets[2].witness);
  CHECK(a.budgets[2].witness->s_set == VertexSet::of(a.order, {0, 1}));
  CHECK(a.budgets[2].witness->b_set == gen::range_set(a.order, 2, 8));

  const ExperimentReport b = counterexample_experiment(2, 6, 7, 2);
  CHECK(*b.min_budget == 2);
  CHECK(b.budgets[2].witness->s_set == VertexSet::of(b.order, {0, 1}));

  const ExperimentReport c = counterexample_experiment(1, 4, 4, 2);
  CHECK_FALSE(c.budgets[0].success);
  CHECK(c.budgets[1].success);
  CHECK(c.budgets[1].witness->s_set == VertexSet::of(c.order, {0}));

  CHECK(code_of([] { (void)counterexample_experiment(4, 2, 10, 2); }) == Errc::too_large);
  CHECK(code_of([] { (void)counterexample_experiment(3, 30, 8, 2); }) == Errc::too_large);
  CHECK(code_of([] { (void)counterexample_experiment(0, 3, 2, 2); }) == Errc::invalid_argument);
}

TEST_CASE("experiment witnesses verify and budgets are monotone") {
  for (std::size_t s = 1; s <= 2; ++s)
    for (std::size_t n = 2; n <= 6; ++n)
      for (Radius r = 1; r <= 2 * (s + 1) + 2; ++r)
        for (std::size_t m = 1; m <= 3; ++m) {
          const ExperimentReport rep = counterexample_experiment(s, n, r, m);
          const Graph g = generate(subdivided({family::Biclique{s, n}}, s));
          const VertexSet right = gen::range_set(g.order(), static_cast<Vertex>(s), static_cast<Vertex>(s + n));
          bool seen = false;
          for (const BudgetResult& b : rep.budgets) {
            CHECK(b.exhaustive);
            if (seen) CHECK(b.success);
            seen = seen || b.success;
            if (b.success) {
              REQUIRE(b.witness);
              CHECK(b.witness->s_set.count() == b.budget);
              CHECK(verify_widenable(g, {right, b.witness->s_set, r, m, b.witness->b_set}).valid);
            }
          }
          if (g.order() <= 16)
            CHECK(rep.budgets.back().success ==
                  oracle::deletion_witness_exists(oracle::matrix_of(g), oracle::members_of(right), static_cast<int>(r),
                                                  m, s));
        }
}
