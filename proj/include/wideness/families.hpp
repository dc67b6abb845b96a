#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wideness/graph.hpp"
#include "wideness/witness.hpp"

namespace wideness {

struct FamilySpec;

namespace family {

struct Complete {
  std::size_t t = 0;
};
/// Left block 0..s-1, right block s..s+n-1.
struct Biclique {
  std::size_t s = 0;
  std::size_t n = 0;
};
/// a_1..a_n are 0..n-1, b_1..b_n are n..2n-1; a_i ~ b_j iff i <= j.
struct HalfGraph {
  std::size_t n = 0;
};
struct Path {
  std::size_t n = 0;
};
struct Cycle {
  std::size_t n = 0;
};
/// Centre 0, leaves 1..leaves.
struct Star {
  std::size_t leaves = 0;
};
/// G(n, p) drawn from mt19937_64(seed), one draw per pair in (u, v) order.
struct Random {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};
/// Every edge replaced by a path with exactly `depth` internal vertices. Base
/// vertices keep their labels; internal vertices are appended edge by edge in
/// lexicographic edge order, walking from the smaller endpoint.
struct Subdivided {
  std::shared_ptr<const FamilySpec> base;
  std::size_t depth = 0;
};

}  // namespace family

struct FamilySpec {
  std::variant<family::Complete, family::Biclique, family::HalfGraph, family::Path, family::Cycle,
               family::Star, family::Random, family::Subdivided>
      kind;
};

inline FamilySpec subdivided(FamilySpec base, std::size_t depth) {
  return {family::Subdivided{std::make_shared<const FamilySpec>(std::move(base)), depth}};
}

/// Errc::invalid_spec for non-positive sizes, cycles below 3, p outside [0,1].
Graph generate(const FamilySpec& spec);

/// Text form, e.g. "subdivided(biclique(2,6),2)" or "random(20,0.3)".
/// A random spec without a third argument takes `seed`; with neither it is
/// Errc::invalid_spec.
FamilySpec parse_family(std::string_view text, std::optional<std::uint64_t> seed = std::nullopt);
std::string to_string(const FamilySpec& spec);
bool is_randomized(const FamilySpec& spec);

struct BudgetResult {
  std::size_t budget = 0;
  bool success = false;
  bool exhaustive = true;
  std::optional<DeletionWitness> witness;
};

struct ExperimentReport {
  std::size_t s = 0;
  std::size_t n = 0;
  Radius r = 0;
  std::size_t m = 0;
  std::size_t order = 0;
  std::vector<BudgetResult> budgets;  // one per budget 0..s
  std::optional<std::size_t> min_budget;
};

inline constexpr std::size_t kExperimentMaxOrder = 200;
inline constexpr std::size_t kExperimentMaxSide = 3;

/// Builds the s-subdivision of K_{s,N}, takes A = the N right vertices, and
/// for every budget b <= s decides exhaustively whether deleting some b
/// vertices leaves an m-subset of A that is r-independent.
/// Errc::too_large beyond s <= 3 and 200 vertices.
ExperimentReport counterexample_experiment(std::size_t s, std::size_t n, Radius r, std::size_t m,
                                           const SearchLimits& limits = {});

}  // namespace wideness
