#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wideness/bigint.hpp"
#include "wideness/flip.hpp"
#include "wideness/graph.hpp"

namespace wideness {

/// Pool sizes up to this are searched by branch and bound; larger pools fall
/// back to greedy and are reported as non-exhaustive.
inline constexpr std::size_t kExactPoolLimit = 40;
/// Exhaustive deletion-witness search range.
inline constexpr std::size_t kWitnessSearchMaxOrder = 24;
inline constexpr std::size_t kWitnessSearchMaxBudget = 3;

struct SearchLimits {
  std::size_t exact_pool = kExactPoolLimit;
  std::size_t witness_max_order = kWitnessSearchMaxOrder;
  std::size_t witness_max_budget = kWitnessSearchMaxBudget;
};

struct FlippableInstance {
  VertexSet a_set;
  FlipSet flips;
  Radius r = 0;
  std::size_t m = 0;
  std::optional<VertexSet> witness;

  friend bool operator==(const FlippableInstance&, const FlippableInstance&) = default;
};

struct WidenableInstance {
  VertexSet a_set;
  VertexSet s_set;
  Radius r = 0;
  std::size_t m = 0;
  std::optional<VertexSet> witness;

  friend bool operator==(const WidenableInstance&, const WidenableInstance&) = default;
};

struct Verdict {
  bool valid = false;
  std::string reason;

  static Verdict ok() { return {true, {}}; }
  static Verdict invalid(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const noexcept { return valid; }
};

/// Errc::missing_witness when the instance carries no witness.
Verdict verify_flippable(const Graph& g, const FlippableInstance& inst);
Verdict verify_widenable(const Graph& g, const WidenableInstance& inst);

/// Pairs of a candidate pool at distance <= r. Local vertex i is members[i].
struct ClosenessGraph {
  std::size_t universe = 0;
  std::vector<Vertex> members;
  Graph local;
  Radius r = 0;

  VertexSet to_global(const VertexSet& local_set) const;
};

ClosenessGraph closeness_graph(const FlippedView& view, const VertexSet& pool, Radius r);
ClosenessGraph closeness_graph(const Graph& g, const VertexSet& pool, Radius r);

/// Lexicographically first maximum clique (exact branch and bound with a
/// greedy-colouring bound).
VertexSet maximum_clique(const Graph& g);
VertexSet maximum_independent_set(const Graph& g);
/// Exact decision search: lexicographically first independent set of exactly
/// `size` vertices, exponential only in `size`.
std::optional<VertexSet> independent_set_of_size(const Graph& g, std::size_t size);
VertexSet greedy_clique(const Graph& g);
VertexSet greedy_independent_set(const Graph& g);

struct CliqueSearchResult {
  VertexSet set;  // global labels
  bool exhaustive = false;
};

/// Largest close set (clique of the closeness graph) the limits allow.
CliqueSearchResult largest_close_set(const ClosenessGraph& cg, const SearchLimits& limits = {});
/// Largest far set (independent set of the closeness graph) the limits allow.
CliqueSearchResult largest_far_set(const ClosenessGraph& cg, const SearchLimits& limits = {});

enum class Side { far, close, neither };

struct CloseOrFar {
  Side side = Side::neither;
  VertexSet set;  // global labels
  bool exhaustive = false;
};

/// Far set of >= far_target pairwise far vertices, else a close set of
/// >= close_target pairwise close vertices, else Neither. Exact (and never
/// Neither once the pool reaches ramsey_upper(far, close)) for pools within
/// limits.exact_pool; above it a constructive Ramsey split keeps that
/// guarantee and greedy search fills the rest.
CloseOrFar close_or_far(const ClosenessGraph& cg, std::size_t far_target,
                        const BigInt& close_target, const SearchLimits& limits = {});

/// Maximum subset of A that is r-independent in g ⊕ flips, if it reaches m.
std::optional<VertexSet> find_flat_subset(const Graph& g, std::span<const Flip> flips,
                                          const VertexSet& a_set, Radius r, std::size_t m,
                                          const SearchLimits& limits = {});

struct DeletionWitness {
  VertexSet s_set;
  VertexSet b_set;
};

/// Exhaustive over deletion sets of size <= budget in size-then-lexicographic
/// order; the first that leaves an m-subset of A r-independent wins.
/// Errc::too_large outside limits.witness_max_order / witness_max_budget.
std::optional<DeletionWitness> search_deletion_witness(const Graph& g, const VertexSet& a_set,
                                                       Radius r, std::size_t m,
                                                       std::size_t budget,
                                                       const SearchLimits& limits = {});

/// Calls fn(subset) for every `size`-subset of `from` in lexicographic order
/// until fn returns true. Returns whether it stopped early.
template <class Fn>
bool for_each_subset(const std::vector<Vertex>& from, std::size_t size, std::size_t universe,
                     Fn&& fn) {
  if (size > from.size()) return false;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    VertexSet subset(universe);
    for (std::size_t i : idx) subset.insert(from[i]);
    if (fn(subset)) return true;
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == from.size() - size + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace wideness
