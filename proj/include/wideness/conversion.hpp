#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wideness/bigint.hpp"
#include "wideness/flip.hpp"
#include "wideness/graph.hpp"
#include "wideness/ramsey.hpp"
#include "wideness/witness.hpp"

namespace wideness {

/// Biclique-exclusion parameter lifted to at least 8, the smallest value for
/// which t^2 + t - 2 >= 8t (and hence >= 4t + 2) holds.
struct EffectiveSparsity {
  std::uint64_t t0_input = 0;
  std::uint64_t t0_eff = 0;
  std::uint64_t bound = 0;  // t0_eff^2 + t0_eff - 2

  static EffectiveSparsity from_t0(std::uint64_t t0);
};

enum class DeletedSide { first, second };

struct LemmaOutcome {
  VertexSet s_set;
  VertexSet b_prime;
  DeletedSide deleted_side = DeletedSide::second;
  std::uint64_t bound = 0;
};

enum class LemmaCheck {
  strict,  // |S| <= bound and |B'| >= m are enforced (Errc::bound_violated)
  report,  // the outcome is returned as is
};

/// Which hypotheses of the one-flip extraction hold for an instance.
struct LemmaHypotheses {
  bool independent_after_flip = false;
  bool pairwise_close = false;
  bool large_enough = false;                 // |B| >= bound + m
  std::optional<Biclique> cross_biclique;    // K_{t0,t0} with sides in P1 and P2
  std::optional<Edge> far_pair;              // a pair of B at distance > r in gp

  bool all() const {
    return independent_after_flip && pairwise_close && large_enough && !cross_biclique;
  }
};

LemmaHypotheses check_lemma_hypotheses(const Graph& gp, const Flip& flip, const VertexSet& b,
                                       Radius r, const EffectiveSparsity& sparsity, std::size_t m);

/// Deletes the smaller flip side (the second on ties) and keeps B minus it.
/// Errc::precondition_failed when B is not r-independent in gp ⊕ flip.
LemmaOutcome single_flip_to_deletion(const Graph& gp, const Flip& flip, const VertexSet& b,
                                     Radius r, const EffectiveSparsity& sparsity, std::size_t m,
                                     LemmaCheck check = LemmaCheck::report);

struct ElementarySegments {
  std::vector<Vertex> head;  // from the first path vertex to the first flip-side vertex
  std::vector<Vertex> tail;  // from the last flip-side vertex to the last path vertex

  std::size_t head_length() const { return head.size() - 1; }
  std::size_t tail_length() const { return tail.size() - 1; }
};

/// nullopt when the path uses no edge between the flip sides.
/// Errc::invalid_path when `path` is not a simple path of gp.
std::optional<ElementarySegments> elementary_segments(const Graph& gp, const Flip& flip,
                                                      std::span<const Vertex> path);

/// Iterated Ramsey bound R^k(m, t0^2 + t0 + m - 2) with the effective t0.
/// With m = 0 the empty set is already far, so every k >= 1 needs nothing.
BigInt required_chain_size(std::size_t k, const EffectiveSparsity& sparsity, std::size_t m,
                           std::size_t bit_ceiling = kDefaultBitCeiling);

enum class ConversionMode { guaranteed, best_effort };

namespace trace {

struct CloseExtraction {
  std::size_t level = 0;
  std::size_t size = 0;
  bool reached_target = true;  // false when best-effort continued below the target
  bool exhaustive = true;
};

struct FarShortcut {
  std::size_t level = 0;
  std::size_t size = 0;
  bool exhaustive = true;
};

struct LemmaStep {
  std::size_t flip_index = 0;  // position in the normalized flip order
  DeletedSide deleted_side = DeletedSide::second;
  std::size_t deleted = 0;
  std::size_t deleted_so_far = 0;
};

struct Recursion {
  std::size_t remaining_flips = 0;
};

}  // namespace trace

using TraceStep =
    std::variant<trace::CloseExtraction, trace::FarShortcut, trace::LemmaStep, trace::Recursion>;

struct ConversionFailure {
  std::size_t level = 0;
  std::size_t remaining_flips = 0;
  std::string reason;
};

struct ConversionTrace {
  ConversionMode mode = ConversionMode::best_effort;
  std::size_t source_flip_count = 0;
  std::vector<AtomPair> flip_order;  // normalized toggles, processed in this order
  std::vector<TraceStep> steps;
  std::optional<ConversionFailure> failure;
};

struct ConversionResult {
  ConversionTrace trace;
  std::optional<DeletionWitness> witness;  // original labels

  bool ok() const noexcept { return witness.has_value(); }
};

struct ConversionOptions {
  ConversionMode mode = ConversionMode::best_effort;
  SearchLimits limits{};
  std::size_t bit_ceiling = kDefaultBitCeiling;
};

/**
 * Turns a flip witness (B r-independent in g ⊕ flips) into a deletion witness.
 *
 * The flip set is normalized first; every toggle becomes one flip between two
 * atoms. The recursion walks the flips, narrowing B to a set that stays
 * pairwise close until the last flip, extracts a deletion for that flip, and
 * recurses on the rest in g minus the deletion. A far set found early ends
 * the chain with fewer flips.
 *
 * Guaranteed mode requires |B| >= required_chain_size(k') up front
 * (Errc::size_requirement_unmet) and then enforces |S| <= k' * bound.
 * Best-effort mode runs the same recursion without size requirements and
 * reports a failure with the level that came up short. Every returned
 * witness has been re-verified.
 */
ConversionResult flips_to_deletions(const Graph& g, std::span<const Flip> flips, const VertexSet& b,
                                    Radius r, const EffectiveSparsity& sparsity, std::size_t m,
                                    const ConversionOptions& options = {});

}  // namespace wideness
