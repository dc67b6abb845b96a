#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wideness/bigint.hpp"
#include "wideness/graph.hpp"

namespace wideness {

/// Complements adjacency between `a` and `b`; the sides may overlap or coincide.
struct Flip {
  VertexSet a;
  VertexSet b;

  friend bool operator==(const Flip&, const Flip&) = default;
};

using FlipSet = std::vector<Flip>;

Graph apply_flip(const Graph& g, const Flip& flip);
/// Left fold of apply_flip.
Graph apply_flips(const Graph& g, std::span<const Flip> flips);

/// Membership-signature classes of the flip sides. Atoms are ordered by their
/// smallest member; the vertices outside every side form one atom as well.
struct AtomPartition {
  std::vector<VertexSet> atoms;
  std::vector<std::uint32_t> atom_of;

  std::size_t size() const noexcept { return atoms.size(); }
};

AtomPartition atom_partition(std::span<const Flip> flips, std::size_t n);

/// Unordered atom pair with first <= second; first == second complements the
/// inside of one atom.
using AtomPair = std::pair<std::uint32_t, std::uint32_t>;

/**
 * Atom partition plus the set of atom pairs whose adjacency is complemented.
 * Every vertex pair is covered by at most one toggle.
 */
class NormalizedFlipSet {
 public:
  NormalizedFlipSet() = default;
  NormalizedFlipSet(AtomPartition partition, std::vector<AtomPair> toggles,
                    std::size_t source_flip_count);

  const AtomPartition& partition() const noexcept { return partition_; }
  /// Sorted ascending.
  const std::vector<AtomPair>& toggles() const noexcept { return toggles_; }
  std::size_t source_flip_count() const noexcept { return source_k_; }
  std::size_t order() const noexcept { return partition_.atom_of.size(); }

  bool toggled(std::uint32_t atom_a, std::uint32_t atom_b) const noexcept;
  /// Union of all atoms toggled against `atom`, possibly including itself.
  const VertexSet& toggle_mask(std::uint32_t atom) const noexcept { return masks_[atom]; }

  /// One flip (atom_a, atom_b) per toggle, in toggle order.
  FlipSet as_flips() const;
  bool has_reflexive_toggle() const noexcept;

 private:
  AtomPartition partition_;
  std::vector<AtomPair> toggles_;
  std::vector<VertexSet> masks_;
  std::size_t source_k_ = 0;
};

/// Parity-reduces `flips` over their atom partition. Materializing the result
/// equals apply_flips for every graph on n vertices.
NormalizedFlipSet normalize(std::span<const Flip> flips, std::size_t n);

/// C(2^{2k}+1, 2): ceiling on the toggle count of a normalized k-flip.
BigInt normalized_toggle_bound(std::size_t k);

/// Read-only view of base ⊕ flips that never builds the flipped graph.
class FlippedView {
 public:
  explicit FlippedView(Graph base);
  FlippedView(Graph base, NormalizedFlipSet flips);

  const Graph& base() const noexcept { return base_; }
  const NormalizedFlipSet& flips() const noexcept { return flips_; }
  std::size_t order() const noexcept { return base_.order(); }

  /// Unchecked neighbourhood in the flipped graph.
  VertexSet row(Vertex u) const;
  /// OR the flipped row of u into acc (word-parallel).
  void or_row_into(Vertex u, std::span<Word> acc) const;

 private:
  Graph base_;
  NormalizedFlipSet flips_;
};

/// Throws Errc::loop_query for u == v, Errc::out_of_range.
bool flipped_adjacency(const FlippedView& view, Vertex u, Vertex v);
DistanceVector flipped_bfs(const FlippedView& view, Vertex source);
DistanceVector flipped_bfs_within(const FlippedView& view, Vertex source, Radius max_depth);
Graph materialize(const FlippedView& view);
bool is_r_independent(const FlippedView& view, const VertexSet& b, Radius r);

/// Two disjoint copies of g (vertices v and v+n), then each (A,B) flipped
/// between A in the first copy and B in the second.
Graph star_product(const Graph& g, std::span<const Flip> flips);

/// Flips ({v_i}, N_i) where N_i is the neighbourhood of v_i after the first
/// i-1 flips. Afterwards every listed vertex is isolated and the rest of the
/// graph is untouched. Throws Errc::duplicate_vertex, Errc::out_of_range.
FlipSet isolating_flips(const Graph& g, std::span<const Vertex> order);

/// Restrict every flip side to the survivors of a deletion, in new labels.
FlipSet restrict_flips(std::span<const Flip> flips, const Deletion& deletion);

}  // namespace wideness
