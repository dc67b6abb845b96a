#include "wideness/flip.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "wideness/detail/bfs.hpp"
#include "wideness/error.hpp"

namespace wideness {

namespace {

std::vector<VertexSet> sides_of(std::span<const Flip> flips, std::size_t n) {
  std::vector<VertexSet> sides;
  sides.reserve(2 * flips.size());
  for (const auto& f : flips) {
    sides.push_back(f.a.resized(n));
    sides.push_back(f.b.resized(n));
  }
  return sides;
}

bool signature_bit(const std::vector<Word>& sig, std::size_t side) {
  return ((sig[side / kWordBits] >> (side % kWordBits)) & 1U) != 0;
}

}  // namespace

Graph apply_flip(const Graph& g, const Flip& flip) {
  Graph out = g;
  out.toggle_between(flip.a, flip.b);
  return out;
}

Graph apply_flips(const Graph& g, std::span<const Flip> flips) {
  Graph out = g;
  for (const auto& f : flips) out.toggle_between(f.a, f.b);
  return out;
}

AtomPartition atom_partition(std::span<const Flip> flips, std::size_t n) {
  const auto sides = sides_of(flips, n);
  const std::size_t sig_words = words_for(sides.size());
  std::map<std::vector<Word>, std::uint32_t> index_of;
  AtomPartition part;
  part.atom_of.resize(n);
  std::vector<Word> sig(sig_words);
  for (Vertex v = 0; v < n; ++v) {
    std::fill(sig.begin(), sig.end(), 0);
    for (std::size_t s = 0; s < sides.size(); ++s)
      if (sides[s].contains(v)) sig[s / kWordBits] |= Word{1} << (s % kWordBits);
    auto [it, inserted] = index_of.try_emplace(sig, static_cast<std::uint32_t>(part.atoms.size()));
    if (inserted) part.atoms.emplace_back(n);
    part.atoms[it->second].insert(v);
    part.atom_of[v] = it->second;
  }
  return part;
}

NormalizedFlipSet::NormalizedFlipSet(AtomPartition partition, std::vector<AtomPair> toggles,
                                     std::size_t source_flip_count)
    : partition_(std::move(partition)), toggles_(std::move(toggles)), source_k_(source_flip_count) {
  for (auto& [x, y] : toggles_)
    if (x > y) std::swap(x, y);
  std::sort(toggles_.begin(), toggles_.end());
  toggles_.erase(std::unique(toggles_.begin(), toggles_.end()), toggles_.end());
  const std::size_t n = order();
  masks_.assign(partition_.size(), VertexSet(n));
  for (const auto& [x, y] : toggles_) {
    masks_[x] |= partition_.atoms[y];
    masks_[y] |= partition_.atoms[x];
  }
}

bool NormalizedFlipSet::toggled(std::uint32_t atom_a, std::uint32_t atom_b) const noexcept {
  if (atom_a > atom_b) std::swap(atom_a, atom_b);
  return std::binary_search(toggles_.begin(), toggles_.end(), AtomPair{atom_a, atom_b});
}

FlipSet NormalizedFlipSet::as_flips() const {
  FlipSet out;
  out.reserve(toggles_.size());
  for (const auto& [x, y] : toggles_) out.push_back({partition_.atoms[x], partition_.atoms[y]});
  return out;
}

bool NormalizedFlipSet::has_reflexive_toggle() const noexcept {
  return std::any_of(toggles_.begin(), toggles_.end(),
                     [](const AtomPair& p) { return p.first == p.second; });
}

NormalizedFlipSet normalize(std::span<const Flip> flips, std::size_t n) {
  AtomPartition part = atom_partition(flips, n);
  const std::size_t side_count = 2 * flips.size();
  // Signature of each atom, read off its smallest member.
  std::vector<std::vector<Word>> sig(part.size(), std::vector<Word>(words_for(side_count), 0));
  for (std::uint32_t a = 0; a < part.size(); ++a) {
    const Vertex rep = part.atoms[a].first();
    for (std::size_t i = 0; i < flips.size(); ++i) {
      if (flips[i].a.contains(rep)) sig[a][(2 * i) / kWordBits] |= Word{1} << ((2 * i) % kWordBits);
      if (flips[i].b.contains(rep))
        sig[a][(2 * i + 1) / kWordBits] |= Word{1} << ((2 * i + 1) % kWordBits);
    }
  }
  std::vector<AtomPair> toggles;
  for (std::uint32_t x = 0; x < part.size(); ++x) {
    for (std::uint32_t y = x; y < part.size(); ++y) {
      bool odd = false;
      for (std::size_t i = 0; i < flips.size(); ++i) {
        const bool xa = signature_bit(sig[x], 2 * i), xb = signature_bit(sig[x], 2 * i + 1);
        const bool ya = signature_bit(sig[y], 2 * i), yb = signature_bit(sig[y], 2 * i + 1);
        if ((xa && yb) || (xb && ya)) odd = !odd;
      }
      if (odd) toggles.emplace_back(x, y);
    }
  }
  return NormalizedFlipSet(std::move(part), std::move(toggles), flips.size());
}

BigInt normalized_toggle_bound(std::size_t k) {
  const BigInt atoms = (BigInt(1) << (2 * k)) + 1;
  return atoms * (atoms - 1) / 2;
}

FlippedView::FlippedView(Graph base)
    : FlippedView(std::move(base), NormalizedFlipSet{}) {}

FlippedView::FlippedView(Graph base, NormalizedFlipSet flips)
    : base_(std::move(base)), flips_(std::move(flips)) {
  if (flips_.order() == 0 && base_.order() != 0) flips_ = normalize({}, base_.order());
  if (flips_.order() != base_.order())
    throw Error(Errc::out_of_range, "normalized flip set built for " +
                                        std::to_string(flips_.order()) + " vertices, graph has " +
                                        std::to_string(base_.order()));
}

VertexSet FlippedView::row(Vertex u) const {
  VertexSet out = base_.row(u) ^ flips_.toggle_mask(flips_.partition().atom_of[u]);
  out.erase(u);
  return out;
}

void FlippedView::or_row_into(Vertex u, std::span<Word> acc) const {
  const auto base_row = base_.row(u).words();
  const auto mask = flips_.toggle_mask(flips_.partition().atom_of[u]).words();
  const std::size_t self_word = u / kWordBits;
  const Word self_bit = Word{1} << (u % kWordBits);
  for (std::size_t i = 0; i < acc.size(); ++i) {
    Word w = base_row[i] ^ mask[i];
    if (i == self_word) w &= ~self_bit;
    acc[i] |= w;
  }
}

bool flipped_adjacency(const FlippedView& view, Vertex u, Vertex v) {
  if (u >= view.order() || v >= view.order())
    throw Error(Errc::out_of_range, "vertex outside graph of order " + std::to_string(view.order()));
  if (u == v) throw Error(Errc::loop_query, "adjacency of vertex " + std::to_string(u) + " with itself");
  const auto& atom_of = view.flips().partition().atom_of;
  return view.base().adjacent(u, v) != view.flips().toggled(atom_of[u], atom_of[v]);
}

DistanceVector flipped_bfs(const FlippedView& view, Vertex source) {
  return flipped_bfs_within(view, source, std::numeric_limits<Radius>::max());
}

DistanceVector flipped_bfs_within(const FlippedView& view, Vertex source, Radius max_depth) {
  if (source >= view.order())
    throw Error(Errc::out_of_range, "source " + std::to_string(source) + " outside graph of order " +
                                        std::to_string(view.order()));
  return detail::layered_bfs(view.order(), source, max_depth,
                             [&](Vertex u, std::span<Word> acc) { view.or_row_into(u, acc); });
}

Graph materialize(const FlippedView& view) {
  return apply_flips(view.base(), view.flips().as_flips());
}

bool is_r_independent(const FlippedView& view, const VertexSet& b, Radius r) {
  bool independent = true;
  b.for_each([&](Vertex u) {
    if (!independent) return;
    const auto dist = flipped_bfs_within(view, u, r);
    b.for_each([&](Vertex v) {
      if (v != u && !dist[v].exceeds(r)) independent = false;
    });
  });
  return independent;
}

Graph star_product(const Graph& g, std::span<const Flip> flips) {
  const std::size_t n = g.order();
  Graph out(2 * n);
  for (const auto& [u, v] : g.edges()) {
    out.add_edge(u, v);
    out.add_edge(static_cast<Vertex>(u + n), static_cast<Vertex>(v + n));
  }
  for (const auto& f : flips) {
    VertexSet first_copy(2 * n);
    VertexSet second_copy(2 * n);
    f.a.resized(n).for_each([&](Vertex v) { first_copy.insert(v); });
    f.b.resized(n).for_each([&](Vertex v) { second_copy.insert(static_cast<Vertex>(v + n)); });
    out.toggle_between(first_copy, second_copy);
  }
  return out;
}

FlipSet isolating_flips(const Graph& g, std::span<const Vertex> order) {
  VertexSet seen(g.order());
  for (Vertex v : order) {
    if (v >= g.order())
      throw Error(Errc::out_of_range, "vertex " + std::to_string(v) + " outside graph");
    if (seen.contains(v)) throw Error(Errc::duplicate_vertex, "vertex " + std::to_string(v) + " repeated");
    seen.insert(v);
  }
  Graph current = g;
  FlipSet out;
  for (Vertex v : order) {
    Flip f{VertexSet::of(g.order(), {v}), current.row(v)};
    current.toggle_between(f.a, f.b);
    out.push_back(std::move(f));
  }
  return out;
}

FlipSet restrict_flips(std::span<const Flip> flips, const Deletion& deletion) {
  FlipSet out;
  out.reserve(flips.size());
  for (const auto& f : flips) out.push_back({deletion.to_new(f.a), deletion.to_new(f.b)});
  return out;
}

}  // namespace wideness
