#include "wideness/conversion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "wideness/error.hpp"

namespace wideness {

namespace {

std::string set_text(const VertexSet& set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](Vertex v) {
    out += first ? "" : ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

std::optional<Edge> find_far_pair(const Graph& g, const VertexSet& b, Radius r) {
  std::optional<Edge> found;
  b.for_each([&](Vertex u) {
    if (found) return;
    const auto dist = bfs_distances_within(g, u, r);
    b.for_each([&](Vertex v) {
      if (!found && u < v && dist[v].exceeds(r)) found = Edge{u, v};
    });
  });
  return found;
}

// One level of the recursion: a graph with its labels back to the input graph
// and the flips that are still pending, in that graph's labels.
struct Frame {
  Graph graph;
  std::vector<Vertex> original;
  FlipSet flips;
  std::vector<std::size_t> flip_ids;
};

class Converter {
 public:
  Converter(std::size_t universe, Radius r, const EffectiveSparsity& sparsity, std::size_t m,
            const ConversionOptions& options, ConversionTrace& trace)
      : universe_(universe), r_(r), sparsity_(sparsity), m_(m), options_(options), trace_(trace) {}

  std::optional<DeletionWitness> run(const Frame& frame, const VertexSet& b) {
    const std::size_t k = frame.flips.size();
    if (k == 0) {
      if (b.count() < m_)
        return fail(0, 0, "B has " + std::to_string(b.count()) + " < m vertices");
      return DeletionWitness{VertexSet(universe_), to_original(frame, b)};
    }

    const bool guaranteed = options_.mode == ConversionMode::guaranteed;
    VertexSet candidates = b;
    Graph prefix = frame.graph;  // frame.graph ⊕ first `level` flips
    for (std::size_t level = 0; level < k; ++level) {
      const auto cg = closeness_graph(prefix, candidates, r_);
      const BigInt close_target = required_chain_size(k - 1 - level, sparsity_, m_, options_.bit_ceiling);
      const auto split = close_or_far(cg, m_, close_target, options_.limits);

      if (split.side == Side::far) {
        trace_.steps.push_back(trace::FarShortcut{level, split.set.count(), split.exhaustive});
        trace_.steps.push_back(trace::Recursion{level});
        Frame shorter{frame.graph, frame.original,
                      FlipSet(frame.flips.begin(), frame.flips.begin() + level),
                      std::vector<std::size_t>(frame.flip_ids.begin(), frame.flip_ids.begin() + level)};
        return run(shorter, split.set);
      }
      if (split.side == Side::close) {
        trace_.steps.push_back(trace::CloseExtraction{level, split.set.count(), true, split.exhaustive});
        candidates = split.set;
      } else if (guaranteed) {
        return fail(level, k, "no far set of size " + std::to_string(m_) +
                                  " and no close set of the required size among " +
                                  std::to_string(cg.members.size()) + " candidates");
      } else {
        const auto close = largest_close_set(cg, options_.limits);
        trace_.steps.push_back(trace::CloseExtraction{level, close.set.count(), false, close.exhaustive});
        if (close.set.count() < m_)
          return fail(level, k, "largest close set has " + std::to_string(close.set.count()) +
                                    " < m vertices");
        candidates = close.set;
      }
      if (level + 1 < k) prefix.toggle_between(frame.flips[level].a, frame.flips[level].b);
    }

    const LemmaOutcome lemma =
        single_flip_to_deletion(prefix, frame.flips[k - 1], candidates, r_, sparsity_, m_,
                                guaranteed ? LemmaCheck::strict : LemmaCheck::report);
    deleted_so_far_ += lemma.s_set.count();
    trace_.steps.push_back(trace::LemmaStep{frame.flip_ids[k - 1], lemma.deleted_side,
                                            lemma.s_set.count(), deleted_so_far_});
    if (lemma.b_prime.count() < m_)
      return fail(k - 1, k, "deleting the smaller flip side left " +
                                std::to_string(lemma.b_prime.count()) + " < m vertices");

    const Deletion d = delete_vertices(frame.graph, lemma.s_set);
    Frame rest;
    rest.graph = d.graph;
    rest.original.reserve(d.original.size());
    for (Vertex v : d.original) rest.original.push_back(frame.original[v]);
    rest.flips = restrict_flips(std::span<const Flip>(frame.flips).first(k - 1), d);
    rest.flip_ids.assign(frame.flip_ids.begin(), frame.flip_ids.end() - 1);
    trace_.steps.push_back(trace::Recursion{k - 1});

    auto inner = run(rest, d.to_new(lemma.b_prime));
    if (!inner) return std::nullopt;
    inner->s_set |= to_original(frame, lemma.s_set);
    return inner;
  }

 private:
  VertexSet to_original(const Frame& frame, const VertexSet& set) const {
    VertexSet out(universe_);
    set.for_each([&](Vertex v) { out.insert(frame.original[v]); });
    return out;
  }

  std::optional<DeletionWitness> fail(std::size_t level, std::size_t remaining, std::string reason) {
    trace_.failure = ConversionFailure{level, remaining, std::move(reason)};
    return std::nullopt;
  }

  std::size_t universe_;
  Radius r_;
  EffectiveSparsity sparsity_;
  std::size_t m_;
  const ConversionOptions& options_;
  ConversionTrace& trace_;
  std::size_t deleted_so_far_ = 0;
};

}  // namespace

EffectiveSparsity EffectiveSparsity::from_t0(std::uint64_t t0) {
  EffectiveSparsity s;
  s.t0_input = t0;
  s.t0_eff = std::max<std::uint64_t>(t0, 8);
  s.bound = s.t0_eff * s.t0_eff + s.t0_eff - 2;
  return s;
}

LemmaHypotheses check_lemma_hypotheses(const Graph& gp, const Flip& flip, const VertexSet& b,
                                       Radius r, const EffectiveSparsity& sparsity, std::size_t m) {
  LemmaHypotheses h;
  const VertexSet members = b.resized(gp.order());
  h.independent_after_flip =
      is_r_independent(FlippedView(gp, normalize(std::span<const Flip>(&flip, 1), gp.order())), members, r);
  h.far_pair = find_far_pair(gp, members, r);
  h.pairwise_close = !h.far_pair;
  h.large_enough = members.count() >= sparsity.bound + m;
  h.cross_biclique = find_biclique_between(gp, flip.a, flip.b, static_cast<unsigned>(sparsity.t0_eff));
  return h;
}

LemmaOutcome single_flip_to_deletion(const Graph& gp, const Flip& flip, const VertexSet& b,
                                     Radius r, const EffectiveSparsity& sparsity, std::size_t m,
                                     LemmaCheck check) {
  const VertexSet members = b.resized(gp.order());
  const VertexSet first = flip.a.resized(gp.order());
  const VertexSet second = flip.b.resized(gp.order());
  const FlippedView after(gp, normalize(std::span<const Flip>(&flip, 1), gp.order()));
  if (!is_r_independent(after, members, r))
    throw Error(Errc::precondition_failed,
                "B is not " + std::to_string(r) + "-independent after the flip");

  LemmaOutcome out;
  out.bound = sparsity.bound;
  out.deleted_side = first.count() < second.count() ? DeletedSide::first : DeletedSide::second;
  out.s_set = out.deleted_side == DeletedSide::first ? first : second;
  out.b_prime = members - out.s_set;

  // A short path avoiding one whole side crosses no flipped pair, so it would
  // have survived the flip.
  const Deletion d = delete_vertices(gp, out.s_set);
  if (!is_r_independent(d.graph, d.to_new(out.b_prime), r))
    throw std::logic_error("side deletion did not preserve r-independence");

  if (check == LemmaCheck::strict) {
    if (out.s_set.count() > sparsity.bound) {
      std::string why = "both flip sides exceed " + std::to_string(sparsity.bound) + " vertices";
      if (const auto pair = find_far_pair(gp, members, r)) {
        why += "; B is not pairwise close: " + std::to_string(pair->first) + " and " +
               std::to_string(pair->second) + " are at distance > " + std::to_string(r);
      } else if (const auto k = find_biclique_between(gp, first, second,
                                                      static_cast<unsigned>(sparsity.t0_eff))) {
        why += "; K_{t,t} across the flip: " + set_text(k->left) + " x " + set_text(k->right);
      } else if (members.count() < sparsity.bound + m) {
        why += "; |B| = " + std::to_string(members.count()) + " is below bound + m";
      }
      throw Error(Errc::bound_violated, why);
    }
    if (out.b_prime.count() < m)
      throw Error(Errc::bound_violated, "only " + std::to_string(out.b_prime.count()) +
                                            " vertices of B survive the deletion, m = " +
                                            std::to_string(m));
  }
  return out;
}

std::optional<ElementarySegments> elementary_segments(const Graph& gp, const Flip& flip,
                                                      std::span<const Vertex> path) {
  if (path.empty()) throw Error(Errc::invalid_path, "empty path");
  VertexSet seen(gp.order());
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= gp.order()) throw Error(Errc::invalid_path, "path leaves the graph");
    if (seen.contains(path[i])) throw Error(Errc::invalid_path, "path repeats a vertex");
    seen.insert(path[i]);
    if (i > 0 && !gp.adjacent(path[i - 1], path[i]))
      throw Error(Errc::invalid_path, "consecutive path vertices are not adjacent");
  }
  const auto& p1 = flip.a;
  const auto& p2 = flip.b;
  bool broken = false;
  for (std::size_t i = 0; i + 1 < path.size() && !broken; ++i) {
    const Vertex x = path[i], y = path[i + 1];
    broken = (p1.contains(x) && p2.contains(y)) || (p2.contains(x) && p1.contains(y));
  }
  if (!broken) return std::nullopt;

  auto in_sides = [&](Vertex v) { return p1.contains(v) || p2.contains(v); };
  const auto first = std::find_if(path.begin(), path.end(), in_sides);
  const auto last = std::find_if(path.rbegin(), path.rend(), in_sides);
  ElementarySegments seg;
  seg.head.assign(path.begin(), first + 1);
  seg.tail.assign(last.base() - 1, path.end());
  return seg;
}

BigInt required_chain_size(std::size_t k, const EffectiveSparsity& sparsity, std::size_t m,
                           std::size_t bit_ceiling) {
  const BigInt base = BigInt(sparsity.t0_eff) * sparsity.t0_eff + sparsity.t0_eff + m - 2;
  if (k == 0) return base;
  if (m == 0) return 0;
  return iterated_ramsey_upper(k, m, base, bit_ceiling);
}

ConversionResult flips_to_deletions(const Graph& g, std::span<const Flip> flips, const VertexSet& b,
                                    Radius r, const EffectiveSparsity& sparsity, std::size_t m,
                                    const ConversionOptions& options) {
  const VertexSet members = b.resized(g.order());
  const NormalizedFlipSet normalized = normalize(flips, g.order());
  if (!is_r_independent(FlippedView(g, normalized), members, r))
    throw Error(Errc::precondition_failed,
                "B is not " + std::to_string(r) + "-independent in the flipped graph");

  ConversionResult result;
  result.trace.mode = options.mode;
  result.trace.source_flip_count = flips.size();
  result.trace.flip_order = normalized.toggles();
  const std::size_t k = normalized.toggles().size();

  if (options.mode == ConversionMode::guaranteed) {
    const BigInt needed = required_chain_size(k, sparsity, m, options.bit_ceiling);
    if (BigInt(members.count()) < needed)
      throw Error(Errc::size_requirement_unmet,
                  "|B| = " + std::to_string(members.count()) + " is below the required " +
                      needed.str() + " for " + std::to_string(k) + " normalized flips");
  }

  Frame top{g, {}, normalized.as_flips(), {}};
  top.original.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) top.original[v] = v;
  top.flip_ids.resize(k);
  for (std::size_t i = 0; i < k; ++i) top.flip_ids[i] = i;

  Converter converter(g.order(), r, sparsity, m, options, result.trace);
  auto witness = converter.run(top, members);
  if (!witness) return result;

  WidenableInstance check{members, witness->s_set, r, m, witness->b_set};
  if (const Verdict v = verify_widenable(g, check); !v)
    throw std::logic_error("conversion produced an invalid witness: " + v.reason);
  if (options.mode == ConversionMode::guaranteed &&
      witness->s_set.count() > k * sparsity.bound)
    throw Error(Errc::bound_violated, "deletion set exceeds k' * bound");
  result.witness = std::move(witness);
  return result;
}

}  // namespace wideness
