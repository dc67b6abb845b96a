#include "wideness/witness.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "wideness/error.hpp"
#include "wideness/ramsey.hpp"

namespace wideness {

namespace {

std::string describe(const VertexSet& set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](Vertex v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

// Number of colour classes of a first-fit colouring of `cand` in vertex order.
std::size_t colour_bound(const Graph& g, VertexSet cand) {
  std::size_t colours = 0;
  while (!cand.empty()) {
    ++colours;
    VertexSet open = cand;
    while (!open.empty()) {
      const Vertex v = open.first();
      cand.erase(v);
      open.erase(v);
      open -= g.row(v);
    }
  }
  return colours;
}

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::size_t stop_at) : g_(g), stop_at_(stop_at) {}

  std::vector<Vertex> run() {
    expand(VertexSet::full(g_.order()));
    return best_;
  }

 private:
  // Include-first over ascending vertices, so the first clique of any size
  // that is found is the lexicographically first of that size.
  bool expand(VertexSet cand) {
    for (Vertex v = cand.first(); v < g_.order(); v = cand.next(v)) {
      if (current_.size() + colour_bound(g_, cand) <= best_.size()) return false;
      current_.push_back(v);
      const VertexSet next = cand & g_.row(v);
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
        if (best_.size() >= stop_at_) return true;
      } else if (expand(next)) {
        return true;
      }
      current_.pop_back();
      cand.erase(v);
    }
    return false;
  }

  const Graph& g_;
  std::size_t stop_at_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

VertexSet sorted_set(std::size_t universe, const std::vector<Vertex>& members) {
  return VertexSet::of(universe, members);
}

// Constructive Erdos-Szekeres split: succeeds whenever the pool has at least
// ramsey_upper(far, close) vertices.
std::optional<CloseOrFar> ramsey_split(const Graph& local, std::uint64_t far_target,
                                       std::uint64_t close_target) {
  VertexSet pool = VertexSet::full(local.order());
  VertexSet far(local.order());
  VertexSet close(local.order());
  std::uint64_t far_left = far_target;
  std::uint64_t close_left = close_target;
  while (far_left > 0 && close_left > 0) {
    if (pool.empty()) return std::nullopt;
    const Vertex v = pool.first();
    pool.erase(v);
    if (close_left == 1) {
      close.insert(v);
      --close_left;
      break;
    }
    if (far_left == 1) {
      far.insert(v);
      --far_left;
      break;
    }
    VertexSet adjacent = pool & local.row(v);
    if (BigInt(adjacent.count()) >= ramsey_upper(far_left, close_left - 1)) {
      close.insert(v);
      --close_left;
      pool = std::move(adjacent);
    } else {
      far.insert(v);
      --far_left;
      pool -= local.row(v);
    }
  }
  if (far_left == 0) return CloseOrFar{Side::far, far, false};
  return CloseOrFar{Side::close, close, false};
}

}  // namespace

Verdict verify_flippable(const Graph& g, const FlippableInstance& inst) {
  if (!inst.witness) throw Error(Errc::missing_witness, "flippable instance without witness");
  const VertexSet b = inst.witness->resized(g.order());
  const VertexSet a = inst.a_set.resized(g.order());
  if (!b.is_subset_of(a)) return Verdict::invalid("witness " + describe(b - a) + " outside A");
  if (b.count() < inst.m)
    return Verdict::invalid("witness has " + std::to_string(b.count()) + " < m = " +
                            std::to_string(inst.m) + " vertices");
  const FlippedView view(g, normalize(inst.flips, g.order()));
  if (!is_r_independent(view, b, inst.r))
    return Verdict::invalid("witness not " + std::to_string(inst.r) +
                            "-independent in the flipped graph");
  return Verdict::ok();
}

Verdict verify_widenable(const Graph& g, const WidenableInstance& inst) {
  if (!inst.witness) throw Error(Errc::missing_witness, "widenable instance without witness");
  const VertexSet b = inst.witness->resized(g.order());
  const VertexSet a = inst.a_set.resized(g.order());
  const VertexSet s = inst.s_set.resized(g.order());
  if (!b.is_subset_of(a)) return Verdict::invalid("witness " + describe(b - a) + " outside A");
  if (b.intersects(s)) return Verdict::invalid("witness meets deletion set at " + describe(b & s));
  if (b.count() < inst.m)
    return Verdict::invalid("witness has " + std::to_string(b.count()) + " < m = " +
                            std::to_string(inst.m) + " vertices");
  const Deletion d = delete_vertices(g, s);
  if (!is_r_independent(d.graph, d.to_new(b), inst.r))
    return Verdict::invalid("witness not " + std::to_string(inst.r) +
                            "-independent after deleting S");
  return Verdict::ok();
}

VertexSet ClosenessGraph::to_global(const VertexSet& local_set) const {
  VertexSet out(universe);
  local_set.for_each([&](Vertex i) { out.insert(members.at(i)); });
  return out;
}

ClosenessGraph closeness_graph(const FlippedView& view, const VertexSet& pool, Radius r) {
  ClosenessGraph cg;
  cg.universe = view.order();
  cg.members = pool.resized(view.order()).to_vector();
  cg.local = Graph(cg.members.size());
  cg.r = r;
  for (Vertex i = 0; i < cg.members.size(); ++i) {
    const auto dist = flipped_bfs_within(view, cg.members[i], r);
    for (Vertex j = i + 1; j < cg.members.size(); ++j)
      if (!dist[cg.members[j]].exceeds(r)) cg.local.add_edge(i, j);
  }
  return cg;
}

ClosenessGraph closeness_graph(const Graph& g, const VertexSet& pool, Radius r) {
  return closeness_graph(FlippedView(g), pool, r);
}

VertexSet maximum_clique(const Graph& g) {
  return sorted_set(g.order(), CliqueSearch(g, std::numeric_limits<std::size_t>::max()).run());
}

VertexSet maximum_independent_set(const Graph& g) { return maximum_clique(complement(g)); }

std::optional<VertexSet> independent_set_of_size(const Graph& g, std::size_t size) {
  if (size == 0) return VertexSet(g.order());
  if (size > g.order()) return std::nullopt;
  auto found = CliqueSearch(complement(g), size).run();
  if (found.size() < size) return std::nullopt;
  found.resize(size);
  return sorted_set(g.order(), found);
}

VertexSet greedy_clique(const Graph& g) {
  VertexSet cand = VertexSet::full(g.order());
  VertexSet clique(g.order());
  while (!cand.empty()) {
    Vertex pick = cand.first();
    std::size_t best_degree = 0;
    bool have = false;
    cand.for_each([&](Vertex v) {
      const std::size_t degree = (g.row(v) & cand).count();
      if (!have || degree > best_degree) {
        pick = v;
        best_degree = degree;
        have = true;
      }
    });
    clique.insert(pick);
    cand &= g.row(pick);
  }
  return clique;
}

VertexSet greedy_independent_set(const Graph& g) {
  VertexSet cand = VertexSet::full(g.order());
  VertexSet chosen(g.order());
  while (!cand.empty()) {
    Vertex pick = cand.first();
    std::size_t best_degree = 0;
    bool have = false;
    cand.for_each([&](Vertex v) {
      const std::size_t degree = (g.row(v) & cand).count();
      if (!have || degree < best_degree) {
        pick = v;
        best_degree = degree;
        have = true;
      }
    });
    chosen.insert(pick);
    cand.erase(pick);
    cand -= g.row(pick);
  }
  return chosen;
}

CliqueSearchResult largest_close_set(const ClosenessGraph& cg, const SearchLimits& limits) {
  if (cg.members.size() <= limits.exact_pool)
    return {cg.to_global(maximum_clique(cg.local)), true};
  return {cg.to_global(greedy_clique(cg.local)), false};
}

CliqueSearchResult largest_far_set(const ClosenessGraph& cg, const SearchLimits& limits) {
  if (cg.members.size() <= limits.exact_pool)
    return {cg.to_global(maximum_independent_set(cg.local)), true};
  return {cg.to_global(greedy_independent_set(cg.local)), false};
}

CloseOrFar close_or_far(const ClosenessGraph& cg, std::size_t far_target,
                        const BigInt& close_target, const SearchLimits& limits) {
  const std::size_t pool = cg.members.size();
  const auto far = largest_far_set(cg, limits);
  if (far.set.count() >= far_target) return {Side::far, far.set, far.exhaustive};

  // ramsey_upper(m, q) >= q once m >= 2, so a huge close target is never forced.
  const bool ramsey_forced = far_target >= 1 && close_target >= 1 &&
                             (far_target == 1 || close_target <= pool) &&
                             BigInt(pool) >= ramsey_upper(far_target, close_target);
  if (far.exhaustive) {
    const auto close = largest_close_set(cg, limits);
    if (BigInt(close.set.count()) >= close_target) return {Side::close, close.set, true};
    if (ramsey_forced) throw std::logic_error("exact close/far search missed a Ramsey-forced side");
    return {Side::neither, VertexSet(cg.universe), true};
  }

  if (ramsey_forced) {
    auto split = ramsey_split(cg.local, far_target, static_cast<std::uint64_t>(close_target));
    if (!split) throw std::logic_error("constructive Ramsey split failed above its bound");
    split->set = cg.to_global(split->set);
    return *split;
  }
  const auto close = largest_close_set(cg, limits);
  if (BigInt(close.set.count()) >= close_target) return {Side::close, close.set, false};
  return {Side::neither, VertexSet(cg.universe), false};
}

std::optional<VertexSet> find_flat_subset(const Graph& g, std::span<const Flip> flips,
                                          const VertexSet& a_set, Radius r, std::size_t m,
                                          const SearchLimits& limits) {
  const FlippedView view(g, normalize(flips, g.order()));
  const auto cg = closeness_graph(view, a_set, r);
  auto found = largest_far_set(cg, limits);
  if (found.set.count() < m) return std::nullopt;
  FlippableInstance check{a_set, FlipSet(flips.begin(), flips.end()), r, m, found.set};
  if (!verify_flippable(g, check)) throw std::logic_error("find_flat_subset produced an invalid witness");
  return found.set;
}

std::optional<DeletionWitness> search_deletion_witness(const Graph& g, const VertexSet& a_set,
                                                       Radius r, std::size_t m,
                                                       std::size_t budget,
                                                       const SearchLimits& limits) {
  if (g.order() > limits.witness_max_order || budget > limits.witness_max_budget)
    throw Error(Errc::too_large, "exhaustive deletion search supports n <= " +
                                     std::to_string(limits.witness_max_order) + " and budget <= " +
                                     std::to_string(limits.witness_max_budget));
  const VertexSet a = a_set.resized(g.order());
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;

  std::optional<DeletionWitness> found;
  for (std::size_t size = 0; size <= budget && !found; ++size) {
    for_each_subset(all, size, g.order(), [&](const VertexSet& s) {
      const Deletion d = delete_vertices(g, s);
      const auto cg = closeness_graph(d.graph, d.to_new(a - s), r);
      const VertexSet best = cg.to_global(maximum_independent_set(cg.local));
      if (best.count() < m) return false;
      found = DeletionWitness{s, d.to_old(best)};
      return true;
    });
  }
  if (found) {
    WidenableInstance check{a, found->s_set, r, m, found->b_set};
    if (!verify_widenable(g, check))
      throw std::logic_error("search_deletion_witness produced an invalid witness");
  }
  return found;
}

}  // namespace wideness
