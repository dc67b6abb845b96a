#include "wideness/families.hpp"

#include <cctype>
#include <charconv>
#include <random>
#include <sstream>

#include "wideness/detail/bfs.hpp"
#include "wideness/error.hpp"

namespace wideness {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void invalid(const std::string& why) { throw Error(Errc::invalid_spec, why); }

void require_positive(std::size_t value, const char* what) {
  if (value == 0) invalid(std::string(what) + " must be positive");
}

Graph subdivide(const Graph& base, std::size_t depth) {
  const auto base_edges = base.edges();
  Graph out(base.order() + base_edges.size() * depth);
  auto next = static_cast<Vertex>(base.order());
  for (const auto& [u, v] : base_edges) {
    Vertex prev = u;
    for (std::size_t i = 0; i < depth; ++i, ++next) {
      out.add_edge(prev, next);
      prev = next;
    }
    out.add_edge(prev, v);
  }
  return out;
}

Graph random_graph(const family::Random& spec) {
  Graph g(spec.n);
  std::mt19937_64 rng(spec.seed);
  for (Vertex u = 0; u < spec.n; ++u)
    for (Vertex v = u + 1; v < spec.n; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < spec.p) g.add_edge(u, v);
    }
  return g;
}

class SpecParser {
 public:
  SpecParser(std::string_view text, std::optional<std::uint64_t> seed) : text_(text), seed_(seed) {}

  FamilySpec parse() {
    FamilySpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) invalid("trailing text in family spec");
    return spec;
  }

 private:
  FamilySpec parse_spec() {
    const std::string name = identifier();
    expect('(');
    FamilySpec spec;
    if (name == "subdivided") {
      FamilySpec base = parse_spec();
      expect(',');
      spec = subdivided(std::move(base), integer());
    } else {
      std::vector<std::string> args;
      do {
        args.push_back(token());
      } while (consume(','));
      auto arity = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi) invalid("wrong argument count for " + name);
      };
      if (name == "complete") {
        arity(1, 1);
        spec.kind = family::Complete{to_size(args[0])};
      } else if (name == "biclique") {
        arity(2, 2);
        spec.kind = family::Biclique{to_size(args[0]), to_size(args[1])};
      } else if (name == "half_graph") {
        arity(1, 1);
        spec.kind = family::HalfGraph{to_size(args[0])};
      } else if (name == "path") {
        arity(1, 1);
        spec.kind = family::Path{to_size(args[0])};
      } else if (name == "cycle") {
        arity(1, 1);
        spec.kind = family::Cycle{to_size(args[0])};
      } else if (name == "star") {
        arity(1, 1);
        spec.kind = family::Star{to_size(args[0])};
      } else if (name == "random") {
        arity(2, 3);
        std::optional<std::uint64_t> seed = seed_;
        if (args.size() == 3) seed = to_size(args[2]);
        if (!seed) invalid("random family needs a seed");
        spec.kind = family::Random{to_size(args[0]), to_double(args[1]), *seed};
      } else {
        invalid("unknown family '" + name + "'");
      }
    }
    expect(')');
    return spec;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) invalid(std::string("expected '") + c + "' in family spec");
  }
  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) invalid("expected a family name");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string token() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) invalid("empty argument in family spec");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t integer() { return to_size(token()); }

  static std::size_t to_size(const std::string& s) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || end != s.data() + s.size()) invalid("bad integer '" + s + "'");
    return value;
  }
  static double to_double(const std::string& s) {
    std::istringstream in(s);
    in.imbue(std::locale::classic());
    double value = 0;
    if (!(in >> value) || !in.eof()) invalid("bad probability '" + s + "'");
    return value;
  }

  std::string_view text_;
  std::optional<std::uint64_t> seed_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph generate(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Complete& f) {
            require_positive(f.t, "complete graph order");
            Graph g(f.t);
            for (Vertex u = 0; u < f.t; ++u)
              for (Vertex v = u + 1; v < f.t; ++v) g.add_edge(u, v);
            return g;
          },
          [](const family::Biclique& f) {
            require_positive(f.s, "biclique left side");
            require_positive(f.n, "biclique right side");
            Graph g(f.s + f.n);
            for (Vertex u = 0; u < f.s; ++u)
              for (std::size_t j = 0; j < f.n; ++j) g.add_edge(u, static_cast<Vertex>(f.s + j));
            return g;
          },
          [](const family::HalfGraph& f) {
            require_positive(f.n, "half-graph order");
            Graph g(2 * f.n);
            for (Vertex i = 0; i < f.n; ++i)
              for (Vertex j = i; j < f.n; ++j) g.add_edge(i, static_cast<Vertex>(f.n + j));
            return g;
          },
          [](const family::Path& f) {
            require_positive(f.n, "path order");
            Graph g(f.n);
            for (Vertex v = 0; v + 1 < f.n; ++v) g.add_edge(v, v + 1);
            return g;
          },
          [](const family::Cycle& f) {
            if (f.n < 3) invalid("cycle needs at least 3 vertices");
            Graph g(f.n);
            for (Vertex v = 0; v < f.n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % f.n));
            return g;
          },
          [](const family::Star& f) {
            require_positive(f.leaves, "star leaf count");
            Graph g(f.leaves + 1);
            for (Vertex v = 1; v <= f.leaves; ++v) g.add_edge(0, v);
            return g;
          },
          [](const family::Random& f) {
            if (!(f.p >= 0.0 && f.p <= 1.0)) invalid("edge probability outside [0,1]");
            return random_graph(f);
          },
          [](const family::Subdivided& f) {
            if (!f.base) invalid("subdivision without a base family");
            return subdivide(generate(*f.base), f.depth);
          },
      },
      spec.kind);
}

FamilySpec parse_family(std::string_view text, std::optional<std::uint64_t> seed) {
  return SpecParser(text, seed).parse();
}

std::string to_string(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Complete& f) { return "complete(" + std::to_string(f.t) + ")"; },
          [](const family::Biclique& f) {
            return "biclique(" + std::to_string(f.s) + "," + std::to_string(f.n) + ")";
          },
          [](const family::HalfGraph& f) { return "half_graph(" + std::to_string(f.n) + ")"; },
          [](const family::Path& f) { return "path(" + std::to_string(f.n) + ")"; },
          [](const family::Cycle& f) { return "cycle(" + std::to_string(f.n) + ")"; },
          [](const family::Star& f) { return "star(" + std::to_string(f.leaves) + ")"; },
          [](const family::Random& f) {
            std::ostringstream out;
            out.imbue(std::locale::classic());
            out << "random(" << f.n << "," << f.p << "," << f.seed << ")";
            return out.str();
          },
          [](const family::Subdivided& f) {
            return "subdivided(" + (f.base ? to_string(*f.base) : std::string("?")) + "," +
                   std::to_string(f.depth) + ")";
          },
      },
      spec.kind);
}

bool is_randomized(const FamilySpec& spec) {
  if (std::holds_alternative<family::Random>(spec.kind)) return true;
  if (const auto* sub = std::get_if<family::Subdivided>(&spec.kind))
    return sub->base && is_randomized(*sub->base);
  return false;
}

ExperimentReport counterexample_experiment(std::size_t s, std::size_t n, Radius r, std::size_t m,
                                           const SearchLimits& limits) {
  if (s == 0 || n == 0) throw Error(Errc::invalid_argument, "experiment needs s, N >= 1");
  const Graph g = generate(subdivided({family::Biclique{s, n}}, s));
  if (s > kExperimentMaxSide || g.order() > kExperimentMaxOrder)
    throw Error(Errc::too_large, "experiment supports s <= 3 and at most 200 vertices");

  ExperimentReport report{s, n, r, m, g.order(), {}, std::nullopt};
  VertexSet right(g.order());
  for (std::size_t j = 0; j < n; ++j) right.insert(static_cast<Vertex>(s + j));
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;

  for (std::size_t budget = 0; budget <= s; ++budget) {
    BudgetResult result{budget, false, true, std::nullopt};
    for_each_subset(all, budget, g.order(), [&](const VertexSet& removed) {
      const VertexSet pool = right - removed;
      const std::vector<Vertex> members = pool.to_vector();
      Graph close(members.size());
      for (Vertex i = 0; i < members.size(); ++i) {
        const auto dist = detail::layered_bfs(g.order(), members[i], r, [&](Vertex u, std::span<Word> acc) {
          const auto row = g.row(u).words();
          const auto cut = removed.words();
          for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= row[w] & ~cut[w];
        });
        for (Vertex j = i + 1; j < members.size(); ++j)
          if (!dist[members[j]].exceeds(r)) close.add_edge(i, j);
      }
      const auto found = independent_set_of_size(close, m);
      if (!found) return false;
      const VertexSet local =
          members.size() <= limits.exact_pool ? maximum_independent_set(close) : *found;
      VertexSet b(g.order());
      local.for_each([&](Vertex i) { b.insert(members[i]); });
      result.success = true;
      result.witness = DeletionWitness{removed, b};
      return true;
    });
    if (result.success && !report.min_budget) report.min_budget = budget;
    report.budgets.push_back(std::move(result));
  }
  return report;
}

}  // namespace wideness
