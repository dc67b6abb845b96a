#include "wideness/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "wideness/conversion.hpp"
#include "wideness/error.hpp"
#include "wideness/families.hpp"
#include "wideness/io.hpp"
#include "wideness/json_io.hpp"

namespace wideness {

namespace {

struct Options {
  std::string in;
  std::string format = "auto";
  std::string family;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out;
  std::string flips;
  std::string witness;
  std::string a_set;
  std::string b_set;
  std::string mode = "best-effort";
  std::uint64_t t0 = 8;
  Radius r = 2;
  std::size_t m = 2;
  std::size_t budget = 1;
  unsigned t = 2;
  std::size_t k = 1;
  std::size_t s = 2;
  std::size_t n_right = 8;
  CLI::Option* r_opt = nullptr;
  bool raw = false;
  std::string graph_format = "graph6";
};

struct Outcome {
  explicit Outcome(Json payload = nullptr, ReportStatus s = ReportStatus::success, bool exh = true)
      : result(std::move(payload)), status(s), exhaustive(exh) {}

  Json result;
  ReportStatus status;
  bool exhaustive;
  std::optional<std::string> raw;
};

struct LoadedGraph {
  Graph graph;
  std::string digest;
};

[[noreturn]] void usage(const std::string& why) { throw Error(Errc::invalid_argument, why); }

bool is_usage_error(Errc code) {
  switch (code) {
    case Errc::malformed:
    case Errc::out_of_range:
    case Errc::loop_rejected:
    case Errc::loop_query:
    case Errc::duplicate_vertex:
    case Errc::invalid_spec:
    case Errc::invalid_argument:
    case Errc::invalid_path:
    case Errc::missing_witness:
      return true;
    default:
      return false;
  }
}

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream file(path, std::ios::binary);
  if (!file) usage("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), {}};
}

std::optional<std::uint64_t> seed_of(const Options& o) {
  if (o.seed_given) return o.seed;
  return std::nullopt;
}

LoadedGraph load_graph(const Options& o) {
  if (!o.in.empty() && !o.family.empty()) usage("--in and --family are mutually exclusive");
  if (!o.family.empty()) {
    const FamilySpec spec = parse_family(o.family, seed_of(o));
    Graph g = generate(spec);
    return {g, "sha256:" + sha256_hex(write_graph6(g))};
  }
  if (o.in.empty()) usage("an input graph is required (--in or --family)");
  const std::string bytes = read_file(o.in);
  std::optional<GraphFormat> format;
  if (o.format == "graph6") format = GraphFormat::graph6;
  if (o.format == "edge-list") format = GraphFormat::edge_list;
  return {parse_graph(bytes, format), "sha256:" + sha256_hex(bytes)};
}

Json load_json_arg(const std::string& value) {
  std::string_view text = value;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  const std::string body =
      !text.empty() && (text.front() == '[' || text.front() == '{') ? std::string(text) : read_file(value);
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::malformed, std::string("invalid JSON: ") + e.what());
  }
}

FlipSet load_flips(const Options& o, std::size_t n) {
  return o.flips.empty() ? FlipSet{} : flips_from_json(load_json_arg(o.flips), n);
}

VertexSet load_pool(const std::string& value, std::size_t n) {
  return value.empty() ? VertexSet::full(n) : vertex_set_from_json(load_json_arg(value), n);
}

Json graph_summary(const Graph& g) {
  return Json{{"order", g.order()}, {"edge_count", g.edge_count()}, {"graph6", write_graph6(g)}};
}

std::string render_graph(const Graph& g, const Options& o) {
  return o.graph_format == "edge-list" ? write_edge_list(g) : write_graph6(g) + "\n";
}

Outcome cmd_generate(const Options& o, ReportDocument& doc) {
  if (o.family.empty()) usage("generate needs --family");
  const FamilySpec spec = parse_family(o.family, seed_of(o));
  doc.parameters = {{"family", to_string(spec)}};
  const Graph g = generate(spec);
  const std::string g6 = write_graph6(g);
  doc.input_digest = "sha256:" + sha256_hex(g6);
  Outcome out{graph_summary(g)};
  if (o.raw) out.raw = render_graph(g, o);
  return out;
}

Outcome cmd_flip(const Options& o, ReportDocument& doc) {
  const LoadedGraph in = load_graph(o);
  doc.input_digest = in.digest;
  const FlipSet flips = load_flips(o, in.graph.order());
  doc.parameters = {{"flips", flips_to_json(flips)}};
  const Graph flipped = apply_flips(in.graph, flips);
  Outcome out{graph_summary(flipped)};
  if (o.raw) out.raw = render_graph(flipped, o);
  return out;
}

Outcome cmd_normalize(const Options& o, ReportDocument& doc) {
  const LoadedGraph in = load_graph(o);
  doc.input_digest = in.digest;
  const FlipSet flips = load_flips(o, in.graph.order());
  doc.parameters = {{"flips", flips_to_json(flips)}};
  return Outcome(to_json(normalize(flips, in.graph.order())));
}

Outcome cmd_check_biclique(const Options& o, ReportDocument& doc) {
  const LoadedGraph in = load_graph(o);
  doc.input_digest = in.digest;
  doc.parameters = {{"t", o.t}};
  const auto found = contains_biclique(in.graph, o.t);
  return Outcome(Json{
      {"t", o.t}, {"found", found.has_value()}, {"biclique", found ? to_json(*found) : Json(nullptr)}});
}

Outcome cmd_find_flat(const Options& o, ReportDocument& doc) {
  const LoadedGraph in = load_graph(o);
  doc.input_digest = in.digest;
  const std::size_t n = in.graph.order();
  const FlipSet flips = load_flips(o, n);
  const VertexSet a_set = load_pool(o.a_set, n);
  doc.parameters = {{"flips", flips_to_json(flips)}, {"A", to_json(a_set)}, {"r", o.r}, {"m", o.m}};
  const auto found = find_flat_subset(in.graph, flips, a_set, o.r, o.m);
  Outcome out;
  out.exhaustive = a_set.count() <= kExactPoolLimit;
  out.result = {{"B", found ? to_json(*found) : Json(nullptr)}, {"size", found ? found->count() : 0}};
  if (!found) out.status = ReportStatus::failure;
  return out;
}

Outcome cmd_search_wide(const Options& o, ReportDocument& doc) {
  const LoadedGraph in = load_graph(o);
  doc.input_digest = in.digest;
  const VertexSet a_set = load_pool(o.a_set, in.graph.order());
  doc.parameters = {{"A", to_json(a_set)}, {"r", o.r}, {"m", o.m}, {"budget", o.budget}};
  const auto found = search_deletion_witness(in.graph, a_set, o.r, o.m, o.budget);
  Outcome out;
  out.result = {{"witness", found ? to_json(*found) : Json(nullptr)}};
  if (!found) out.status = ReportStatus::failure;
  return out;
}

Outcome cmd_convert(const Options& o, ReportDocument& doc) {
  const LoadedGraph in = load_graph(o);
  doc.input_digest = in.digest;
  const std::size_t n = in.graph.order();
  const FlipSet flips = load_flips(o, n);
  const VertexSet a_set = load_pool(o.a_set, n);
  doc.parameters = {{"flips", flips_to_json(flips)}, {"A", to_json(a_set)}, {"r", o.r},
                    {"m", o.m},  {"t0", o.t0},               {"mode", o.mode}};
  if (!o.b_set.empty()) doc.parameters["B"] = to_json(load_pool(o.b_set, n));

  std::optional<VertexSet> b;
  bool exhaustive = true;
  if (!o.b_set.empty()) {
    b = load_pool(o.b_set, n);
  } else {
    b = find_flat_subset(in.graph, flips, a_set, o.r, o.m);
    exhaustive = a_set.count() <= kExactPoolLimit;
  }
  if (!b) {
    Outcome out{Json{{"B_input", nullptr}, {"conversion", nullptr}}, ReportStatus::failure, exhaustive};
    out.result["reason"] = "no r-independent subset of A of size m in the flipped graph";
    return out;
  }

  ConversionOptions options;
  options.mode = o.mode == "guaranteed" ? ConversionMode::guaranteed : ConversionMode::best_effort;
  const ConversionResult result =
      flips_to_deletions(in.graph, flips, *b, o.r, EffectiveSparsity::from_t0(o.t0), o.m, options);
  for (const TraceStep& step : result.trace.steps) {
    if (const auto* c = std::get_if<trace::CloseExtraction>(&step)) exhaustive = exhaustive && c->exhaustive;
    if (const auto* f = std::get_if<trace::FarShortcut>(&step)) exhaustive = exhaustive && f->exhaustive;
  }
  return Outcome(Json{{"B_input", to_json(*b)}, {"conversion", to_json(result)}},
                 result.ok() ? ReportStatus::success : ReportStatus::failure, exhaustive);
}

Outcome cmd_experiment(const Options& o, ReportDocument& doc) {
  const Radius r = o.r_opt && o.r_opt->count() > 0 ? o.r : static_cast<Radius>(2 * (o.s + 1));
  doc.parameters = {{"s", o.s}, {"N", o.n_right}, {"r", r}, {"m", o.m}};
  const ExperimentReport report = counterexample_experiment(o.s, o.n_right, r, o.m);
  doc.input_digest =
      "sha256:" + sha256_hex(write_graph6(generate(subdivided({family::Biclique{o.s, o.n_right}}, o.s))));
  return Outcome(to_json(report));
}

Outcome cmd_ramsey(const Options& o, ReportDocument& doc) {
  const EffectiveSparsity sparsity = EffectiveSparsity::from_t0(o.t0);
  doc.parameters = {{"k", o.k}, {"m", o.m}, {"t0", o.t0}};
  const BigInt value = required_chain_size(o.k, sparsity, o.m);
  Outcome out{Json{{"t0_eff", sparsity.t0_eff}, {"bound", sparsity.bound}, {"value", value.str()}}};
  if (o.raw) out.raw = value.str() + "\n";
  return out;
}

Outcome cmd_verify(const Options& o, ReportDocument& doc) {
  const LoadedGraph in = load_graph(o);
  doc.input_digest = in.digest;
  const std::size_t n = in.graph.order();
  if (o.witness.empty()) usage("verify needs --witness");
  WitnessInstance inst = witness_from_json(load_json_arg(o.witness), n);
  if (auto* f = std::get_if<FlippableInstance>(&inst); f && !o.flips.empty()) f->flips = load_flips(o, n);
  const Json instance = std::visit([](const auto& i) { return to_json(i); }, inst);
  doc.parameters = {{"witness", instance}};
  const Verdict verdict = std::visit(
      [&](const auto& i) {
        if constexpr (std::is_same_v<std::decay_t<decltype(i)>, WidenableInstance>)
          return verify_widenable(in.graph, i);
        else
          return verify_flippable(in.graph, i);
      },
      inst);
  return Outcome(to_json(verdict), verdict ? ReportStatus::success : ReportStatus::failure);
}

Outcome dispatch(const std::string& name, const Options& o, ReportDocument& doc) {
  if (name == "generate") return cmd_generate(o, doc);
  if (name == "flip") return cmd_flip(o, doc);
  if (name == "normalize") return cmd_normalize(o, doc);
  if (name == "check-biclique") return cmd_check_biclique(o, doc);
  if (name == "find-flat") return cmd_find_flat(o, doc);
  if (name == "search-wide") return cmd_search_wide(o, doc);
  if (name == "convert") return cmd_convert(o, doc);
  if (name == "experiment") return cmd_experiment(o, doc);
  if (name == "ramsey") return cmd_ramsey(o, doc);
  return cmd_verify(o, doc);
}

void add_graph_input(CLI::App* sub, Options& o) {
  sub->add_option("--in", o.in, "Input graph file (graph6 or edge list; '-' for stdin)");
  sub->add_option("--family", o.family, "Generate the input graph from a family spec instead");
  sub->add_option("--format", o.format, "Input format")
      ->check(CLI::IsMember({"auto", "graph6", "edge-list"}))
      ->capture_default_str();
  sub->add_option("--seed", o.seed, "Seed for random families (required for them)")
      ->each([&o](const std::string&) { o.seed_given = true; });
}

void add_out(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "Write the report to this file instead of standard output");
}

void add_r_m(CLI::App* sub, Options& o) {
  sub->add_option("--r", o.r, "Radius")->capture_default_str();
  sub->add_option("--m", o.m, "Required size of the independent set")->capture_default_str();
}

void add_raw_graph(CLI::App* sub, Options& o) {
  sub->add_flag("--raw", o.raw, "Print the graph instead of a report");
  sub->add_option("--graph-format", o.graph_format, "Format for --raw")
      ->check(CLI::IsMember({"graph6", "edge-list"}))
      ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flip and deletion witnesses for r-independent sets", "wideness"};
  app.require_subcommand(1, 1);
  Options o;

  auto* generate_cmd = app.add_subcommand("generate", "Generate a graph from a family spec");
  generate_cmd->add_option("--family", o.family,
                           "complete(t) biclique(s,N) half_graph(n) path(n) cycle(n) star(N) "
                           "random(n,p) subdivided(spec,s)")
      ->required();
  generate_cmd->add_option("--seed", o.seed, "Seed for random families (required for them)")
      ->each([&o](const std::string&) { o.seed_given = true; });
  add_raw_graph(generate_cmd, o);
  add_out(generate_cmd, o);

  auto* flip_cmd = app.add_subcommand("flip", "Apply a flip set to a graph");
  add_graph_input(flip_cmd, o);
  flip_cmd->add_option("--flips", o.flips, "Flips as JSON [[A,B],...] or a file")->required();
  add_raw_graph(flip_cmd, o);
  add_out(flip_cmd, o);

  auto* normalize_cmd = app.add_subcommand("normalize", "Normalize a flip set into atom toggles");
  add_graph_input(normalize_cmd, o);
  normalize_cmd->add_option("--flips", o.flips, "Flips as JSON [[A,B],...] or a file")->required();
  add_out(normalize_cmd, o);

  auto* biclique_cmd = app.add_subcommand("check-biclique", "Search for a K_{t,t} subgraph");
  add_graph_input(biclique_cmd, o);
  biclique_cmd->add_option("--t", o.t, "Biclique side")->capture_default_str();
  add_out(biclique_cmd, o);

  auto* flat_cmd = app.add_subcommand("find-flat", "Largest r-independent subset of A after flips");
  add_graph_input(flat_cmd, o);
  flat_cmd->add_option("--flips", o.flips, "Flips as JSON or a file (default: none)");
  flat_cmd->add_option("--A", o.a_set, "Candidate pool as a JSON array (default: all vertices)");
  add_r_m(flat_cmd, o);
  add_out(flat_cmd, o);

  auto* wide_cmd = app.add_subcommand("search-wide", "Exhaustive deletion-witness search");
  add_graph_input(wide_cmd, o);
  wide_cmd->add_option("--A", o.a_set, "Candidate pool as a JSON array (default: all vertices)");
  wide_cmd->add_option("--budget", o.budget, "Maximum deletion set size")->capture_default_str();
  add_r_m(wide_cmd, o);
  add_out(wide_cmd, o);

  auto* convert_cmd = app.add_subcommand("convert", "Turn a flip witness into a deletion witness");
  add_graph_input(convert_cmd, o);
  convert_cmd->add_option("--flips", o.flips, "Flips as JSON or a file (default: none)");
  convert_cmd->add_option("--A", o.a_set, "Candidate pool as a JSON array (default: all vertices)");
  convert_cmd->add_option("--B", o.b_set,
                          "Flip witness as a JSON array (default: largest flat subset of A)");
  convert_cmd->add_option("--t0", o.t0, "Excluded biclique K_{t0,t0}; values below 8 act as 8")
      ->capture_default_str();
  convert_cmd->add_option("--mode", o.mode, "Conversion mode")
      ->check(CLI::IsMember({"guaranteed", "best-effort"}))
      ->capture_default_str();
  add_r_m(convert_cmd, o);
  add_out(convert_cmd, o);

  auto* experiment_cmd = app.add_subcommand("experiment", "Deletion budgets on subdivided bicliques");
  experiment_cmd->add_option("--s", o.s, "Left side and subdivision depth")->capture_default_str();
  experiment_cmd->add_option("--N", o.n_right, "Right side")->capture_default_str();
  o.r_opt = experiment_cmd->add_option("--r", o.r, "Radius (default: 2(s+1))");
  experiment_cmd->add_option("--m", o.m, "Required size of the independent set")->capture_default_str();
  add_out(experiment_cmd, o);

  auto* ramsey_cmd = app.add_subcommand("ramsey", "Required witness size for k normalized flips");
  ramsey_cmd->add_option("--k", o.k, "Normalized flip count")->capture_default_str();
  ramsey_cmd->add_option("--m", o.m, "Required size of the independent set")->capture_default_str();
  ramsey_cmd->add_option("--t0", o.t0, "Excluded biclique K_{t0,t0}; values below 8 act as 8")
      ->capture_default_str();
  ramsey_cmd->add_flag("--raw", o.raw, "Print only the number");
  add_out(ramsey_cmd, o);

  auto* verify_cmd = app.add_subcommand("verify", "Check a widenable or flippable witness");
  add_graph_input(verify_cmd, o);
  verify_cmd->add_option("--witness", o.witness, "Witness as JSON or a file")->required();
  verify_cmd->add_option("--flips", o.flips, "Override the flips of a flippable witness");
  add_out(verify_cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  ReportDocument doc;
  doc.command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  int exit_code = kExitSuccess;
  std::optional<std::string> raw;
  try {
    Outcome outcome = dispatch(doc.command, o, doc);
    doc.result = std::move(outcome.result);
    doc.status = outcome.status;
    doc.exhaustive = outcome.exhaustive;
    raw = std::move(outcome.raw);
    exit_code = outcome.status == ReportStatus::success ? kExitSuccess : kExitFailure;
  } catch (const Error& e) {
    const bool usage_error = is_usage_error(e.code());
    doc.result = nullptr;
    doc.status = usage_error ? ReportStatus::error : ReportStatus::failure;
    doc.error = ReportError{std::string(to_string(e.code())), e.what()};
    exit_code = usage_error ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    doc.result = nullptr;
    doc.status = ReportStatus::error;
    doc.error = ReportError{"internal", e.what()};
    exit_code = kExitFailure;
  }
  doc.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (doc.error) err << "error: " << doc.error->message << '\n';
  const std::string text = raw && exit_code == kExitSuccess ? *raw : to_json(doc).dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!(file << text)) {
      err << "error: cannot write '" << o.out << "'\n";
      return kExitUsage;
    }
  }
  return exit_code;
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace wideness
