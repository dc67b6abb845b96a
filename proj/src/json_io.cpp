#include "wideness/json_io.hpp"

#include "wideness/error.hpp"

namespace wideness {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void malformed(const std::string& why) { throw Error(Errc::malformed, why); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t unsigned_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) malformed(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

const char* side_name(DeletedSide side) { return side == DeletedSide::first ? "first" : "second"; }

const char* status_name(ReportStatus s) {
  switch (s) {
    case ReportStatus::success: return "success";
    case ReportStatus::failure: return "failure";
    case ReportStatus::error: return "error";
  }
  return "error";
}

Json pair_list(const std::vector<AtomPair>& pairs) {
  Json out = Json::array();
  for (const auto& [x, y] : pairs) out.push_back({x, y});
  return out;
}

}  // namespace

Json to_json(const VertexSet& set) {
  Json out = Json::array();
  set.for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet vertex_set_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) malformed("vertex set must be an array");
  VertexSet out(n);
  for (const Json& v : j) {
    if (!v.is_number_integer()) malformed("vertex ids must be integers");
    if (!v.is_number_unsigned()) throw Error(Errc::out_of_range, "vertex " + v.dump() + " out of range");
    const auto id = v.get<std::uint64_t>();
    if (id >= n) throw Error(Errc::out_of_range, "vertex " + std::to_string(id) + " out of range");
    out.insert(static_cast<Vertex>(id));
  }
  return out;
}

Json flips_to_json(std::span<const Flip> flips) {
  Json out = Json::array();
  for (const Flip& f : flips) out.push_back({to_json(f.a), to_json(f.b)});
  return out;
}

FlipSet flips_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) malformed("flips must be an array of [A, B] pairs");
  FlipSet out;
  for (const Json& f : j) {
    if (!f.is_array() || f.size() != 2) malformed("each flip must be a two-element array [A, B]");
    out.push_back({vertex_set_from_json(f[0], n), vertex_set_from_json(f[1], n)});
  }
  return out;
}

Json to_json(const NormalizedFlipSet& nf) {
  Json atoms = Json::array();
  for (const VertexSet& atom : nf.partition().atoms) atoms.push_back(to_json(atom));
  return Json{{"order", nf.order()},
              {"source_flip_count", nf.source_flip_count()},
              {"atoms", std::move(atoms)},
              {"toggles", pair_list(nf.toggles())},
              {"toggle_count", nf.toggles().size()},
              {"toggle_bound", normalized_toggle_bound(nf.source_flip_count()).str()},
              {"has_reflexive_toggle", nf.has_reflexive_toggle()}};
}

WitnessInstance witness_from_json(const Json& j, std::size_t n) {
  if (!j.is_object()) malformed("witness must be a JSON object");
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) malformed("field 'kind' must be a string");
  const VertexSet a_set = j.contains("A") ? vertex_set_from_json(j.at("A"), n) : VertexSet::full(n);
  const auto r = unsigned_field(j, "r");
  if (r > std::numeric_limits<Radius>::max()) throw Error(Errc::out_of_range, "radius too large");
  const auto m = unsigned_field(j, "m");
  std::optional<VertexSet> b;
  if (j.contains("B")) b = vertex_set_from_json(j.at("B"), n);

  if (kind == "widenable") {
    const VertexSet s = j.contains("S") ? vertex_set_from_json(j.at("S"), n) : VertexSet(n);
    return WidenableInstance{a_set, s, static_cast<Radius>(r), m, b};
  }
  if (kind == "flippable") {
    FlipSet flips = j.contains("flips") ? flips_from_json(j.at("flips"), n) : FlipSet{};
    return FlippableInstance{a_set, std::move(flips), static_cast<Radius>(r), m, b};
  }
  malformed("witness kind must be 'widenable' or 'flippable'");
}

Json to_json(const WidenableInstance& inst) {
  Json out{{"kind", "widenable"}, {"A", to_json(inst.a_set)}, {"S", to_json(inst.s_set)}};
  if (inst.witness) out["B"] = to_json(*inst.witness);
  out["r"] = inst.r;
  out["m"] = inst.m;
  return out;
}

Json to_json(const FlippableInstance& inst) {
  Json out{{"kind", "flippable"}, {"A", to_json(inst.a_set)}, {"flips", flips_to_json(inst.flips)}};
  if (inst.witness) out["B"] = to_json(*inst.witness);
  out["r"] = inst.r;
  out["m"] = inst.m;
  return out;
}

Json to_json(const Biclique& b) { return Json{{"left", to_json(b.left)}, {"right", to_json(b.right)}}; }

Json to_json(const DeletionWitness& w) {
  return Json{{"S", to_json(w.s_set)},
              {"B", to_json(w.b_set)},
              {"S_size", w.s_set.count()},
              {"B_size", w.b_set.count()}};
}

Json to_json(const LemmaOutcome& outcome) {
  return Json{{"S", to_json(outcome.s_set)},
              {"B_prime", to_json(outcome.b_prime)},
              {"deleted_side", side_name(outcome.deleted_side)},
              {"bound", outcome.bound}};
}

Json to_json(const ConversionTrace& trace) {
  Json steps = Json::array();
  for (const TraceStep& step : trace.steps) {
    steps.push_back(std::visit(
        overloaded{
            [](const trace::CloseExtraction& s) {
              return Json{{"step", "close_extraction"},
                          {"level", s.level},
                          {"size", s.size},
                          {"reached_target", s.reached_target},
                          {"exhaustive", s.exhaustive}};
            },
            [](const trace::FarShortcut& s) {
              return Json{{"step", "far_shortcut"},
                          {"level", s.level},
                          {"size", s.size},
                          {"exhaustive", s.exhaustive}};
            },
            [](const trace::LemmaStep& s) {
              return Json{{"step", "lemma"},
                          {"flip_index", s.flip_index},
                          {"deleted_side", side_name(s.deleted_side)},
                          {"deleted", s.deleted},
                          {"deleted_so_far", s.deleted_so_far}};
            },
            [](const trace::Recursion& s) {
              return Json{{"step", "recursion"}, {"remaining_flips", s.remaining_flips}};
            },
        },
        step));
  }
  Json out{{"mode", trace.mode == ConversionMode::guaranteed ? "guaranteed" : "best-effort"},
           {"source_flip_count", trace.source_flip_count},
           {"flip_order", pair_list(trace.flip_order)},
           {"steps", std::move(steps)}};
  out["failure"] = trace.failure ? Json{{"level", trace.failure->level},
                                        {"remaining_flips", trace.failure->remaining_flips},
                                        {"reason", trace.failure->reason}}
                                 : Json(nullptr);
  return out;
}

Json to_json(const ConversionResult& result) {
  return Json{{"trace", to_json(result.trace)},
              {"witness", result.witness ? to_json(*result.witness) : Json(nullptr)}};
}

Json to_json(const ExperimentReport& report) {
  Json budgets = Json::array();
  for (const BudgetResult& b : report.budgets) {
    budgets.push_back(Json{{"budget", b.budget},
                           {"success", b.success},
                           {"exhaustive", b.exhaustive},
                           {"witness", b.witness ? to_json(*b.witness) : Json(nullptr)}});
  }
  return Json{{"s", report.s},
              {"N", report.n},
              {"r", report.r},
              {"m", report.m},
              {"order", report.order},
              {"budgets", std::move(budgets)},
              {"min_budget", report.min_budget ? Json(*report.min_budget) : Json(nullptr)}};
}

Json to_json(const Verdict& verdict) {
  return Json{{"valid", verdict.valid}, {"reason", verdict.reason}};
}

Json to_json(const ReportDocument& doc) {
  return Json{{"tool_version", doc.tool_version},
              {"command", doc.command},
              {"input_digest", doc.input_digest ? Json(*doc.input_digest) : Json(nullptr)},
              {"parameters", doc.parameters},
              {"result", doc.result},
              {"exhaustive", doc.exhaustive},
              {"status", status_name(doc.status)},
              {"error", doc.error ? Json{{"code", doc.error->code}, {"message", doc.error->message}}
                                  : Json(nullptr)},
              {"duration_ms", doc.duration_ms}};
}

ReportDocument report_from_json(const Json& j) {
  auto string_field = [&](const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
  };
  ReportDocument doc;
  doc.tool_version = string_field("tool_version");
  doc.command = string_field("command");
  if (const Json& d = field(j, "input_digest"); !d.is_null()) {
    if (!d.is_string()) malformed("field 'input_digest' must be a string or null");
    doc.input_digest = d.get<std::string>();
  }
  doc.parameters = field(j, "parameters");
  doc.result = field(j, "result");
  if (!field(j, "exhaustive").is_boolean()) malformed("field 'exhaustive' must be a boolean");
  doc.exhaustive = j.at("exhaustive").get<bool>();
  const std::string status = string_field("status");
  if (status == "success") doc.status = ReportStatus::success;
  else if (status == "failure") doc.status = ReportStatus::failure;
  else if (status == "error") doc.status = ReportStatus::error;
  else malformed("unknown status '" + status + "'");
  if (const Json& e = field(j, "error"); !e.is_null()) {
    if (!e.is_object() || !e.contains("code") || !e.contains("message")) malformed("bad error object");
    doc.error = ReportError{e.at("code").get<std::string>(), e.at("message").get<std::string>()};
  }
  if (!field(j, "duration_ms").is_number()) malformed("field 'duration_ms' must be a number");
  doc.duration_ms = j.at("duration_ms").get<double>();
  return doc;
}

}  // namespace wideness
