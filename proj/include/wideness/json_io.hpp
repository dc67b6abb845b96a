#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "wideness/conversion.hpp"
#include "wideness/families.hpp"
#include "wideness/flip.hpp"
#include "wideness/witness.hpp"

namespace wideness {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

Json to_json(const VertexSet& set);
/// Errc::malformed for anything but an array of integers, Errc::out_of_range
/// for entries outside 0..n-1. Repeated entries are merged.
VertexSet vertex_set_from_json(const Json& j, std::size_t n);

/// [[A1, B1], [A2, B2], ...]
Json flips_to_json(std::span<const Flip> flips);
FlipSet flips_from_json(const Json& j, std::size_t n);

/// {"atoms": [[...], ...], "toggles": [[x, y], ...], ...}
Json to_json(const NormalizedFlipSet& nf);

using WitnessInstance = std::variant<WidenableInstance, FlippableInstance>;

/// {"kind": "widenable", "A": [...], "S": [...], "B": [...], "r": 2, "m": 2}
/// or "kind": "flippable" with "flips" in place of "S". A defaults to V.
WitnessInstance witness_from_json(const Json& j, std::size_t n);
Json to_json(const WidenableInstance& inst);
Json to_json(const FlippableInstance& inst);

Json to_json(const Biclique& b);
Json to_json(const DeletionWitness& w);
Json to_json(const LemmaOutcome& outcome);
Json to_json(const ConversionTrace& trace);
Json to_json(const ConversionResult& result);
Json to_json(const ExperimentReport& report);
Json to_json(const Verdict& verdict);

enum class ReportStatus { success, failure, error };

struct ReportError {
  std::string code;
  std::string message;
  friend bool operator==(const ReportError&, const ReportError&) = default;
};

struct ReportDocument {
  std::string tool_version = kToolVersion;
  std::string command;
  std::optional<std::string> input_digest;  // "sha256:<hex>" of the graph bytes
  Json parameters = Json::object();
  Json result;  // null unless the command produced a payload
  bool exhaustive = true;
  ReportStatus status = ReportStatus::success;
  std::optional<ReportError> error;
  double duration_ms = 0.0;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

Json to_json(const ReportDocument& doc);
/// Errc::malformed when a field is missing or has the wrong type.
ReportDocument report_from_json(const Json& j);

}  // namespace wideness
