#include "wideness/error.hpp"

namespace wideness {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::out_of_range: return "OutOfRange";
    case Errc::loop_rejected: return "LoopRejected";
    case Errc::loop_query: return "LoopQuery";
    case Errc::too_large: return "TooLarge";
    case Errc::duplicate_vertex: return "DuplicateVertex";
    case Errc::missing_witness: return "MissingWitness";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::bound_violated: return "BoundViolated";
    case Errc::size_requirement_unmet: return "SizeRequirementUnmet";
    case Errc::overflow: return "Overflow";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::invalid_path: return "InvalidPath";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::malformed: return "Malformed";
  }
  return "Unknown";
}

}  // namespace wideness
