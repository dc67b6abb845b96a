#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wideness {

enum class Errc {
  out_of_range,
  loop_rejected,
  loop_query,
  too_large,
  duplicate_vertex,
  missing_witness,
  precondition_failed,
  bound_violated,
  size_requirement_unmet,
  overflow,
  invalid_spec,
  invalid_path,
  invalid_argument,
  malformed,
};

std::string_view to_string(Errc code);

/// Single exception type for every contract violation in the library.
/// The code is stable and is what the CLI reports; the message is free text.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wideness
