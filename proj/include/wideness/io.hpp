#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "wideness/graph.hpp"

namespace wideness {

/// graph6 supports orders below 2^18 (the one- and four-byte size fields).
inline constexpr std::size_t kGraph6MaxOrder = (std::size_t{1} << 18) - 1;

/// Accepts an optional ">>graph6<<" header and trailing whitespace.
/// Errc::malformed for bytes outside 63..126, a wrong bit-string length or
/// non-zero padding; Errc::too_large for the eight-byte size field.
Graph parse_graph6(std::string_view bytes);
/// Canonical encoding without header or newline.
std::string write_graph6(const Graph& g);

/// "n <count>" then one "u v" per line; '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

enum class GraphFormat { graph6, edge_list };

/// Edge lists start (after blank and comment lines) with "n"; everything else
/// is treated as graph6.
GraphFormat detect_format(std::string_view text);
Graph parse_graph(std::string_view text, std::optional<GraphFormat> format = std::nullopt);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace wideness
