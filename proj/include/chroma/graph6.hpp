#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

/// Largest order supported by the single-byte graph6 size header.
inline constexpr int kGraph6MaxOrder = 62;

/// Parses one graph6 line (a trailing "\n" or "\r\n" is tolerated).
/// Throws ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view line);

/// Encodes g without a trailing newline. Throws UnsupportedSize for n > 62.
std::string write_graph6(const Graph& g);

/// Parses every non-blank line of a graph6 stream.
std::vector<Graph> parse_graph6_lines(std::string_view text);

}  // namespace chroma
