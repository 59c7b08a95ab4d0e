#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "forkdiv/graph.hpp"

namespace forkdiv {

/// Decodes one graph6 line (no ">>graph6<<" header, no trailing newline).
/// Accepts the short order form chr(n+63) for n <= 62 and the '~' long form
/// for n in 63..64. Throws DecodeError naming the failing byte offset.
Graph parse_graph6(std::string_view text);

/// Standard graph6 encoding: order byte(s), then the upper-triangle bits
/// x(0,1), x(0,2), x(1,2), ... packed big-endian into 6-bit groups offset by
/// 63, zero-padded. Bit-exact; total on any Graph.
std::string to_graph6(const Graph& g);

/// Plain edge-list text: "n m" header, then m "u v" pairs, whitespace
/// separated, 0-indexed.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

/// Strips an optional ">>graph6<<" header prefix from a corpus line.
/// Returns an empty view for pure header/blank lines.
std::string_view strip_graph6_header(std::string_view line);

}  // namespace forkdiv
