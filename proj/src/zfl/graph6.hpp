#pragma once

#include <string>
#include <string_view>

#include "zfl/graph.hpp"

namespace zfl {

// graph6 text encoding (McKay): a size header N(n) followed by the upper
// triangle of the adjacency matrix, column by column, packed six bits per
// printable byte (value + 63).

/// Decodes one graph6 line. Trailing whitespace and a leading ">>graph6<<"
/// header are accepted. Throws `Error(Parse)` on a malformed header, a
/// truncated or oversized payload, or bytes outside 63..126.
Graph graph6_decode(std::string_view text);

std::string graph6_encode(const Graph& g);

}  // namespace zfl
