#pragma once

#include <string>
#include <string_view>

#include "polaritylab/graph.hpp"

namespace polaritylab {

/// graph6 text (single-byte header, so order <= 62; our graphs stop at 32).
/// Bits are the upper triangle in column order (0,1),(0,2),(1,2),(0,3),...
/// packed six per byte, each byte offset by 63.
std::string graph6_encode(const Graph& g);

/// Strict decoder: rejects sparse6/digraph6, wrong body length and nonzero
/// padding bits.
Graph graph6_decode(std::string_view text);

}  // namespace polaritylab
