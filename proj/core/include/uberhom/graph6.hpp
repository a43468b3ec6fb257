#pragma once

#include <string>
#include <string_view>

#include "uberhom/graph.hpp"

namespace uberhom {

// Throws kParse with the byte offset for bad bytes or a truncated body.
// Trailing line breaks are ignored.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

}  // namespace uberhom
