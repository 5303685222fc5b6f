#pragma once

#include <string>
#include <string_view>

#include "superlocal/graph.hpp"

namespace superlocal {

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted. Errors carry the offending byte offset.
SimpleGraph parse_graph6(std::string_view text);

std::string encode_graph6(const SimpleGraph& g);

}  // namespace superlocal
