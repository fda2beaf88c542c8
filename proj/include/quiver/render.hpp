#pragma once

#include <string>

#include "quiver/colored_partition.hpp"
#include "quiver/marked_partition.hpp"

namespace quiver {

// Left-justified colored Young diagram, one character per box (the box's
// color).  With signs=true and n=2, colors print as '+' (0) and '-' (1).
std::string render_diagram(const ColoredPartition& cp, bool signs = false);

// Marked diagram with rows shifted so the marks form a single vertical
// line ('|'); a row with mark mu <= 0 starts |mu| cells right of the wall.
std::string render_marked_diagram(const MarkedColoredPartition& mcp, bool signs = false);

}  // namespace quiver
