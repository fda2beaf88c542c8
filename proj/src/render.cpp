#include "quiver/render.hpp"

#include <algorithm>
#include <stdexcept>

namespace quiver {

namespace {

char box_char(int color, int n, bool signs) {
    if (signs) {
        if (n != 2) throw std::invalid_argument("render: signs require modulus 2");
        return color == 0 ? '+' : '-';
    }
    if (color < 10) return static_cast<char>('0' + color);
    return static_cast<char>('a' + color - 10);
}

}  // namespace

std::string render_diagram(const ColoredPartition& cp, bool signs) {
    std::string out;
    for (int i = 1; i <= cp.length(); ++i) {
        for (int j = 1; j <= cp.row_length(i); ++j)
            out += box_char(box_color(cp, i, j).rep(), cp.modulus(), signs);
        out += '\n';
    }
    return out;
}

std::string render_marked_diagram(const MarkedColoredPartition& mcp, bool signs) {
    int n = mcp.modulus();
    ColoredPartition cp = mcp.base();
    int wall = 0;
    for (const MarkedRow& r : mcp.rows()) wall = std::max(wall, r.mark);

    std::string out;
    for (int i = 1; i <= mcp.length(); ++i) {
        const MarkedRow& r = mcp.row(i);
        int start = wall - r.mark;  // cell of the first box
        std::string cells(static_cast<size_t>(start), ' ');
        for (int j = 1; j <= r.length; ++j)
            cells += box_char(box_color(cp, i, j).rep(), n, signs);
        if (static_cast<int>(cells.size()) < wall)
            cells.append(static_cast<size_t>(wall) - cells.size(), ' ');
        cells.insert(static_cast<size_t>(wall), 1, '|');
        out += cells;
        out += '\n';
    }
    return out;
}

}  // namespace quiver
