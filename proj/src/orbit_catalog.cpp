#include "quiver/orbit_catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace quiver {

namespace {

// signature contribution of a single row (length l, color e)
Signature row_signature(int l, int e, int n) {
    Signature s(n);
    for (int m = 0; m < n; ++m) {
        int r = rep(CyclicColor(m - e, n));
        int a = l - r;
        if (a > 0) s.add(m, (a + n - 1) / n);
    }
    return s;
}

void assign_colors(const Partition& shape, const Signature& xi, int n, int row,
                   Signature& partial, std::vector<int>& colors,
                   std::vector<ColoredPartition>& out) {
    int l = shape.length();
    if (row == l) {
        if (partial == xi) out.emplace_back(shape, colors, n);
        return;
    }
    int length = shape.parts()[row];
    int start = (row > 0 && shape.parts()[row - 1] == length) ? colors[row - 1] : 0;
    for (int c = start; c < n; ++c) {
        Signature rs = row_signature(length, c, n);
        Signature next = partial + rs;
        if (!(next <= xi)) continue;
        colors.push_back(c);
        assign_colors(shape, xi, n, row + 1, next, colors, out);
        colors.pop_back();
    }
}

}  // namespace

std::vector<ColoredPartition> enumerate_colored_partitions(const Signature& xi, int n) {
    if (xi.colors() != n)
        throw std::invalid_argument("enumerate_colored_partitions: signature modulus mismatch");
    std::vector<ColoredPartition> out;
    for (const Partition& shape : all_partitions(static_cast<int>(xi.size()))) {
        Signature partial(n);
        std::vector<int> colors;
        assign_colors(shape, xi, n, 0, partial, colors, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void assign_marks(const ColoredPartition& cp, CyclicColor m, int row, std::vector<int>& marks,
                  std::vector<MarkedColoredPartition>& out) {
    int n = cp.modulus();
    if (row == cp.length()) {
        MarkedColoredPartition mcp(cp.shape(), cp.colors(), marks, n);
        if (classify_marking(mcp).is_colored_n_bipartition) out.push_back(canonical_form(mcp));
        return;
    }
    int length = cp.row_length(row + 1);
    int color = cp.row_color(row + 1).rep();
    // smallest class-m mark in (-n, 0], then its positive translates
    int t = rep(CyclicColor(length + color, n) - m);
    int base = (t == 0) ? 0 : t - n;
    bool same_row_shape =
        row > 0 && cp.row_length(row) == length && cp.row_color(row).rep() == color;
    for (int mark = base; mark <= length; mark += n) {
        if (same_row_shape && mark > marks[row - 1]) continue;
        marks.push_back(mark);
        assign_marks(cp, m, row + 1, marks, out);
        marks.pop_back();
    }
}

}  // namespace

std::vector<MarkedColoredPartition> enumerate_colored_bipartitions(const Signature& xi, int n,
                                                                   CyclicColor m) {
    if (xi.colors() != n || m.modulus() != n)
        throw std::invalid_argument("enumerate_colored_bipartitions: modulus mismatch");
    std::vector<MarkedColoredPartition> out;
    for (const ColoredPartition& cp : enumerate_colored_partitions(xi, n)) {
        std::vector<int> marks;
        assign_marks(cp, m, 0, marks, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<OrbitRecord> enumerate_orbit_classes(const Signature& xi, int n) {
    std::map<OrbitClass, OrbitRecord> classes;
    for (int c = 0; c < n; ++c) {
        CyclicColor m(c, n);
        for (const MarkedColoredPartition& mcp : enumerate_colored_bipartitions(xi, n, m)) {
            OrbitClass oc = to_orbit_class(mcp);
            auto it = classes.find(oc);
            if (it != classes.end()) continue;  // zero-vector classes repeat across m
            OrbitRecord rec{oc,
                            oc.zero_vector() ? std::nullopt : std::make_optional(m),
                            dim_enhanced_orbit(mcp), xi};
            classes.emplace(std::move(oc), std::move(rec));
        }
    }
    std::vector<OrbitRecord> out;
    for (auto& [key, rec] : classes) out.push_back(rec);
    return out;
}

long long dim_nilpotent_orbit(const ColoredPartition& cp) {
    Signature xi = signature(cp);
    long long dim = 0;
    for (long long d : xi.counts()) dim += d * d;
    for (int k = 1; k <= cp.length(); ++k)
        dim -= column_signature(cp, cp.row_length(k)).at(cp.row_color(k));
    return dim;
}

long long dim_enhanced_orbit(const MarkedColoredPartition& mcp) {
    if (!classify_marking(mcp).is_colored_n_bipartition)
        throw std::invalid_argument("dim_enhanced_orbit: label is not a colored n-bipartition");
    int n = mcp.modulus();
    long long dim = dim_nilpotent_orbit(mcp.base());
    for (const MarkedRow& r : mcp.rows())
        if (r.mark > 0) dim += (r.mark + n - 1) / n;
    return dim;
}

}  // namespace quiver
