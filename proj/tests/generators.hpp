#pragma once

#include <random>
#include <vector>

#include "quiver/marked_partition.hpp"

namespace quiver::testgen {

inline Partition random_partition(std::mt19937& rng, int max_size) {
    std::uniform_int_distribution<int> size_dist(0, max_size);
    int remaining = size_dist(rng);
    std::vector<int> parts;
    int cap = remaining;
    while (remaining > 0) {
        std::uniform_int_distribution<int> part_dist(1, std::min(cap, remaining));
        int p = part_dist(rng);
        parts.push_back(p);
        cap = p;
        remaining -= p;
    }
    return Partition(parts);
}

inline ColoredPartition random_colored(std::mt19937& rng, int n, int max_size) {
    Partition shape = random_partition(rng, max_size);
    std::uniform_int_distribution<int> color_dist(0, n - 1);
    std::vector<int> colors;
    for (int i = 0; i < shape.length(); ++i) colors.push_back(color_dist(rng));
    return ColoredPartition(shape, colors, n);
}

// arbitrary marking, marks uniform over the canonical range (-n, lambda_i]
inline MarkedColoredPartition random_marked(std::mt19937& rng, int n, int max_size) {
    ColoredPartition cp = random_colored(rng, n, max_size);
    std::vector<int> marks;
    for (int i = 1; i <= cp.length(); ++i) {
        std::uniform_int_distribution<int> mark_dist(-(n - 1), cp.row_length(i));
        marks.push_back(mark_dist(rng));
    }
    return MarkedColoredPartition(cp.shape(), cp.colors(), marks, n);
}

// marking satisfying normalize's precondition for class m: every positive
// mark places its wall in class m; nonpositive marks are arbitrary
inline MarkedColoredPartition random_class_marking(std::mt19937& rng, int n, int max_size,
                                                   CyclicColor m) {
    ColoredPartition cp = random_colored(rng, n, max_size);
    std::vector<int> marks;
    for (int i = 1; i <= cp.length(); ++i) {
        int l = cp.row_length(i);
        int e = cp.row_color(i).rep();
        int t = rep(CyclicColor(l + e, n) - m);
        int base = (t == 0) ? 0 : t - n;  // largest class-m mark <= 0
        std::vector<int> candidates;
        for (int k = base + n; k <= l; k += n) candidates.push_back(k);
        std::uniform_int_distribution<int> coin(0, 1);
        if (candidates.empty() || coin(rng) == 0) {
            std::uniform_int_distribution<int> neg(-(n - 1), 0);
            marks.push_back(neg(rng));
        } else {
            std::uniform_int_distribution<size_t> pick(0, candidates.size() - 1);
            marks.push_back(candidates[pick(rng)]);
        }
    }
    return MarkedColoredPartition(cp.shape(), cp.colors(), marks, n);
}

}  // namespace quiver::testgen
