#pragma once

#include <ostream>
#include <vector>

#include "quiver/cyclic_color.hpp"
#include "quiver/partition.hpp"
#include "quiver/signature.hpp"

namespace quiver {

// A colored partition (lambda, epsilon): a partition with a color in Z/n per
// nonzero row.  The color of a row is the color of its rightmost box; box
// colors increase by 1 (mod n) from right to left.
//
// Rows of length zero carry no color: every formula term for an empty row
// vanishes, so the class is determined by the nonzero rows alone.
//
// Row order is preserved as given (lengths must be weakly decreasing);
// equality is row equivalence, i.e. comparison of canonical forms.
class ColoredPartition {
public:
    ColoredPartition() : n_(1) {}
    explicit ColoredPartition(int modulus);  // empty partition
    ColoredPartition(Partition shape, std::vector<int> colors, int modulus);

    int modulus() const { return n_; }
    int length() const { return shape_.length(); }
    long long size() const { return shape_.size(); }
    bool empty() const { return shape_.empty(); }

    const Partition& shape() const { return shape_; }
    const std::vector<int>& colors() const { return colors_; }

    // 1-based accessors
    int row_length(int i) const;
    CyclicColor row_color(int i) const;

    // rows sorted by (length desc, color asc)
    ColoredPartition canonical() const;

    bool operator==(const ColoredPartition& o) const;  // row equivalence
    bool operator!=(const ColoredPartition& o) const { return !(*this == o); }
    bool operator<(const ColoredPartition& o) const;   // canonical lexicographic

private:
    Partition shape_;
    std::vector<int> colors_;
    int n_;
};

// Color of box (row i, column j), both 1-based: epsilon_i + [lambda_i - j].
CyclicColor box_color(const ColoredPartition& cp, int i, int j);

// Signature of the full diagram via the closed form
//   xi_m = sum_i ceil((lambda_i - rep(m - epsilon_i)) / n).
// column_signature(cp, lambda_1) recomputes it by direct box counting.
Signature signature(const ColoredPartition& cp);

// Signature of the first k columns (k >= 1), by box counting.  Monotone
// nondecreasing in k and equal to signature(cp) once k >= lambda_1.
Signature column_signature(const ColoredPartition& cp, int k);

std::ostream& operator<<(std::ostream&, const ColoredPartition&);

}  // namespace quiver
