#pragma once

#include <ostream>
#include <vector>

namespace quiver {

// Integer partition: a weakly decreasing list of positive parts.
// Trailing zeros in the input are stripped; rows beyond length() read as 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    long long size() const;  // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based row access; returns 0 past the last row
    int part(int i) const;

    const std::vector<int>& parts() const { return parts_; }

    Partition transpose() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

// eta(lambda) = sum (i-1) * lambda_i, the partition statistic appearing in
// nilpotent-orbit dimension formulas.  Equals sum C(transpose_i, 2).
long long eta(const Partition& lambda);

// All partitions of `size`, in deterministic (lexicographically decreasing) order.
std::vector<Partition> all_partitions(int size);

std::ostream& operator<<(std::ostream&, const Partition&);

}  // namespace quiver
