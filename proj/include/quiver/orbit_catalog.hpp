#pragma once

#include <optional>
#include <vector>

#include "quiver/marking_calculus.hpp"

namespace quiver {

struct OrbitRecord {
    OrbitClass label;
    // class color of the enhancing vector; absent for zero-vector classes
    std::optional<CyclicColor> class_color;
    long long dim = 0;
    Signature ambient{1};
};

// All colored partitions of the given signature, up to row equivalence,
// in deterministic canonical order.
std::vector<ColoredPartition> enumerate_colored_partitions(const Signature& xi, int n);

// All colored n-bipartitions of signature xi and class m, up to row
// equivalence, in deterministic canonical order.  These label the orbits
// on V_m x N.
std::vector<MarkedColoredPartition> enumerate_colored_bipartitions(const Signature& xi, int n,
                                                                   CyclicColor m);

// All enhanced orbit classes of signature xi: the union over m of the
// class-m labels, with the n zero-vector markings of each shape merged.
std::vector<OrbitRecord> enumerate_orbit_classes(const Signature& xi, int n);

// dim O_{lambda,epsilon} = sum_i (dim V_i)^2 - sum_k s_{lambda_k}(epsilon_k),
// with ambient dimensions dim V_i read off the label's own signature.
long long dim_nilpotent_orbit(const ColoredPartition& cp);

// dim O_{lambda,epsilon,mu} = dim O_{lambda,epsilon} + sum_i ceil(mu_i / n).
// Requires a colored n-bipartition; throws std::invalid_argument otherwise.
long long dim_enhanced_orbit(const MarkedColoredPartition& mcp);

}  // namespace quiver
