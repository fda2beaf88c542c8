#pragma once

#include <ostream>
#include <set>
#include <vector>

#include "quiver/marked_partition.hpp"

namespace quiver {

// A class of markings under the equivalence that disregards the value of
// any nonpositive mark: marks are clipped at 0 and rows are stored in
// canonical order.  Two colored n-bipartitions label the same enhanced
// orbit exactly when they produce the same OrbitClass.
class OrbitClass {
public:
    OrbitClass() : n_(1), zero_vector_(true) {}
    OrbitClass(std::vector<MarkedRow> clipped_rows, int modulus);

    int modulus() const { return n_; }
    const std::vector<MarkedRow>& rows() const { return rows_; }
    // true iff every mark is clipped to 0, i.e. the orbit of a pair (0, x)
    bool zero_vector() const { return zero_vector_; }

    ColoredPartition base() const;
    MarkedColoredPartition as_marked() const;

    bool operator==(const OrbitClass& o) const;
    bool operator!=(const OrbitClass& o) const { return !(*this == o); }
    bool operator<(const OrbitClass& o) const;

private:
    std::vector<MarkedRow> rows_;  // canonical order, marks >= 0
    int n_;
    bool zero_vector_;
};

OrbitClass to_orbit_class(const MarkedColoredPartition& mcp);

// The least bipartition marking above mu:
//   mu~_i = max({mu_j | j >= i} u {lambda_i - lambda_j + mu_j | j < i} u {0}).
// Any bipartition marking delta >= mu satisfies delta >= mu~.
MarkedColoredPartition minimal_bipartition(const MarkedColoredPartition& mcp);

// Shift each mark down (leftward) to the largest value <= mu_i whose wall
// sits in class m, i.e. delta_i = max{k <= mu_i : epsilon_i + [lambda_i - k] = m}.
// Idempotent; inverse to minimal_bipartition on colored n-bipartitions.
MarkedColoredPartition shift_to_class(const MarkedColoredPartition& mcp, CyclicColor m);

// Turn a marking whose positive marks all sit in class m into the colored
// n-bipartition of class m labeling the same enhanced orbit: rows with
// mu_i <= 0 are first forced into class m, then marks are raised by n while
// some pair i < j violates mu_j < mu_i + n or nu_j < nu_i + n.
// Throws std::invalid_argument if a positive mark is outside class m.
MarkedColoredPartition normalize(const MarkedColoredPartition& mcp, CyclicColor m);
// Same result, violating pairs picked in seeded random order.
MarkedColoredPartition normalize_seeded(const MarkedColoredPartition& mcp, CyclicColor m,
                                        unsigned seed);

// The least nonnegative marking labeling the same enhanced orbit: while a
// pair i < j in one class has both marks >= 1 and mu_i <= mu_j or
// nu_i <= nu_j, the offending mark drops by n (floored at 0).  Requires
// mu >= 0.  Unique up to row equivalence regardless of reduction order.
MarkedColoredPartition minimal_marking(const MarkedColoredPartition& mcp);
MarkedColoredPartition minimal_marking_seeded(const MarkedColoredPartition& mcp, unsigned seed);

// Remove the rows indexed by S (1-based); remaining rows keep their order.
MarkedColoredPartition delete_rows(const MarkedColoredPartition& mcp, const std::set<int>& S);

// Disjoint union of the row multisets, canonicalized.  Associative and
// commutative with the empty marked partition as identity; the signature is
// a monoid homomorphism for it.
MarkedColoredPartition unite(const MarkedColoredPartition& a, const MarkedColoredPartition& b);

struct CharacteristicDecomposition {
    MarkedColoredPartition characteristic;  // rows with mu_i > 0
    ColoredPartition plain;                 // rows with mu_i = 0
};

// Split a minimal marking into its characteristic part and the plain
// colored partition; their union reproduces the input.  Throws
// std::invalid_argument unless the input is minimal with mu >= 0.
CharacteristicDecomposition characteristic_decomposition(const MarkedColoredPartition& mcp);

// Reduce colors mod k (k a divisor of n): marks are unchanged up to
// renormalization of nonpositive values into (-k, 0].
MarkedColoredPartition reduce_colors(const MarkedColoredPartition& mcp, int k);

std::ostream& operator<<(std::ostream&, const OrbitClass&);

}  // namespace quiver
