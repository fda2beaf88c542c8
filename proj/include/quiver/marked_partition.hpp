#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "quiver/colored_partition.hpp"

namespace quiver {

struct MarkedRow {
    int length;  // lambda_i > 0
    int color;   // epsilon_i, residue in [0, n)
    int mark;    // mu_i, canonical range -n < mu_i <= lambda_i

    bool operator==(const MarkedRow&) const = default;
};

// A marked colored partition (lambda, epsilon, mu).  Marks satisfy
// mu_i <= lambda_i; nonpositive marks are stored in the canonical range
// (-n, 0], reduced mod n on construction (their exact value only matters
// through their residue).  Row order is preserved as given; equality is
// row equivalence.
class MarkedColoredPartition {
public:
    MarkedColoredPartition() : n_(1) {}
    explicit MarkedColoredPartition(int modulus);
    MarkedColoredPartition(Partition shape, std::vector<int> colors,
                           std::vector<int> marks, int modulus);
    MarkedColoredPartition(std::vector<MarkedRow> rows, int modulus);

    int modulus() const { return n_; }
    int length() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }
    long long size() const;

    const std::vector<MarkedRow>& rows() const { return rows_; }
    const MarkedRow& row(int i) const;  // 1-based

    ColoredPartition base() const;
    std::vector<int> marks() const;
    // nu = lambda - mu, per row
    std::vector<int> complements() const;

    bool operator==(const MarkedColoredPartition& o) const;  // row equivalence
    bool operator!=(const MarkedColoredPartition& o) const { return !(*this == o); }
    bool operator<(const MarkedColoredPartition& o) const;   // canonical lexicographic

private:
    std::vector<MarkedRow> rows_;
    int n_;
};

// canonical row order: (length desc, color asc, mark desc)
bool canonical_row_less(const MarkedRow& a, const MarkedRow& b);

// Rows sorted into canonical order.  Idempotent; output is row-equivalent
// to the input and classification flags are unchanged.
MarkedColoredPartition canonical_form(const MarkedColoredPartition& mcp);

struct MarkingClassification {
    // 0 <= mu_{i+1} <= mu_i and nu_{i+1} <= nu_i
    bool is_bipartition = false;
    // -n < mu_i, and mu_j < mu_i + n, nu_j < nu_i + n for all i < j
    bool is_n_bipartition = false;
    // n-bipartition whose rows all share epsilon_i + [nu_i]
    bool is_colored_n_bipartition = false;
    // the pair bounds restricted to rows with equal epsilon_i + [nu_i]
    bool is_generalized_n_bipartition = false;
    // epsilon_i + [nu_i], shared by all rows with mu_i >= 1; absent when
    // there is no positively marked row or the positive rows disagree
    std::optional<CyclicColor> class_color;
};

MarkingClassification classify_marking(const MarkedColoredPartition& mcp);

// Signature of the underlying shape (marks play no role).
Signature signature(const MarkedColoredPartition& mcp);

std::ostream& operator<<(std::ostream&, const MarkedColoredPartition&);

}  // namespace quiver
