#include "quiver/marking_calculus.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace quiver {

OrbitClass::OrbitClass(std::vector<MarkedRow> clipped_rows, int modulus)
    : rows_(std::move(clipped_rows)), n_(modulus) {
    if (modulus <= 0) throw std::invalid_argument("OrbitClass: modulus must be positive");
    zero_vector_ = true;
    for (MarkedRow& r : rows_) {
        if (r.mark < 0) throw std::invalid_argument("OrbitClass: marks must be clipped");
        if (r.mark > 0) zero_vector_ = false;
    }
    std::sort(rows_.begin(), rows_.end(), canonical_row_less);
}

ColoredPartition OrbitClass::base() const {
    std::vector<int> lengths, colors;
    for (const MarkedRow& r : rows_) {
        lengths.push_back(r.length);
        colors.push_back(r.color);
    }
    return ColoredPartition(Partition(std::move(lengths)), std::move(colors), n_);
}

MarkedColoredPartition OrbitClass::as_marked() const {
    return MarkedColoredPartition(rows_, n_);
}

bool OrbitClass::operator==(const OrbitClass& o) const {
    return n_ == o.n_ && rows_ == o.rows_;
}

bool OrbitClass::operator<(const OrbitClass& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return std::lexicographical_compare(rows_.begin(), rows_.end(), o.rows_.begin(),
                                        o.rows_.end(), canonical_row_less);
}

OrbitClass to_orbit_class(const MarkedColoredPartition& mcp) {
    std::vector<MarkedRow> rows = mcp.rows();
    for (MarkedRow& r : rows) r.mark = std::max(r.mark, 0);
    return OrbitClass(std::move(rows), mcp.modulus());
}

MarkedColoredPartition minimal_bipartition(const MarkedColoredPartition& mcp) {
    const auto& rows = mcp.rows();
    int l = mcp.length();
    std::vector<MarkedRow> out = rows;
    for (int i = 0; i < l; ++i) {
        int best = 0;
        for (int j = i; j < l; ++j) best = std::max(best, rows[j].mark);
        for (int j = 0; j < i; ++j)
            best = std::max(best, rows[i].length - rows[j].length + rows[j].mark);
        out[i].mark = best;
    }
    return MarkedColoredPartition(std::move(out), mcp.modulus());
}

MarkedColoredPartition shift_to_class(const MarkedColoredPartition& mcp, CyclicColor m) {
    int n = mcp.modulus();
    if (m.modulus() != n)
        throw std::invalid_argument("shift_to_class: color modulus mismatch");
    std::vector<MarkedRow> rows = mcp.rows();
    for (MarkedRow& r : rows) {
        // largest k <= mark with k = lambda + epsilon - m (mod n)
        int offset = rep(CyclicColor(r.mark - r.length - r.color, n) + m.rep());
        r.mark -= offset;
    }
    return MarkedColoredPartition(std::move(rows), n);
}

namespace {

// the unique mark in (-n, 0] placing the row's wall in class m
int forced_nonpositive_mark(const MarkedRow& r, CyclicColor m, int n) {
    int t = rep(CyclicColor(r.length + r.color, n) - m);
    return t == 0 ? 0 : t - n;
}

struct RaiseStep {
    int row;  // mark to raise by n
};

MarkedColoredPartition normalize_impl(const MarkedColoredPartition& mcp, CyclicColor m,
                                      std::mt19937* rng) {
    int n = mcp.modulus();
    if (m.modulus() != n) throw std::invalid_argument("normalize: color modulus mismatch");
    std::vector<MarkedRow> rows = mcp.rows();
    int l = static_cast<int>(rows.size());

    for (MarkedRow& r : rows) {
        if (r.mark >= 1) {
            if (CyclicColor(r.color + r.length - r.mark, n) != m)
                throw std::invalid_argument("normalize: positive mark outside the class");
        } else {
            r.mark = forced_nonpositive_mark(r, m, n);
        }
    }

    // raise marks until no pair violates the n-bipartition bounds; each step
    // increases the sum of positive marks, so this terminates
    while (true) {
        std::vector<RaiseStep> steps;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j) {
                if (rows[i].mark + n <= rows[j].mark) steps.push_back(RaiseStep{i});
                int nu_i = rows[i].length - rows[i].mark;
                int nu_j = rows[j].length - rows[j].mark;
                if (nu_i + n <= nu_j) steps.push_back(RaiseStep{j});
            }
        if (steps.empty()) break;
        size_t pick = 0;
        if (rng) pick = (*rng)() % steps.size();
        rows[steps[pick].row].mark += n;
    }
    return MarkedColoredPartition(std::move(rows), n);
}

}  // namespace

MarkedColoredPartition normalize(const MarkedColoredPartition& mcp, CyclicColor m) {
    return normalize_impl(mcp, m, nullptr);
}

MarkedColoredPartition normalize_seeded(const MarkedColoredPartition& mcp, CyclicColor m,
                                        unsigned seed) {
    std::mt19937 rng(seed);
    return normalize_impl(mcp, m, &rng);
}

namespace {

struct CutStep {
    int row;  // mark to drop by n (floored at 0)
};

MarkedColoredPartition minimal_marking_impl(const MarkedColoredPartition& mcp,
                                            std::mt19937* rng) {
    int n = mcp.modulus();
    for (const MarkedRow& r : mcp.rows())
        if (r.mark < 0)
            throw std::invalid_argument("minimal_marking: marks must be nonnegative");

    std::vector<MarkedRow> rows = canonical_form(mcp).rows();
    while (true) {
        int l = static_cast<int>(rows.size());
        std::vector<CutStep> steps;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j) {
                if (rows[i].mark < 1 || rows[j].mark < 1) continue;
                int nu_i = rows[i].length - rows[i].mark;
                int nu_j = rows[j].length - rows[j].mark;
                if (CyclicColor(rows[i].color + nu_i, n) != CyclicColor(rows[j].color + nu_j, n))
                    continue;
                if (rows[i].mark <= rows[j].mark) steps.push_back(CutStep{i});
                if (nu_i <= nu_j) steps.push_back(CutStep{j});
            }
        if (steps.empty()) break;
        size_t pick = 0;
        if (rng) pick = (*rng)() % steps.size();
        rows[steps[pick].row].mark = std::max(rows[steps[pick].row].mark - n, 0);
        std::sort(rows.begin(), rows.end(), canonical_row_less);
    }
    return MarkedColoredPartition(std::move(rows), n);
}

}  // namespace

MarkedColoredPartition minimal_marking(const MarkedColoredPartition& mcp) {
    return minimal_marking_impl(mcp, nullptr);
}

MarkedColoredPartition minimal_marking_seeded(const MarkedColoredPartition& mcp, unsigned seed) {
    std::mt19937 rng(seed);
    return minimal_marking_impl(mcp, &rng);
}

MarkedColoredPartition delete_rows(const MarkedColoredPartition& mcp, const std::set<int>& S) {
    for (int k : S)
        if (k < 1 || k > mcp.length())
            throw std::out_of_range("delete_rows: row index out of range");
    std::vector<MarkedRow> rows;
    for (int i = 1; i <= mcp.length(); ++i)
        if (!S.count(i)) rows.push_back(mcp.row(i));
    return MarkedColoredPartition(std::move(rows), mcp.modulus());
}

MarkedColoredPartition unite(const MarkedColoredPartition& a, const MarkedColoredPartition& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("unite: modulus mismatch");
    std::vector<MarkedRow> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    std::sort(rows.begin(), rows.end(), canonical_row_less);
    return MarkedColoredPartition(std::move(rows), a.modulus());
}

CharacteristicDecomposition characteristic_decomposition(const MarkedColoredPartition& mcp) {
    int n = mcp.modulus();
    const auto& rows = mcp.rows();
    int l = static_cast<int>(rows.size());
    for (int i = 0; i < l; ++i) {
        if (rows[i].mark < 0)
            throw std::invalid_argument("characteristic_decomposition: marks must be nonnegative");
        for (int j = i + 1; j < l; ++j) {
            if (rows[i].mark < 1 || rows[j].mark < 1) continue;
            int nu_i = rows[i].length - rows[i].mark;
            int nu_j = rows[j].length - rows[j].mark;
            if (CyclicColor(rows[i].color + nu_i, n) != CyclicColor(rows[j].color + nu_j, n))
                continue;
            if (rows[i].mark <= rows[j].mark || nu_i <= nu_j)
                throw std::invalid_argument(
                    "characteristic_decomposition: input is not a minimal marking");
        }
    }
    std::vector<MarkedRow> marked;
    std::vector<int> plain_lengths, plain_colors;
    for (const MarkedRow& r : rows) {
        if (r.mark > 0) {
            marked.push_back(r);
        } else {
            plain_lengths.push_back(r.length);
            plain_colors.push_back(r.color);
        }
    }
    return CharacteristicDecomposition{
        MarkedColoredPartition(std::move(marked), n),
        ColoredPartition(Partition(std::move(plain_lengths)), std::move(plain_colors), n)};
}

MarkedColoredPartition reduce_colors(const MarkedColoredPartition& mcp, int k) {
    int n = mcp.modulus();
    if (k < 1 || n % k != 0)
        throw std::invalid_argument("reduce_colors: k must divide the modulus");
    std::vector<MarkedRow> rows = mcp.rows();
    for (MarkedRow& r : rows) r.color %= k;
    return MarkedColoredPartition(std::move(rows), k);
}

std::ostream& operator<<(std::ostream& os, const OrbitClass& oc) {
    os << "{n=" << oc.modulus() << (oc.zero_vector() ? " v=0 " : " ");
    for (size_t i = 0; i < oc.rows().size(); ++i) {
        const MarkedRow& r = oc.rows()[i];
        if (i) os << ' ';
        os << r.length << ':' << r.color << '@' << r.mark;
    }
    return os << '}';
}

}  // namespace quiver
