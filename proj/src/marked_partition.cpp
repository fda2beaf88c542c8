#include "quiver/marked_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace quiver {

namespace {

// reduce a nonpositive mark into the canonical range (-n, 0], keeping its residue
int canonical_mark(int mark, int length, int n) {
    if (mark > length)
        throw std::invalid_argument("MarkedColoredPartition: mark exceeds row length");
    if (mark > 0) return mark;
    int s = ((mark % n) + n) % n;
    return s == 0 ? 0 : s - n;
}

}  // namespace

MarkedColoredPartition::MarkedColoredPartition(int modulus) : n_(modulus) {
    if (modulus <= 0)
        throw std::invalid_argument("MarkedColoredPartition: modulus must be positive");
}

MarkedColoredPartition::MarkedColoredPartition(Partition shape, std::vector<int> colors,
                                               std::vector<int> marks, int modulus)
    : n_(modulus) {
    if (modulus <= 0)
        throw std::invalid_argument("MarkedColoredPartition: modulus must be positive");
    if (static_cast<int>(colors.size()) != shape.length() ||
        static_cast<int>(marks.size()) != shape.length())
        throw std::invalid_argument(
            "MarkedColoredPartition: one color and one mark per nonzero row required");
    for (int i = 0; i < shape.length(); ++i)
        rows_.push_back(MarkedRow{shape.parts()[i], CyclicColor(colors[i], n_).rep(),
                                  canonical_mark(marks[i], shape.parts()[i], n_)});
}

MarkedColoredPartition::MarkedColoredPartition(std::vector<MarkedRow> rows, int modulus)
    : n_(modulus) {
    if (modulus <= 0)
        throw std::invalid_argument("MarkedColoredPartition: modulus must be positive");
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].length <= 0)
            throw std::invalid_argument("MarkedColoredPartition: row lengths must be positive");
        if (i > 0 && rows[i].length > rows[i - 1].length)
            throw std::invalid_argument(
                "MarkedColoredPartition: row lengths must be weakly decreasing");
        rows_.push_back(MarkedRow{rows[i].length, CyclicColor(rows[i].color, n_).rep(),
                                  canonical_mark(rows[i].mark, rows[i].length, n_)});
    }
}

long long MarkedColoredPartition::size() const {
    long long s = 0;
    for (const MarkedRow& r : rows_) s += r.length;
    return s;
}

const MarkedRow& MarkedColoredPartition::row(int i) const {
    if (i < 1 || i > length())
        throw std::out_of_range("MarkedColoredPartition: row index out of range");
    return rows_[i - 1];
}

ColoredPartition MarkedColoredPartition::base() const {
    std::vector<int> lengths, colors;
    for (const MarkedRow& r : rows_) {
        lengths.push_back(r.length);
        colors.push_back(r.color);
    }
    return ColoredPartition(Partition(std::move(lengths)), std::move(colors), n_);
}

std::vector<int> MarkedColoredPartition::marks() const {
    std::vector<int> m;
    for (const MarkedRow& r : rows_) m.push_back(r.mark);
    return m;
}

std::vector<int> MarkedColoredPartition::complements() const {
    std::vector<int> nu;
    for (const MarkedRow& r : rows_) nu.push_back(r.length - r.mark);
    return nu;
}

bool canonical_row_less(const MarkedRow& a, const MarkedRow& b) {
    if (a.length != b.length) return a.length > b.length;
    if (a.color != b.color) return a.color < b.color;
    return a.mark > b.mark;
}

namespace {

std::vector<MarkedRow> canonical_rows(const MarkedColoredPartition& mcp) {
    std::vector<MarkedRow> rows = mcp.rows();
    std::sort(rows.begin(), rows.end(), canonical_row_less);
    return rows;
}

}  // namespace

MarkedColoredPartition canonical_form(const MarkedColoredPartition& mcp) {
    return MarkedColoredPartition(canonical_rows(mcp), mcp.modulus());
}

bool MarkedColoredPartition::operator==(const MarkedColoredPartition& o) const {
    return n_ == o.n_ && canonical_rows(*this) == canonical_rows(o);
}

bool MarkedColoredPartition::operator<(const MarkedColoredPartition& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    auto a = canonical_rows(*this);
    auto b = canonical_rows(o);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        canonical_row_less);
}

MarkingClassification classify_marking(const MarkedColoredPartition& mcp) {
    int n = mcp.modulus();
    const auto& rows = mcp.rows();
    int l = static_cast<int>(rows.size());

    MarkingClassification out;
    out.is_bipartition = true;
    out.is_n_bipartition = true;
    out.is_generalized_n_bipartition = true;

    std::vector<int> cls(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) {
        int nu = rows[i].length - rows[i].mark;
        cls[i] = CyclicColor(rows[i].color + nu, n).rep();
        if (rows[i].mark < 0) out.is_bipartition = false;
    }
    for (int i = 0; i + 1 < l && out.is_bipartition; ++i) {
        if (rows[i + 1].mark > rows[i].mark) out.is_bipartition = false;
        if (rows[i + 1].length - rows[i + 1].mark > rows[i].length - rows[i].mark)
            out.is_bipartition = false;
    }
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            bool bounded = rows[j].mark < rows[i].mark + n &&
                           (rows[j].length - rows[j].mark) < (rows[i].length - rows[i].mark) + n;
            if (!bounded) {
                out.is_n_bipartition = false;
                if (cls[i] == cls[j]) out.is_generalized_n_bipartition = false;
            }
        }

    bool one_class = true;
    for (int i = 1; i < l; ++i)
        if (cls[i] != cls[0]) one_class = false;
    out.is_colored_n_bipartition = out.is_n_bipartition && one_class;

    std::optional<CyclicColor> cc;
    bool positive_agree = true;
    for (int i = 0; i < l; ++i) {
        if (rows[i].mark < 1) continue;
        if (!cc)
            cc = CyclicColor(cls[i], n);
        else if (cc->rep() != cls[i])
            positive_agree = false;
    }
    if (positive_agree) out.class_color = cc;
    return out;
}

Signature signature(const MarkedColoredPartition& mcp) { return signature(mcp.base()); }

std::ostream& operator<<(std::ostream& os, const MarkedColoredPartition& mcp) {
    os << "{n=" << mcp.modulus() << " ";
    for (int i = 1; i <= mcp.length(); ++i) {
        const MarkedRow& r = mcp.row(i);
        if (i > 1) os << ' ';
        os << r.length << ':' << r.color << '@' << r.mark;
    }
    return os << '}';
}

}  // namespace quiver
