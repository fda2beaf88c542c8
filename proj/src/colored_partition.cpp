#include "quiver/colored_partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace quiver {

ColoredPartition::ColoredPartition(int modulus) : n_(modulus) {
    if (modulus <= 0)
        throw std::invalid_argument("ColoredPartition: modulus must be positive");
}

ColoredPartition::ColoredPartition(Partition shape, std::vector<int> colors, int modulus)
    : shape_(std::move(shape)), colors_(std::move(colors)), n_(modulus) {
    if (modulus <= 0)
        throw std::invalid_argument("ColoredPartition: modulus must be positive");
    if (static_cast<int>(colors_.size()) != shape_.length())
        throw std::invalid_argument("ColoredPartition: one color per nonzero row required");
    for (int& c : colors_) c = CyclicColor(c, n_).rep();
}

int ColoredPartition::row_length(int i) const {
    if (i < 1 || i > length())
        throw std::out_of_range("ColoredPartition: row index out of range");
    return shape_.parts()[i - 1];
}

CyclicColor ColoredPartition::row_color(int i) const {
    if (i < 1 || i > length())
        throw std::out_of_range("ColoredPartition: row index out of range");
    return CyclicColor(colors_[i - 1], n_);
}

namespace {

std::vector<std::pair<int, int>> sorted_rows(const ColoredPartition& cp) {
    std::vector<std::pair<int, int>> rows;
    for (int i = 1; i <= cp.length(); ++i)
        rows.emplace_back(cp.row_length(i), cp.row_color(i).rep());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    return rows;
}

}  // namespace

ColoredPartition ColoredPartition::canonical() const {
    auto rows = sorted_rows(*this);
    std::vector<int> lengths, colors;
    for (auto& [l, c] : rows) {
        lengths.push_back(l);
        colors.push_back(c);
    }
    return ColoredPartition(Partition(std::move(lengths)), std::move(colors), n_);
}

bool ColoredPartition::operator==(const ColoredPartition& o) const {
    return n_ == o.n_ && sorted_rows(*this) == sorted_rows(o);
}

bool ColoredPartition::operator<(const ColoredPartition& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    auto a = sorted_rows(*this);
    auto b = sorted_rows(o);
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
            return std::make_tuple(-x.first, x.second) < std::make_tuple(-y.first, y.second);
        });
}

CyclicColor box_color(const ColoredPartition& cp, int i, int j) {
    if (i < 1 || i > cp.length() || j < 1 || j > cp.row_length(i))
        throw std::out_of_range("box_color: box outside the diagram");
    return cp.row_color(i) + (cp.row_length(i) - j);
}

Signature signature(const ColoredPartition& cp) {
    int n = cp.modulus();
    Signature xi(n);
    for (int m = 0; m < n; ++m) {
        long long total = 0;
        for (int i = 1; i <= cp.length(); ++i) {
            int r = rep(CyclicColor(m, n) - cp.row_color(i));
            long long a = cp.row_length(i) - r;
            if (a > 0) total += (a + n - 1) / n;
        }
        xi.add(m, total);
    }
    return xi;
}

Signature column_signature(const ColoredPartition& cp, int k) {
    if (k < 1) throw std::invalid_argument("column_signature: k must be >= 1");
    Signature xi(cp.modulus());
    for (int i = 1; i <= cp.length(); ++i)
        for (int j = 1; j <= std::min(k, cp.row_length(i)); ++j)
            xi.add(box_color(cp, i, j).rep(), 1);
    return xi;
}

std::ostream& operator<<(std::ostream& os, const ColoredPartition& cp) {
    os << "{n=" << cp.modulus() << " ";
    for (int i = 1; i <= cp.length(); ++i) {
        if (i > 1) os << ' ';
        os << cp.row_length(i) << ':' << cp.row_color(i).rep();
    }
    return os << '}';
}

std::ostream& operator<<(std::ostream& os, const Signature& s) {
    os << '(';
    for (size_t i = 0; i < s.counts().size(); ++i) {
        if (i) os << ',';
        os << s.counts()[i];
    }
    return os << ')';
}

}  // namespace quiver
