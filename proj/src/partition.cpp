#include "quiver/partition.hpp"

#include <stdexcept>

namespace quiver {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

long long Partition::size() const {
    long long s = 0;
    for (int p : parts_) s += p;
    return s;
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("Partition: row index must be >= 1");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::transpose() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
}

long long eta(const Partition& lambda) {
    long long s = 0;
    const auto& parts = lambda.parts();
    for (size_t i = 0; i < parts.size(); ++i) s += static_cast<long long>(i) * parts[i];
    return s;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        gen_partitions(remaining - p, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> all_partitions(int size) {
    if (size < 0) throw std::invalid_argument("all_partitions: negative size");
    std::vector<Partition> out;
    std::vector<int> current;
    gen_partitions(size, size == 0 ? 1 : size, current, out);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(';
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i) os << ',';
        os << p.parts()[i];
    }
    return os << ')';
}

}  // namespace quiver
