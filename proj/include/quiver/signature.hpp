#pragma once

#include <ostream>
#include <stdexcept>
#include <vector>

#include "quiver/cyclic_color.hpp"

namespace quiver {

// A signature: function Z/n -> nonnegative integers.  Serves both as the
// dimension vector of a colored vector space and as the per-color box count
// of a colored Young diagram.
class Signature {
public:
    explicit Signature(int n) : counts_(static_cast<size_t>(require_n(n)), 0) {}
    Signature(std::initializer_list<long long> counts)
        : Signature(std::vector<long long>(counts)) {}
    explicit Signature(std::vector<long long> counts) : counts_(std::move(counts)) {
        require_n(static_cast<int>(counts_.size()));
        for (long long c : counts_)
            if (c < 0) throw std::invalid_argument("Signature: negative count");
    }

    int colors() const { return static_cast<int>(counts_.size()); }

    long long at(int m) const { return counts_[index(m)]; }
    long long at(const CyclicColor& c) const {
        if (c.modulus() != colors())
            throw std::invalid_argument("Signature: color modulus mismatch");
        return counts_[static_cast<size_t>(c.rep())];
    }

    void add(int m, long long delta) {
        long long& c = counts_[index(m)];
        c += delta;
        if (c < 0) throw std::invalid_argument("Signature: negative count");
    }

    long long size() const {
        long long s = 0;
        for (long long c : counts_) s += c;
        return s;
    }

    const std::vector<long long>& counts() const { return counts_; }

    Signature operator+(const Signature& o) const {
        require_match(o);
        Signature r = *this;
        for (size_t i = 0; i < counts_.size(); ++i) r.counts_[i] += o.counts_[i];
        return r;
    }

    // componentwise partial order
    bool operator<=(const Signature& o) const {
        require_match(o);
        for (size_t i = 0; i < counts_.size(); ++i)
            if (counts_[i] > o.counts_[i]) return false;
        return true;
    }

    bool operator==(const Signature& o) const { return counts_ == o.counts_; }
    bool operator!=(const Signature& o) const { return !(*this == o); }

private:
    static int require_n(int n) {
        if (n <= 0) throw std::invalid_argument("Signature: modulus must be positive");
        return n;
    }
    void require_match(const Signature& o) const {
        if (colors() != o.colors())
            throw std::invalid_argument("Signature: modulus mismatch");
    }
    size_t index(int m) const {
        int n = colors();
        int r = m % n;
        if (r < 0) r += n;
        return static_cast<size_t>(r);
    }

    std::vector<long long> counts_;
};

std::ostream& operator<<(std::ostream&, const Signature&);

}  // namespace quiver
