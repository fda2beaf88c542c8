#pragma once

#include <stdexcept>

namespace quiver {

// A residue class in Z/n, the color group of a cyclic quiver of order n.
// Colors are always reduced to the smallest nonnegative representative.
class CyclicColor {
public:
    CyclicColor(long long value, int modulus) : n_(modulus) {
        if (modulus <= 0)
            throw std::invalid_argument("CyclicColor: modulus must be positive");
        long long r = value % modulus;
        if (r < 0) r += modulus;
        r_ = static_cast<int>(r);
    }

    // smallest nonnegative representative
    int rep() const { return r_; }
    int modulus() const { return n_; }

    CyclicColor operator+(long long k) const { return CyclicColor(r_ + k, n_); }
    CyclicColor operator-(long long k) const { return CyclicColor(r_ - k, n_); }

    CyclicColor operator+(const CyclicColor& o) const {
        require_same(o);
        return CyclicColor(r_ + o.r_, n_);
    }
    CyclicColor operator-(const CyclicColor& o) const {
        require_same(o);
        return CyclicColor(static_cast<long long>(r_) - o.r_, n_);
    }

    // the cyclic graph's edge map, sigma(i) = i + 1
    CyclicColor successor() const { return *this + 1; }

    bool operator==(const CyclicColor& o) const {
        require_same(o);
        return r_ == o.r_;
    }
    bool operator!=(const CyclicColor& o) const { return !(*this == o); }
    bool operator<(const CyclicColor& o) const {
        require_same(o);
        return r_ < o.r_;
    }

private:
    void require_same(const CyclicColor& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("CyclicColor: modulus mismatch");
    }

    int r_;
    int n_;
};

// smallest nonnegative representative of a color
inline int rep(const CyclicColor& c) { return c.rep(); }

}  // namespace quiver
