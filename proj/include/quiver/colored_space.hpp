#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "quiver/colored_partition.hpp"
#include "quiver/matrix.hpp"
#include "quiver/signature.hpp"

namespace quiver {

// An n-colored vector space V = V_0 + ... + V_{n-1}, described by its
// dimension vector.  Full-space coordinates list the color blocks in order.
class ColoredSpace {
public:
    ColoredSpace() : dims_(1) {}
    explicit ColoredSpace(Signature dims) : dims_(std::move(dims)) {}

    int colors() const { return dims_.colors(); }
    const Signature& dims() const { return dims_; }
    int dim(int color) const { return static_cast<int>(dims_.at(color)); }
    int total_dim() const { return static_cast<int>(dims_.size()); }

    int offset(int color) const {
        int n = colors();
        int c = ((color % n) + n) % n;
        int off = 0;
        for (int i = 0; i < c; ++i) off += dim(i);
        return off;
    }

    bool operator==(const ColoredSpace& o) const { return dims_ == o.dims_; }

private:
    Signature dims_;
};

// A colored vector: zero, or an element of a single V_color.
template <class F>
struct ColoredVector {
    using Element = typename F::Element;

    std::optional<int> color;       // absent encodes the zero vector
    std::vector<Element> coords;    // coordinates in V_color; empty when zero

    bool is_zero() const { return !color.has_value(); }

    std::vector<Element> to_full(const F& fld, const ColoredSpace& space) const {
        std::vector<Element> full(static_cast<size_t>(space.total_dim()), fld.zero());
        if (!color) return full;
        int off = space.offset(*color);
        for (size_t i = 0; i < coords.size(); ++i) full[off + i] = coords[i];
        return full;
    }
};

template <class F>
ColoredVector<F> zero_vector() { return ColoredVector<F>{std::nullopt, {}}; }

// Rebuild a ColoredVector from full coordinates; throws std::domain_error
// if the vector is supported on more than one color block.
template <class F>
ColoredVector<F> colored_from_full(const F& fld, const ColoredSpace& space,
                                   const std::vector<typename F::Element>& full) {
    std::optional<int> color;
    for (int c = 0; c < space.colors(); ++c) {
        int off = space.offset(c);
        for (int i = 0; i < space.dim(c); ++i) {
            if (fld.is_zero(full[off + i])) continue;
            if (color && *color != c)
                throw std::domain_error("vector is not colored");
            color = c;
        }
    }
    if (!color) return zero_vector<F>();
    ColoredVector<F> v;
    v.color = color;
    int off = space.offset(*color);
    v.coords.assign(full.begin() + off, full.begin() + off + space.dim(*color));
    return v;
}

// A colored nilpotent endomorphism, given per color by its block
// V_i -> V_{i+1}.  blocks[i] has shape dim(i+1) x dim(i).
template <class F>
class BlockNilpotent {
public:
    using Element = typename F::Element;

    BlockNilpotent(F fld, ColoredSpace space)
        : fld_(fld), space_(std::move(space)) {
        for (int i = 0; i < space_.colors(); ++i)
            blocks_.emplace_back(fld_, space_.dim(i + 1), space_.dim(i));
    }
    BlockNilpotent(F fld, ColoredSpace space, std::vector<Matrix<F>> blocks)
        : fld_(fld), space_(std::move(space)), blocks_(std::move(blocks)) {
        if (static_cast<int>(blocks_.size()) != space_.colors())
            throw std::invalid_argument("BlockNilpotent: one block per color required");
        for (int i = 0; i < space_.colors(); ++i)
            if (blocks_[i].rows() != space_.dim(i + 1) || blocks_[i].cols() != space_.dim(i))
                throw std::invalid_argument("BlockNilpotent: block shape mismatch");
    }

    const F& field() const { return fld_; }
    const ColoredSpace& space() const { return space_; }
    int colors() const { return space_.colors(); }

    Matrix<F>& block(int color) { return blocks_[index(color)]; }
    const Matrix<F>& block(int color) const { return blocks_[index(color)]; }

    // full total_dim x total_dim endomorphism
    Matrix<F> assembled() const {
        int N = space_.total_dim();
        Matrix<F> m(fld_, N, N);
        for (int c = 0; c < colors(); ++c) {
            int src = space_.offset(c);
            int dst = space_.offset(c + 1);
            const Matrix<F>& b = blocks_[c];
            for (int r = 0; r < b.rows(); ++r)
                for (int s = 0; s < b.cols(); ++s) m.at(dst + r, src + s) = b.at(r, s);
        }
        return m;
    }

    // x^k restricted to V_color, a dim(color+k) x dim(color) matrix
    Matrix<F> power_on_color(int k, int color) const {
        Matrix<F> m = Matrix<F>::identity(fld_, space_.dim(color));
        for (int t = 0; t < k; ++t) m = block(color + t) * m;
        return m;
    }

    bool is_nilpotent() const {
        int N = space_.total_dim();
        if (N == 0) return true;
        Matrix<F> p = assembled();
        for (int k = 1; k < N; ++k) {
            if (p.is_zero()) return true;
            p = p * assembled();
        }
        return p.is_zero();
    }

private:
    int index(int color) const {
        int n = colors();
        return ((color % n) + n) % n;
    }

    F fld_;
    ColoredSpace space_;
    std::vector<Matrix<F>> blocks_;
};

// A labeled colored Jordan basis {v_{i,j}} of type (lambda, epsilon):
// chains[i][j-1] holds v_{i,j} in full coordinates, x v_{i,j} = v_{i,j-1},
// x v_{i,1} = 0, and chi(v_{i,j}) = epsilon_i + [lambda_i - j].
template <class F>
struct JordanBasisData {
    ColoredPartition type;
    std::vector<std::vector<std::vector<typename F::Element>>> chains;
};

// Exact check of all three JordanBasisData invariants.
template <class F>
bool verify_jordan_basis(const BlockNilpotent<F>& x, const JordanBasisData<F>& data) {
    const F& fld = x.field();
    const ColoredSpace& space = x.space();
    int N = space.total_dim();
    const ColoredPartition& type = data.type;
    if (static_cast<int>(data.chains.size()) != type.length()) return false;
    if (type.size() != N) return false;
    if (signature(type) != space.dims()) return false;

    Matrix<F> xm = x.assembled();
    std::vector<std::vector<typename F::Element>> all;
    for (int i = 1; i <= type.length(); ++i) {
        const auto& chain = data.chains[i - 1];
        int len = type.row_length(i);
        if (static_cast<int>(chain.size()) != len) return false;
        for (int j = 1; j <= len; ++j) {
            const auto& v = chain[j - 1];
            if (static_cast<int>(v.size()) != N) return false;
            // color condition (also rejects the zero vector)
            try {
                ColoredVector<F> cv = colored_from_full(fld, space, v);
                if (cv.is_zero()) return false;
                CyclicColor expect = box_color(type, i, j);
                if (*cv.color != expect.rep()) return false;
            } catch (const std::domain_error&) {
                return false;
            }
            // chain condition
            std::vector<typename F::Element> img = xm.apply(v);
            const std::vector<typename F::Element>* want = nullptr;
            std::vector<typename F::Element> zero(static_cast<size_t>(N), fld.zero());
            want = (j == 1) ? &zero : &chain[j - 2];
            for (int t = 0; t < N; ++t)
                if (!fld.eq(img[t], (*want)[t])) return false;
            all.push_back(v);
        }
    }
    if (static_cast<int>(all.size()) != N) return false;
    return span_rank(fld, all) == N;
}

}  // namespace quiver
