#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace quiver {

// Dense matrix over an exact field.  The field context travels with the
// matrix so the same code serves the rationals and prime fields.
template <class F>
class Matrix {
public:
    using Element = typename F::Element;

    Matrix() : fld_(), rows_(0), cols_(0) {}
    Matrix(F fld, int rows, int cols)
        : fld_(fld), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * cols, fld.zero()) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative size");
    }

    static Matrix identity(F fld, int n) {
        Matrix m(fld, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = fld.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const F& field() const { return fld_; }

    Element& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Element& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const {
        for (const Element& e : a_)
            if (!fld_.is_zero(e)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (!fld_.eq(a_[i], o.a_[i])) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(fld_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Element& aik = at(i, k);
                if (fld_.is_zero(aik)) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (fld_.is_zero(o.at(k, j))) continue;
                    r.at(i, j) = fld_.add(r.at(i, j), fld_.mul(aik, o.at(k, j)));
                }
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch in sum");
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = fld_.add(r.a_[i], o.a_[i]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch in difference");
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = fld_.sub(r.a_[i], o.a_[i]);
        return r;
    }

    std::vector<Element> apply(const std::vector<Element>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("Matrix: vector length mismatch");
        std::vector<Element> r(static_cast<size_t>(rows_), fld_.zero());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!fld_.is_zero(at(i, j)) && !fld_.is_zero(v[j]))
                    r[i] = fld_.add(r[i], fld_.mul(at(i, j), v[j]));
        return r;
    }

    // Row echelon reduction in place; returns pivot column indices.
    std::vector<int> reduce() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int r = row; r < rows_; ++r)
                if (!fld_.is_zero(at(r, col))) { p = r; break; }
            if (p < 0) continue;
            if (p != row)
                for (int c = 0; c < cols_; ++c) std::swap(at(p, c), at(row, c));
            Element inv = fld_.inv(at(row, col));
            for (int c = 0; c < cols_; ++c) at(row, c) = fld_.mul(at(row, c), inv);
            for (int r = 0; r < rows_; ++r) {
                if (r == row || fld_.is_zero(at(r, col))) continue;
                Element f = at(r, col);
                for (int c = 0; c < cols_; ++c)
                    at(r, c) = fld_.sub(at(r, c), fld_.mul(f, at(row, c)));
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        Matrix m = *this;
        return static_cast<int>(m.reduce().size());
    }

    // Basis of the right kernel {v : Av = 0}, one vector per free column.
    std::vector<std::vector<Element>> kernel_basis() const {
        Matrix m = *this;
        std::vector<int> pivots = m.reduce();
        std::vector<int> pivot_of_col(cols_, -1);
        for (size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = static_cast<int>(i);
        std::vector<std::vector<Element>> basis;
        for (int free = 0; free < cols_; ++free) {
            if (pivot_of_col[free] >= 0) continue;
            std::vector<Element> v(static_cast<size_t>(cols_), fld_.zero());
            v[free] = fld_.one();
            for (int col = 0; col < cols_; ++col) {
                int pr = pivot_of_col[col];
                if (pr >= 0) v[col] = fld_.neg(m.at(pr, free));
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // One solution of Ax = b, or nullopt if inconsistent.
    std::optional<std::vector<Element>> solve(const std::vector<Element>& b) const {
        if (static_cast<int>(b.size()) != rows_)
            throw std::invalid_argument("Matrix: rhs length mismatch");
        Matrix aug(fld_, rows_, cols_ + 1);
        for (int r = 0; r < rows_; ++r) {
            for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
            aug.at(r, cols_) = b[r];
        }
        std::vector<int> pivots = aug.reduce();
        for (int p : pivots)
            if (p == cols_) return std::nullopt;
        std::vector<Element> x(static_cast<size_t>(cols_), fld_.zero());
        for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), cols_);
        return x;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: inverse of non-square");
        Matrix aug(fld_, rows_, 2 * cols_);
        for (int r = 0; r < rows_; ++r) {
            for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
            aug.at(r, cols_ + r) = fld_.one();
        }
        std::vector<int> pivots = aug.reduce();
        if (static_cast<int>(pivots.size()) != rows_) return std::nullopt;
        for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
            if (pivots[i] != i) return std::nullopt;
        Matrix inv(fld_, rows_, cols_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
        return inv;
    }

private:
    F fld_;
    int rows_, cols_;
    std::vector<Element> a_;
};

// rank of the column span of a list of vectors
template <class F>
int span_rank(const F& fld, const std::vector<std::vector<typename F::Element>>& vecs) {
    if (vecs.empty()) return 0;
    Matrix<F> m(fld, static_cast<int>(vecs[0].size()), static_cast<int>(vecs.size()));
    for (size_t j = 0; j < vecs.size(); ++j)
        for (size_t i = 0; i < vecs[j].size(); ++i)
            m.at(static_cast<int>(i), static_cast<int>(j)) = vecs[j][i];
    return m.rank();
}

}  // namespace quiver
