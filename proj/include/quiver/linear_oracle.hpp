#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quiver/colored_space.hpp"
#include "quiver/marking_calculus.hpp"
#include "quiver/matrix.hpp"

namespace quiver {

// ---------------------------------------------------------------------------
// representatives

template <class F>
struct Representative {
    ColoredVector<F> vector;
    BlockNilpotent<F> x;
    JordanBasisData<F> basis;
};

// The standard-coordinates representative of a marked colored partition:
// one basis vector per box, x shifts each box one column left, and the
// enhancing vector is the sum of the marked boxes.  All positively marked
// boxes must share one color (otherwise the pair leaves the enhanced cone);
// throws std::domain_error if they do not.
template <class F>
Representative<F> build_representative(const MarkedColoredPartition& mcp, const F& fld) {
    int n = mcp.modulus();
    ColoredPartition cp = mcp.base();
    ColoredSpace space(signature(cp));
    int N = space.total_dim();

    // box (i, j) -> index within its color block, scan order (i, j)
    std::vector<std::vector<int>> box_index(static_cast<size_t>(cp.length()));
    std::vector<int> used(static_cast<size_t>(n), 0);
    for (int i = 1; i <= cp.length(); ++i) {
        box_index[i - 1].resize(static_cast<size_t>(cp.row_length(i)));
        for (int j = 1; j <= cp.row_length(i); ++j) {
            int c = box_color(cp, i, j).rep();
            box_index[i - 1][j - 1] = used[c]++;
        }
    }
    auto full_unit = [&](int i, int j) {
        std::vector<typename F::Element> v(static_cast<size_t>(N), fld.zero());
        int c = box_color(cp, i, j).rep();
        v[space.offset(c) + box_index[i - 1][j - 1]] = fld.one();
        return v;
    };

    BlockNilpotent<F> x(fld, space);
    for (int i = 1; i <= cp.length(); ++i)
        for (int j = 2; j <= cp.row_length(i); ++j) {
            int c = box_color(cp, i, j).rep();
            x.block(c).at(box_index[i - 1][j - 2], box_index[i - 1][j - 1]) = fld.one();
        }

    ColoredVector<F> v = zero_vector<F>();
    for (int i = 1; i <= mcp.length(); ++i) {
        int mu = mcp.row(i).mark;
        if (mu < 1) continue;
        int c = box_color(cp, i, mu).rep();
        if (v.is_zero()) {
            v.color = c;
            v.coords.assign(static_cast<size_t>(space.dim(c)), fld.zero());
        } else if (*v.color != c) {
            throw std::domain_error(
                "build_representative: marked boxes span several colors");
        }
        v.coords[box_index[i - 1][mu - 1]] = fld.one();
    }

    JordanBasisData<F> basis;
    basis.type = cp;
    for (int i = 1; i <= cp.length(); ++i) {
        std::vector<std::vector<typename F::Element>> chain;
        for (int j = 1; j <= cp.row_length(i); ++j) chain.push_back(full_unit(i, j));
        basis.chains.push_back(std::move(chain));
    }
    return Representative<F>{std::move(v), std::move(x), std::move(basis)};
}

// ---------------------------------------------------------------------------
// Jordan data from raw matrices

struct JordanType {
    ColoredPartition type;
    // s_k = signature of ker x^k, k = 1 .. lambda_1; stabilizes at xi(V)
    std::vector<Signature> column_signatures;
};

// Colored Jordan type of a nilpotent x: the k-th column of the diagram per
// color is dim ker x^k - dim ker x^{k-1}, refined by s_k; the rows are
// reassembled from the columns (colors step by +1 leftward).
// Throws std::domain_error if x is not nilpotent.
template <class F>
JordanType jordan_type(const BlockNilpotent<F>& x) {
    const ColoredSpace& space = x.space();
    int n = space.colors();
    int N = space.total_dim();

    JordanType out;
    std::vector<Signature>& s = out.column_signatures;
    for (int k = 1; N > 0; ++k) {
        Signature sk(n);
        for (int c = 0; c < n; ++c)
            sk.add(c, space.dim(c) - x.power_on_color(k, c).rank());
        // kernels of a nilpotent strictly grow until they fill V
        if ((k > 1 && sk == s.back()) || k > N)
            throw std::domain_error("jordan_type: x is not nilpotent");
        s.push_back(sk);
        if (sk == space.dims()) break;
    }

    int top = static_cast<int>(s.size());
    auto column_count = [&](int k, int m) -> long long {
        if (k < 1 || k > top) return 0;
        long long prev = (k >= 2) ? s[k - 2].at(m) : 0;
        return s[k - 1].at(m) - prev;
    };

    std::vector<int> lengths;
    std::vector<int> colors;
    for (int k = top; k >= 1; --k)
        for (int m = 0; m < n; ++m) {
            long long rows = column_count(k, m) - column_count(k + 1, m - 1);
            if (rows < 0) throw std::logic_error("jordan_type: inconsistent column counts");
            for (long long r = 0; r < rows; ++r) {
                lengths.push_back(k);
                colors.push_back(m);
            }
        }
    out.type = ColoredPartition(Partition(lengths), colors, n);
    return out;
}

// Mutually reduced row space with O(dim) membership tests.
template <class F>
class IncrementalSpan {
public:
    using Element = typename F::Element;

    IncrementalSpan(F fld, int ambient) : fld_(fld), ambient_(ambient) {}

    int dim() const { return static_cast<int>(rows_.size()); }

    bool contains(std::vector<Element> v) const {
        reduce(v);
        for (const Element& e : v)
            if (!fld_.is_zero(e)) return false;
        return true;
    }

    // returns true when v enlarged the span
    bool add(std::vector<Element> v) {
        reduce(v);
        int pivot = -1;
        for (int i = 0; i < ambient_; ++i)
            if (!fld_.is_zero(v[i])) { pivot = i; break; }
        if (pivot < 0) return false;
        Element inv = fld_.inv(v[pivot]);
        for (Element& e : v) e = fld_.mul(e, inv);
        for (size_t r = 0; r < rows_.size(); ++r) {
            Element f = rows_[r][pivot];
            if (fld_.is_zero(f)) continue;
            for (int i = 0; i < ambient_; ++i)
                rows_[r][i] = fld_.sub(rows_[r][i], fld_.mul(f, v[i]));
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

private:
    void reduce(std::vector<Element>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            Element f = v[pivots_[r]];
            if (fld_.is_zero(f)) continue;
            for (int i = 0; i < ambient_; ++i)
                v[i] = fld_.sub(v[i], fld_.mul(f, rows_[r][i]));
        }
    }

    F fld_;
    int ambient_;
    std::vector<std::vector<Element>> rows_;
    std::vector<int> pivots_;
};

// A colored Jordan basis for a nilpotent x, by descending the kernel
// filtration: chain tops of length k are colored vectors completing
// ker x^{k-1} + x^(l-k)·(tops of length l > k) to ker x^k, chosen per color
// so every basis vector is colored.
template <class F>
JordanBasisData<F> colored_jordan_basis(const BlockNilpotent<F>& x) {
    const F& fld = x.field();
    const ColoredSpace& space = x.space();
    int n = space.colors();
    int N = space.total_dim();

    JordanType jt = jordan_type(x);  // also rejects non-nilpotent input
    int top_len = jt.type.empty() ? 0 : jt.type.row_length(1);
    Matrix<F> xm = x.assembled();

    // kernel bases of x^k restricted to each color, as full vectors
    auto kernel_full = [&](int k, int c) {
        std::vector<std::vector<typename F::Element>> out;
        for (auto& ker : x.power_on_color(k, c).kernel_basis()) {
            std::vector<typename F::Element> full(static_cast<size_t>(N), fld.zero());
            for (size_t i = 0; i < ker.size(); ++i) full[space.offset(c) + i] = ker[i];
            out.push_back(std::move(full));
        }
        return out;
    };

    struct Top {
        int length;
        int color;
        std::vector<typename F::Element> v;
    };
    std::vector<Top> tops;

    for (int k = top_len; k >= 1; --k) {
        IncrementalSpan<F> span(fld, N);
        if (k >= 2)
            for (int c = 0; c < n; ++c)
                for (auto& v : kernel_full(k - 1, c)) span.add(std::move(v));
        for (const Top& t : tops) {
            std::vector<typename F::Element> v = t.v;
            for (int s = 0; s < t.length - k; ++s) v = xm.apply(v);
            span.add(std::move(v));
        }
        for (int c = 0; c < n; ++c)
            for (auto& v : kernel_full(k, c)) {
                std::vector<typename F::Element> copy = v;
                if (span.add(std::move(copy))) tops.push_back(Top{k, c, std::move(v)});
            }
    }

    std::stable_sort(tops.begin(), tops.end(), [](const Top& a, const Top& b) {
        if (a.length != b.length) return a.length > b.length;
        return a.color < b.color;
    });

    JordanBasisData<F> data;
    std::vector<int> lengths;
    std::vector<int> colors;
    for (const Top& t : tops) {
        lengths.push_back(t.length);
        colors.push_back(t.color);
        std::vector<std::vector<typename F::Element>> chain(static_cast<size_t>(t.length));
        chain[t.length - 1] = t.v;
        for (int j = t.length - 1; j >= 1; --j) chain[j - 1] = xm.apply(chain[j]);
        data.chains.push_back(std::move(chain));
    }
    data.type = ColoredPartition(Partition(lengths), colors, n);
    if (data.type.size() != N)
        throw std::logic_error("colored_jordan_basis: chains do not span");
    return data;
}

// ---------------------------------------------------------------------------
// classification of pairs

// The colored n-bipartition class of the K-orbit of (v, x): express v per
// Jordan block, read off the top coordinate as the mark, force empty blocks
// into the class of v, and normalize.  For v = 0 this is the zero-vector
// class of the colored Jordan type of x.
template <class F>
OrbitClass classify_pair(const ColoredVector<F>& v, const BlockNilpotent<F>& x) {
    const F& fld = x.field();
    const ColoredSpace& space = x.space();
    int n = space.colors();
    int N = space.total_dim();

    JordanBasisData<F> jb = colored_jordan_basis(x);
    const ColoredPartition& type = jb.type;

    std::vector<int> zero_marks(static_cast<size_t>(type.length()), 0);
    if (v.is_zero())
        return to_orbit_class(
            MarkedColoredPartition(type.shape(), type.colors(), zero_marks, n));

    CyclicColor m(*v.color, n);
    Matrix<F> basis(fld, N, N);
    std::vector<std::pair<int, int>> column_box;  // (chain, j)
    {
        int col = 0;
        for (int i = 0; i < type.length(); ++i)
            for (int j = 1; j <= type.row_length(i + 1); ++j, ++col) {
                column_box.emplace_back(i, j);
                const auto& vec = jb.chains[i][j - 1];
                for (int r = 0; r < N; ++r) basis.at(r, col) = vec[r];
            }
    }
    auto coords = basis.solve(v.to_full(fld, space));
    if (!coords) throw std::logic_error("classify_pair: jordan basis is singular");

    std::vector<int> marks(static_cast<size_t>(type.length()), 0);
    std::vector<bool> seen(static_cast<size_t>(type.length()), false);
    for (int col = 0; col < N; ++col) {
        if (fld.is_zero((*coords)[col])) continue;
        auto [chain, j] = column_box[col];
        if (!seen[chain] || j > marks[chain]) marks[chain] = j;
        seen[chain] = true;
    }
    for (int i = 0; i < type.length(); ++i) {
        if (seen[i]) continue;
        // unique mark in (-n, 0] placing the row's wall in class m
        int r = rep(CyclicColor(type.row_length(i + 1) + type.row_color(i + 1).rep(), n) - m);
        marks[i] = (r == 0) ? 0 : r - n;
    }
    MarkedColoredPartition mcp(type.shape(), type.colors(), marks, n);
    return to_orbit_class(normalize(mcp, m));
}

// ---------------------------------------------------------------------------
// commutants and stabilizers

// Basis of the commutant E^x = {y : yx = xy}, or of its color-preserving
// subalgebra F^x = {y in E^x : y V_i <= V_i}, as nullspace matrices of the
// linear system.
template <class F>
std::vector<Matrix<F>> commutant_basis(const BlockNilpotent<F>& x, bool color_preserving) {
    const F& fld = x.field();
    const ColoredSpace& space = x.space();
    int N = space.total_dim();
    Matrix<F> xm = x.assembled();

    // variables: entry positions of y
    std::vector<std::pair<int, int>> vars;
    std::map<std::pair<int, int>, int> var_index;
    auto color_of = [&](int idx) {
        for (int c = 0; c < space.colors(); ++c)
            if (idx < space.offset(c) + space.dim(c)) return c;
        throw std::logic_error("bad index");
    };
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            if (color_preserving && color_of(r) != color_of(c)) continue;
            var_index[{r, c}] = static_cast<int>(vars.size());
            vars.emplace_back(r, c);
        }

    // equations: (x y - y x)_{ab} = 0
    std::vector<std::vector<typename F::Element>> eqs;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            std::vector<typename F::Element> row(vars.size(), fld.zero());
            bool nonzero = false;
            for (int t = 0; t < N; ++t) {
                if (!fld.is_zero(xm.at(a, t))) {
                    auto it = var_index.find({t, b});
                    if (it != var_index.end()) {
                        row[it->second] = fld.add(row[it->second], xm.at(a, t));
                        nonzero = true;
                    }
                }
                if (!fld.is_zero(xm.at(t, b))) {
                    auto it = var_index.find({a, t});
                    if (it != var_index.end()) {
                        row[it->second] = fld.sub(row[it->second], xm.at(t, b));
                        nonzero = true;
                    }
                }
            }
            if (nonzero) eqs.push_back(std::move(row));
        }

    Matrix<F> system(fld, static_cast<int>(eqs.size()), static_cast<int>(vars.size()));
    for (size_t r = 0; r < eqs.size(); ++r)
        for (size_t c = 0; c < vars.size(); ++c)
            system.at(static_cast<int>(r), static_cast<int>(c)) = eqs[r][c];

    std::vector<Matrix<F>> out;
    for (auto& sol : system.kernel_basis()) {
        Matrix<F> y(fld, N, N);
        for (size_t i = 0; i < vars.size(); ++i) y.at(vars[i].first, vars[i].second) = sol[i];
        out.push_back(std::move(y));
    }
    return out;
}

// (dim E^x, dim F^x) from the nullspace ranks of the commutation system.
template <class F>
std::pair<long long, long long> commutant_dims(const BlockNilpotent<F>& x) {
    return {static_cast<long long>(commutant_basis(x, false).size()),
            static_cast<long long>(commutant_basis(x, true).size())};
}

// (dim E^x v, dim F^x v): ranks of the commutant bases applied to v.
template <class F>
std::pair<long long, long long> commutant_span_dims(const ColoredVector<F>& v,
                                                    const BlockNilpotent<F>& x) {
    const F& fld = x.field();
    auto full = v.to_full(fld, x.space());
    std::pair<long long, long long> out{0, 0};
    if (v.is_zero()) return out;
    for (bool color_preserving : {false, true}) {
        std::vector<std::vector<typename F::Element>> images;
        for (auto& y : commutant_basis(x, color_preserving)) images.push_back(y.apply(full));
        long long d = span_rank(fld, images);
        (color_preserving ? out.second : out.first) = d;
    }
    return out;
}

// dim of the K-orbit of (v, x): dim K - dim F^x + dim F^x v.
template <class F>
long long orbit_dimension(const ColoredVector<F>& v, const BlockNilpotent<F>& x) {
    const F& fld = x.field();
    const ColoredSpace& space = x.space();
    long long dim_k = 0;
    for (int c = 0; c < space.colors(); ++c)
        dim_k += static_cast<long long>(space.dim(c)) * space.dim(c);

    auto basis_f = commutant_basis(x, true);
    long long dim_f = static_cast<long long>(basis_f.size());
    long long dim_fv = 0;
    if (!v.is_zero()) {
        auto full = v.to_full(fld, space);
        std::vector<std::vector<typename F::Element>> images;
        for (auto& y : basis_f) images.push_back(y.apply(full));
        dim_fv = span_rank(fld, images);
    }
    return dim_k - dim_f + dim_fv;
}

// ---------------------------------------------------------------------------
// finite-field census

struct BudgetError : std::runtime_error {
    explicit BudgetError(double computed_work)
        : std::runtime_error("orbit census work estimate " + std::to_string(computed_work) +
                             " exceeds the configured budget"),
          work(computed_work) {}
    double work;
};

struct CensusResult {
    long long orbit_count = 0;
    std::vector<OrbitClass> labels;  // sorted; one per orbit
    long long pair_count = 0;
    double group_order = 0;
};

inline constexpr long long kDefaultCensusBudget = 200'000'000;

// Exhaustive K-orbit census of the enhanced colored nilpotent cone over F_q:
// enumerate every nilpotent colored x and every colored vector v, partition
// the pairs under the explicit action of K = prod GL(V_i, F_q), and label
// each orbit through classify_pair.  The work bound |K| * q^(#entries) * |V~|
// must stay within the budget (else BudgetError).
CensusResult orbit_census(const Signature& xi, int n, long long q,
                          long long budget = kDefaultCensusBudget);

}  // namespace quiver
