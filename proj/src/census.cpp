#include <cmath>
#include <map>
#include <numeric>

#include "quiver/exact.hpp"
#include "quiver/linear_oracle.hpp"

namespace quiver {

namespace {

using FF = PrimeField;
using FMat = Matrix<FF>;

// all rows x cols matrices over F_q, odometer order
std::vector<FMat> all_matrices(const FF& fld, int rows, int cols) {
    long long q = fld.modulus();
    std::vector<FMat> out;
    std::vector<long long> entries(static_cast<size_t>(rows) * cols, 0);
    while (true) {
        FMat m(fld, rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = entries[static_cast<size_t>(r) * cols + c];
        out.push_back(std::move(m));
        size_t i = 0;
        for (; i < entries.size(); ++i) {
            if (++entries[i] < q) break;
            entries[i] = 0;
        }
        if (i == entries.size()) break;
    }
    return out;
}

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

std::vector<long long> encode_pair(const ColoredVector<FF>& v, const BlockNilpotent<FF>& x) {
    std::vector<long long> key;
    key.push_back(v.is_zero() ? 0 : *v.color + 1);
    for (long long c : v.coords) key.push_back(c);
    for (int b = 0; b < x.colors(); ++b) {
        const FMat& m = x.block(b);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) key.push_back(m.at(r, c));
    }
    return key;
}

}  // namespace

CensusResult orbit_census(const Signature& xi, int n, long long q, long long budget) {
    if (xi.colors() != n) throw std::invalid_argument("orbit_census: signature modulus mismatch");
    FF fld(q);  // throws unless q is prime
    ColoredSpace space(xi);

    // a-priori work bound: |K| * #block tuples * |V~|
    double group_order = 1;
    double num_x = 1;
    double num_v = 1;
    for (int c = 0; c < n; ++c) {
        int d = space.dim(c);
        double qd = std::pow(static_cast<double>(q), d);
        for (int j = 0; j < d; ++j)
            group_order *= qd - std::pow(static_cast<double>(q), j);
        num_x *= std::pow(static_cast<double>(q), static_cast<double>(d) * space.dim(c + 1));
        num_v += qd - 1;
    }
    double work = group_order * num_x * num_v;
    if (work > static_cast<double>(budget)) throw BudgetError(work);

    // nilpotent colored endomorphisms
    std::vector<BlockNilpotent<FF>> xs;
    {
        std::vector<std::vector<FMat>> per_block;
        for (int c = 0; c < n; ++c)
            per_block.push_back(all_matrices(fld, space.dim(c + 1), space.dim(c)));
        std::vector<size_t> idx(static_cast<size_t>(n), 0);
        while (true) {
            std::vector<FMat> blocks;
            for (int c = 0; c < n; ++c) blocks.push_back(per_block[c][idx[c]]);
            BlockNilpotent<FF> x(fld, space, std::move(blocks));
            if (x.is_nilpotent()) xs.push_back(std::move(x));
            size_t i = 0;
            for (; i < idx.size(); ++i) {
                if (++idx[i] < per_block[i].size()) break;
                idx[i] = 0;
            }
            if (i == idx.size()) break;
        }
    }

    // colored vectors, zero included once
    std::vector<ColoredVector<FF>> vs;
    vs.push_back(zero_vector<FF>());
    for (int c = 0; c < n; ++c) {
        int d = space.dim(c);
        if (d == 0) continue;
        std::vector<long long> coords(static_cast<size_t>(d), 0);
        while (true) {
            size_t i = 0;
            for (; i < coords.size(); ++i) {
                if (++coords[i] < q) break;
                coords[i] = 0;
            }
            if (i == coords.size()) break;
            vs.push_back(ColoredVector<FF>{c, coords});
        }
    }

    // the acting group, with inverses
    struct GroupElem {
        std::vector<FMat> g, ginv;
    };
    std::vector<GroupElem> ks;
    {
        std::vector<std::vector<std::pair<FMat, FMat>>> per_color;
        for (int c = 0; c < n; ++c) {
            std::vector<std::pair<FMat, FMat>> invertibles;
            for (FMat& m : all_matrices(fld, space.dim(c), space.dim(c))) {
                auto inv = m.inverse();
                if (inv) invertibles.emplace_back(std::move(m), std::move(*inv));
            }
            per_color.push_back(std::move(invertibles));
        }
        std::vector<size_t> idx(static_cast<size_t>(n), 0);
        while (true) {
            GroupElem e;
            for (int c = 0; c < n; ++c) {
                e.g.push_back(per_color[c][idx[c]].first);
                e.ginv.push_back(per_color[c][idx[c]].second);
            }
            ks.push_back(std::move(e));
            size_t i = 0;
            for (; i < idx.size(); ++i) {
                if (++idx[i] < per_color[i].size()) break;
                idx[i] = 0;
            }
            if (i == idx.size()) break;
        }
    }

    // index all pairs
    std::map<std::vector<long long>, int> pair_index;
    std::vector<std::pair<int, int>> pairs;  // (v index, x index)
    for (size_t vi = 0; vi < vs.size(); ++vi)
        for (size_t xi_ = 0; xi_ < xs.size(); ++xi_) {
            pair_index[encode_pair(vs[vi], xs[xi_])] = static_cast<int>(pairs.size());
            pairs.emplace_back(static_cast<int>(vi), static_cast<int>(xi_));
        }

    DisjointSets sets(static_cast<int>(pairs.size()));
    for (size_t p = 0; p < pairs.size(); ++p) {
        const ColoredVector<FF>& v = vs[pairs[p].first];
        const BlockNilpotent<FF>& x = xs[pairs[p].second];
        for (const GroupElem& k : ks) {
            std::vector<FMat> blocks;
            for (int c = 0; c < n; ++c)
                blocks.push_back(k.g[(c + 1) % n] * x.block(c) * k.ginv[c]);
            BlockNilpotent<FF> moved(fld, space, std::move(blocks));
            ColoredVector<FF> mv = v;
            if (!v.is_zero()) mv.coords = k.g[*v.color].apply(v.coords);
            auto it = pair_index.find(encode_pair(mv, moved));
            if (it == pair_index.end())
                throw std::logic_error("orbit_census: action left the enumerated set");
            sets.merge(static_cast<int>(p), it->second);
        }
    }

    // orbit representatives: the least key in each orbit
    std::map<int, std::vector<long long>> reps;
    for (size_t p = 0; p < pairs.size(); ++p) {
        int root = sets.find(static_cast<int>(p));
        auto key = encode_pair(vs[pairs[p].first], xs[pairs[p].second]);
        auto it = reps.find(root);
        if (it == reps.end() || key < it->second) reps[root] = std::move(key);
    }

    CensusResult out;
    out.pair_count = static_cast<long long>(pairs.size());
    out.group_order = group_order;
    out.orbit_count = static_cast<long long>(reps.size());
    for (auto& [root, key] : reps) {
        int p = pair_index.at(key);
        out.labels.push_back(classify_pair(vs[pairs[p].first], xs[pairs[p].second]));
    }
    std::sort(out.labels.begin(), out.labels.end());
    return out;
}

}  // namespace quiver
