#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "quiver/orbit_catalog.hpp"

using namespace quiver;

namespace {

// every colored partition of a given size, by brute force over all color
// assignments, grouped by signature
std::map<std::vector<long long>, std::vector<ColoredPartition>> naive_by_signature(int size,
                                                                                   int n) {
    std::map<std::vector<long long>, std::vector<ColoredPartition>> out;
    for (const Partition& shape : all_partitions(size)) {
        int l = shape.length();
        std::vector<int> colors(static_cast<size_t>(l), 0);
        while (true) {
            ColoredPartition cp(shape, colors, n);
            auto& bucket = out[signature(cp).counts()];
            if (std::find(bucket.begin(), bucket.end(), cp) == bucket.end())
                bucket.push_back(cp);
            int i = 0;
            for (; i < l; ++i) {
                if (++colors[i] < n) break;
                colors[i] = 0;
            }
            if (i == l) break;
        }
    }
    for (auto& [sig, bucket] : out) std::sort(bucket.begin(), bucket.end());
    return out;
}

// every colored n-bipartition of one colored partition and class, by brute
// force over all markings in the canonical range
std::vector<MarkedColoredPartition> naive_class_markings(const ColoredPartition& cp,
                                                         CyclicColor m) {
    int n = cp.modulus();
    int l = cp.length();
    std::vector<MarkedColoredPartition> out;
    std::vector<int> marks(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) marks[i] = -(n - 1);
    while (true) {
        MarkedColoredPartition mcp(cp.shape(), cp.colors(), marks, n);
        auto c = classify_marking(mcp);
        bool class_m = true;
        for (int i = 1; i <= l; ++i) {
            const MarkedRow& r = mcp.row(i);
            if (CyclicColor(r.color + r.length - r.mark, n) != m) class_m = false;
        }
        if (c.is_colored_n_bipartition && class_m) {
            MarkedColoredPartition canon = canonical_form(mcp);
            if (std::find(out.begin(), out.end(), canon) == out.end()) out.push_back(canon);
        }
        if (l == 0) break;
        int i = 0;
        for (; i < l; ++i) {
            if (++marks[i] <= cp.row_length(i + 1)) break;
            marks[i] = -(n - 1);
        }
        if (i == l) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("colored partition enumeration matches the small catalogs") {
    Signature xi({1, 1});
    std::vector<ColoredPartition> got = enumerate_colored_partitions(xi, 2);
    std::vector<ColoredPartition> want{
        ColoredPartition(Partition({2}), {0}, 2),
        ColoredPartition(Partition({2}), {1}, 2),
        ColoredPartition(Partition({1, 1}), {0, 1}, 2),
    };
    std::sort(want.begin(), want.end());
    CHECK(got == want);

    CHECK(enumerate_colored_partitions(Signature(3), 3) ==
          std::vector<ColoredPartition>{ColoredPartition(3)});
    CHECK(enumerate_colored_partitions(Signature({3}), 1).size() == 3);
}

TEST_CASE("colored partition enumeration is sound and complete") {
    for (int n = 1; n <= 3; ++n)
        for (int size = 0; size <= 6; ++size) {
            auto naive = naive_by_signature(size, n);
            // completeness: every signature bucket is reproduced
            for (auto& [counts, bucket] : naive) {
                Signature xi{std::vector<long long>(counts)};
                CHECK(enumerate_colored_partitions(xi, n) == bucket);
            }
            // soundness: enumerated labels carry the requested signature
            for (auto& [counts, bucket] : naive)
                for (const ColoredPartition& cp : bucket)
                    CHECK(signature(cp).counts() == counts);
        }
}

TEST_CASE("colored bipartition enumeration matches the small catalogs") {
    CHECK(enumerate_colored_bipartitions(Signature({1, 1}), 2, CyclicColor(0, 2)).size() == 6);
    CHECK(enumerate_colored_bipartitions(Signature(2), 2, CyclicColor(0, 2)).size() == 1);
    CHECK(enumerate_colored_bipartitions(Signature({2}), 1, CyclicColor(0, 1)).size() == 5);
}

TEST_CASE("colored bipartition enumeration is sound and complete") {
    for (int n = 1; n <= 3; ++n)
        for (int size = 0; size <= 5; ++size) {
            auto naive = naive_by_signature(size, n);
            for (auto& [counts, bucket] : naive) {
                Signature xi{std::vector<long long>(counts)};
                for (int c = 0; c < n; ++c) {
                    CyclicColor m(c, n);
                    std::vector<MarkedColoredPartition> want;
                    for (const ColoredPartition& cp : bucket)
                        for (auto& mcp : naive_class_markings(cp, m)) want.push_back(mcp);
                    std::sort(want.begin(), want.end());
                    CHECK(enumerate_colored_bipartitions(xi, n, m) == want);
                }
            }
        }
}

TEST_CASE("orbit class enumeration merges zero-vector classes") {
    CHECK(enumerate_orbit_classes(Signature({1, 1}), 2).size() == 9);
    CHECK(enumerate_orbit_classes(Signature(2), 2).size() == 1);
    CHECK(enumerate_orbit_classes(Signature({2}), 1).size() == 5);

    std::mt19937 rng(79);
    for (int t = 0; t < 12; ++t) {
        int n = 1 + t % 3;
        ColoredPartition cp = testgen::random_colored(rng, n, 4);
        Signature xi = signature(cp);
        size_t labels = 0;
        for (int c = 0; c < n; ++c)
            labels += enumerate_colored_bipartitions(xi, n, CyclicColor(c, n)).size();
        size_t plain = enumerate_colored_partitions(xi, n).size();
        std::vector<OrbitRecord> classes = enumerate_orbit_classes(xi, n);
        CHECK(classes.size() == labels - (n - 1) * plain);
        for (const OrbitRecord& rec : classes) {
            CHECK(signature(rec.label.base()) == xi);
            CHECK(rec.ambient == xi);
            CHECK(rec.dim >= 0);
            CHECK(rec.dim <= xi.size() * xi.size());
            CHECK(rec.class_color.has_value() == !rec.label.zero_vector());
        }
    }
}

TEST_CASE("nilpotent orbit dimensions") {
    ColoredPartition tricolor(Partition({5, 4, 4, 2, 2, 1}), {0, 0, 2, 1, 0, 1}, 3);
    CHECK(dim_nilpotent_orbit(tricolor) == 83);

    CHECK(dim_nilpotent_orbit(ColoredPartition(Partition({2, 1}), {0, 0}, 1)) == 4);

    std::mt19937 rng(83);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + t % 4;
        int l = 1 + t % 5;
        std::vector<int> ones(static_cast<size_t>(l), 1);
        std::vector<int> colors;
        std::uniform_int_distribution<int> color_dist(0, n - 1);
        for (int i = 0; i < l; ++i) colors.push_back(color_dist(rng));
        std::sort(colors.begin(), colors.end());
        CHECK(dim_nilpotent_orbit(ColoredPartition(Partition(ones), colors, n)) == 0);
    }
}

TEST_CASE("one-color dimension formulas agree with the classical values") {
    for (int size = 0; size <= 8; ++size)
        for (const Partition& lambda : all_partitions(size)) {
            std::vector<int> zeros(static_cast<size_t>(lambda.length()), 0);
            ColoredPartition cp(lambda, zeros, 1);
            long long k = lambda.size();
            long long via_eta = k * (k - 1) - 2 * eta(lambda);
            long long via_transpose = k * k;
            Partition lt = lambda.transpose();
            for (int c : lt.parts())
                via_transpose -= static_cast<long long>(c) * c;
            CHECK(dim_nilpotent_orbit(cp) == via_eta);
            CHECK(dim_nilpotent_orbit(cp) == via_transpose);
        }
}

TEST_CASE("signed dimension formula is half the one-color one") {
    for (int size = 0; size <= 6; ++size)
        for (const Partition& lambda : all_partitions(size)) {
            int l = lambda.length();
            std::vector<int> colors(static_cast<size_t>(l), 0);
            while (true) {
                ColoredPartition cp(lambda, colors, 2);
                long long k = lambda.size();
                CHECK(dim_nilpotent_orbit(cp) == k * (k - 1) / 2 - eta(lambda));
                std::vector<int> zeros(static_cast<size_t>(l), 0);
                CHECK(2 * dim_nilpotent_orbit(cp) ==
                      dim_nilpotent_orbit(ColoredPartition(lambda, zeros, 1)));
                int i = 0;
                for (; i < l; ++i) {
                    if (++colors[i] < 2) break;
                    colors[i] = 0;
                }
                if (i == l) break;
            }
        }
}

TEST_CASE("enhanced orbit dimensions") {
    MarkedColoredPartition top(Partition({4}), {0}, {4}, 2);
    CHECK(dim_enhanced_orbit(top) == 8);

    // zero marking reduces to the nilpotent dimension
    std::mt19937 rng(89);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + t % 3;
        ColoredPartition cp = testgen::random_colored(rng, n, 6);
        std::vector<int> zeros(static_cast<size_t>(cp.length()), 0);
        MarkedColoredPartition zero(cp.shape(), cp.colors(), zeros, n);
        MarkedColoredPartition cqb = shift_to_class(zero, CyclicColor(t % n, n));
        CHECK(dim_enhanced_orbit(cqb) == dim_nilpotent_orbit(cp));
    }

    MarkedColoredPartition one_color(Partition({2, 1}), {0, 0}, {1, 1}, 1);
    CHECK(dim_enhanced_orbit(one_color) == 6);

    // not a colored n-bipartition
    MarkedColoredPartition bad(Partition({1, 1, 1, 1}), {0, 0, 1, 1}, {1, -1, 0, 0}, 2);
    CHECK_THROWS_AS(dim_enhanced_orbit(bad), std::invalid_argument);
}

TEST_CASE("one-color enhanced dimensions equal the bipartition rule") {
    for (int size = 0; size <= 5; ++size)
        for (const MarkedColoredPartition& mcp :
             enumerate_colored_bipartitions(Signature({size}), 1, CyclicColor(0, 1))) {
            long long mu_total = 0;
            for (const MarkedRow& r : mcp.rows()) mu_total += std::max(r.mark, 0);
            CHECK(dim_enhanced_orbit(mcp) == dim_nilpotent_orbit(mcp.base()) + mu_total);
        }
}

TEST_CASE("the signed enhanced catalog of signature (2,2)") {
    auto labels = enumerate_colored_bipartitions(Signature({2, 2}), 2, CyclicColor(0, 2));
    std::vector<long long> dims;
    for (const auto& mcp : labels) dims.push_back(dim_enhanced_orbit(mcp));
    std::sort(dims.begin(), dims.end());
    CHECK(std::count(dims.begin(), dims.end(), 0) == 1);
    long long min_positive = 0;
    for (long long d : dims)
        if (d > 0) { min_positive = d; break; }
    CHECK(min_positive == 2);
    CHECK(dims.back() == 8);
    CHECK(std::count(dims.begin(), dims.end(), 8) >= 2);
}

TEST_CASE("maximal nilpotent orbit dimension for balanced signatures") {
    for (int p = 1; p <= 3; ++p) {
        long long best = -1;
        for (const ColoredPartition& cp :
             enumerate_colored_partitions(Signature({p, p}), 2))
            best = std::max(best, dim_nilpotent_orbit(cp));
        CHECK(best == 2LL * p * p - p);
    }
}
