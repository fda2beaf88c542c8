#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "quiver/colored_partition.hpp"
#include "quiver/marked_partition.hpp"

using namespace quiver;

namespace {

ColoredPartition tricolor_example() {
    return ColoredPartition(Partition({5, 4, 4, 2, 2, 1}), {0, 0, 2, 1, 0, 1}, 3);
}

ColoredPartition signed_example() {
    // signs: '+' is color 0, '-' is color 1
    return ColoredPartition(Partition({5, 5, 3, 2, 2, 1}), {1, 0, 1, 1, 1, 1}, 2);
}

// signature by direct box iteration, the second evaluation path
Signature signature_by_boxes(const ColoredPartition& cp) {
    Signature xi(cp.modulus());
    for (int i = 1; i <= cp.length(); ++i)
        for (int j = 1; j <= cp.row_length(i); ++j) xi.add(box_color(cp, i, j).rep(), 1);
    return xi;
}

}  // namespace

TEST_CASE("cyclic colors wrap and compare") {
    CyclicColor c(5, 3);
    CHECK(c.rep() == 2);
    CHECK((c + 1).rep() == 0);
    CHECK((c - 4).rep() == 1);
    CHECK(CyclicColor(-1, 4).rep() == 3);
    CHECK(c.successor() == CyclicColor(0, 3));
    CHECK_THROWS_AS(CyclicColor(0, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)(CyclicColor(0, 2) == CyclicColor(0, 3)), std::invalid_argument);
}

TEST_CASE("partition validation and transpose") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition({3, 1, 0, 0}).length() == 2);
    CHECK(Partition({5, 4, 4, 2, 2, 1}).transpose() == Partition({6, 5, 3, 3, 1}));

    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        Partition p = testgen::random_partition(rng, 20);
        CHECK(p.transpose().transpose() == p);
        CHECK(p.transpose().size() == p.size());
    }
}

TEST_CASE("box colors of the running examples") {
    ColoredPartition cp = tricolor_example();
    CHECK(box_color(cp, 1, 5) == CyclicColor(0, 3));
    CHECK(box_color(cp, 3, 3) == CyclicColor(0, 3));
    CHECK_THROWS_AS(box_color(cp, 7, 1), std::out_of_range);
    CHECK_THROWS_AS(box_color(cp, 1, 6), std::out_of_range);

    // the rightmost box always carries the row color
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        ColoredPartition r = testgen::random_colored(rng, 1 + t % 4, 12);
        for (int i = 1; i <= r.length(); ++i)
            CHECK(box_color(r, i, r.row_length(i)) == r.row_color(i));
    }
}

TEST_CASE("signature closed form equals box counting") {
    CHECK(signature(tricolor_example()) == Signature({6, 7, 5}));
    CHECK(signature_by_boxes(tricolor_example()) == Signature({6, 7, 5}));
    CHECK(signature(signed_example()) == Signature({8, 10}));
    CHECK(signature(ColoredPartition(2)) == Signature(2));

    std::mt19937 rng(13);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + t % 5;
        ColoredPartition cp = testgen::random_colored(rng, n, 15);
        Signature xi = signature(cp);
        CHECK(xi == signature_by_boxes(cp));
        CHECK(xi.size() == cp.size());
    }
}

TEST_CASE("signature formula is invariant under row permutation") {
    std::mt19937 rng(17);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + t % 4;
        ColoredPartition cp = testgen::random_colored(rng, n, 12);
        std::vector<std::pair<int, int>> rows;
        for (int i = 1; i <= cp.length(); ++i)
            rows.emplace_back(cp.row_length(i), cp.row_color(i).rep());
        std::shuffle(rows.begin(), rows.end(), rng);
        // closed-form sum evaluated over the shuffled row list
        Signature xi(n);
        for (int m = 0; m < n; ++m)
            for (auto& [l, e] : rows) {
                int r = rep(CyclicColor(m - e, n));
                if (l - r > 0) xi.add(m, (l - r + n - 1) / n);
            }
        CHECK(xi == signature(cp));
    }
}

TEST_CASE("column signatures grow to the full signature") {
    ColoredPartition cp = tricolor_example();
    CHECK(column_signature(cp, 1) == Signature({1, 3, 2}));
    CHECK(column_signature(cp, 2) == Signature({3, 5, 3}));
    CHECK(column_signature(cp, 5) == Signature({6, 7, 5}));
    CHECK_THROWS_AS(column_signature(cp, 0), std::invalid_argument);

    std::mt19937 rng(19);
    for (int t = 0; t < 100; ++t) {
        ColoredPartition r = testgen::random_colored(rng, 1 + t % 4, 12);
        Signature full = signature(r);
        int top = r.length() ? r.row_length(1) : 1;
        Signature prev(r.modulus());
        for (int k = 1; k <= top + 2; ++k) {
            Signature sk = column_signature(r, k);
            CHECK(prev <= sk);
            if (k >= top) CHECK(sk == full);
            prev = sk;
        }
    }
}

TEST_CASE("eta and its transpose form") {
    CHECK(eta(Partition({5, 4, 4, 2, 2, 1})) == 31);
    CHECK(eta(Partition({9})) == 0);
    CHECK(eta(Partition({1, 1, 1})) == 3);

    auto eta_transpose = [](const Partition& p) {
        long long s = 0;
        Partition t = p.transpose();
        for (int c : t.parts()) s += static_cast<long long>(c) * (c - 1) / 2;
        return s;
    };
    CHECK(eta_transpose(Partition({1, 1, 1})) == 3);

    std::mt19937 rng(23);
    for (int t = 0; t < 300; ++t) {
        Partition p = testgen::random_partition(rng, 30);
        CHECK(eta(p) == eta_transpose(p));
    }
}

TEST_CASE("canonical form sorts rows and is idempotent") {
    MarkedColoredPartition a(Partition({1, 1}), {1, 0}, {0, 1}, 2);
    MarkedColoredPartition expect_a(Partition({1, 1}), {0, 1}, {1, 0}, 2);
    CHECK(canonical_form(a).rows() == expect_a.rows());

    MarkedColoredPartition b(Partition({2, 2}), {1, 0}, {0, 2}, 2);
    MarkedColoredPartition expect_b(Partition({2, 2}), {0, 1}, {2, 0}, 2);
    CHECK(canonical_form(b).rows() == expect_b.rows());

    std::mt19937 rng(29);
    for (int t = 0; t < 200; ++t) {
        MarkedColoredPartition m = testgen::random_marked(rng, 1 + t % 4, 12);
        MarkedColoredPartition c = canonical_form(m);
        CHECK(canonical_form(c).rows() == c.rows());
        CHECK(c == m);

        auto f = classify_marking(m);
        auto g = classify_marking(c);
        CHECK(f.is_bipartition == g.is_bipartition);
        CHECK(f.is_n_bipartition == g.is_n_bipartition);
        CHECK(f.is_colored_n_bipartition == g.is_colored_n_bipartition);
        CHECK(f.is_generalized_n_bipartition == g.is_generalized_n_bipartition);
        CHECK(f.class_color.has_value() == g.class_color.has_value());
        if (f.class_color) CHECK(*f.class_color == *g.class_color);
    }
}

TEST_CASE("marking classification on the running examples") {
    // the 3-colored example marking
    MarkedColoredPartition marked3(Partition({5, 5, 3, 3, 2, 1}), {2, 1, 1, 0, 0, 0},
                                {1, 3, 1, 0, -1, 1}, 3);
    auto c = classify_marking(marked3);
    CHECK(c.is_colored_n_bipartition);
    CHECK(c.is_n_bipartition);
    CHECK(c.is_generalized_n_bipartition);
    CHECK_FALSE(c.is_bipartition);
    REQUIRE(c.class_color.has_value());
    CHECK(*c.class_color == CyclicColor(0, 3));

    // mu = 0 is always a bipartition
    std::mt19937 rng(31);
    for (int t = 0; t < 100; ++t) {
        ColoredPartition cp = testgen::random_colored(rng, 1 + t % 4, 12);
        std::vector<int> zeros(static_cast<size_t>(cp.length()), 0);
        auto z = classify_marking(MarkedColoredPartition(cp.shape(), cp.colors(), zeros,
                                                         cp.modulus()));
        CHECK(z.is_bipartition);
        CHECK(z.is_n_bipartition);
        CHECK_FALSE(z.class_color.has_value());
    }

    // rows 1,2 share a class but nu_2 = nu_1 + 2: not even generalized
    MarkedColoredPartition bad(Partition({1, 1, 1, 1}), {0, 0, 1, 1}, {1, -1, 0, 0}, 2);
    auto g = classify_marking(bad);
    CHECK_FALSE(g.is_generalized_n_bipartition);
    CHECK_FALSE(g.is_n_bipartition);
    CHECK_FALSE(g.is_bipartition);

    CHECK_THROWS_AS(MarkedColoredPartition(Partition({2}), {0}, {3}, 2), std::invalid_argument);
}

TEST_CASE("one color: n-bipartitions are exactly bipartitions") {
    std::mt19937 rng(37);
    for (int t = 0; t < 300; ++t) {
        MarkedColoredPartition m = testgen::random_marked(rng, 1, 12);
        auto c = classify_marking(m);
        CHECK(c.is_n_bipartition == c.is_bipartition);
        CHECK(c.is_colored_n_bipartition == c.is_bipartition);
    }
}

TEST_CASE("marks are stored in the canonical range") {
    MarkedColoredPartition m(Partition({3, 2}), {0, 1}, {-7, -3}, 3);
    CHECK(m.row(1).mark == -1);  // -7 = -1 (mod 3)
    CHECK(m.row(2).mark == 0);   // -3 = 0 (mod 3)
    MarkedColoredPartition k(Partition({3}), {0}, {2}, 3);
    CHECK(k.row(1).mark == 2);
}
