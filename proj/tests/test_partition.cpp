#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowlab/partition.hpp"

using namespace chowlab;

TEST_CASE("construction enforces the canonical form") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    CHECK(Partition::from_unsorted({0, 3, 1, 0, 2}) == Partition({3, 2, 1}));
    CHECK(Partition{}.empty());
    CHECK(Partition({4, 3, 2, 1}).weight() == 10);
    CHECK(Partition({4, 3, 2, 1}).part(7) == 0);
}

TEST_CASE("conjugation") {
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition({4, 3, 2, 1}).conjugate() == Partition({4, 3, 2, 1}));
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    // involution over everything of weight <= 20
    for (int w = 0; w <= 20; ++w)
        for (const Partition& p : enumerate_partitions(w, Box(20, 20)))
            CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("box membership and complement") {
    CHECK(fits_in_box(Partition({4, 3, 2, 1}), Box(5, 4)));
    CHECK(fits_in_box(Partition{}, Box(1, 1)));
    CHECK_FALSE(fits_in_box(Partition({5, 1}), Box(2, 4)));

    CHECK(box_complement(Partition({4, 3, 2, 1}), Box(5, 4)) == Partition({4, 3, 2, 1}));
    CHECK(box_complement(Partition{}, Box(3, 2)) == Partition({2, 2, 2}));
    CHECK(box_complement(Partition({2, 2}), Box(2, 2)) == Partition{});
    CHECK_THROWS_AS(box_complement(Partition({5}), Box(2, 4)), std::invalid_argument);

    // involution and weight balance on every partition in boxes up to 5x4
    for (int k = 1; k <= 5; ++k)
        for (int m = 1; m <= 4; ++m) {
            const Box box(k, m);
            for (int w = 0; w <= k * m; ++w)
                for (const Partition& p : enumerate_partitions(w, box)) {
                    const Partition c = box_complement(p, box);
                    CHECK(p.weight() + c.weight() == k * m);
                    CHECK(box_complement(c, box) == p);
                }
        }
}

TEST_CASE("enumeration order and counts") {
    CHECK(enumerate_partitions(0, Box(3, 3)) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(2, Box(2, 2)) ==
          std::vector<Partition>{Partition({2}), Partition({1, 1})});
    CHECK(enumerate_partitions(20, Box(5, 4)) ==
          std::vector<Partition>{Partition({4, 4, 4, 4, 4})});

    // total count over all weights is binomial(k+m, k)
    auto binomial = [](int n, int k) {
        long long out = 1;
        for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
        return out;
    };
    for (int k = 1; k <= 5; ++k)
        for (int m = 1; m <= 4; ++m) {
            long long total = 0;
            for (int w = 0; w <= k * m; ++w)
                total += static_cast<long long>(enumerate_partitions(w, Box(k, m)).size());
            CHECK(total == binomial(k + m, k));
        }
}

TEST_CASE("dominance and canonical order") {
    CHECK(dominates(Partition({2}), Partition({1, 1})));
    CHECK_FALSE(dominates(Partition({1, 1}), Partition({2})));
    CHECK_FALSE(dominates(Partition({3}), Partition({1, 1})));  // weights differ
    CHECK(canonical_less(Partition({2}), Partition({1, 1})));   // enumeration order
    CHECK(canonical_less(Partition({3}), Partition({2, 2})));   // weight first
}
