#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "chowlab/bundle.hpp"
#include "chowlab/sampling.hpp"

using namespace chowlab;

namespace {

BundleExpr dt(int f, int rank) { return BundleExpr::dual(BundleExpr::taut(f, rank)); }

MultiSchur scaled(MultiSchur m, long s) {
    m *= Int(s);
    return m;
}

}  // namespace

TEST_CASE("ranks follow the standard rules") {
    CHECK(rank_of(BundleExpr::sym(3, dt(0, 2))) == 4);
    CHECK(rank_of(BundleExpr::tensor(dt(0, 2), BundleExpr::tensor(dt(1, 2), dt(2, 2)))) == 8);
    CHECK(rank_of(BundleExpr::wedge(3, dt(0, 6))) == 20);
    CHECK(rank_of(BundleExpr::sum(dt(0, 2), BundleExpr::trivial(3))) == 5);
    CHECK_THROWS_AS(rank_of(BundleExpr::wedge(4, dt(0, 3))), std::invalid_argument);
    CHECK_THROWS_AS(rank_of(BundleExpr::taut(0)), std::invalid_argument);  // unbound leaf
}

TEST_CASE("binding leaf ranks from factor data") {
    BundleExpr e = BundleExpr::wedge(2, BundleExpr::dual(BundleExpr::taut(0)));
    const std::vector<int> ranks{5};
    bind_taut_ranks(e, ranks);
    CHECK(rank_of(e) == 10);
    BundleExpr bad = BundleExpr::taut(3);
    CHECK_THROWS_AS(bind_taut_ranks(bad, ranks), std::invalid_argument);
}

TEST_CASE("first Chern classes") {
    const std::vector<int> five{5};
    const MultiSchur c1 = chern_class(dt(0, 5), 1, five);
    MultiSchur want(five);
    want.add_term(PartitionTuple({Partition({1})}), 1);
    CHECK(c1 == want);
}

TEST_CASE("symmetric cube of a rank-2 dual") {
    const std::vector<int> two{2};
    const MultiSchur c2 = chern_class(BundleExpr::sym(3, dt(0, 2)), 2, two);
    MultiSchur want(two);
    want.add_term(PartitionTuple({Partition({2})}), 11);
    want.add_term(PartitionTuple({Partition({1, 1})}), 21);
    CHECK(c2 == want);
}

TEST_CASE("top class of the second wedge of a rank-5 dual is the staircase") {
    const std::vector<int> five{5};
    const MultiSchur c10 = chern_class(BundleExpr::wedge(2, dt(0, 5)), 10, five);
    MultiSchur want(five);
    want.add_term(PartitionTuple({Partition({4, 3, 2, 1})}), 1);
    CHECK(c10 == want);
}

TEST_CASE("triple tensor product has determinant weight (4,4,4)") {
    const std::vector<int> ranks{2, 2, 2};
    const BundleExpr e =
        BundleExpr::tensor(dt(0, 2), BundleExpr::tensor(dt(1, 2), dt(2, 2)));
    const MultiSchur c1 = chern_class(e, 1, ranks);
    MultiSchur want(ranks);
    want.add_term(PartitionTuple({Partition({1}), Partition{}, Partition{}}), 4);
    want.add_term(PartitionTuple({Partition{}, Partition({1}), Partition{}}), 4);
    want.add_term(PartitionTuple({Partition{}, Partition{}, Partition({1})}), 4);
    CHECK(c1 == want);
}

TEST_CASE("degree zero is one and degrees beyond the rank vanish") {
    const std::vector<int> ranks{2, 2, 2};
    const std::vector<BundleExpr> cases{
        BundleExpr::sym(3, dt(0, 2)),
        BundleExpr::tensor(dt(0, 2), BundleExpr::tensor(dt(1, 2), dt(2, 2))),
        BundleExpr::wedge(2, dt(0, 2)),
        BundleExpr::sum(dt(0, 2), BundleExpr::trivial(2)),
    };
    for (const BundleExpr& e : cases) {
        CHECK(chern_class(e, 0, ranks) == MultiSchur::unit({2, 2, 2}));
        CHECK(chern_class(e, static_cast<int>(rank_of(e)) + 1, ranks).is_zero());
    }
    const std::vector<int> six{6};
    const BundleExpr w3 = BundleExpr::wedge(3, dt(0, 6));
    CHECK(chern_class(w3, 0, six) == MultiSchur::unit({6}));
    CHECK(chern_class(w3, 21, six).is_zero());
    const std::vector<int> five{5};
    const BundleExpr w2 = BundleExpr::wedge(2, dt(0, 5));
    CHECK(chern_class(w2, 11, five).is_zero());
}

TEST_CASE("Whitney formula on random small expressions") {
    const std::vector<int> ranks{2, 3};
    Rng rng(derive_seed(0, "whitney", 0));
    auto random_expr = [&](int depth_budget) {
        std::function<BundleExpr(int)> gen = [&](int depth) -> BundleExpr {
            const int choice = depth > 0 ? static_cast<int>(rng.below(5)) : static_cast<int>(rng.below(2));
            switch (choice) {
                case 0: return BundleExpr::taut(static_cast<int>(rng.below(2)),
                                                 0);  // bound below
                case 1: return BundleExpr::trivial(1 + static_cast<int>(rng.below(2)));
                case 2: return BundleExpr::dual(gen(depth - 1));
                case 3: {
                    BundleExpr inner = gen(depth - 1);
                    std::vector<int> r{2, 3};
                    bind_taut_ranks(inner, r);
                    const long rk = rank_of(inner);
                    return BundleExpr::wedge(static_cast<int>(rng.below(
                                                 static_cast<std::uint64_t>(rk) + 1)),
                                             std::move(inner));
                }
                default: return BundleExpr::tensor(gen(depth - 1), gen(depth - 1));
            }
        };
        return gen(depth_budget);
    };
    for (int trial = 0; trial < 25; ++trial) {
        BundleExpr a = random_expr(1);
        BundleExpr b = random_expr(1);
        std::vector<int> r{2, 3};
        bind_taut_ranks(a, r);
        bind_taut_ranks(b, r);
        const BundleExpr s = BundleExpr::sum(a, b);
        for (int d = 0; d <= 3; ++d) {
            MultiSchur convolved({2, 3});
            for (int i = 0; i <= d; ++i)
                convolved += chern_class(a, i, ranks) * chern_class(b, d - i, ranks);
            CHECK(chern_class(s, d, ranks) == convolved);
        }
    }
}

TEST_CASE("dual bundles flip Chern class signs by degree") {
    const std::vector<int> ranks{4};
    const std::vector<BundleExpr> cases{
        BundleExpr::taut(0, 4),
        dt(0, 4),
        BundleExpr::wedge(2, BundleExpr::taut(0, 4)),
    };
    for (const BundleExpr& e : cases)
        for (int d = 0; d <= 4; ++d) {
            const MultiSchur lhs = chern_class(BundleExpr::dual(e), d, ranks);
            const MultiSchur rhs = scaled(chern_class(e, d, ranks), d % 2 == 0 ? 1 : -1);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("malformed expressions are rejected") {
    const std::vector<int> ranks{2};
    CHECK_THROWS_AS(chern_class(BundleExpr::taut(1, 2), 1, ranks), std::invalid_argument);
    CHECK_THROWS_AS(chern_class(BundleExpr::taut(0, 3), 1, ranks), std::invalid_argument);
    CHECK_THROWS_AS(chern_class(dt(0, 2), -1, ranks), std::invalid_argument);
}
