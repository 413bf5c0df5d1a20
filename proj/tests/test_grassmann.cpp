#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowlab/grassmann.hpp"

using namespace chowlab;

namespace {

BundleExpr dt(int f) { return BundleExpr::dual(BundleExpr::taut(f)); }

SchubertClass sig(const GrassmannProduct& ring, const Partition& p) {
    return SchubertClass::sigma(ring, 0, p);
}

}  // namespace

TEST_CASE("ring descriptors") {
    const GrassmannProduct g24(2, 4);
    CHECK(g24.dimension() == 4);
    CHECK(g24.to_string() == "G(2,4)");
    const GrassmannProduct triple({{2, 4}, {2, 4}, {2, 4}});
    CHECK(triple.dimension() == 12);
    CHECK(triple.to_string() == "G(2,4)^3");
    const GrassmannProduct mixed({{2, 4}, {2, 6}});
    CHECK(mixed.to_string() == "G(2,4)xG(2,6)");
    CHECK_THROWS_AS(GrassmannProduct(4, 4), std::invalid_argument);
}

TEST_CASE("products with box truncation") {
    const GrassmannProduct g24(2, 4);
    const SchubertClass s1 = sig(g24, Partition({1}));
    SchubertClass expect = sig(g24, Partition({2})) + sig(g24, Partition({1, 1}));
    CHECK(s1 * s1 == expect);

    const SchubertClass s2 = sig(g24, Partition({2}));
    CHECK(s2 * s2 == sig(g24, Partition({2, 2})));  // (4) and (3,1) truncate away

    const GrassmannProduct square({{2, 4}, {2, 4}});
    const SchubertClass a = SchubertClass::hyperplane(square, 0);
    const SchubertClass b = SchubertClass::hyperplane(square, 1);
    CHECK(a * b == SchubertClass::schubert(square,
                                           PartitionTuple({Partition({1}), Partition({1})})));

    const GrassmannProduct other(2, 5);
    CHECK_THROWS_AS(class_multiply(s1, SchubertClass::unit(other)), std::invalid_argument);
}

TEST_CASE("integration") {
    const GrassmannProduct g24(2, 4);
    CHECK(integrate(sig(g24, Partition({2, 2}))) == 1);
    CHECK(integrate(sig(g24, Partition({2, 1}))) == 0);

    const GrassmannProduct g59(5, 9);
    const SchubertClass stair = sig(g59, Partition({4, 3, 2, 1}));
    CHECK(integrate(stair * stair) == 1);
}

TEST_CASE("degrees") {
    const GrassmannProduct g24(2, 4);
    const long w1[] = {1};
    CHECK(degree_wrt(SchubertClass::unit(g24), w1) == 2);

    const long w0[] = {0};
    CHECK_THROWS_AS(degree_wrt(SchubertClass::unit(g24), w0), std::invalid_argument);
    const long wneg[] = {-1};
    CHECK_THROWS_AS(degree_wrt(SchubertClass::unit(g24), wneg), std::invalid_argument);
    const SchubertClass mixed = SchubertClass::unit(g24) + sig(g24, Partition({1}));
    CHECK_THROWS_AS(degree_wrt(mixed, w1), std::invalid_argument);
}

TEST_CASE("the two degree-432 routes agree and the 12 = 2 x 6 factorization holds") {
    const GrassmannProduct p({{2, 4}, {2, 4}, {2, 4}});
    const BundleExpr e = BundleExpr::tensor(dt(0), BundleExpr::tensor(dt(1), dt(2)));
    const SchubertClass c8 = chern_class_on(p, e, 8);
    const long w110[] = {1, 1, 0};
    const long w100[] = {1, 0, 0};
    CHECK(degree_wrt(c8, w110) == 432);
    CHECK(degree_wrt(c8, w100) == 12);

    const GrassmannProduct p2({{2, 4}, {2, 4}});
    const BundleExpr f = BundleExpr::tensor(dt(0), dt(1));
    std::vector<SchubertClass> chern;
    for (int d = 0; d <= 4; ++d) chern.push_back(chern_class_on(p2, f, d));
    const SchubertClass locus = porteous_class(p2, 4, chern, 4, 2);
    const long w11[] = {1, 1};
    CHECK(degree_wrt(locus, w11) == 432);
}

TEST_CASE("porteous edge cases") {
    const GrassmannProduct g24(2, 4);
    std::vector<SchubertClass> chern;
    for (int d = 0; d <= 2; ++d)
        chern.push_back(chern_class_on(g24, dt(0), d));
    // r = e_rank: empty determinant
    CHECK(porteous_class(g24, 2, chern, 2, 2) == SchubertClass::unit(g24));
    // e_rank 1, r = 0: the top Chern class of F
    CHECK(porteous_class(g24, 1, chern, 2, 0) == chern[2]);
    CHECK_THROWS_AS(porteous_class(g24, 2, chern, 2, 3), std::invalid_argument);
}

TEST_CASE("zero locus profiles of the four constructions") {
    {
        const GrassmannProduct ring(2, 6);
        const auto profile = zero_locus_profile(ring, BundleSpec(BundleExpr::sym(3, dt(0))));
        CHECK(profile.dim == 4);
        CHECK(profile.index == std::vector<long>{0});
    }
    {
        const GrassmannProduct ring({{2, 4}, {2, 4}, {2, 4}});
        const BundleExpr e = BundleExpr::tensor(dt(0), BundleExpr::tensor(dt(1), dt(2)));
        const auto profile = zero_locus_profile(ring, BundleSpec(e));
        CHECK(profile.dim == 4);
        CHECK(profile.index == std::vector<long>{0, 0, 0});
    }
    {
        const GrassmannProduct ring(6, 9);
        const auto profile = zero_locus_profile(
            ring, BundleSpec(BundleExpr::wedge(3, dt(0)), dt(0)));
        CHECK(profile.dim == 4);
    }
    {
        const GrassmannProduct ring(6, 10);
        const auto profile = zero_locus_profile(ring, BundleSpec(BundleExpr::wedge(3, dt(0))));
        CHECK(profile.dim == 4);
        CHECK(profile.index == std::vector<long>{0});
    }
}

TEST_CASE("the odd symplectic Grassmannian appears as a zero locus") {
    const GrassmannProduct g39(3, 9);
    const auto profile = zero_locus_profile(g39, BundleSpec(BundleExpr::wedge(2, dt(0))));
    CHECK(profile.dim == 15);
    CHECK(profile.index == std::vector<long>{7});
    CHECK_FALSE(profile.empty_locus);
}

TEST_CASE("rank above the ambient dimension is rejected; empty loci are flagged") {
    const GrassmannProduct g12(1, 2);
    CHECK_THROWS_AS(zero_locus_profile(g12, BundleSpec(BundleExpr::trivial(2))),
                    std::invalid_argument);
    // a trivial line bundle has vanishing top Chern class
    const auto profile = zero_locus_profile(g12, BundleSpec(BundleExpr::trivial(1)));
    CHECK(profile.empty_locus);
}

TEST_CASE("kernel first Chern class on the contraction complement") {
    const GrassmannProduct g69(6, 9);
    SchubertClass want = SchubertClass::hyperplane(g69, 0);
    want *= Int(-9);
    CHECK(kernel_c1_on_complement() == want);

    // subchecks: c1(T) = -sigma_1 and c1(wedge^3 T) = 10 c1(T)
    const SchubertClass c1t = chern_class_on(g69, BundleExpr::taut(0), 1);
    SchubertClass minus_h = SchubertClass::hyperplane(g69, 0);
    minus_h *= Int(-1);
    CHECK(c1t == minus_h);
    SchubertClass ten = c1t;
    ten *= Int(10);
    CHECK(chern_class_on(g69, BundleExpr::wedge(3, BundleExpr::taut(0)), 1) == ten);
}

TEST_CASE("homogeneous space dimensions") {
    CHECK(homogeneous_dim(SpaceKind::Grassmannian, 6, 9) == 18);
    CHECK(homogeneous_dim(SpaceKind::Isotropic, 3, 8) == 12);
    CHECK(homogeneous_dim(SpaceKind::Isotropic, 3, 6) == 6);
    CHECK(homogeneous_dim(SpaceKind::Orthogonal, 6, 15) == 33);
    CHECK(homogeneous_dim(SpaceKind::Orthogonal, 6, 12) == 15);
    CHECK_THROWS_AS(homogeneous_dim(SpaceKind::Isotropic, 3, 9), std::invalid_argument);
    CHECK_THROWS_AS(homogeneous_dim(SpaceKind::Grassmannian, 5, 5), std::invalid_argument);
    CHECK_THROWS_AS(homogeneous_dim(SpaceKind::Orthogonal, 8, 15), std::invalid_argument);
}

TEST_CASE("quotient bundle classes vanish above the quotient rank") {
    const GrassmannProduct g24(2, 4);
    const SchubertClass cu = chern_class_on(g24, BundleExpr::taut(0), 0) +
                             chern_class_on(g24, BundleExpr::taut(0), 1) +
                             chern_class_on(g24, BundleExpr::taut(0), 2);
    const SchubertClass cq = chern_series_inverse(cu, g24.dimension());
    CHECK(cq.component(3).is_zero());
    CHECK(cq.component(4).is_zero());
    CHECK(class_multiply(cu, cq) == SchubertClass::unit(g24));
}

TEST_CASE("Euler number of the triple-product zero locus") {
    CHECK(d4_zero_locus_euler() == 324);
}
