#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowlab/forms.hpp"

using namespace chowlab;

namespace {
const PrimeField kField(1009);
}

TEST_CASE("exterior index tables") {
    CHECK(pair_index(0, 1, 4) == 0);
    CHECK(pair_index(2, 3, 4) == 5);
    CHECK(triple_index(0, 1, 2, 6) == 0);
    CHECK(triple_index(3, 4, 5, 6) == 19);
    int counter = 0;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            for (std::size_t k = j + 1; k < 6; ++k)
                CHECK(triple_index(i, j, k, 6) == static_cast<std::size_t>(counter++));
}

TEST_CASE("skew form validation") {
    Matrix<PrimeField> not_skew(kField, 9, 9);
    not_skew.at(0, 1) = 1;
    CHECK_THROWS_AS((void)SkewForm<PrimeField>(not_skew), std::invalid_argument);

    Matrix<PrimeField> low_rank(kField, 9, 9);
    low_rank.at(0, 1) = 1;
    low_rank.at(1, 0) = kField.neg(1);
    CHECK_THROWS_AS((void)SkewForm<PrimeField>(low_rank), std::invalid_argument);

    const auto omega = normal_form_skew(kField);
    CHECK(omega.kernel().cols() == 1);
    CHECK(!kField.is_zero(omega.kernel().at(0, 0)));  // the kernel is the first basis line
}

TEST_CASE("restriction ranks stratify 6-spaces") {
    const auto omega = normal_form_skew(kField);
    CHECK(restriction_rank(omega, coordinate_subspace(kField, {0, 1, 2, 3, 4, 5})) == 2);
    CHECK(restriction_rank(omega, coordinate_subspace(kField, {0, 3, 4, 5, 6, 7})) == 4);
    CHECK(restriction_rank(omega, coordinate_subspace(kField, {1, 2, 3, 7, 8, 6})) == 6);
    CHECK_THROWS_AS(restriction_rank(omega, coordinate_subspace(kField, {0, 1, 2, 3, 4})),
                    std::invalid_argument);

    // ranks are even and never zero over a seeded batch mixing random draws
    // with the constructed representatives
    const auto o1 = coordinate_subspace(kField, {0, 3, 4, 5, 6, 7});
    const auto o2 = coordinate_subspace(kField, {0, 1, 2, 3, 4, 5});
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
        int rank = 0;
        if (i % 100 == 98) {
            rank = restriction_rank(omega, o1);
        } else if (i % 100 == 99) {
            rank = restriction_rank(omega, o2);
        } else {
            Rng rng(derive_seed(7, "forms.rank", static_cast<std::uint64_t>(i)));
            const Subspace<PrimeField> v6(random_subspace_basis(kField, rng, 9, 6));
            rank = restriction_rank(omega, v6);
        }
        if (rank != 2 && rank != 4 && rank != 6) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("contraction kernels and the image on the closed orbit") {
    const auto omega = normal_form_skew(kField);
    const auto o2 = coordinate_subspace(kField, {0, 1, 2, 3, 4, 5});
    const auto o1 = coordinate_subspace(kField, {0, 3, 4, 5, 6, 7});
    CHECK(contraction_kernel_dim(omega, o2) == 16);
    CHECK(contraction_kernel_dim(omega, o1) == 14);
    for (int i = 0; i < 50; ++i) {
        Rng rng(derive_seed(11, "forms.kernel", static_cast<std::uint64_t>(i)));
        const Subspace<PrimeField> t(random_subspace_basis(kField, rng, 9, 6));
        const auto m = contraction_matrix(omega, t);
        const int kernel = contraction_kernel_dim(omega, t);
        CHECK(kernel == 14);
        CHECK(kernel + static_cast<int>(m.rank()) == 20);
    }
}

TEST_CASE("wedge dimensions for hyperplanes of the 2-forms on T4") {
    for (int i = 0; i < 50; ++i) {
        Rng rng(derive_seed(13, "forms.flambda", static_cast<std::uint64_t>(i)));
        const Subspace<PrimeField> t(random_subspace_basis(kField, rng, 9, 6));
        Matrix<PrimeField> mix = random_matrix(kField, rng, 6, 4);
        while ((t.basis * mix).rank() != 4) mix = random_matrix(kField, rng, 6, 4);
        const Subspace<PrimeField> t4(t.basis * mix);
        const Matrix<PrimeField> lambda = random_subspace_basis(kField, rng, 6, 5);
        const auto dims = f_lambda_dim(t, t4, lambda);
        CHECK(dims.t_wedge_lambda == 14);
        CHECK(dims.t4_wedge_lambda == 4);
    }
}

TEST_CASE("wedge dimension preconditions") {
    Rng rng(derive_seed(13, "forms.flambda.pre", 0));
    const Subspace<PrimeField> t(random_subspace_basis(kField, rng, 9, 6));
    const Subspace<PrimeField> unrelated(random_subspace_basis(kField, rng, 9, 4));
    const Matrix<PrimeField> lambda = random_subspace_basis(kField, rng, 6, 5);
    CHECK_THROWS_AS(f_lambda_dim(t, unrelated, lambda), std::invalid_argument);
    const Matrix<PrimeField> thin = random_subspace_basis(kField, rng, 6, 4);
    Matrix<PrimeField> mix = random_matrix(kField, rng, 6, 4);
    while ((t.basis * mix).rank() != 4) mix = random_matrix(kField, rng, 6, 4);
    const Subspace<PrimeField> t4(t.basis * mix);
    CHECK_THROWS_AS(f_lambda_dim(t, t4, thin), std::invalid_argument);
}

TEST_CASE("graph membership identity on random and structured data") {
    for (int i = 0; i < 50; ++i) {
        Rng rng(derive_seed(17, "forms.graph", static_cast<std::uint64_t>(i)));
        const auto omega = random_skew_form(kField, rng);
        const auto big = random_three_form(kField, rng, 9);
        const Subspace<PrimeField> t(random_subspace_basis(kField, rng, 9, 6));
        std::vector<PrimeField::value_type> u(6);
        for (auto& x : u) x = random_element(kField, rng);
        // the insertion position of the added coordinate is immaterial
        const auto at_end = graph_vanishing_check(omega, big, t, u, 9);
        const auto at_front = graph_vanishing_check(omega, big, t, u, 0);
        CHECK(at_end.lhs == at_end.rhs);
        CHECK(at_front.lhs == at_front.rhs);
        CHECK(at_front.lhs == at_end.lhs);
    }
    // u = 0 reduces both sides to plain vanishing of the 3-form on T
    Rng rng(derive_seed(17, "forms.graph.u0", 0));
    const auto omega = random_skew_form(kField, rng);
    const auto big = random_three_form(kField, rng, 9);
    const Subspace<PrimeField> t(random_subspace_basis(kField, rng, 9, 6));
    const std::vector<PrimeField::value_type> zero(6, kField.zero());
    const auto check = graph_vanishing_check(omega, big, t, zero, 9);
    CHECK(check.lhs == check.rhs);
}

TEST_CASE("vanishing pairs and the lift map") {
    const auto omega = normal_form_skew(kField);
    Rng rng(derive_seed(19, "forms.vanish", 0));
    const auto big = random_three_form_vanishing_on_r(kField, rng);
    const auto r = coordinate_subspace(kField, {0, 1, 2, 3, 4});
    const auto witness = vanishing_pair_residual(omega, big, r);
    CHECK(witness.omega_vanishes);
    CHECK(witness.three_form_vanishes);
    CHECK(lift_map_rank(omega, big, r) == 4);

    const Subspace<PrimeField> random5(random_subspace_basis(kField, rng, 9, 5));
    const auto generic = vanishing_pair_residual(omega, big, random5);
    CHECK_FALSE(generic.omega_vanishes);
    CHECK_FALSE(generic.three_form_vanishes);
    CHECK_THROWS_AS(lift_map_rank(omega, big, random5), std::invalid_argument);

    CHECK_THROWS_AS(
        vanishing_pair_residual(omega, big, coordinate_subspace(kField, {0, 1, 2, 3})),
        std::invalid_argument);
}

TEST_CASE("three-form pullback composes with evaluation") {
    Rng rng(derive_seed(23, "forms.pullback", 0));
    const auto big = random_three_form(kField, rng, 9);
    const Matrix<PrimeField> p = random_subspace_basis(kField, rng, 9, 9);
    const auto pulled = pullback(big, p);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<PrimeField::value_type> x(9), y(9), z(9);
        for (std::size_t i = 0; i < 9; ++i) {
            x[i] = random_element(kField, rng);
            y[i] = random_element(kField, rng);
            z[i] = random_element(kField, rng);
        }
        CHECK(pulled.eval(x, y, z) == big.eval(p.apply(x), p.apply(y), p.apply(z)));
    }
}

TEST_CASE("the wedge map against a rank-8 form is injective on the dual space") {
    CHECK(omega_wedge_map_rank(normal_form_skew(kField)) == 9);
    const RationalField rationals;
    CHECK(omega_wedge_map_rank(normal_form_skew(rationals)) == 9);
    Rng rng(derive_seed(29, "forms.wedge9", 0));
    CHECK(omega_wedge_map_rank(random_skew_form(kField, rng)) == 9);
}
