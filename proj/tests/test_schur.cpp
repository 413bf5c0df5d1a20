#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowlab/oracles.hpp"
#include "chowlab/sampling.hpp"
#include "chowlab/schur.hpp"

using namespace chowlab;

TEST_CASE("basic Littlewood-Richardson values") {
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({2})) == 1);
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({1, 1})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition{}, Partition({2, 1})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition{}, Partition({3})) == 0);
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
}

TEST_CASE("agreement with the brute-force enumeration on small shapes") {
    std::vector<Partition> shapes;
    for (int w = 0; w <= 6; ++w)
        for (const Partition& p : enumerate_partitions(w, Box(4, std::max(w, 1))))
            shapes.push_back(p);
    for (const Partition& lam : shapes)
        for (const Partition& mu : shapes) {
            if (lam.weight() + mu.weight() > 6) continue;
            const int total = lam.weight() + mu.weight();
            for (const Partition& nu : enumerate_partitions(total, Box(4, std::max(total, 1))))
                CHECK(lr_coefficient(lam, mu, nu) == oracles::lr_brute_force(lam, mu, nu));
        }
}

TEST_CASE("schur products in few variables") {
    const SchurPoly s1_2 = SchurPoly::single(2, Partition({1}));
    SchurPoly expect(2);
    expect.add_term(Partition({2}), 1);
    expect.add_term(Partition({1, 1}), 1);
    CHECK(schur_multiply(s1_2, s1_2) == expect);

    const SchurPoly s1_1 = SchurPoly::single(1, Partition({1}));
    CHECK(schur_multiply(s1_1, s1_1) == SchurPoly::single(1, Partition({2})));

    const SchurPoly s21 = SchurPoly::single(3, Partition({2, 1}));
    CHECK(schur_multiply(s21, s21).coefficient(Partition({3, 2, 1})) == 2);

    CHECK_THROWS_AS(schur_multiply(s1_1, s1_2), std::invalid_argument);
}

TEST_CASE("schur products are commutative and associative on seeded samples") {
    std::vector<Partition> shapes;
    for (int w = 0; w <= 6; ++w)
        for (const Partition& p : enumerate_partitions(w, Box(4, std::max(w, 1))))
            shapes.push_back(p);
    Rng rng(derive_seed(0, "schur.props", 0));
    const int vars = 4;
    for (int trial = 0; trial < 100; ++trial) {
        const SchurPoly a = SchurPoly::single(vars, shapes[rng.below(shapes.size())]);
        const SchurPoly b = SchurPoly::single(vars, shapes[rng.below(shapes.size())]);
        const SchurPoly c = SchurPoly::single(vars, shapes[rng.below(shapes.size())]);
        CHECK(schur_multiply(a, b) == schur_multiply(b, a));
        CHECK(schur_multiply(schur_multiply(a, b), c) ==
              schur_multiply(a, schur_multiply(b, c)));
    }
}

TEST_CASE("kostka numbers") {
    CHECK(kostka_number(Partition({2, 1}), Partition({2, 1})) == 1);
    CHECK(kostka_number(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(kostka_number(Partition({1, 1}), Partition({2})) == 0);
    CHECK(kostka_number(Partition({3}), Partition({1, 1, 1})) == 1);
}

TEST_CASE("monomial-basis conversion") {
    // m_2 + m_11 = s_2
    OrbitPoly p;
    p[Partition({2})] = 1;
    p[Partition({1, 1})] = 1;
    CHECK(polynomial_to_schur(p, 2) == SchurPoly::single(2, Partition({2})));

    OrbitPoly q;
    q[Partition({1, 1})] = 1;
    CHECK(polynomial_to_schur(q, 2) == SchurPoly::single(2, Partition({1, 1})));

    OrbitPoly r;
    r[Partition({2})] = 11;
    r[Partition({1, 1})] = 32;
    SchurPoly expect(2);
    expect.add_term(Partition({2}), 11);
    expect.add_term(Partition({1, 1}), 21);
    CHECK(polynomial_to_schur(r, 2) == expect);

    OrbitPoly bad;
    bad[Partition({1, 1, 1})] = 1;
    CHECK_THROWS_AS(polynomial_to_schur(bad, 2), std::invalid_argument);
}

TEST_CASE("conversion round-trips the monomial expansion of Schur polynomials") {
    for (int w = 0; w <= 8; ++w)
        for (const Partition& lam : enumerate_partitions(w, Box(3, std::max(w, 1)))) {
            const SchurPoly back = polynomial_to_schur(schur_monomial_orbits(lam, 3), 3);
            CHECK(back == SchurPoly::single(3, lam));
        }
}

TEST_CASE("dense monomial input is validated for symmetry") {
    // x0^2 alone is not symmetric in two variables
    std::map<std::vector<int>, Int> dense;
    dense[{2, 0}] = 1;
    CHECK_THROWS_AS(monomials_to_orbits(dense, 2), std::invalid_argument);
    dense[{0, 2}] = 2;  // orbit present but coefficients disagree
    CHECK_THROWS_AS(monomials_to_orbits(dense, 2), std::invalid_argument);
    dense[{0, 2}] = 1;
    const OrbitPoly orbits = monomials_to_orbits(dense, 2);
    CHECK(orbits.size() == 1);
    CHECK(orbits.at(Partition({2})) == 1);
}

TEST_CASE("series prediction oracle") {
    CHECK(oracles::hilbert_scheme_euler(24, 0) == 1);
    CHECK(oracles::hilbert_scheme_euler(24, 1) == 24);
    CHECK(oracles::hilbert_scheme_euler(24, 2) == 324);
    CHECK(oracles::hilbert_scheme_euler(24, 3) == 3200);
}
