#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowlab/grammar.hpp"

using namespace chowlab;

TEST_CASE("ring grammar") {
    CHECK(parse_ring("G(2,4)^3") == GrassmannProduct({{2, 4}, {2, 4}, {2, 4}}));
    CHECK(parse_ring("G(5,9)") == GrassmannProduct(5, 9));
    CHECK(parse_ring("G(2,4)xG(2,6)") == GrassmannProduct({{2, 4}, {2, 6}}));
    CHECK(parse_ring(" G( 2 , 4 ) x G(3,5) ") == GrassmannProduct({{2, 4}, {3, 5}}));
    CHECK_THROWS_AS(parse_ring("H(2,4)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring("G(4,4)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring("G(2,4)^0"), std::invalid_argument);
}

TEST_CASE("bundle grammar round-trips") {
    for (const char* text : {
             "taut(0)",
             "triv(3)",
             "dual(taut(1))",
             "wedge(3,dual(taut(0)))",
             "sym(3,dual(taut(0)))",
             "tensor(dual(taut(0)),tensor(dual(taut(1)),dual(taut(2))))",
             "sum(taut(0),triv(2))",
         }) {
        const BundleExpr e = parse_bundle(text);
        CHECK(e.to_string() == text);
        CHECK(parse_bundle(e.to_string()) == e);
    }
    CHECK_THROWS_AS(parse_bundle("spin(2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("wedge(2,taut(0)) extra"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("wedge(2 taut(0))"), std::invalid_argument);
}

TEST_CASE("class grammar") {
    const GrassmannProduct g59 = parse_ring("G(5,9)");
    const SchubertClass via_grammar =
        parse_class("c(10,wedge(2,dual(taut(0))))", g59);
    const SchubertClass direct = chern_class_on(
        g59, BundleExpr::wedge(2, BundleExpr::dual(BundleExpr::taut(0))), 10);
    CHECK(via_grammar == direct);
    CHECK(format_class(via_grammar) == "1*sigma[4,3,2,1]");

    CHECK(parse_class("sigma[4,3,2,1]", g59) ==
          SchubertClass::sigma(g59, 0, Partition({4, 3, 2, 1})));

    const GrassmannProduct triple = parse_ring("G(2,4)^3");
    CHECK(parse_class("sigma[1||]", triple) == SchubertClass::hyperplane(triple, 0));
    CHECK(parse_class("h(2)", triple) == SchubertClass::hyperplane(triple, 2));
    SchubertClass two = SchubertClass::hyperplane(triple, 0);
    two *= Int(2);
    CHECK(parse_class("2*h(0)", triple) == two);
    CHECK(parse_class("h(0)*h(1)", triple) ==
          SchubertClass::schubert(
              triple, PartitionTuple({Partition({1}), Partition({1}), Partition{}})));

    CHECK_THROWS_AS(parse_class("sigma[1|1]", triple), std::invalid_argument);  // arity
    CHECK_THROWS_AS(parse_class("h(7)", triple), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("q(1)", triple), std::invalid_argument);
}

TEST_CASE("formatting") {
    CHECK(format_partition(Partition({4, 3, 2, 1})) == "[4,3,2,1]");
    CHECK(format_partition(Partition{}) == "[]");
    const GrassmannProduct g24(2, 4);
    CHECK(format_class(SchubertClass::zero(g24)) == "0");
    const SchubertClass s = SchubertClass::sigma(g24, 0, Partition({2})) +
                            SchubertClass::sigma(g24, 0, Partition({1, 1}));
    CHECK(format_class(s) == "1*sigma[2] + 1*sigma[1,1]");
}
