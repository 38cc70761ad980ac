#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxred/diagram.hpp"
#include "coxred/errors.hpp"

using namespace coxred;

TEST_CASE("bracket shorthand builds a labeled path") {
    CoxeterDiagram d = parse_diagram("[5,3,3,5]");
    CHECK(d.node_count() == 5);
    CHECK(d.angle_label(1, 2) == 5);
    CHECK(d.angle_label(2, 3) == 3);
    CHECK(d.angle_label(3, 4) == 3);
    CHECK(d.angle_label(4, 5) == 5);
    CHECK(d.angle_label(1, 3) == 2);

    CoxeterDiagram d2 = parse_diagram("[5,3,3,4]");
    CHECK(d2.angle_label(4, 5) == 4);

    // label 2 in brackets means consecutive orthogonal nodes
    CoxeterDiagram d3 = parse_diagram("[3,2,3]");
    CHECK(d3.node_count() == 4);
    CHECK(d3.edge(2, 3) == nullptr);
    CHECK(d3.components().size() == 2);
}

TEST_CASE("edge list grammar") {
    CoxeterDiagram d = parse_diagram("nodes=2; 1-2:inf");
    CHECK(d.node_count() == 2);
    REQUIRE(d.edge(1, 2) != nullptr);
    CHECK(std::holds_alternative<InfinityLabel>(*d.edge(1, 2)));
    CHECK(gram_entry(d.edge(1, 2)) == MultiQuad(-2));

    CoxeterDiagram g = parse_diagram("nodes=2; 1-2:g=-5/2");
    CHECK(std::get<GramLabel>(*g.edge(1, 2)).value == MultiQuad(Rational(-5, 2)));

    CoxeterDiagram h = parse_diagram("nodes=3; 1-2:4; 2-3:g=-1 - 1*sqrt(5)");
    CHECK(std::get<GramLabel>(*h.edge(2, 3)).value.sign() < 0);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_diagram("[5,3,"), ParseError);
    CHECK_THROWS_AS(parse_diagram("nodes=2 1-2:3"), ParseError);
    CHECK_THROWS_AS(parse_diagram("nodes=2; 1-3:3"), ParseError);
    CHECK_THROWS_AS(parse_diagram("[1,3]"), LabelError);
    CHECK_THROWS_AS(parse_diagram("[7]"), LabelError);
    CHECK_THROWS_AS(parse_diagram("nodes=2; 1-2:g=-3/2"), LabelError);  // not < -2
    CHECK_THROWS_AS(parse_diagram("nodes=2; 1-1:3"), LabelError);
}

TEST_CASE("gram matrix entries") {
    auto g = gram_matrix(parse_diagram("[5,3,3,5]"));
    MultiQuad c5(Rational(-1, 2));
    c5.set_coeff(MultiQuad::slot_of(5), Rational(-1, 2));
    CHECK(g[0][0] == MultiQuad(2));
    CHECK(g[0][1] == c5);
    CHECK(g[1][2] == MultiQuad(-1));
    CHECK(g[0][2] == MultiQuad(0));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(g[i][j] == g[j][i]);

    CHECK(gram_entry_for_angle(4) == -MultiQuad::sqrt_of(2));
    // -2cos(pi/4) squared is 2
    CHECK(gram_entry_for_angle(4) * gram_entry_for_angle(4) == MultiQuad(2));
}

TEST_CASE("presets") {
    CHECK(delta3() == parse_diagram("[5,3,3,5]"));
    CHECK(delta2() == parse_diagram("[5,3,3,4]"));
}
