#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coxred/classify.hpp"
#include "coxred/exact_linalg.hpp"
#include "coxred/presentation.hpp"

using namespace coxred;

TEST_CASE("finite type recognition with orders") {
    auto h4 = finite_type(parse_diagram("[3,3,5]"));
    REQUIRE(h4);
    CHECK(h4->components.size() == 1);
    CHECK(h4->components[0].type == "H4");
    CHECK(h4->total_order == 14400);

    auto two_pentagons = finite_type(parse_diagram("nodes=4; 1-2:5; 3-4:5"));
    REQUIRE(two_pentagons);
    CHECK(two_pentagons->total_order == 100);

    auto a2 = finite_type(parse_diagram("[3]"));
    REQUIRE(a2);
    CHECK(a2->components[0].type == "A2");
    CHECK(a2->total_order == 6);

    CHECK(finite_type(parse_diagram("nodes=5; 1-2:3; 2-3:3; 3-4:3; 3-5:3"))->components[0].type == "D5");
    CHECK(finite_type(parse_diagram("[3,4,3]"))->components[0].type == "F4");
    CHECK(finite_type(parse_diagram("[3,4,3]"))->total_order == 1152);
    CHECK(finite_type(parse_diagram("[4,3,3]"))->components[0].type == "B4");
    CHECK(finite_type(parse_diagram("[5,3]"))->total_order == 120);
    CHECK(finite_type(parse_diagram("[6]"))->components[0].type == "G2");
    // E6: arms (1,2,2) around the trivalent node
    auto e6 = finite_type(parse_diagram("nodes=6; 1-2:3; 2-3:3; 3-4:3; 4-5:3; 3-6:3"));
    REQUIRE(e6);
    CHECK(e6->components[0].type == "E6");
    CHECK(e6->total_order == 51840);

    CHECK_FALSE(finite_type(parse_diagram("[5,3,3,5]")));
    CHECK_FALSE(finite_type(parse_diagram("nodes=2; 1-2:inf")));
    CHECK_FALSE(finite_type(parse_diagram("[3,4,3,3]")));  // affine F4
    CHECK_FALSE(finite_type(parse_diagram("nodes=3; 1-2:3; 2-3:3; 1-3:3")));
}

TEST_CASE("finite type iff positive definite gram") {
    // all connected diagrams on up to 5 nodes would be huge; sample the
    // labeled paths exhaustively instead, the classification's hard cases
    std::vector<int> labels{2, 3, 4, 5, 6};
    for (int a : labels)
        for (int b : labels)
            for (int c : labels)
                for (int e : labels) {
                    std::string text = "[" + std::to_string(a) + "," + std::to_string(b) + "," +
                                       std::to_string(c) + "," + std::to_string(e) + "]";
                    CoxeterDiagram d = parse_diagram(text);
                    auto [pos, neg, zero] = symmetric_signature(gram_matrix(d));
                    bool definite = neg == 0 && zero == 0;
                    CHECK(static_cast<bool>(finite_type(d)) == definite);
                }
}

TEST_CASE("affine recognition") {
    auto aff = affine_type(parse_diagram("nodes=2; 1-2:inf"));
    REQUIRE(aff.size() == 1);
    CHECK(aff[0]);

    auto tri = affine_type(parse_diagram("nodes=3; 1-2:3; 2-3:3; 1-3:3"));
    CHECK(tri[0]);

    CHECK_FALSE(affine_type(parse_diagram("[3,3,5]"))[0]);
    CHECK(affine_type(parse_diagram("[3,4,3,3]"))[0]);
    CHECK(affine_type(parse_diagram("[4,4]"))[0]);
    CHECK(affine_type(parse_diagram("[6,3]"))[0]);
    CHECK_FALSE(affine_type(parse_diagram("[5,3,3,5]"))[0]);

    // mixed components report individually
    auto mixed = affine_type(parse_diagram("nodes=4; 1-2:inf; 3-4:3"));
    CHECK(mixed[0] != mixed[1]);
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(delta3()) == Rational(26, 14400));
    CHECK(euler_characteristic(parse_diagram("nodes=1;")) == Rational(1, 2));
    // finite groups: chi = 1 / |W|
    for (const char* text : {"[3]", "[5,3]", "nodes=1;"}) {
        CoxeterDiagram d = parse_diagram(text);
        auto ft = finite_type(d);
        REQUIRE(ft);
        Rational expect(1);
        expect /= Rational(ft->total_order);
        CHECK(euler_characteristic(d) == expect);
    }
    // brute-force subset oracle on a mid-size diagram
    {
        CoxeterDiagram d = parse_diagram("[4,3,5]");
        Rational chi = 0;
        int n = d.node_count();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) subset.push_back(i + 1);
            auto ft = finite_type(d.induced(subset));
            if (!ft) continue;
            Rational term(subset.size() % 2 ? -1 : 1);
            term /= Rational(ft->total_order);
            chi += term;
        }
        chi.canonicalize();
        CHECK(euler_characteristic(d) == chi);
    }
}

TEST_CASE("coxeter presentations") {
    Presentation p5 = coxeter_presentation(parse_diagram("[5]"));
    CHECK(p5.generator_count == 2);
    REQUIRE(p5.relators.size() == 3);
    CHECK(p5.relators[2].size() == 10);

    Presentation d3 = coxeter_presentation(delta3());
    CHECK(d3.generator_count == 5);
    CHECK(d3.relators.size() == 15);  // 5 involutions + C(5,2) braid relators

    Presentation free2 = coxeter_presentation(parse_diagram("nodes=2; 1-2:inf"));
    CHECK(free2.relators.size() == 2);  // involutions only
}

TEST_CASE("parabolic subdiagrams") {
    CoxeterDiagram d = delta3();
    auto corank1 = parabolic_subdiagrams(d, 1);
    CHECK(corank1.size() == 5);
    auto corank3 = parabolic_subdiagrams(d, 3);
    CHECK(corank3.size() == 10);
    auto full = parabolic_subdiagrams(d, 5);
    CHECK(full.size() == 1);
    CHECK(full[0].nodes.empty());
}
