#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coxred/errors.hpp"
#include "coxred/lattice.hpp"

using namespace coxred;

namespace {

QuadElem half(long u, long v, unsigned D) { return QuadElem(Rational(u, 2), Rational(v, 2), D); }

QuadMat mat_mul(const QuadMat& a, const QuadMat& b) {
    size_t n = a.size();
    QuadMat c(n, std::vector<QuadElem>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

QuadMat transpose(const QuadMat& a) {
    size_t n = a.size();
    QuadMat t(n, std::vector<QuadElem>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
    return t;
}

bool is_identity(const QuadMat& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) {
            if (i == j && a[i][j] != QuadElem(1)) return false;
            if (i != j && !a[i][j].is_zero()) return false;
        }
    return true;
}

void check_reflection_identities(const ReflectionLattice& L) {
    const QuadMat& G = L.basis_gram();
    for (const auto& R : L.reflections()) {
        CHECK(mat_mul(transpose(R), mat_mul(G, R)) == G);
        CHECK(is_identity(mat_mul(R, R)));
    }
    // braid relations (R_i R_j)^{m_ij} = I for finite labels
    const CoxeterDiagram& d = L.diagram();
    for (int i = 1; i <= d.node_count(); ++i)
        for (int j = i + 1; j <= d.node_count(); ++j) {
            int m = d.angle_label(i, j);
            if (m == 0) continue;
            QuadMat prod = mat_mul(L.reflections()[i - 1], L.reflections()[j - 1]);
            QuadMat pw = prod;
            for (int k = 1; k < m; ++k) pw = mat_mul(pw, prod);
            CHECK(is_identity(pw));
        }
}

} // namespace

TEST_CASE("cycle field") {
    CHECK(cycle_field(delta3()) == 5u);
    CHECK(cycle_field(delta2()) == 5u);  // tree: only squared entries contribute
    CHECK_FALSE(cycle_field(parse_diagram("[3,3,3]")).has_value());
    CHECK(cycle_field(parse_diagram("[4,3]")) == std::nullopt);  // (-sqrt2)^2 = 2 is rational
    CHECK_THROWS_AS(cycle_field(parse_diagram("nodes=2;")), Disconnected);
    // a cycle with a single label-4 edge picks up sqrt2, and a tree 5-label elsewhere sqrt5
    CHECK_THROWS_AS(cycle_field(parse_diagram("nodes=4; 1-2:4; 2-3:3; 1-3:3; 3-4:5")), UnsupportedField);
    CHECK(cycle_field(parse_diagram("nodes=3; 1-2:4; 2-3:4; 1-3:3")) == std::nullopt);  // two 4s square out
    CHECK(cycle_field(parse_diagram("nodes=3; 1-2:4; 2-3:3; 1-3:3")) == 2u);
}

TEST_CASE("spanning sequence walks the proof order") {
    auto words = spanning_sequence(delta3());
    REQUIRE(words.size() == 5);
    CHECK(words[0].walk == std::vector<int>{2});
    CHECK(words[1].walk == std::vector<int>{2, 1});
    CHECK(words[2].walk == std::vector<int>{2, 3});
    CHECK(words[3].walk == std::vector<int>{2, 3, 4});
    CHECK(words[4].walk == std::vector<int>{2, 3, 4, 5});
    // final nodes cover 2, 1, 3, 4, 5
    std::vector<int> finals;
    for (const auto& w : words) finals.push_back(w.final_node());
    CHECK(finals == std::vector<int>{2, 1, 3, 4, 5});

    auto single = spanning_sequence(parse_diagram("nodes=1;"));
    REQUIRE(single.size() == 1);
    CHECK(single[0].walk.empty());

    CHECK_THROWS_AS(spanning_sequence(parse_diagram("nodes=2;")), Disconnected);
}

TEST_CASE("delta3 lattice matches the worked example") {
    ReflectionLattice L = ReflectionLattice::build(delta3());
    CHECK(L.field_D() == 5u);
    CHECK(L.dim() == 5);
    CHECK(L.signature() == std::tuple<int, int, int>{4, 1, 0});
    CHECK(L.has_unit_e_basis());

    // diagonal entries 2 c^2 with the documented unit coefficients
    const QuadMat& G = L.basis_gram();
    QuadElem phi = half(1, 1, 5);           // (1+sqrt5)/2, coefficient of v_2 up to sign
    CHECK(G[0][0] == QuadElem(2) * phi * phi);
    QuadElem c21 = half(3, 1, 5);           // coefficient of v_21
    CHECK(G[1][1] == QuadElem(2) * c21 * c21);

    for (const auto& row : G)
        for (const auto& x : row) CHECK(x.is_integral());
    for (const auto& R : L.reflections())
        for (const auto& row : R)
            for (const auto& x : row) CHECK(x.is_integral());

    check_reflection_identities(L);

    // e-basis data reproduces the diagram Gram matrix
    QuadMat eg = L.e_gram();
    CHECK(eg[0][1] == -phi);
    CHECK(eg[1][2] == QuadElem(-1));
    auto er = L.e_reflections();
    CHECK(er.size() == 5);
    CHECK(er[0][0][0] == QuadElem(-1));  // r_1(e_1) = -e_1
}

TEST_CASE("delta2 lattice is integral but has no unit e-basis") {
    ReflectionLattice L = ReflectionLattice::build(delta2());
    CHECK(L.field_D() == 5u);
    CHECK(L.signature() == std::tuple<int, int, int>{4, 1, 0});
    CHECK_FALSE(L.has_unit_e_basis());  // the last word coefficient leaves Q(sqrt5)
    check_reflection_identities(L);
}

TEST_CASE("finite diagram is positive definite") {
    ReflectionLattice L = ReflectionLattice::build(parse_diagram("[3,3,5]"));
    CHECK(L.signature() == std::tuple<int, int, int>{4, 0, 0});
    ReflectionLattice one = ReflectionLattice::build(parse_diagram("nodes=1;"));
    CHECK(one.signature() == std::tuple<int, int, int>{1, 0, 0});
}

TEST_CASE("node permutation leaves invariants unchanged") {
    // [5,3,3,5] with nodes relabeled: signature and field must not move
    std::vector<std::string> relabelings = {
        "nodes=5; 2-1:5; 1-3:3; 3-4:3; 4-5:5",
        "nodes=5; 5-4:5; 4-3:3; 3-2:3; 2-1:5",
        "nodes=5; 1-5:5; 5-3:3; 3-4:3; 4-2:5",
        "nodes=5; 3-1:5; 1-2:3; 2-4:3; 4-5:5",
        "nodes=5; 4-2:5; 2-5:3; 5-1:3; 1-3:5",
    };
    for (const auto& text : relabelings) {
        ReflectionLattice L = ReflectionLattice::build(parse_diagram(text));
        CHECK(L.field_D() == 5u);
        CHECK(L.signature() == std::tuple<int, int, int>{4, 1, 0});
        check_reflection_identities(L);
    }
}

TEST_CASE("random supported diagrams satisfy the reflection identities") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> nd(2, 5);
    std::uniform_int_distribution<int> label(2, 6);
    int built = 0;
    for (int attempt = 0; attempt < 400 && built < 20; ++attempt) {
        int n = nd(rng);
        CoxeterDiagram d(n);
        // random spanning tree keeps it connected
        for (int v = 2; v <= n; ++v) {
            std::uniform_int_distribution<int> parent(1, v - 1);
            int m = label(rng);
            if (m == 2) m = 3;
            d.set_edge(parent(rng), v, AngleLabel{m});
        }
        // a few extra edges
        std::uniform_int_distribution<int> coin(0, 3);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (!d.edge(i, j) && coin(rng) == 0) {
                    int m = label(rng);
                    if (m != 2) d.set_edge(i, j, AngleLabel{m});
                }
        try {
            ReflectionLattice L = ReflectionLattice::build(d);
            auto [pos, neg, zero] = L.signature();
            if (zero != 0) continue;  // degenerate pairing has no reflection matrices
            check_reflection_identities(L);
            ++built;
        } catch (const UnsupportedField&) {
        } catch (const NotFreeLattice&) {
        } catch (const NonIntegralEntry&) {
        } catch (const std::domain_error&) {
        }
    }
    CHECK(built == 20);
}
