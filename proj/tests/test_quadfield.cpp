#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "coxred/errors.hpp"
#include "coxred/quadfield.hpp"

using namespace coxred;

namespace {

QuadElem half(long u, long v, unsigned D) {  // (u + v sqrt D) / 2
    return QuadElem(Rational(u, 2), Rational(v, 2), D);
}

} // namespace

TEST_CASE("coerce_to_quadratic") {
    MultiQuad x(Rational(3, 2));
    x.set_coeff(MultiQuad::slot_of(5), Rational(1, 2));
    QuadElem q = coerce_to_quadratic(x, 5);
    CHECK(q.a() == Rational(3, 2));
    CHECK(q.b() == Rational(1, 2));
    CHECK(q.to_multiquad() == x);  // exact round trip

    CHECK(coerce_to_quadratic(MultiQuad(2), 5) == QuadElem(2));
    CHECK_THROWS_AS(coerce_to_quadratic(MultiQuad::sqrt_of(2), 5), NotInField);
}

TEST_CASE("integrality") {
    CHECK(half(1, 1, 5).is_integral());       // (1+sqrt5)/2, x^2 - x - 1
    CHECK_FALSE(QuadElem(Rational(1, 2)).is_integral());
    CHECK(QuadElem::sqrt_of(5).is_integral());
    CHECK_FALSE(half(1, 1, 2).is_integral()); // D = 2 (mod 4) needs integer coordinates
    CHECK(QuadElem(Rational(1), Rational(1), 2).is_integral());
    CHECK(QuadElem(7).is_integral());
}

TEST_CASE("splitting") {
    PrimeIdeal ram = splitting(5, 5);
    CHECK(ram.kind() == SplitKind::Ramified);
    CHECK(ram.residue_q() == 5);
    REQUIRE(ram.generator().has_value());
    CHECK(*ram.generator() == QuadElem::sqrt_of(5));

    PrimeIdeal sp = splitting(11, 5);  // 4^2 = 5 (mod 11)
    CHECK(sp.kind() == SplitKind::Split);
    CHECK(sp.residue_q() == 11);
    CHECK(abs(sp.generator()->norm()) == 11);

    PrimeIdeal in = splitting(2, 5);  // x^2 - x - 1 irreducible mod 2
    CHECK(in.kind() == SplitKind::Inert);
    CHECK(in.residue_q() == 4);
    CHECK(in.field()->mod_b() == 1);
    CHECK(in.field()->mod_c() == 1);  // F_4 = F_2[t]/(t^2 + t + 1)

    CHECK_THROWS_AS(splitting(3, 10), NotPID);  // class number 2
}

TEST_CASE("splitting is exhaustive and matches the discriminant") {
    for (unsigned D : {2u, 3u, 5u}) {
        unsigned disc = D % 4 == 1 ? D : 4 * D;
        for (unsigned p = 2; p <= 100; ++p) {
            bool prime = true;
            for (unsigned d = 2; d * d <= p; ++d)
                if (p % d == 0) { prime = false; break; }
            if (!prime) continue;
            PrimeIdeal P = splitting(p, D);
            CHECK((P.kind() == SplitKind::Ramified) == (disc % p == 0));
            if (P.kind() == SplitKind::Inert)
                CHECK(P.residue_q() == p * p);
            else
                CHECK(P.residue_q() == p);
        }
    }
}

TEST_CASE("residues") {
    PrimeIdeal P5 = splitting(5, 5);
    CHECK(P5.residue_code(half(1, 1, 5)) == 3);  // (1+sqrt5)/2 = -2 (mod sqrt5)
    CHECK(P5.residue_code(QuadElem::sqrt_of(5)) == 0);
    CHECK_THROWS_AS(P5.residue_code(QuadElem(Rational(1, 2))), NotIntegral);

    PrimeIdeal P2 = splitting(2, 5);
    uint16_t t = P2.field()->encode(0, 1);
    CHECK(P2.residue_code(half(1, 1, 5)) == t);  // the residue class t in F_4

    PrimeIdeal P11 = splitting(11, 5);
    CHECK(P11.residue_code(*P11.generator()) == 0);  // the ideal reduces to zero
}

TEST_CASE("residue is a ring homomorphism") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> coeff(-40, 40);
    std::vector<PrimeIdeal> ideals;
    for (unsigned D : {2u, 3u, 5u, 13u})
        for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) ideals.push_back(splitting(p, D));
    for (const auto& P : ideals) {
        unsigned D = *P.D();
        auto rand_integral = [&]() {
            if (D % 4 == 1) {
                long u = coeff(rng), v = coeff(rng);
                if ((u - v) % 2 != 0) ++u;
                return half(u, v, D);
            }
            return QuadElem(Rational(coeff(rng)), Rational(coeff(rng)), D);
        };
        for (int trial = 0; trial < 15; ++trial) {
            QuadElem x = rand_integral(), y = rand_integral();
            const Fq& F = *P.field();
            CHECK(P.residue_code(x * y) == F.mul(P.residue_code(x), P.residue_code(y)));
            CHECK(P.residue_code(x + y) == F.add(P.residue_code(x), P.residue_code(y)));
        }
        CHECK(P.residue_code(QuadElem(1)) == 1);
    }
}

TEST_CASE("divides") {
    CHECK_FALSE(divides(QuadElem::sqrt_of(5), QuadElem(2)));
    CHECK(divides(QuadElem::sqrt_of(5), QuadElem(5)));
    CHECK(divides(half(3, 1, 5), QuadElem(1)));  // unit: norm (9-5)/4 = 1
}

TEST_CASE("exact sign matches numeric evaluation") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    int checked = 0;
    for (int trial = 0; trial < 2000 && checked < 1000; ++trial) {
        unsigned D = std::array<unsigned, 4>{2, 3, 5, 13}[trial % 4];
        QuadElem x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), D);
        double v = x.a().get_d() + x.b().get_d() * std::sqrt(static_cast<double>(D));
        if (std::abs(v) < 1e-9) continue;
        CHECK(x.sign() == (v > 0 ? 1 : -1));
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("serialization") {
    CHECK(half(3, 1, 5).str() == "3/2 + 1/2*sqrt(5)");
    CHECK(QuadElem(2).str() == "2");
    CHECK(QuadElem(Rational(0), Rational(-1), 2).str() == "0 - 1*sqrt(2)");
}
