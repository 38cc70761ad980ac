#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coxred/errors.hpp"
#include "coxred/multiquad.hpp"

using namespace coxred;

namespace {

MultiQuad sqrt5_halves(const Rational& a, const Rational& b) {
    MultiQuad x(a);
    x.set_coeff(MultiQuad::slot_of(5), b);
    return x;
}

} // namespace

TEST_CASE("basis products re-expand inside the basis") {
    MultiQuad s2 = MultiQuad::sqrt_of(2);
    MultiQuad s3 = MultiQuad::sqrt_of(3);
    MultiQuad s5 = MultiQuad::sqrt_of(5);
    CHECK(s2 * s2 == MultiQuad(2));
    CHECK(s2 * s3 == MultiQuad::sqrt_of(6));
    CHECK(s2 * s5 == MultiQuad::sqrt_of(10));
    CHECK(s3 * s5 == MultiQuad::sqrt_of(15));
    CHECK(MultiQuad::sqrt_of(6) * MultiQuad::sqrt_of(10) == MultiQuad(2) * MultiQuad::sqrt_of(15));
    CHECK(MultiQuad::sqrt_of(30) * MultiQuad::sqrt_of(30) == MultiQuad(30));
}

TEST_CASE("golden ratio arithmetic") {
    MultiQuad phi = sqrt5_halves(Rational(1, 2), Rational(1, 2));  // (1+sqrt5)/2
    CHECK(phi * phi == phi + MultiQuad(1));                        // x^2 = x + 1
    MultiQuad g5 = sqrt5_halves(Rational(-1, 2), Rational(-1, 2)); // -2cos(pi/5)
    CHECK(g5 * g5 == sqrt5_halves(Rational(3, 2), Rational(1, 2)));
}

TEST_CASE("field inverse") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        MultiQuad x;
        for (int s = 0; s < MultiQuad::kBasisSize; ++s)
            x.set_coeff(s, Rational(coeff(rng), 1 + std::abs(coeff(rng))));
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == MultiQuad(1));
    }
}

TEST_CASE("exact sign agrees with numeric evaluation") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (int trial = 0; trial < 500; ++trial) {
        MultiQuad x;
        for (int s = 0; s < MultiQuad::kBasisSize; ++s)
            x.set_coeff(s, Rational(coeff(rng), den(rng)));
        double v = x.approx();
        if (std::abs(v) < 1e-6) continue;  // too near zero for the double oracle
        CHECK(x.sign() == (v > 0 ? 1 : -1));
    }
    CHECK(MultiQuad(0).sign() == 0);
    // a value that is zero only exactly: (sqrt2+sqrt3)^2 - 5 - 2*sqrt6
    MultiQuad s = MultiQuad::sqrt_of(2) + MultiQuad::sqrt_of(3);
    MultiQuad z = s * s - MultiQuad(5) - MultiQuad(2) * MultiQuad::sqrt_of(6);
    CHECK(z.sign() == 0);
    CHECK(z.is_zero());
}

TEST_CASE("serialization round trip") {
    MultiQuad x = sqrt5_halves(Rational(3, 2), Rational(-1, 2)) + MultiQuad::sqrt_of(6);
    CHECK(x.str() == "3/2 - 1/2*sqrt(5) + 1*sqrt(6)");
    CHECK(MultiQuad::parse(x.str()) == x);
    CHECK(MultiQuad::parse("-2") == MultiQuad(-2));
    CHECK(MultiQuad::parse("0 - 1*sqrt(2)") == -MultiQuad::sqrt_of(2));
    CHECK(MultiQuad::parse("1/2 + 1/2*sqrt(5)").str() == "1/2 + 1/2*sqrt(5)");
    CHECK_THROWS_AS(MultiQuad::parse("1 + sqrt("), ParseError);
    CHECK_THROWS_AS(MultiQuad::parse("2*sqrt(7)"), NotInField);
}
