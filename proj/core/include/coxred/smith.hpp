#pragma once

#include <vector>

#include "coxred/multiquad.hpp"
#include "coxred/presentation.hpp"

namespace coxred {

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Integer> v;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c) {}
    Integer& at(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
    const Integer& at(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }
};

struct SnfResult {
    std::vector<Integer> factors;  // d_1 | d_2 | ... (nonzero diagonal)
    long free_rank = 0;            // columns - #factors

    std::vector<Integer> nontrivial_factors() const {
        std::vector<Integer> out;
        for (const auto& d : factors)
            if (d != 1) out.push_back(d);
        return out;
    }
};

// Invariant factors over arbitrary-precision integers; equal to the
// gcd-of-minors characterization.
SnfResult smith_normal_form(IntMat m);

// Relation matrix of exponent sums (rows = relators), then its Smith form:
// the group's torsion coefficients and free rank.  Trivial factors are
// dropped.
SnfResult abelianization(const Presentation& p);

} // namespace coxred
