#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxred/classify.hpp"
#include "coxred/quadfield.hpp"
#include "coxred/reduction.hpp"

namespace coxred {

// A vertex stabiliser to certify: for a finite vertex one corank-1 node
// subset of finite type; for an ideal vertex the affine corank-1 subset
// together with its finite refinements (one node dropped from every affine
// component, crossed with the finite factor).
struct VertexGroup {
    enum class Kind { Finite, IdealRefined };
    Kind kind;
    std::vector<int> nodes;                     // the corank-1 subset
    std::vector<std::vector<int>> refinements;  // ideal only: the finite sub-subsets
};

struct CertificateEntry {
    std::vector<int> nodes;
    Integer order;        // abstract order of the finite group
    Integer image_order;  // order of its image in the reduction
};

enum class Verdict { TorsionFree, HasTorsion, GuaranteedByMinkowski };

std::string to_string(Verdict v);

struct TorsionVerdict {
    Verdict verdict;
    std::optional<bool> minkowski;  // absent when the criterion does not apply
    std::vector<CertificateEntry> certificate;

    bool all_equal() const {
        for (const auto& e : certificate)
            if (e.order != e.image_order) return false;
        return true;
    }
};

// The Minkowski-style arithmetic criterion: reduction mod alpha has
// torsion-free kernel when alpha does not divide 2, and additionally does
// not divide 3 when 3 ramifies in Q(sqrt D).  A false result is merely
// inconclusive.
bool minkowski_torsion_free(const PrimeIdeal& P);

// Enumerate the vertex stabilisers of the polyhedron's diagram.  Corank-1
// subsets of finite type give finite vertices; subsets whose components are
// affine (possibly crossed with a finite factor) give ideal vertices with
// their refinements; anything else is not a vertex.  A diagram that is
// itself a product of affine components is treated as a single ideal vertex.
std::vector<VertexGroup> vertex_groups(const CoxeterDiagram& d);

// Compare each vertex group's order with the order of its image (computed
// on the radical quotient when the form is degenerate); when the arithmetic
// criterion applies and fires, the verdict reports the guarantee and the
// certificate doubles as a cross-check.
TorsionVerdict check_torsion_free(const CoxeterDiagram& d, const FiniteRep& rep,
                                  const std::optional<PrimeIdeal>& P = std::nullopt,
                                  size_t cap = 1000000);

} // namespace coxred
