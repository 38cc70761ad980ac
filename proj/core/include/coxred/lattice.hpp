#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "coxred/diagram.hpp"
#include "coxred/quadfield.hpp"

namespace coxred {

// A spanning word: the walk (i1, ..., ir) from the implicit base node 1,
// every consecutive pair (including 1 -> i1) joined by a nonzero Gram entry.
// It denotes the vector a_{1 i1} a_{i1 i2} ... a_{i_{r-1} i_r} e_{i_r}; the
// empty walk denotes e_1 itself.
struct BasisWord {
    std::vector<int> walk;
    int final_node() const { return walk.empty() ? 1 : walk.back(); }
};

using QuadMat = std::vector<std::vector<QuadElem>>;

// The field generated by all cycle products of the Gram matrix, presented as
// a squarefree D (nullopt for Q).  Generated by squared edge entries plus
// the products around a fundamental cycle basis; any closed-walk product is
// a monomial in these.  Throws Disconnected / UnsupportedField.
std::optional<unsigned> cycle_field(const CoxeterDiagram& d);

// Words covering every node, built by a depth-first walk from node 1 that
// extends to the smallest unvisited neighbour and backtracks when stuck.
// For several nodes the base is covered by the out-and-back word (i1, 1).
std::vector<BasisWord> spanning_sequence(const CoxeterDiagram& d);

// Pairing of two spanning words under the form: the closed-walk product
// through the base node, coerced into the cycle field.
QuadElem word_pairing(const CoxeterDiagram& d, const BasisWord& w, const BasisWord& u,
                      std::optional<unsigned> D);

// The integral reflection representation: a free module over the ring of
// integers of the cycle field, spanned by an independent subset of the
// spanning words, on which every diagram reflection acts by an integral
// matrix.
class ReflectionLattice {
public:
    static ReflectionLattice build(const CoxeterDiagram& d);

    const CoxeterDiagram& diagram() const { return diagram_; }
    std::optional<unsigned> field_D() const { return field_D_; }
    const std::vector<BasisWord>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    // Gram matrix of the basis words; every entry is an algebraic integer.
    const QuadMat& basis_gram() const { return gram_; }

    // One matrix per diagram node, acting on basis-word coordinates;
    // R^T G R = G and R^2 = I hold exactly.
    const std::vector<QuadMat>& reflections() const { return reflections_; }

    std::tuple<int, int, int> signature() const { return signature_; }

    // True when the lattice is also the integer span of the unit normals
    // themselves: each node carries exactly one basis word and all word
    // coefficients are units.  Reductions then use the e-basis, matching the
    // diagram Gram matrix entry for entry.
    bool has_unit_e_basis() const { return unit_e_basis_; }
    QuadMat e_gram() const;
    std::vector<QuadMat> e_reflections() const;

private:
    CoxeterDiagram diagram_;
    std::optional<unsigned> field_D_;
    std::vector<BasisWord> basis_;
    QuadMat gram_;
    std::vector<QuadMat> reflections_;
    std::tuple<int, int, int> signature_{0, 0, 0};
    bool unit_e_basis_ = false;
    std::vector<QuadElem> e_coeff_;  // c with v_{word(j)} = c * e_j, when in the field
};

} // namespace coxred
