#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxred/fq.hpp"
#include "coxred/lattice.hpp"
#include "coxred/quadfield.hpp"

namespace coxred {

// Isometry class of a nondegenerate symmetric bilinear form over F_q
// (q odd): Witt index plus type for even dimension, discriminant square
// class for odd dimension.
struct FormClass {
    int dim = 0;
    int witt_index = 0;
    char epsilon = 0;              // '+' or '-', even dim only
    std::optional<bool> disc_square;  // odd dim only
    std::string str() const;
};

// The reflection representation reduced modulo a prime ideal: the form and
// generator matrices over the residue field, the radical of the form, and
// the induced representation on a complement of the radical.
struct FiniteRep {
    std::shared_ptr<const Fq> field;
    int dim = 0;
    std::string basis;             // "e" (unit normals) or "words"
    FqMat form;                    // symmetric bilinear form
    std::vector<FqMat> generators; // one per diagram node

    FqMat radical;                 // rows = reduced-echelon kernel basis of form
    // induced data on the coordinate complement W of the radical pivots
    std::vector<int> complement_cols;
    FqMat form_w;
    std::vector<FqMat> generators_w;

    int radical_dim() const { return radical.rows(); }
    int quotient_dim() const { return static_cast<int>(complement_cols.size()); }
    bool degenerate() const { return radical.rows() > 0; }
};

// Entrywise residue of the lattice data; generator orthogonality is
// re-verified over F_q.  Uses the e-basis when the lattice provides one.
FiniteRep reduce(const ReflectionLattice& lattice, const PrimeIdeal& P);

// Classify a nondegenerate form by repeatedly splitting off hyperbolic
// pairs; the isotropic-vector search is exhaustive over projective vectors
// (guarded by a cap on the search space).  Requires odd q.
FormClass classify_form(const FqMat& form, long projective_cap = 20000000);

// Order of the orthogonal group O_dim^eps(q) / O_dim(q), q odd.
Integer orthogonal_group_order(int dim, unsigned q, char epsilon);
Integer orthogonal_group_order(const FormClass& cls, unsigned q);

// Number of vectors x (including 0) with q(x) = 0, by brute force; the
// classification tests compare this against the closed-form count.
long count_isotropic(const FqMat& form);

// q(v) = B(v,v)/2 for odd q; v given by codes.
uint16_t quadratic_value(const FqMat& form, const std::vector<uint16_t>& v);

} // namespace coxred
