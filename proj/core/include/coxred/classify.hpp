#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxred/diagram.hpp"

namespace coxred {

// One irreducible factor of a finite Coxeter group with its classical order.
struct FiniteComponent {
    std::string type;          // "A4", "B3", "D5", "E6", "F4", "H4", "I2(5)", ...
    std::vector<int> nodes;    // 1-based node indices of the input diagram
    Integer order;
};

struct FiniteTypeReport {
    std::vector<FiniteComponent> components;
    Integer total_order = 1;
};

// Table-driven recognition against the classification of finite Coxeter
// groups; component orders come from the closed-form formulas.  Returns
// nullopt when any connected component is not of finite type.  The empty
// diagram is the trivial group (order 1).
std::optional<FiniteTypeReport> finite_type(const CoxeterDiagram& d);

// Per-component affine test: a connected component is affine exactly when
// its Gram matrix is positive semidefinite and singular (checked by exact
// congruence pivoting), which reproduces the affine classification including
// the single-infinite-bond case.  Entries are aligned with components().
std::vector<bool> affine_type(const CoxeterDiagram& d);

bool component_is_affine(const CoxeterDiagram& component);

// chi = sum over node subsets S with W_S finite of (-1)^{|S|} / |W_S|.
// Subdiagrams with infinite-type components contribute nothing.
Rational euler_characteristic(const CoxeterDiagram& d);

struct Subdiagram {
    std::vector<int> nodes;    // 1-based, ascending
    CoxeterDiagram diagram;
};

// All node subsets of size node_count - corank with their induced diagrams.
std::vector<Subdiagram> parabolic_subdiagrams(const CoxeterDiagram& d, int corank);

} // namespace coxred
