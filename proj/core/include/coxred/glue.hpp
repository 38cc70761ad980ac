#pragma once

#include <string>
#include <variant>
#include <vector>

#include "coxred/classify.hpp"
#include "coxred/diagram.hpp"

namespace coxred {

// Face normals of a doubled polyhedron, written as words in the original
// normals: e_j itself or its image under the gluing reflection.
struct Face {
    int node;        // 1-based original node
    bool reflected;  // r_i(e_node) rather than e_node

    std::string str() const {
        return reflected ? "r(e" + std::to_string(node) + ")" : "e" + std::to_string(node);
    }
};

struct FaceSystem {
    std::vector<Face> faces;
    std::vector<std::vector<MultiQuad>> gram;  // symmetric, diagonal 2
};

// Faces of the union of a polyhedron with its mirror image across face i:
// the original normals except e_i, plus r_i(e_j) for the faces actually
// moved by the reflection.  The new Gram entries follow from bilinearity.
FaceSystem double_at_face(const CoxeterDiagram& d, int i);

// Result of trying to read a face system back as a Coxeter diagram: either
// the diagram, or the first Gram entry with no admissible label.
struct Recognition {
    std::optional<CoxeterDiagram> diagram;
    std::optional<MultiQuad> offending_entry;
};

// Entries 0, -1, -sqrt2, -(1+sqrt5)/2, -sqrt3 map back to labels 2..6, -2 to
// the infinite bond, values < -2 stay explicit Gram entries.  Other cosine
// values are rejected like everywhere else in the label set.
Recognition recognize(const FaceSystem& fs);
CoxeterDiagram recognize_or_throw(const FaceSystem& fs);

// Euler characteristic ratio chi(big)/chi(small), the subgroup index when
// the inclusion exists.
Rational index_relation(const CoxeterDiagram& d_big, const CoxeterDiagram& d_small);

} // namespace coxred
