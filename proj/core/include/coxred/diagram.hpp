#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "coxred/multiquad.hpp"

namespace coxred {

// Edge labels of a Coxeter diagram: a dihedral angle pi/m (m >= 3), a
// parallel pair (Gram entry -2), or an explicit Gram value v < -2 for faces
// joined by a common perpendicular.  An absent edge means label 2.
struct AngleLabel { int m; };
struct InfinityLabel {};
struct GramLabel { MultiQuad value; };
using EdgeLabel = std::variant<AngleLabel, InfinityLabel, GramLabel>;

bool operator==(const EdgeLabel& a, const EdgeLabel& b);
std::string label_str(const EdgeLabel& l);

class CoxeterDiagram {
public:
    CoxeterDiagram() = default;
    explicit CoxeterDiagram(int node_count) : n_(node_count) {}

    int node_count() const { return n_; }
    // nodes are 1-based, matching the textual grammar
    void set_edge(int i, int j, EdgeLabel label);
    const EdgeLabel* edge(int i, int j) const;  // nullptr when orthogonal
    const std::map<std::pair<int, int>, EdgeLabel>& edges() const { return edges_; }

    // label as an integer m (2 when absent); 0 for infinity/gram edges
    int angle_label(int i, int j) const;

    bool is_connected() const;
    std::vector<std::vector<int>> components() const;         // of 1..n
    CoxeterDiagram induced(const std::vector<int>& nodes) const;

    std::string str() const;  // canonical "nodes=n; i-j:l; ..." form

    bool operator==(const CoxeterDiagram& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::map<std::pair<int, int>, EdgeLabel> edges_;
};

// Parse the diagram grammar:
//   diagram := "[" INT ("," INT)* "]" | "nodes=" INT ";" edge (";" edge)*
//   edge    := INT "-" INT ":" (INT | "inf" | "g=" fieldelem)
// Bracket shorthand builds a path; label 2 means consecutive orthogonal
// nodes.  Angle labels are limited to 2..6 (larger ones would need
// non-quadratic cyclotomic entries).
CoxeterDiagram parse_diagram(const std::string& text);

// Gram matrix over the multiquadratic carrier: diagonal 2, off-diagonal
// -2cos(pi/m), 0, -2 or the explicit value.
std::vector<std::vector<MultiQuad>> gram_matrix(const CoxeterDiagram& d);

// Gram entry for a single label.
MultiQuad gram_entry(const EdgeLabel* label);
MultiQuad gram_entry_for_angle(int m);  // -2cos(pi/m), m in 2..6

// shipped presets (the two compact 4-simplices used throughout the tests)
CoxeterDiagram delta2();  // [5,3,3,4]
CoxeterDiagram delta3();  // [5,3,3,5]

} // namespace coxred
