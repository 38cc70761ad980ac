#pragma once

#include <optional>
#include <string>

#include "coxred/classify.hpp"
#include "coxred/diagram.hpp"
#include "coxred/engine.hpp"
#include "coxred/lattice.hpp"
#include "coxred/reduction.hpp"
#include "coxred/smith.hpp"
#include "coxred/tensor.hpp"
#include "coxred/torsion.hpp"

namespace coxred {

struct HomologyResult {
    long h1_rank = 0;
    std::vector<Integer> h1_torsion;
    // pipeline shape, for the report: subgroup indices and generator counts
    std::vector<long> step_indices;       // 2, 60, 120
    std::vector<int> step_generators;     // generators after each simplification
};

struct PipelineOptions {
    size_t cap = 1000000;
    bool with_lattice_detail = false;  // serialize gram_k and reflection matrices
};

// Everything a CLI subcommand may need, computed lazily stage by stage.
struct Pipeline {
    CoxeterDiagram diagram;
    std::string diagram_text;
    PipelineOptions options;

    std::optional<unsigned> field_D;
    std::vector<std::vector<MultiQuad>> gram;
    std::optional<ReflectionLattice> lattice;
    std::optional<PrimeIdeal> prime;
    std::optional<FiniteRep> rep;
    std::optional<FormClass> form_class;     // of the regular quotient
    std::optional<Integer> image_order;      // absent when enumeration hits the cap
    bool image_order_capped = false;
    std::optional<TorsionVerdict> torsion;
    std::optional<Rational> euler;
    std::optional<Integer> manifold_euler;   // euler * image_order when torsion-free
    std::optional<HomologyResult> homology;

    static Pipeline start(const std::string& diagram_text, const PipelineOptions& opt = {});

    void run_gram();       // field + gram + signature data
    void run_lattice();    // + reflection lattice
    void run_reduce(unsigned p);
    void run_torsion();
    void run_invariants();
    void run_homology();

    std::tuple<int, int, int> signature() const;
};

// The two-step Reidemeister-Schreier pipeline through the tensor
// identification: index 2 (even subgroup), then 60 (projective first
// factor), then 120 (second factor), followed by abelianization.
HomologyResult homology_two_step(const CoxeterDiagram& d, const FiniteRep& rep, size_t cap);

// Resolve "--diagram" input: the named presets or the diagram grammar.
CoxeterDiagram resolve_diagram(const std::string& text);

} // namespace coxred
