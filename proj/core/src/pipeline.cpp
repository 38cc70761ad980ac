#include "coxred/pipeline.hpp"

#include <algorithm>

#include "coxred/errors.hpp"
#include "coxred/exact_linalg.hpp"
#include "coxred/presentation.hpp"

namespace coxred {

CoxeterDiagram resolve_diagram(const std::string& text) {
    if (text == "delta2") return delta2();
    if (text == "delta3") return delta3();
    return parse_diagram(text);
}

Pipeline Pipeline::start(const std::string& diagram_text, const PipelineOptions& opt) {
    Pipeline p;
    p.diagram_text = diagram_text;
    p.diagram = resolve_diagram(diagram_text);
    p.options = opt;
    return p;
}

void Pipeline::run_gram() {
    gram = gram_matrix(diagram);
    field_D = cycle_field(diagram);
}

void Pipeline::run_lattice() {
    if (gram.empty()) run_gram();
    lattice = ReflectionLattice::build(diagram);
}

std::tuple<int, int, int> Pipeline::signature() const {
    if (lattice) return lattice->signature();
    auto g = gram;
    return symmetric_signature(g);
}

void Pipeline::run_reduce(unsigned p) {
    if (!lattice) run_lattice();
    prime = lattice->field_D() ? splitting(p, *lattice->field_D()) : PrimeIdeal::rational_prime(p);
    rep = reduce(*lattice, *prime);
    if (prime->field()->p() != 2) {
        const FqMat& regular = rep->degenerate() ? rep->form_w : rep->form;
        form_class = classify_form(regular);
    }
    try {
        ElementTable t = ElementTable::enumerate(rep->generators, options.cap);
        image_order = Integer(static_cast<unsigned long>(t.order()));
    } catch (const CapExceeded&) {
        image_order_capped = true;
    }
}

void Pipeline::run_torsion() {
    if (!rep) throw std::logic_error("run_reduce must precede run_torsion");
    torsion = check_torsion_free(diagram, *rep, prime, options.cap);
}

void Pipeline::run_invariants() {
    if (!torsion) run_torsion();
    euler = euler_characteristic(diagram);
    bool free_kernel = torsion->verdict != Verdict::HasTorsion;
    if (free_kernel && image_order) {
        Rational chi_manifold = *euler * Rational(*image_order);
        chi_manifold.canonicalize();
        if (chi_manifold.get_den() == 1) manifold_euler = chi_manifold.get_num();
    }
}

void Pipeline::run_homology() {
    if (!rep) throw std::logic_error("run_reduce must precede run_homology");
    homology = homology_two_step(diagram, *rep, options.cap);
}

namespace {

FqMat word_image(const Word& w, const std::vector<FqMat>& gens, const std::vector<FqMat>& inv,
                 const FqMat& id) {
    FqMat m = id;
    for (int letter : w) m = m * (letter > 0 ? gens[letter - 1] : inv[-letter - 1]);
    return m;
}

std::vector<FqMat> inverses_of(const std::vector<FqMat>& gens) {
    std::vector<FqMat> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.inverse());
    return out;
}

// images of the Schreier generators t_c x t_{cx}^{-1}
std::vector<FqMat> schreier_images(const RewriteResult& rs, const CosetTable& table,
                                   const std::vector<FqMat>& gens, const FqMat& id) {
    auto inv = inverses_of(gens);
    std::vector<FqMat> tr;
    tr.reserve(rs.transversal.size());
    for (const auto& w : rs.transversal) tr.push_back(word_image(w, gens, inv, id));
    std::vector<FqMat> out;
    out.reserve(rs.schreier.size());
    for (const auto& sg : rs.schreier) {
        int target = table.act(sg.coset, sg.gen);
        FqMat m = tr[sg.coset] * gens[sg.gen - 1] * tr[target].inverse();
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<FqMat> select_kept(const std::vector<FqMat>& images, const std::vector<int>& kept) {
    std::vector<FqMat> out;
    out.reserve(kept.size());
    for (int idx : kept) out.push_back(images[idx]);
    return out;
}

} // namespace

HomologyResult homology_two_step(const CoxeterDiagram& d, const FiniteRep& rep, size_t cap) {
    HomologyResult out;
    const std::vector<FqMat>& gensW = rep.degenerate() ? rep.generators_w : rep.generators;
    if (rep.field->q() != 5 || (rep.degenerate() ? rep.quotient_dim() : rep.dim) != 4)
        throw DecompositionFailure("homology pipeline needs a 4-dimensional representation over F_5");

    std::optional<TensorFrame> frame = TensorFrame::davis_frame(rep);
    if (!frame) frame = TensorFrame::extracted_frame(rep);

    FqMat idW = FqMat::identity(rep.field, 4);
    Presentation pres = coxeter_presentation(d);
    int m = d.node_count();

    // step 1: the even subgroup, index 2 under the sign character
    auto f3 = Fq::make(3, 1);
    FqMat minus_one(f3, 1, 1);
    minus_one.set(0, 0, f3->neg(1));
    ElementTable c2 = ElementTable::enumerate({minus_one}, cap);
    std::vector<int> sign_images(m, c2.index_of(minus_one));
    CosetTable t2 = schreier_coset_table(pres, c2, sign_images);
    RewriteResult rs1 = reidemeister_schreier(pres, t2);
    std::vector<FqMat> imgs1 = schreier_images(rs1, t2, gensW, idW);
    SimplifyOptions opt1;
    opt1.target_generators = std::max(1, m - 1);
    SimplifyResult s1 = tietze_simplify(rs1.pres, opt1);
    std::vector<FqMat> evenW = select_kept(imgs1, s1.kept);
    out.step_indices.push_back(2);
    out.step_generators.push_back(s1.pres.generator_count);

    // step 2: kernel of the projective first factor, index 60
    auto pair_of = [&](const FqMat& w) {
        auto p = decompose(frame->conjugate_into_tensor(w));
        if (!p) throw DecompositionFailure("even-subgroup image does not decompose as a tensor pair");
        return *p;
    };
    std::vector<FqMat> psl_mats;
    psl_mats.reserve(evenW.size());
    for (const auto& w : evenW) psl_mats.push_back(TensorFrame::projective_first(pair_of(w)));
    ElementTable psl = ElementTable::enumerate(psl_mats, cap, normalize_mod_sign);
    if (psl.order() != 60)
        throw DecompositionFailure("projective first-factor image has order " +
                                   std::to_string(psl.order()) + ", expected 60");
    std::vector<int> psl_idx;
    psl_idx.reserve(psl_mats.size());
    for (const auto& g : psl_mats) psl_idx.push_back(psl.index_of(g));
    CosetTable t60 = schreier_coset_table(s1.pres, psl, psl_idx);
    RewriteResult rs2 = reidemeister_schreier(s1.pres, t60);
    std::vector<FqMat> imgs2 = schreier_images(rs2, t60, evenW, idW);
    SimplifyOptions opt2;
    opt2.target_generators = 3;
    SimplifyResult s2 = tietze_simplify(rs2.pres, opt2);
    std::vector<FqMat> k1W = select_kept(imgs2, s2.kept);
    out.step_indices.push_back(60);
    out.step_generators.push_back(s2.pres.generator_count);

    // step 3: kernel of the second factor on SL(2,5), index 120
    std::vector<FqMat> sl_mats;
    sl_mats.reserve(k1W.size());
    for (const auto& w : k1W) sl_mats.push_back(TensorFrame::second_factor(pair_of(w)));
    ElementTable sl = ElementTable::enumerate(sl_mats, cap);
    if (sl.order() != 120)
        throw DecompositionFailure("second-factor image has order " + std::to_string(sl.order()) +
                                   ", expected 120");
    std::vector<int> sl_idx;
    sl_idx.reserve(sl_mats.size());
    for (const auto& g : sl_mats) sl_idx.push_back(sl.index_of(g));
    CosetTable t120 = schreier_coset_table(s2.pres, sl, sl_idx);
    RewriteResult rs3 = reidemeister_schreier(s2.pres, t120);
    out.step_indices.push_back(120);
    out.step_generators.push_back(rs3.pres.generator_count);

    SnfResult ab = abelianization(rs3.pres);
    out.h1_rank = ab.free_rank;
    out.h1_torsion = ab.factors;
    return out;
}

} // namespace coxred
