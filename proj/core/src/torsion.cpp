#include "coxred/torsion.hpp"

#include <algorithm>

#include "coxred/engine.hpp"
#include "coxred/errors.hpp"

namespace coxred {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::TorsionFree: return "torsion_free";
        case Verdict::HasTorsion: return "has_torsion";
        case Verdict::GuaranteedByMinkowski: return "guaranteed_by_minkowski";
    }
    return "?";
}

bool minkowski_torsion_free(const PrimeIdeal& P) {
    if (!P.D())
        throw NotPID("the arithmetic criterion is stated for quadratic fields");
    if (!field_is_pid(*P.D()))
        throw NotPID("Q(sqrt" + std::to_string(*P.D()) + ") is not on the class-number-one allowlist");
    const QuadElem& alpha = *P.generator();
    if (divides(alpha, QuadElem(2))) return false;
    unsigned D = *P.D();
    bool three_ramifies = D % 3 == 0;  // 3 | disc, disc = D or 4D
    if (three_ramifies && divides(alpha, QuadElem(3))) return false;
    return true;
}

namespace {

// Refinements of an ideal vertex: drop one node from every affine component
// (each choice yields a finite group), keep finite components whole.
std::vector<std::vector<int>> ideal_refinements(const CoxeterDiagram& d, const std::vector<int>& nodes) {
    CoxeterDiagram sub = d.induced(nodes);  // nodes sorted ascending
    auto comps = sub.components();
    std::vector<std::vector<int>> fixed;    // finite components, in original labels
    std::vector<std::vector<int>> affine;   // affine components, original labels
    for (const auto& comp : comps) {
        std::vector<int> orig;
        for (int local : comp) orig.push_back(nodes[local - 1]);
        if (finite_type(sub.induced(comp)))
            fixed.push_back(orig);
        else
            affine.push_back(orig);
    }
    std::vector<std::vector<int>> out{{}};
    for (const auto& f : fixed)
        for (auto& acc : out) acc.insert(acc.end(), f.begin(), f.end());
    for (const auto& a : affine) {
        std::vector<std::vector<int>> next;
        for (const auto& acc : out)
            for (int drop : a) {
                std::vector<int> ext = acc;
                for (int v : a)
                    if (v != drop) ext.push_back(v);
                next.push_back(std::move(ext));
            }
        out = std::move(next);
    }
    for (auto& v : out) std::sort(v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

// A subset is an ideal vertex when every component is finite or affine and
// at least one is affine.
bool is_ideal_subset(const CoxeterDiagram& d, const std::vector<int>& nodes) {
    CoxeterDiagram sub = d.induced(nodes);
    bool has_affine = false;
    for (const auto& comp : sub.components()) {
        CoxeterDiagram c = sub.induced(comp);
        if (finite_type(c)) continue;
        if (component_is_affine(c))
            has_affine = true;
        else
            return false;
    }
    return has_affine;
}

} // namespace

std::vector<VertexGroup> vertex_groups(const CoxeterDiagram& d) {
    std::vector<VertexGroup> out;
    std::vector<int> all;
    for (int i = 1; i <= d.node_count(); ++i) all.push_back(i);

    // A diagram that is entirely a product of affine (and finite) components
    // is a Euclidean group: one ideal vertex structure covers it.
    if (!finite_type(d) && is_ideal_subset(d, all)) {
        out.push_back({VertexGroup::Kind::IdealRefined, all, ideal_refinements(d, all)});
        return out;
    }

    for (const auto& sub : parabolic_subdiagrams(d, 1)) {
        if (finite_type(sub.diagram)) {
            out.push_back({VertexGroup::Kind::Finite, sub.nodes, {}});
        } else if (is_ideal_subset(d, sub.nodes)) {
            out.push_back({VertexGroup::Kind::IdealRefined, sub.nodes, ideal_refinements(d, sub.nodes)});
        }
    }
    return out;
}

TorsionVerdict check_torsion_free(const CoxeterDiagram& d, const FiniteRep& rep,
                                  const std::optional<PrimeIdeal>& P, size_t cap) {
    TorsionVerdict out;

    const std::vector<FqMat>& gens = rep.degenerate() ? rep.generators_w : rep.generators;
    ElementTable table = ElementTable::enumerate(gens, cap);

    auto image_order_of = [&](const std::vector<int>& nodes) {
        std::vector<int> subset;
        for (int node : nodes) subset.push_back(node - 1);
        return subgroup_order(table, subset);
    };
    auto order_of = [&](const std::vector<int>& nodes) {
        auto ft = finite_type(d.induced(nodes));
        if (!ft) throw std::logic_error("vertex group is not finite type");
        return ft->total_order;
    };

    for (const auto& vg : vertex_groups(d)) {
        if (vg.kind == VertexGroup::Kind::Finite) {
            out.certificate.push_back({vg.nodes, order_of(vg.nodes), image_order_of(vg.nodes)});
        } else {
            for (const auto& nodes : vg.refinements)
                out.certificate.push_back({nodes, order_of(nodes), image_order_of(nodes)});
        }
    }

    if (P && P->D() && field_is_pid(*P->D()))
        out.minkowski = minkowski_torsion_free(*P);

    bool equal = out.all_equal();
    if (out.minkowski && *out.minkowski) {
        if (!equal)
            throw std::logic_error("arithmetic and geometric torsion criteria disagree");
        out.verdict = Verdict::GuaranteedByMinkowski;
    } else {
        out.verdict = equal ? Verdict::TorsionFree : Verdict::HasTorsion;
    }
    return out;
}

} // namespace coxred
