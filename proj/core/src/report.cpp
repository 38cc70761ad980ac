#include "coxred/report.hpp"

namespace coxred {

namespace {

std::string rational_str(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str()
                            : q.get_num().get_str() + "/" + q.get_den().get_str();
}

Json integer_json(const Integer& n) {
    if (n.fits_slong_p()) return Json(n.get_si());
    return Json(n.get_str());  // orders beyond int64 degrade to exact strings
}

Json quad_entry(const QuadElem& x) {
    Json j = Json::object();
    j["a"] = rational_str(x.a());
    j["b"] = rational_str(x.b());
    j["D"] = x.D() ? Json(*x.D()) : Json(nullptr);
    return j;
}

Json quad_matrix(const QuadMat& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(quad_entry(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

Json build_report(const Pipeline& p, const ReportSections& sections) {
    Json out = Json::object();

    Json diagram = Json::object();
    diagram["text"] = p.diagram_text;
    diagram["nodes"] = p.diagram.node_count();
    Json edges = Json::array();
    for (const auto& [pair, label] : p.diagram.edges())
        edges.push_back(Json::array({pair.first, pair.second, label_str(label)}));
    diagram["edges"] = std::move(edges);
    out["diagram"] = std::move(diagram);

    out["field"] = Json::object();
    out["field"]["D"] = p.field_D ? Json(*p.field_D) : Json(nullptr);

    Json gram = Json::array();
    for (const auto& row : p.gram) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.str());
        gram.push_back(std::move(r));
    }
    out["gram"] = std::move(gram);

    auto [pos, neg, zero] = p.signature();
    out["signature"] = Json::object();
    out["signature"]["positive"] = pos;
    out["signature"]["negative"] = neg;
    out["signature"]["zero"] = zero;

    if (sections.lattice && p.lattice) {
        Json lat = Json::object();
        Json words = Json::array();
        for (const auto& w : p.lattice->basis()) {
            Json ww = Json::array();
            for (int i : w.walk) ww.push_back(i);
            words.push_back(std::move(ww));
        }
        lat["basis_words"] = std::move(words);
        lat["integral"] = true;  // construction throws otherwise
        if (p.options.with_lattice_detail) {
            lat["gram_k"] = quad_matrix(p.lattice->basis_gram());
            Json refl = Json::array();
            for (const auto& r : p.lattice->reflections()) refl.push_back(quad_matrix(r));
            lat["reflections"] = std::move(refl);
        }
        out["lattice"] = std::move(lat);
    }

    if (sections.prime && p.prime) {
        Json pr = Json::object();
        pr["p"] = p.prime->p();
        pr["kind"] = to_string(p.prime->kind());
        pr["residue_q"] = p.prime->residue_q();
        pr["generator"] = p.prime->generator() ? Json(p.prime->generator()->str()) : Json(nullptr);
        out["prime"] = std::move(pr);

        Json red = Json::object();
        red["dim"] = p.rep->dim;
        red["basis"] = p.rep->basis;
        red["radical_dim"] = p.rep->radical_dim();
        if (p.form_class) {
            Json fc = Json::object();
            fc["dim"] = p.form_class->dim;
            fc["witt_index"] = p.form_class->witt_index;
            if (p.form_class->dim % 2 == 0)
                fc["epsilon"] = std::string(1, p.form_class->epsilon);
            else
                fc["discriminant"] = *p.form_class->disc_square ? "square" : "nonsquare";
            red["form_class"] = std::move(fc);
        } else {
            red["form_class"] = nullptr;
        }
        red["image_order"] = p.image_order ? integer_json(*p.image_order) : Json(nullptr);
        if (p.image_order_capped) red["image_order_capped"] = true;
        out["reduction"] = std::move(red);
    }

    if (sections.torsion && p.torsion) {
        Json t = Json::object();
        t["minkowski"] = p.torsion->minkowski ? Json(*p.torsion->minkowski) : Json(nullptr);
        t["verdict"] = to_string(p.torsion->verdict);
        Json cert = Json::array();
        for (const auto& e : p.torsion->certificate) {
            Json c = Json::object();
            Json nodes = Json::array();
            for (int v : e.nodes) nodes.push_back(v);
            c["nodes"] = std::move(nodes);
            c["order"] = integer_json(e.order);
            c["image_order"] = integer_json(e.image_order);
            cert.push_back(std::move(c));
        }
        t["certificate"] = std::move(cert);
        out["torsion"] = std::move(t);
    }

    if (sections.invariants && p.euler) {
        Json inv = Json::object();
        inv["euler_char"] = rational_str(*p.euler);
        inv["manifold_euler"] = p.manifold_euler ? integer_json(*p.manifold_euler) : Json(nullptr);
        inv["volume_factor"] = p.manifold_euler ? integer_json(*p.manifold_euler) : Json(nullptr);
        out["invariants"] = std::move(inv);
    }

    if (sections.homology && p.homology) {
        Json h = Json::object();
        h["h1_rank"] = p.homology->h1_rank;
        Json tor = Json::array();
        for (const auto& d : p.homology->h1_torsion) tor.push_back(integer_json(d));
        h["h1_torsion"] = std::move(tor);
        Json steps = Json::array();
        for (long i : p.homology->step_indices) steps.push_back(i);
        h["step_indices"] = std::move(steps);
        out["homology"] = std::move(h);
    }

    return out;
}

Json error_object(const std::string& kind, const std::string& message) {
    Json out = Json::object();
    out["error"] = Json::object();
    out["error"]["kind"] = kind;
    out["error"]["message"] = message;
    return out;
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

} // namespace coxred
