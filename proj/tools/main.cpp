#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "coxred/errors.hpp"
#include "coxred/glue.hpp"
#include "coxred/report.hpp"

using namespace coxred;

namespace {

void emit(const Json& report, const std::string& path) {
    std::string text = render_report(report);
    std::cout << text;
    if (!path.empty()) {
        std::ofstream out(path);
        out << text;
    }
}

Json glue_report(Pipeline& p, int face) {
    p.run_gram();
    FaceSystem fs = double_at_face(p.diagram, face);
    Recognition rec = recognize(fs);

    ReportSections none;
    Json out = build_report(p, none);
    Json g = Json::object();
    g["face"] = face;
    Json faces = Json::array();
    for (const auto& f : fs.faces) faces.push_back(f.str());
    g["faces"] = std::move(faces);
    Json gram = Json::array();
    for (const auto& row : fs.gram) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.str());
        gram.push_back(std::move(r));
    }
    g["gram"] = std::move(gram);
    if (rec.diagram) {
        Json d = Json::object();
        d["text"] = rec.diagram->str();
        d["nodes"] = rec.diagram->node_count();
        Json edges = Json::array();
        for (const auto& [pair, label] : rec.diagram->edges())
            edges.push_back(Json::array({pair.first, pair.second, label_str(label)}));
        d["edges"] = std::move(edges);
        g["recognized"] = std::move(d);
        g["offending_entry"] = nullptr;
        try {
            Rational ratio = index_relation(*rec.diagram, p.diagram);
            g["chi_ratio"] = ratio.get_den() == 1 ? ratio.get_num().get_str()
                                                  : ratio.get_num().get_str() + "/" + ratio.get_den().get_str();
        } catch (const ZeroEulerCharacteristic&) {
            g["chi_ratio"] = nullptr;
        }
    } else {
        g["recognized"] = nullptr;
        g["offending_entry"] = rec.offending_entry->str();
        g["chi_ratio"] = nullptr;
    }
    out["glue"] = std::move(g);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite quotients and manifold invariants of hyperbolic Coxeter groups"};
    app.require_subcommand(1);

    std::string diagram_text;
    std::string report_path;
    unsigned prime = 0;
    long cap = 1000000;
    int face = 0;
    bool lattice_detail = false;

    auto add_common = [&](CLI::App* cmd, bool needs_diagram, bool needs_prime) {
        auto* d = cmd->add_option("--diagram", diagram_text,
                                  "diagram text ([5,3,3,5] / nodes=..; i-j:l) or preset delta2/delta3");
        if (needs_diagram) d->required();
        cmd->add_option("--report", report_path, "also write the JSON report to this file");
        cmd->add_option("--cap", cap, "group enumeration cap")->check(CLI::PositiveNumber);
        if (needs_prime) cmd->add_option("--prime", prime, "rational prime p")->required();
    };

    auto* cmd_gram = app.add_subcommand("gram", "Gram matrix, field and signature");
    add_common(cmd_gram, true, false);
    auto* cmd_lattice = app.add_subcommand("lattice", "integral reflection representation");
    add_common(cmd_lattice, true, false);
    cmd_lattice->add_flag("--detail", lattice_detail, "include gram_k and reflection matrices");
    auto* cmd_reduce = app.add_subcommand("reduce", "reduction modulo a prime ideal");
    add_common(cmd_reduce, true, true);
    auto* cmd_torsion = app.add_subcommand("torsion", "torsion-freeness of the kernel");
    add_common(cmd_torsion, true, true);
    auto* cmd_inv = app.add_subcommand("invariants", "Euler characteristic and volume factor");
    add_common(cmd_inv, true, true);
    auto* cmd_hom = app.add_subcommand("homology", "first homology of the kernel");
    add_common(cmd_hom, true, true);
    auto* cmd_glue = app.add_subcommand("glue", "double the polyhedron across a face");
    add_common(cmd_glue, true, false);
    cmd_glue->add_option("--face", face, "1-based face to reflect across")->required();
    auto* cmd_davis = app.add_subcommand("davis", "the full [5,3,3,5] mod sqrt(5) run");
    add_common(cmd_davis, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cout << render_report(error_object("UsageError", e.what()));
        return 2;
    }

    try {
        PipelineOptions opt;
        opt.cap = static_cast<size_t>(cap);
        opt.with_lattice_detail = lattice_detail;

        if (cmd_davis->parsed()) {
            diagram_text = "[5,3,3,5]";
            prime = 5;
        }
        Pipeline p = Pipeline::start(diagram_text, opt);
        ReportSections sections;

        if (cmd_glue->parsed()) {
            emit(glue_report(p, face), report_path);
            return 0;
        }

        p.run_gram();
        if (cmd_gram->parsed()) {
            emit(build_report(p, sections), report_path);
            return 0;
        }
        p.run_lattice();
        sections.lattice = true;
        if (cmd_lattice->parsed()) {
            emit(build_report(p, sections), report_path);
            return 0;
        }
        p.run_reduce(prime);
        sections.prime = true;
        if (cmd_reduce->parsed()) {
            emit(build_report(p, sections), report_path);
            return 0;
        }
        p.run_torsion();
        sections.torsion = true;
        if (cmd_torsion->parsed()) {
            emit(build_report(p, sections), report_path);
            return 0;
        }
        p.run_invariants();
        sections.invariants = true;
        if (cmd_inv->parsed()) {
            emit(build_report(p, sections), report_path);
            return 0;
        }
        p.run_homology();
        sections.homology = true;
        emit(build_report(p, sections), report_path);
        return 0;
    } catch (const ParseError& e) {
        std::cout << render_report(error_object(e.kind(), e.what()));
        return 2;
    } catch (const LabelError& e) {
        std::cout << render_report(error_object(e.kind(), e.what()));
        return 2;
    } catch (const Error& e) {
        std::cout << render_report(error_object(e.kind(), e.what()));
        return 3;
    } catch (const std::exception& e) {
        std::cout << render_report(error_object("InternalError", e.what()));
        return 3;
    }
}
