#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lghodge/ingest.hpp"

using namespace lghodge;
using nlohmann::ordered_json;

namespace {

std::string label(const CensusEntry &e) { return e.comment.empty() ? "#" + std::to_string(e.id) : e.comment; }

ordered_json point_json(const Point3 &p) { return ordered_json::array({p.x(), p.y(), p.z()}); }

ordered_json grid_json(const HodgeDiamond &d) {
    ordered_json rows = ordered_json::array();
    for (int p = 0; p < 4; ++p) {
        ordered_json row = ordered_json::array();
        for (int q = 0; q < 4; ++q) row.push_back(d(p, q));
        rows.push_back(row);
    }
    return rows;
}

int cmd_info(const std::vector<CensusEntry> &entries, const std::string &format) {
    ordered_json all = ordered_json::array();
    for (const auto &e : entries) {
        const auto P = convex_hull(e.vertices);
        const FaceLattice L(P);
        const bool reflexive = is_reflexive(P);
        if (format == "json") {
            ordered_json j;
            j["name"] = label(e);
            j["reflexive"] = reflexive;
            j["ell"] = P.num_lattice_points();
            j["vertices"] = ordered_json::array();
            for (const auto &v : P.vertices()) j["vertices"].push_back(point_json(v));
            j["facets"] = ordered_json::array();
            for (const auto &h : P.facets()) j["facets"].push_back({{"normal", point_json(h.normal)}, {"offset", h.offset}});
            j["face_counts"] = {L.vertices().size(), L.edges().size(), L.facets().size()};
            j["faces"] = ordered_json::array();
            for (int d = 0; d < 3; ++d)
                for (const auto &f : L.faces(d))
                    j["faces"].push_back({{"dim", d}, {"vertex_ids", f.vertex_ids}, {"ell", f.lattice_point_count},
                                          {"ell_star", f.interior_point_count}});
            all.push_back(j);
            continue;
        }
        std::cout << label(e) << '\n';
        std::cout << "  reflexive: " << (reflexive ? "yes" : "no") << '\n';
        std::cout << "  lattice points: " << P.num_lattice_points() << '\n';
        std::cout << "  faces (v/e/f): " << L.vertices().size() << '/' << L.edges().size() << '/' << L.facets().size()
                  << "  euler " << L.euler_characteristic() << '\n';
        std::cout << "  vertices:";
        for (const auto &v : P.vertices()) std::cout << " (" << v.x() << ',' << v.y() << ',' << v.z() << ')';
        std::cout << "\n  dim  vertices          l   l*\n";
        for (int d = 0; d < 3; ++d)
            for (const auto &f : L.faces(d)) {
                std::ostringstream ids;
                for (std::size_t i = 0; i < f.vertex_ids.size(); ++i) ids << (i ? "," : "") << f.vertex_ids[i];
                std::cout << "  " << d << "    " << std::left << std::setw(16) << ids.str() << std::right << std::setw(3)
                          << f.lattice_point_count << "  " << std::setw(3) << f.interior_point_count << '\n';
            }
    }
    if (format == "json") std::cout << all.dump(2) << '\n';
    return 0;
}

int cmd_dual(const std::vector<CensusEntry> &entries) {
    std::vector<CensusEntry> out;
    for (const auto &e : entries) {
        const auto D = polar_dual(convex_hull(e.vertices));
        out.push_back(CensusEntry{e.id, D.vertices(), e.comment.empty() ? "" : e.comment + "-dual"});
    }
    std::cout << emit_simple(out);
    return 0;
}

int cmd_hodge(const std::vector<CensusEntry> &entries, const std::string &format) {
    ordered_json all = ordered_json::array();
    for (const auto &e : entries) {
        const auto d = toric_hodge_data(DualPair(convex_hull(e.vertices)));
        if (format == "json") {
            all.push_back({{"name", label(e)}, {"ell", d.ell_Delta}, {"ell_dual", d.ell_Delta_dual}, {"h11_X", d.h11_X},
                           {"h21_Z", d.h21_Z}, {"h11_Z", d.h11_Z}, {"pic_toric", d.pic_toric_fiber}, {"ph", d.ph}, {"k", d.k}});
            continue;
        }
        std::cout << label(e) << "\n  h11_X " << d.h11_X << "\n  h21_Z " << d.h21_Z << "\n  h11_Z " << d.h11_Z
                  << "\n  pic_toric " << d.pic_toric_fiber << "\n  ph " << d.ph << "\n  k " << d.k << '\n';
    }
    if (format == "json") std::cout << all.dump(2) << '\n';
    return 0;
}

int cmd_diamond(const std::vector<CensusEntry> &entries, const std::string &format) {
    ordered_json all = ordered_json::array();
    for (const auto &e : entries) {
        const auto rec = verify_mirror(convex_hull(e.vertices), label(e));
        if (format == "json") {
            all.push_back({{"name", label(e)}, {"h", grid_json(rec.fano_diamond)}, {"f", grid_json(rec.lg_diamond)}});
            continue;
        }
        std::cout << label(e) << "\n h^{p,q}(X):\n" << rec.fano_diamond.render() << " f^{p,q}(Y,w):\n"
                  << rec.lg_diamond.render();
    }
    if (format == "json") std::cout << all.dump(2) << '\n';
    return 0;
}

int cmd_verify(const std::vector<CensusEntry> &entries) {
    bool ok = true;
    auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
    for (const auto &e : entries) {
        const auto P = convex_hull(e.vertices);
        if (!is_reflexive(P)) {
            std::cout << label(e) << ": not reflexive\n";
            ok = false;
            continue;
        }
        const auto r = verify_mirror(P, label(e));
        std::cout << label(e) << ": " << (r.passed() ? "PASS" : "FAIL") << '\n'
                  << "  mirror equalities   " << mark(r.mirror_holds()) << '\n'
                  << "  lemma (both sides)  " << mark(r.ks_lemma.holds() && r.ks_lemma_dual.holds()) << "  "
                  << r.ks_lemma.lhs << " = " << r.ks_lemma.rhs << '\n'
                  << "  curve count         " << mark(r.ledger_curves.holds()) << "  " << r.ledger_curves.lhs << " = "
                  << r.ledger_curves.rhs << '\n'
                  << "  h11(Z) ledger       " << mark(r.ledger_h11_Z.holds()) << '\n'
                  << "  h21(Z) genus        " << mark(r.ledger_genus.holds()) << '\n'
                  << "  Picard sum          " << mark(r.picard_sum.holds()) << "  " << r.picard_sum.lhs << " = "
                  << r.picard_sum.rhs << '\n'
                  << "  sphere              " << mark(r.sphere.is_sphere()) << '\n'
                  << "  elapsed             " << r.elapsed.count() << " us\n";
        ok = ok && r.passed();
    }
    return ok ? 0 : 1;
}

int cmd_sphere(const std::vector<CensusEntry> &entries) {
    bool ok = true;
    for (const auto &e : entries) {
        const auto D = polar_dual(convex_hull(e.vertices));
        const auto s = sphere_check(FaceLattice(D));
        std::cout << label(e) << " (boundary of the dual)\n  betti " << s.b0 << ' ' << s.b1 << ' ' << s.b2
                  << "\n  euler " << s.euler << "\n  torsion-free " << (s.torsion_free ? "yes" : "no")
                  << "\n  V/E/T " << s.vertex_count << '/' << s.edge_count << '/' << s.triangle_count
                  << "\n  unimodular " << (s.unimodular ? "yes" : "no") << "\n  closed " << (s.closed ? "yes" : "no")
                  << '\n';
        ok = ok && s.is_sphere();
    }
    return ok ? 0 : 1;
}

int cmd_batch(const std::vector<CensusEntry> &entries, const std::string &out, const std::string &format, unsigned jobs) {
    const auto result = batch_verify(entries, BatchOptions{jobs});
    if (!out.empty()) {
        std::ofstream file(out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + out);
        file << emit_report(result.records, format == "json" ? ReportFormat::Json : ReportFormat::Csv);
    }
    std::cout << result.summary.render();
    return result.summary.failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Hodge numbers and mirror checks for reflexive 3-polytopes"};
    app.require_subcommand(1);

    std::string file, format = "text", out, report_format = "csv";
    unsigned jobs = 0;
    const auto text_json = CLI::IsMember({"text", "json"});

    auto *info = app.add_subcommand("info", "lattice points, faces and reflexivity");
    info->add_option("file", file, "PALP or JSON polytope file")->required()->check(CLI::ExistingFile);
    info->add_option("--format", format)->check(text_json);

    auto *dual = app.add_subcommand("dual", "polar dual in the simple JSON format");
    dual->add_option("file", file)->required()->check(CLI::ExistingFile);

    auto *hodge = app.add_subcommand("hodge", "h11_X, h21_Z, h11_Z, pic_toric, ph, k");
    hodge->add_option("file", file)->required()->check(CLI::ExistingFile);
    hodge->add_option("--format", format)->check(text_json);

    auto *diamond = app.add_subcommand("diamond", "Hodge diamond of X and f-diamond of the mirror");
    diamond->add_option("file", file)->required()->check(CLI::ExistingFile);
    diamond->add_option("--format", format)->check(text_json);

    auto *verify = app.add_subcommand("verify", "full check; exit status 0 iff everything passes");
    verify->add_option("file", file)->required()->check(CLI::ExistingFile);

    auto *sphere = app.add_subcommand("sphere-check", "homology of the triangulated boundary of the dual");
    sphere->add_option("file", file)->required()->check(CLI::ExistingFile);

    auto *batch = app.add_subcommand("batch", "verify every entry of a census file");
    batch->add_option("census", file)->required()->check(CLI::ExistingFile);
    batch->add_option("--out", out, "report path");
    batch->add_option("--format", report_format)->check(CLI::IsMember({"csv", "json"}));
    batch->add_option("--jobs", jobs, "worker threads (0: all cores)");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto entries = load_entries(file);
        if (*info) return cmd_info(entries, format);
        if (*dual) return cmd_dual(entries);
        if (*hodge) return cmd_hodge(entries, format);
        if (*diamond) return cmd_diamond(entries, format);
        if (*verify) return cmd_verify(entries);
        if (*sphere) return cmd_sphere(entries);
        if (*batch) return cmd_batch(entries, out, report_format, jobs);
    } catch (const Error &e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
