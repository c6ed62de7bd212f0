// Command line frontend: validation, zigzag census, monodromy tables, forest
// certificates, connected sums and generators over trig files.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "zmono/generators.hpp"
#include "zmono/report.hpp"
#include "zmono/trig_io.hpp"

namespace {

using namespace zmono;

Face parse_face_arg(const std::string& text) {
    std::array<std::string, 3> parts;
    size_t start = 0;
    for (int i = 0; i < 2; ++i) {
        const size_t comma = text.find(',', start);
        if (comma == std::string::npos)
            throw CLI::ValidationError("--face", "expected three comma-separated labels, got '" + text + "'");
        parts[static_cast<size_t>(i)] = text.substr(start, comma - start);
        start = comma + 1;
    }
    parts[2] = text.substr(start);
    return Face(parts[0], parts[1], parts[2]);
}

SpecialMap parse_map_arg(const std::string& text, const Face& f1, const Face& f2) {
    std::map<VertexLabel, VertexLabel> assignment;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(start, comma - start);
        const size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--map", "expected v=w entries, got '" + item + "'");
        assignment[item.substr(0, eq)] = item.substr(eq + 1);
        start = comma + 1;
    }
    for (const auto& m : special_maps(f1, f2)) {
        bool ok = true;
        for (const auto& [v, w] : m.pairing) {
            auto it = assignment.find(v);
            if (it == assignment.end() || it->second != w) ok = false;
        }
        if (ok && assignment.size() == 3) return m;
    }
    throw CLI::ValidationError("--map", "'" + text + "' is not a bijection between the two faces");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw DomainError(ErrorKind::TrigParse, "cannot open '" + out_path + "' for writing");
    out << text;
}

std::string sum_map_text(const SpecialMap& m) {
    std::string s;
    for (const auto& [v, w] : m.pairing) {
        if (!s.empty()) s += ",";
        s += v + "=" + w;
    }
    return s;
}

int run(int argc, char** argv) {
    CLI::App app{"zigzags, z-monodromies and dual-graph forests of surface triangulations"};
    app.require_subcommand(1);

    // ---- check ----
    auto* check = app.add_subcommand("check", "validate a trig file");
    std::string check_file;
    bool check_json = false;
    check->add_option("file", check_file, "trig file")->required();
    check->add_flag("--json", check_json);

    // ---- zigzags ----
    auto* zz = app.add_subcommand("zigzags", "enumerate zigzags up to reversal");
    std::string zz_file;
    bool zz_full = false, zz_shadow = false, zz_json = false;
    zz->add_option("file", zz_file)->required();
    zz->add_flag("--full", zz_full, "print full oriented traversals");
    zz->add_flag("--shadow", zz_shadow, "print face shadows");
    zz->add_flag("--json", zz_json);

    // ---- monodromy ----
    auto* mono = app.add_subcommand("monodromy", "per-face z-monodromy table");
    std::string mono_file, mono_face;
    bool mono_json = false;
    mono->add_option("file", mono_file)->required();
    mono->add_option("--face", mono_face, "restrict to one face (comma-separated labels)");
    mono->add_flag("--json", mono_json);

    // ---- forests ----
    auto* forests = app.add_subcommand("forests", "forest certificates for G1 and G2");
    std::string forests_file, forests_dot, forests_dual_dot;
    bool forests_json = false;
    forests->add_option("file", forests_file)->required();
    forests->add_option("--dot", forests_dot, "write PREFIX.g1.dot and PREFIX.g2.dot");
    forests->add_option("--dual-dot", forests_dual_dot, "write the full dual graph as DOT");
    forests->add_flag("--json", forests_json);

    // ---- sum ----
    auto* sum = app.add_subcommand("sum", "connected sum along a special map");
    std::string sum_file1, sum_file2, sum_face1, sum_face2, sum_map, sum_out;
    bool sum_json = false;
    sum->add_option("file1", sum_file1)->required();
    sum->add_option("file2", sum_file2)->required();
    sum->add_option("--face1", sum_face1)->required();
    sum->add_option("--face2", sum_face2)->required();
    sum->add_option("--map", sum_map, "vertex bijection a=x,b=y,c=z")->required();
    sum->add_option("-o,--output", sum_out, "write the sum as trig");
    sum->add_flag("--json", sum_json);

    // ---- find-sum ----
    auto* fsum = app.add_subcommand("find-sum", "search for a z-knotted connected sum");
    std::string fsum_file1, fsum_file2, fsum_out;
    bool fsum_json = false;
    fsum->add_option("file1", fsum_file1)->required();
    fsum->add_option("file2", fsum_file2)->required();
    fsum->add_option("-o,--output", fsum_out, "write the sum as trig");
    fsum->add_flag("--json", fsum_json);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a triangulation");
    std::string gen_kind, gen_out, gen_log, gen_base = "tetrahedron";
    int gen_n = 0, gen_steps = 0;
    std::uint64_t gen_seed = 0;
    gen->add_option("kind", gen_kind,
                    "bipyramid | tetrahedron | octahedron | icosahedron | rp2 | torus-k7 | random")
        ->required();
    gen->add_option("n", gen_n, "bipyramid size");
    gen->add_option("--base", gen_base, "random base: tetrahedron, bipyramid:N, rp2, torus-k7");
    gen->add_option("--steps", gen_steps, "random move count");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("-o,--output", gen_out, "output trig file");
    gen->add_option("--log", gen_log, "write the mutation log");

    // ---- report ----
    auto* report = app.add_subcommand("report", "full analysis report");
    std::string report_file;
    bool report_json = false;
    report->add_option("file", report_file)->required();
    report->add_flag("--json", report_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*check) {
        const Triangulation t = read_trig_file(check_file);
        if (check_json) {
            nlohmann::ordered_json j;
            j["schema"] = "1";
            j["valid"] = true;
            j["surface"] = {{"vertices", t.vertex_count()},
                            {"edges", t.edge_count()},
                            {"faces", t.face_count()},
                            {"euler_characteristic", euler_characteristic(t)},
                            {"orientability", to_string(t.orientability())}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "ok V=" << t.vertex_count() << " E=" << t.edge_count()
                      << " F=" << t.face_count() << " chi=" << euler_characteristic(t) << " "
                      << to_string(t.orientability()) << "\n";
        }
    } else if (*zz) {
        const Triangulation t = read_trig_file(zz_file);
        const auto reps = enumerate_zigzags(t);
        if (zz_json) {
            nlohmann::ordered_json j;
            j["schema"] = "1";
            j["pair_count"] = reps.size();
            auto pairs = nlohmann::ordered_json::array();
            for (size_t i = 0; i < reps.size(); ++i) {
                nlohmann::ordered_json p{{"index", i + 1}, {"length", reps[i].length()}};
                if (zz_full) {
                    auto tr = nlohmann::ordered_json::array();
                    for (const auto& oe : oriented_edges(reps[i], t)) tr.push_back({oe.tail, oe.head});
                    p["traversal"] = tr;
                }
                if (zz_shadow) {
                    auto sh = nlohmann::ordered_json::array();
                    for (const auto& f : face_shadow(reps[i], t)) sh.push_back(face_to_string(f));
                    p["shadow"] = sh;
                }
                pairs.push_back(p);
            }
            j["pairs"] = pairs;
            std::cout << j.dump(2) << "\n";
        } else {
            for (size_t i = 0; i < reps.size(); ++i) {
                std::cout << "pair " << i + 1 << ": length " << reps[i].length();
                if (zz_full) {
                    std::cout << " traversal:";
                    for (const auto& oe : oriented_edges(reps[i], t))
                        std::cout << ' ' << oriented_edge_to_string(oe);
                }
                std::cout << "\n";
                if (zz_shadow) {
                    std::cout << "  shadow:";
                    for (const auto& f : face_shadow(reps[i], t)) std::cout << ' ' << face_to_string(f);
                    std::cout << "\n";
                }
            }
        }
    } else if (*mono) {
        const Triangulation t = read_trig_file(mono_file);
        if (!mono_face.empty()) {
            const Face f = parse_face_arg(mono_face);
            if (!t.has_face(f))
                throw DomainError(ErrorKind::FaceNotInTriangulation,
                                  "face " + face_to_string(f) + " is not in the triangulation");
            const auto m = z_monodromy(f, t);
            const auto type = classify(m, f);
            const bool local = zigzags_through_face(f, t).size() == 1;
            if (mono_json) {
                nlohmann::ordered_json j;
                j["schema"] = "1";
                j["face"] = face_to_string(f);
                j["d"] = rotation(f).cycle_notation();
                j["m"] = m.cycle_notation();
                j["type"] = to_string(type.tag);
                j["locally_z_knotted"] = local;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "face " << face_to_string(f) << "\n";
                std::cout << "D_F = " << rotation(f).cycle_notation() << "\n";
                std::cout << "M_F = " << m.cycle_notation() << "\n";
                std::cout << "type " << to_string(type.tag)
                          << (local ? " (locally z-knotted)" : "") << "\n";
            }
        } else {
            const auto reports = face_reports(t);
            if (mono_json) {
                nlohmann::ordered_json j;
                j["schema"] = "1";
                auto rows = nlohmann::ordered_json::array();
                for (const auto& r : reports) {
                    rows.push_back({{"face", face_to_string(r.face)},
                                    {"type", to_string(r.type.tag)},
                                    {"locally_z_knotted", r.locally_z_knotted},
                                    {"pairs_through_face", r.zigzag_pair_count_through_face},
                                    {"m", r.m.cycle_notation()}});
                }
                j["faces"] = rows;
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& r : reports) {
                    std::cout << face_to_string(r.face) << " " << to_string(r.type.tag) << " "
                              << (r.locally_z_knotted ? "locally-z-knotted" : "-") << "\n";
                }
            }
        }
    } else if (*forests) {
        const Triangulation t = read_trig_file(forests_file);
        const auto reports = face_reports(t);
        const auto g1 = subgraph_by_type(t, MonodromyTag::M1, reports);
        const auto g2 = subgraph_by_type(t, MonodromyTag::M2, reports);
        const auto c1 = is_forest(g1);
        const auto c2 = is_forest(g2);
        std::map<Face, std::string> annotations;
        for (const auto& r : reports) annotations[r.face] = to_string(r.type.tag);
        if (!forests_dot.empty()) {
            emit(export_dot(g1, annotations, "g1"), forests_dot + ".g1.dot");
            emit(export_dot(g2, annotations, "g2"), forests_dot + ".g2.dot");
        }
        if (!forests_dual_dot.empty())
            emit(export_dot(dual(t), annotations, "dual"), forests_dual_dot);
        auto describe = [](const ForestCertificate& c) {
            std::string text = c.forest ? "forest" : "has-cycle";
            text += " [";
            for (size_t i = 0; i < c.components.size(); ++i) {
                if (i) text += " ";
                text += c.components[i].shape;
            }
            text += "]";
            return text;
        };
        if (forests_json) {
            nlohmann::ordered_json j;
            j["schema"] = "1";
            j["g1"] = certificate_to_json(c1);
            j["g2"] = certificate_to_json(c2);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "G1: " << describe(c1) << "\n";
            std::cout << "G2: " << describe(c2) << "\n";
        }
    } else if (*sum) {
        const Triangulation t1 = read_trig_file(sum_file1);
        const Triangulation t2 = read_trig_file(sum_file2);
        const Face f1 = parse_face_arg(sum_face1);
        const Face f2 = parse_face_arg(sum_face2);
        const SpecialMap m = parse_map_arg(sum_map, f1, f2);
        const SumResult result = connected_sum(t1, t2, m);
        if (!sum_out.empty()) write_trig_file(result.sum, sum_out);
        if (sum_json) {
            nlohmann::ordered_json j;
            j["schema"] = "1";
            j["surface"] = {{"vertices", result.sum.vertex_count()},
                            {"edges", result.sum.edge_count()},
                            {"faces", result.sum.face_count()},
                            {"euler_characteristic", euler_characteristic(result.sum)},
                            {"orientability", to_string(result.sum.orientability())}};
            auto ren = nlohmann::ordered_json::object();
            for (const auto& [from, to] : result.renaming) ren[from] = to;
            j["renaming"] = ren;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "sum: V=" << result.sum.vertex_count() << " E=" << result.sum.edge_count()
                      << " F=" << result.sum.face_count()
                      << " chi=" << euler_characteristic(result.sum) << "\n";
            if (sum_out.empty()) std::cout << to_trig(result.sum);
        }
    } else if (*fsum) {
        const Triangulation t1 = read_trig_file(fsum_file1);
        const Triangulation t2 = read_trig_file(fsum_file2);
        const ZKnottedSum found = find_z_knotted_sum(t1, t2);
        if (!fsum_out.empty()) write_trig_file(found.result.sum, fsum_out);
        if (fsum_json) {
            nlohmann::ordered_json j;
            j["schema"] = "1";
            j["face1"] = face_to_string(found.map.f1);
            j["face2"] = face_to_string(found.map.f2);
            j["map"] = sum_map_text(found.map);
            j["faces"] = found.result.sum.face_count();
            j["z_knotted"] = true;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "face1: " << face_to_string(found.map.f1) << "\n";
            std::cout << "face2: " << face_to_string(found.map.f2) << "\n";
            std::cout << "map: " << sum_map_text(found.map) << "\n";
            std::cout << "z-knotted sum with " << found.result.sum.face_count() << " faces\n";
            if (fsum_out.empty()) std::cout << to_trig(found.result.sum);
        }
    } else if (*gen) {
        Triangulation t = platonic(PlatonicKind::tetrahedron);
        std::string log_text;
        if (gen_kind == "bipyramid") {
            if (gen_n == 0)
                throw CLI::ValidationError("gen", "bipyramid needs its size, e.g. `gen bipyramid 5`");
            t = bipyramid(gen_n);
        } else if (gen_kind == "tetrahedron") {
            t = platonic(PlatonicKind::tetrahedron);
        } else if (gen_kind == "octahedron") {
            t = platonic(PlatonicKind::octahedron);
        } else if (gen_kind == "icosahedron") {
            t = platonic(PlatonicKind::icosahedron);
        } else if (gen_kind == "rp2") {
            t = projective_plane_6();
        } else if (gen_kind == "torus-k7") {
            t = torus_k7();
        } else if (gen_kind == "random") {
            RandomResult r = random_triangulation(BaseDescriptor::parse(gen_base), gen_steps, gen_seed);
            t = std::move(r.triangulation);
            log_text = r.log.to_text();
        } else {
            throw CLI::ValidationError("gen", "unknown kind '" + gen_kind + "'");
        }
        emit(to_trig(t), gen_out);
        if (!gen_log.empty()) emit(log_text, gen_log);
    } else if (*report) {
        const Triangulation t = read_trig_file(report_file);
        const AnalysisReport r = analyze(t);
        if (report_json)
            std::cout << report_to_json(r, t).dump(2) << "\n";
        else
            std::cout << report_to_text(r, t);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const zmono::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
