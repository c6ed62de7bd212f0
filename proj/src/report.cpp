#include "zmono/report.hpp"

#include <map>
#include <sstream>

namespace zmono {

std::string face_to_string(const Face& f) { return f.v[0] + "-" + f.v[1] + "-" + f.v[2]; }

std::string oriented_edge_to_string(const OrientedEdge& e) { return e.tail + ">" + e.head; }

AnalysisReport analyze(const Triangulation& t) {
    AnalysisReport r;
    r.vertices = t.vertex_count();
    r.edges = t.edge_count();
    r.faces = t.face_count();
    r.euler = euler_characteristic(t);
    r.orientability = t.orientability();

    r.zigzag_pairs = enumerate_zigzags(t);
    r.z_knotted = r.zigzag_pairs.size() == 1;
    r.face_reports = face_reports(t);
    for (const auto& fr : r.face_reports)
        ++r.type_histogram[static_cast<size_t>(static_cast<int>(fr.type.tag) - 1)];

    r.g1_graph = subgraph_by_type(t, MonodromyTag::M1, r.face_reports);
    r.g2_graph = subgraph_by_type(t, MonodromyTag::M2, r.face_reports);
    r.g1 = is_forest(r.g1_graph);
    r.g2 = is_forest(r.g2_graph);

    // internal consistency of the aggregate
    int total = 0;
    for (int c : r.type_histogram) total += c;
    internal_check(total == r.faces, "type histogram must cover every face");
    const bool all_knotted_types = r.type_histogram[4] == 0 && r.type_histogram[5] == 0 &&
                                   r.type_histogram[6] == 0;
    internal_check(r.z_knotted == all_knotted_types,
                   "z-knottedness must match the monodromy type census");
    return r;
}

nlohmann::ordered_json certificate_to_json(const ForestCertificate& cert) {
    nlohmann::ordered_json j;
    j["verdict"] = cert.forest ? "forest" : "has-cycle";
    auto comps = nlohmann::ordered_json::array();
    for (const auto& c : cert.components)
        comps.push_back({{"nodes", c.nodes}, {"links", c.links}, {"shape", c.shape}});
    j["components"] = comps;
    if (cert.cycle_witness) {
        auto witness = nlohmann::ordered_json::array();
        for (const auto& f : *cert.cycle_witness) witness.push_back(face_to_string(f));
        j["cycle_witness"] = witness;
    }
    return j;
}

namespace {

std::string component_summary(const ForestCertificate& cert) {
    if (cert.components.empty()) return "empty";
    std::map<std::string, int> counts;
    for (const auto& c : cert.components) ++counts[c.shape];
    std::ostringstream os;
    bool first = true;
    for (const auto& [shape, n] : counts) {
        if (!first) os << ", ";
        first = false;
        os << n << " x " << shape;
    }
    return os.str();
}

}  // namespace

nlohmann::ordered_json report_to_json(const AnalysisReport& r, const Triangulation& t,
                                      bool include_traversals) {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["surface"] = {{"vertices", r.vertices},
                    {"edges", r.edges},
                    {"faces", r.faces},
                    {"euler_characteristic", r.euler},
                    {"orientability", to_string(r.orientability)}};

    nlohmann::ordered_json zz;
    zz["pair_count"] = r.zigzag_pairs.size();
    auto lengths = nlohmann::ordered_json::array();
    for (const auto& z : r.zigzag_pairs) lengths.push_back(z.length());
    zz["lengths"] = lengths;
    if (include_traversals) {
        auto pairs = nlohmann::ordered_json::array();
        for (size_t i = 0; i < r.zigzag_pairs.size(); ++i) {
            auto edges = nlohmann::ordered_json::array();
            for (const auto& oe : oriented_edges(r.zigzag_pairs[i], t))
                edges.push_back({oe.tail, oe.head});
            pairs.push_back({{"index", i + 1}, {"traversal", edges}});
        }
        zz["pairs"] = pairs;
    }
    j["zigzags"] = zz;

    nlohmann::ordered_json mono;
    auto faces = nlohmann::ordered_json::array();
    for (const auto& fr : r.face_reports) {
        faces.push_back({{"face", face_to_string(fr.face)},
                         {"type", to_string(fr.type.tag)},
                         {"locally_z_knotted", fr.locally_z_knotted},
                         {"pairs_through_face", fr.zigzag_pair_count_through_face}});
    }
    mono["faces"] = faces;
    nlohmann::ordered_json hist;
    for (int k = 0; k < 7; ++k)
        hist["M" + std::to_string(k + 1)] = r.type_histogram[static_cast<size_t>(k)];
    mono["histogram"] = hist;
    j["monodromy"] = mono;

    j["z_knotted"] = r.z_knotted;
    j["g1"] = certificate_to_json(r.g1);
    j["g2"] = certificate_to_json(r.g2);
    return j;
}

std::string report_to_text(const AnalysisReport& r, const Triangulation& t) {
    (void)t;
    std::ostringstream os;
    os << "surface: V=" << r.vertices << " E=" << r.edges << " F=" << r.faces
       << " chi=" << r.euler << " " << to_string(r.orientability) << "\n";
    os << "zigzag pairs: " << r.zigzag_pairs.size() << " (lengths:";
    for (const auto& z : r.zigzag_pairs) os << ' ' << z.length();
    os << ")\n";
    os << "z-knotted: " << (r.z_knotted ? "yes" : "no") << "\n";
    os << "monodromy types:";
    for (int k = 0; k < 7; ++k) {
        if (r.type_histogram[static_cast<size_t>(k)] > 0)
            os << " M" << k + 1 << "=" << r.type_histogram[static_cast<size_t>(k)];
    }
    os << "\n";
    os << "G1 (" << r.g1_graph.node_count() << " nodes): "
       << (r.g1.forest ? "forest" : "HAS CYCLE") << " [" << component_summary(r.g1) << "]\n";
    os << "G2 (" << r.g2_graph.node_count() << " nodes): "
       << (r.g2.forest ? "forest" : "HAS CYCLE") << " [" << component_summary(r.g2) << "]\n";
    return os.str();
}

}  // namespace zmono
