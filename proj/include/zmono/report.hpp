#pragma once

#include <json.hpp>

#include "zmono/connected_sum.hpp"
#include "zmono/dual_forest.hpp"

namespace zmono {

// Everything the `report` subcommand shows, computed over one shared census.
struct AnalysisReport {
    int vertices = 0, edges = 0, faces = 0, euler = 0;
    Orientability orientability = Orientability::orientable;

    std::vector<Zigzag> zigzag_pairs;  // canonical representatives
    std::vector<FaceReport> face_reports;
    std::array<int, 7> type_histogram{};  // M1..M7
    bool z_knotted = false;

    FaceGraph g1_graph, g2_graph;
    ForestCertificate g1, g2;
};

AnalysisReport analyze(const Triangulation& t);

nlohmann::ordered_json report_to_json(const AnalysisReport& r, const Triangulation& t,
                                      bool include_traversals = false);
std::string report_to_text(const AnalysisReport& r, const Triangulation& t);

nlohmann::ordered_json certificate_to_json(const ForestCertificate& cert);

std::string face_to_string(const Face& f);
std::string oriented_edge_to_string(const OrientedEdge& e);

}  // namespace zmono
