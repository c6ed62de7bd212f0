#pragma once

#include <map>
#include <optional>
#include <string>

#include "zmono/monodromy.hpp"

namespace zmono {

// A finite simple graph on faces.  Nodes are kept in ascending order and
// links are index pairs (i < j), also ascending.
struct FaceGraph {
    std::vector<Face> nodes;
    std::vector<std::pair<int, int>> links;

    int node_count() const { return static_cast<int>(nodes.size()); }
    int link_count() const { return static_cast<int>(links.size()); }
};

// The dual graph: faces as nodes, shared edges as links.  3-regular and
// simple for any valid triangulation.
FaceGraph dual(const Triangulation& t);

// Induced subgraph of the dual on the faces of one monodromy type.
FaceGraph subgraph_by_type(const Triangulation& t, MonodromyTag filter);
FaceGraph subgraph_by_type(const Triangulation& t, MonodromyTag filter,
                           const std::vector<FaceReport>& reports);

struct ForestComponent {
    int nodes = 0;
    int links = 0;
    std::string shape;  // "P<k>" for a path with k nodes, else "tree" or "other"
};

struct ForestCertificate {
    bool forest = false;
    std::vector<ForestComponent> components;
    // Present when the graph has a cycle: the lexicographically least cycle,
    // as a closed walk of distinct adjacent nodes.
    std::optional<std::vector<Face>> cycle_witness;
};

ForestCertificate is_forest(const FaceGraph& g);

// DOT text; node names are the sorted face triples joined by '-', the mtype
// attribute carries the annotation when present.  Output is deterministic.
std::string export_dot(const FaceGraph& g, const std::map<Face, std::string>& annotations,
                       const std::string& graph_name = "g");

// Parses the restricted DOT dialect produced by export_dot (round-trips
// byte-identically through it).
struct ParsedDot {
    std::string graph_name;
    FaceGraph graph;
    std::map<Face, std::string> annotations;
};
ParsedDot parse_dot(const std::string& text);

}  // namespace zmono
