#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zmono/errors.hpp"

namespace zmono {

// Vertex labels are opaque text tokens: nonempty, no whitespace, no '#'.
// They compare lexicographically; all canonical orders derive from that.
using VertexLabel = std::string;

bool is_valid_label(const VertexLabel& label);

// Undirected edge, stored with the smaller label first.
struct Edge {
    VertexLabel a, b;

    Edge() = default;  // empty placeholder
    Edge(VertexLabel x, VertexLabel y);

    bool contains(const VertexLabel& v) const { return v == a || v == b; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed edge: tail -> head.  Negation swaps the endpoints.
struct OrientedEdge {
    VertexLabel tail, head;

    OrientedEdge() = default;  // empty placeholder
    OrientedEdge(VertexLabel t, VertexLabel h);

    OrientedEdge reversed() const { return OrientedEdge(head, tail); }
    Edge undirected() const { return Edge(tail, head); }

    friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
    friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

// Triangular face, stored as an ascending triple of distinct labels.
struct Face {
    std::array<VertexLabel, 3> v;

    Face() = default;  // empty placeholder
    Face(VertexLabel x, VertexLabel y, VertexLabel z);

    bool contains(const VertexLabel& vertex) const;
    bool contains(const Edge& e) const { return contains(e.a) && contains(e.b); }

    std::array<Edge, 3> edges() const;

    // The six oriented edges of the face, in ascending (tail, head) order.
    std::array<OrientedEdge, 6> omega() const;

    friend bool operator==(const Face&, const Face&) = default;
    friend auto operator<=>(const Face&, const Face&) = default;
};

// The vertex of f not on e.  Throws EdgeNotInFace.
VertexLabel third_vertex(const Face& f, const Edge& e);

enum class Orientability { orientable, non_orientable };

const char* to_string(Orientability o);

// Validated triangulation of a connected closed surface.  Immutable after
// build(); shares freely across threads.
//
// Vertices, edges and faces carry integer ids in ascending canonical order
// (label order for vertices, then lexicographic for edge pairs and face
// triples), so id-based traversal is deterministic.
class Triangulation {
public:
    static Triangulation build(const std::vector<std::array<VertexLabel, 3>>& face_list);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<VertexLabel>& vertex_labels() const { return labels_; }
    std::vector<Edge> edges() const;
    std::vector<Face> faces() const;
    std::vector<std::array<VertexLabel, 3>> face_list() const;

    Orientability orientability() const { return orientability_; }

    bool has_vertex(const VertexLabel& v) const { return vertex_id(v) >= 0; }
    bool has_edge(const Edge& e) const;
    bool has_face(const Face& f) const;

    // The unique face != f containing e.  Throws EdgeNotInFace / FaceNotInTriangulation.
    Face other_face(const Edge& e, const Face& f) const;

    // ---- id-level access (used by the zigzag/monodromy engines) ----
    int vertex_id(const VertexLabel& v) const;          // -1 if absent
    int edge_id(int u, int v) const;                    // -1 if absent
    int face_id(const Face& f) const;                   // -1 if absent
    const VertexLabel& label(int vid) const { return labels_[static_cast<size_t>(vid)]; }
    const std::array<int, 3>& face_vertex_ids(int fid) const { return faces_[static_cast<size_t>(fid)]; }
    std::pair<int, int> edge_vertex_ids(int eid) const { return edges_[static_cast<size_t>(eid)]; }
    const std::array<int, 2>& edge_face_ids(int eid) const { return edge_faces_[static_cast<size_t>(eid)]; }
    int other_face_id(int eid, int fid) const;
    int third_vertex_id(int fid, int u, int v) const;   // -1 if {u,v} not in face
    Face face_at(int fid) const;
    Edge edge_at(int eid) const;

private:
    Triangulation() = default;

    std::vector<VertexLabel> labels_;             // ascending
    std::vector<std::array<int, 3>> faces_;       // each ascending; list ascending
    std::vector<std::pair<int, int>> edges_;      // each ascending; list ascending
    std::vector<std::array<int, 2>> edge_faces_;  // the two faces on each edge, ascending
    Orientability orientability_ = Orientability::orientable;
};

// V - E + F.
int euler_characteristic(const Triangulation& t);

// Spec-level conveniences mirroring the member functions.
Face other_face(const Edge& e, const Face& f, const Triangulation& t);

}  // namespace zmono
