#include "zmono/surface.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace zmono {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DegenerateFace: return "DegenerateFace";
        case ErrorKind::DuplicateFace: return "DuplicateFace";
        case ErrorKind::EdgeDegreeViolation: return "EdgeDegreeViolation";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::VertexLinkNotSingleCycle: return "VertexLinkNotSingleCycle";
        case ErrorKind::EdgeNotInFace: return "EdgeNotInFace";
        case ErrorKind::EdgeNotInTriangulation: return "EdgeNotInTriangulation";
        case ErrorKind::FaceNotInTriangulation: return "FaceNotInTriangulation";
        case ErrorKind::NotLocallyZKnotted: return "NotLocallyZKnotted";
        case ErrorKind::InputNotZKnotted: return "InputNotZKnotted";
        case ErrorKind::Exhausted: return "Exhausted";
        case ErrorKind::IllegalFlip: return "IllegalFlip";
        case ErrorKind::LabelInUse: return "LabelInUse";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::ValidationFailed: return "ValidationFailed";
        case ErrorKind::Unclassifiable: return "Unclassifiable";
        case ErrorKind::TrigParse: return "TrigParse";
    }
    return "UnknownError";
}

void internal_check(bool condition, const char* message) {
    if (!condition) throw std::logic_error(std::string("internal error: ") + message);
}

bool is_valid_label(const VertexLabel& label) {
    if (label.empty()) return false;
    for (unsigned char c : label) {
        if (std::isspace(c) || c == '#') return false;
    }
    return true;
}

Edge::Edge(VertexLabel x, VertexLabel y) : a(std::move(x)), b(std::move(y)) {
    if (a == b) throw DomainError(ErrorKind::InvalidParameter, "edge endpoints must be distinct: " + a);
    if (b < a) std::swap(a, b);
}

OrientedEdge::OrientedEdge(VertexLabel t, VertexLabel h) : tail(std::move(t)), head(std::move(h)) {
    if (tail == head)
        throw DomainError(ErrorKind::InvalidParameter, "oriented edge endpoints must be distinct: " + tail);
}

Face::Face(VertexLabel x, VertexLabel y, VertexLabel z) : v{std::move(x), std::move(y), std::move(z)} {
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2])
        throw DomainError(ErrorKind::DegenerateFace, "face has a repeated vertex: " + v[0] + " " + v[1] + " " + v[2]);
}

bool Face::contains(const VertexLabel& vertex) const {
    return vertex == v[0] || vertex == v[1] || vertex == v[2];
}

std::array<Edge, 3> Face::edges() const {
    return {Edge(v[0], v[1]), Edge(v[0], v[2]), Edge(v[1], v[2])};
}

std::array<OrientedEdge, 6> Face::omega() const {
    return {OrientedEdge(v[0], v[1]), OrientedEdge(v[0], v[2]), OrientedEdge(v[1], v[0]),
            OrientedEdge(v[1], v[2]), OrientedEdge(v[2], v[0]), OrientedEdge(v[2], v[1])};
}

VertexLabel third_vertex(const Face& f, const Edge& e) {
    if (!f.contains(e))
        throw DomainError(ErrorKind::EdgeNotInFace,
                          "edge {" + e.a + "," + e.b + "} is not an edge of face " + f.v[0] + "-" + f.v[1] + "-" + f.v[2]);
    for (const auto& v : f.v) {
        if (!e.contains(v)) return v;
    }
    internal_check(false, "face with three vertices must have one off any of its edges");
    return {};
}

const char* to_string(Orientability o) {
    return o == Orientability::orientable ? "orientable" : "non-orientable";
}

namespace {

std::string face_text(const std::array<VertexLabel, 3>& f) {
    return f[0] + " " + f[1] + " " + f[2];
}

// Orientation propagation: pick a cyclic order for face 0 and walk the face
// adjacency; two faces agree when they traverse the shared edge in opposite
// directions.  A contradiction anywhere means the surface is non-orientable.
Orientability propagate_orientation(const std::vector<std::array<int, 3>>& faces,
                                    const std::vector<std::pair<int, int>>& edges,
                                    const std::vector<std::array<int, 2>>& edge_faces,
                                    int start_face) {
    const int face_count = static_cast<int>(faces.size());
    // flipped[f] == false: boundary cycle (v0,v1,v2); true: (v0,v2,v1).
    std::vector<signed char> state(static_cast<size_t>(face_count), -1);

    auto traverses_forward = [&](int fid, int u, int v) {
        // Does face fid (under its current state) traverse edge {u,v} as u->v?
        const auto& fv = faces[static_cast<size_t>(fid)];
        std::array<int, 3> cycle = fv;
        if (state[static_cast<size_t>(fid)] == 1) std::swap(cycle[1], cycle[2]);
        for (int k = 0; k < 3; ++k) {
            if (cycle[static_cast<size_t>(k)] == u && cycle[static_cast<size_t>((k + 1) % 3)] == v) return true;
        }
        return false;
    };

    std::vector<int> stack{start_face};
    state[static_cast<size_t>(start_face)] = 0;
    // Edge lookup per face is linear over all edges; fine at these sizes.
    std::vector<std::vector<int>> face_edges(static_cast<size_t>(face_count));
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        face_edges[static_cast<size_t>(edge_faces[static_cast<size_t>(e)][0])].push_back(e);
        face_edges[static_cast<size_t>(edge_faces[static_cast<size_t>(e)][1])].push_back(e);
    }
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int e : face_edges[static_cast<size_t>(f)]) {
            const auto [u, v] = edges[static_cast<size_t>(e)];
            int g = edge_faces[static_cast<size_t>(e)][0] == f ? edge_faces[static_cast<size_t>(e)][1]
                                                               : edge_faces[static_cast<size_t>(e)][0];
            bool f_forward = traverses_forward(f, u, v);
            // g must traverse the edge the other way round.
            signed char want;
            {
                signed char saved = state[static_cast<size_t>(g)];
                state[static_cast<size_t>(g)] = 0;
                bool g_forward_when_unflipped = traverses_forward(g, u, v);
                state[static_cast<size_t>(g)] = saved;
                want = (g_forward_when_unflipped == f_forward) ? 1 : 0;
            }
            if (state[static_cast<size_t>(g)] == -1) {
                state[static_cast<size_t>(g)] = want;
                stack.push_back(g);
            } else if (state[static_cast<size_t>(g)] != want) {
                return Orientability::non_orientable;
            }
        }
    }
    for (signed char s : state) internal_check(s != -1, "dual graph of a valid triangulation is connected");
    return Orientability::orientable;
}

}  // namespace

Triangulation Triangulation::build(const std::vector<std::array<VertexLabel, 3>>& face_list) {
    if (face_list.empty())
        throw DomainError(ErrorKind::InvalidParameter, "face list is empty");

    // Canonicalize faces and validate labels.
    std::vector<std::array<VertexLabel, 3>> canon;
    canon.reserve(face_list.size());
    for (const auto& f : face_list) {
        for (const auto& label : f) {
            if (!is_valid_label(label))
                throw DomainError(ErrorKind::InvalidParameter, "invalid vertex label '" + label + "'");
        }
        std::array<VertexLabel, 3> c = f;
        std::sort(c.begin(), c.end());
        if (c[0] == c[1] || c[1] == c[2])
            throw DomainError(ErrorKind::DegenerateFace, "face has a repeated vertex: " + face_text(f));
        canon.push_back(std::move(c));
    }
    std::sort(canon.begin(), canon.end());
    for (size_t i = 1; i < canon.size(); ++i) {
        if (canon[i] == canon[i - 1])
            throw DomainError(ErrorKind::DuplicateFace, "face listed twice: " + face_text(canon[i]));
    }

    Triangulation t;
    {
        std::set<VertexLabel> labels;
        for (const auto& f : canon)
            for (const auto& v : f) labels.insert(v);
        t.labels_.assign(labels.begin(), labels.end());
    }
    std::map<VertexLabel, int> vid;
    for (int i = 0; i < static_cast<int>(t.labels_.size()); ++i) vid[t.labels_[static_cast<size_t>(i)]] = i;

    t.faces_.reserve(canon.size());
    for (const auto& f : canon)
        t.faces_.push_back({vid[f[0]], vid[f[1]], vid[f[2]]});

    // Edge -> incident faces.  Every edge must lie in exactly two faces.
    std::map<std::pair<int, int>, std::vector<int>> incident;
    for (int f = 0; f < static_cast<int>(t.faces_.size()); ++f) {
        const auto& fv = t.faces_[static_cast<size_t>(f)];
        incident[{fv[0], fv[1]}].push_back(f);
        incident[{fv[0], fv[2]}].push_back(f);
        incident[{fv[1], fv[2]}].push_back(f);
    }
    for (const auto& [e, fs] : incident) {
        if (fs.size() != 2) {
            std::ostringstream os;
            os << "edge {" << t.labels_[static_cast<size_t>(e.first)] << ","
               << t.labels_[static_cast<size_t>(e.second)] << "} lies in " << fs.size()
               << " face(s), expected 2";
            throw DomainError(ErrorKind::EdgeDegreeViolation, os.str());
        }
    }
    t.edges_.reserve(incident.size());
    t.edge_faces_.reserve(incident.size());
    for (const auto& [e, fs] : incident) {
        t.edges_.push_back(e);
        t.edge_faces_.push_back({fs[0], fs[1]});
    }

    // Connectivity of the 1-skeleton.
    {
        std::vector<char> seen(t.labels_.size(), 0);
        std::vector<std::vector<int>> adj(t.labels_.size());
        for (const auto& [u, v] : t.edges_) {
            adj[static_cast<size_t>(u)].push_back(v);
            adj[static_cast<size_t>(v)].push_back(u);
        }
        std::vector<int> stack{0};
        seen[0] = 1;
        size_t reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[static_cast<size_t>(u)]) {
                if (!seen[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    ++reached;
                    stack.push_back(v);
                }
            }
        }
        if (reached != t.labels_.size())
            throw DomainError(ErrorKind::Disconnected, "the 1-skeleton is not connected");
    }

    // Closed-surface condition: the link of every vertex is a single cycle.
    // Each face at v contributes the opposite edge to the link; with the edge
    // condition already checked every link vertex has degree 2, so a single
    // cycle is exactly connectivity of the link.
    {
        std::vector<std::vector<std::pair<int, int>>> link(t.labels_.size());
        for (const auto& fv : t.faces_) {
            link[static_cast<size_t>(fv[0])].push_back({fv[1], fv[2]});
            link[static_cast<size_t>(fv[1])].push_back({fv[0], fv[2]});
            link[static_cast<size_t>(fv[2])].push_back({fv[0], fv[1]});
        }
        for (int v = 0; v < static_cast<int>(t.labels_.size()); ++v) {
            const auto& segs = link[static_cast<size_t>(v)];
            std::map<int, std::vector<int>> adj;
            for (const auto& [x, y] : segs) {
                adj[x].push_back(y);
                adj[y].push_back(x);
            }
            for (const auto& [x, nbrs] : adj)
                internal_check(nbrs.size() == 2, "link vertex degree must be 2 once edge degrees hold");
            // Walk the cycle from the first link vertex.
            std::set<int> seen;
            int start = adj.begin()->first;
            int prev = -1, cur = start;
            while (seen.insert(cur).second) {
                const auto& nbrs = adj[cur];
                int next = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
                prev = cur;
                cur = next;
            }
            if (seen.size() != adj.size())
                throw DomainError(ErrorKind::VertexLinkNotSingleCycle,
                                  "link of vertex '" + t.labels_[static_cast<size_t>(v)] +
                                      "' is not a single cycle");
        }
    }

    t.orientability_ = propagate_orientation(t.faces_, t.edges_, t.edge_faces_, 0);
    return t;
}

std::vector<Edge> Triangulation::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& [u, v] : edges_) out.emplace_back(labels_[static_cast<size_t>(u)], labels_[static_cast<size_t>(v)]);
    return out;
}

std::vector<Face> Triangulation::faces() const {
    std::vector<Face> out;
    out.reserve(faces_.size());
    for (int f = 0; f < face_count(); ++f) out.push_back(face_at(f));
    return out;
}

std::vector<std::array<VertexLabel, 3>> Triangulation::face_list() const {
    std::vector<std::array<VertexLabel, 3>> out;
    out.reserve(faces_.size());
    for (const auto& fv : faces_)
        out.push_back({labels_[static_cast<size_t>(fv[0])], labels_[static_cast<size_t>(fv[1])],
                       labels_[static_cast<size_t>(fv[2])]});
    return out;
}

bool Triangulation::has_edge(const Edge& e) const {
    int u = vertex_id(e.a), v = vertex_id(e.b);
    return u >= 0 && v >= 0 && edge_id(u, v) >= 0;
}

bool Triangulation::has_face(const Face& f) const { return face_id(f) >= 0; }

int Triangulation::vertex_id(const VertexLabel& v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) return -1;
    return static_cast<int>(it - labels_.begin());
}

int Triangulation::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

int Triangulation::face_id(const Face& f) const {
    std::array<int, 3> ids{};
    for (int k = 0; k < 3; ++k) {
        ids[static_cast<size_t>(k)] = vertex_id(f.v[static_cast<size_t>(k)]);
        if (ids[static_cast<size_t>(k)] < 0) return -1;
    }
    std::sort(ids.begin(), ids.end());
    auto it = std::lower_bound(faces_.begin(), faces_.end(), ids);
    if (it == faces_.end() || *it != ids) return -1;
    return static_cast<int>(it - faces_.begin());
}

int Triangulation::other_face_id(int eid, int fid) const {
    const auto& fs = edge_faces_[static_cast<size_t>(eid)];
    internal_check(fs[0] == fid || fs[1] == fid, "other_face_id: face not on edge");
    return fs[0] == fid ? fs[1] : fs[0];
}

int Triangulation::third_vertex_id(int fid, int u, int v) const {
    const auto& fv = faces_[static_cast<size_t>(fid)];
    int third = -1;
    bool saw_u = false, saw_v = false;
    for (int w : fv) {
        if (w == u)
            saw_u = true;
        else if (w == v)
            saw_v = true;
        else
            third = w;
    }
    return (saw_u && saw_v) ? third : -1;
}

Face Triangulation::face_at(int fid) const {
    const auto& fv = faces_[static_cast<size_t>(fid)];
    return Face(labels_[static_cast<size_t>(fv[0])], labels_[static_cast<size_t>(fv[1])],
                labels_[static_cast<size_t>(fv[2])]);
}

Edge Triangulation::edge_at(int eid) const {
    const auto& [u, v] = edges_[static_cast<size_t>(eid)];
    return Edge(labels_[static_cast<size_t>(u)], labels_[static_cast<size_t>(v)]);
}

Face Triangulation::other_face(const Edge& e, const Face& f) const {
    int fid = face_id(f);
    if (fid < 0)
        throw DomainError(ErrorKind::FaceNotInTriangulation,
                          "face " + f.v[0] + "-" + f.v[1] + "-" + f.v[2] + " is not in the triangulation");
    if (!f.contains(e))
        throw DomainError(ErrorKind::EdgeNotInFace,
                          "edge {" + e.a + "," + e.b + "} is not an edge of face " + f.v[0] + "-" + f.v[1] + "-" + f.v[2]);
    int eid = edge_id(vertex_id(e.a), vertex_id(e.b));
    internal_check(eid >= 0, "edge of an existing face must exist");
    return face_at(other_face_id(eid, fid));
}

int euler_characteristic(const Triangulation& t) {
    return t.vertex_count() - t.edge_count() + t.face_count();
}

Face other_face(const Edge& e, const Face& f, const Triangulation& t) { return t.other_face(e, f); }

}  // namespace zmono
