#include "zmono/generators.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zmono {

namespace {

std::vector<std::array<VertexLabel, 3>> with_face_removed(const Triangulation& t, const Face& f) {
    std::vector<std::array<VertexLabel, 3>> faces;
    for (const auto& g : t.faces()) {
        if (g == f) continue;
        faces.push_back({g.v[0], g.v[1], g.v[2]});
    }
    return faces;
}

}  // namespace

Triangulation bipyramid(int n) {
    if (n < 3)
        throw DomainError(ErrorKind::InvalidParameter,
                          "bipyramid needs n >= 3, got " + std::to_string(n));
    std::vector<std::array<VertexLabel, 3>> faces;
    for (int i = 1; i <= n; ++i) {
        const VertexLabel u = std::to_string(i);
        const VertexLabel v = std::to_string(i % n + 1);
        faces.push_back({u, v, "a"});
        faces.push_back({u, v, "b"});
    }
    return Triangulation::build(faces);
}

Triangulation platonic(PlatonicKind kind) {
    std::vector<std::array<VertexLabel, 3>> faces;
    switch (kind) {
        case PlatonicKind::tetrahedron:
            faces = {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}};
            break;
        case PlatonicKind::octahedron:
            // apexes 1 and 6 over the square 2-3-4-5
            faces = {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "2"},
                     {"6", "2", "3"}, {"6", "3", "4"}, {"6", "4", "5"}, {"6", "5", "2"}};
            break;
        case PlatonicKind::icosahedron:
            // apex 1, upper ring 2..6, lower ring 7..11, apex 12
            faces = {{"1", "2", "3"},   {"1", "3", "4"},   {"1", "4", "5"},  {"1", "5", "6"},
                     {"1", "6", "2"},   {"2", "3", "7"},   {"3", "4", "8"},  {"4", "5", "9"},
                     {"5", "6", "10"},  {"6", "2", "11"},  {"3", "7", "8"},  {"4", "8", "9"},
                     {"5", "9", "10"},  {"6", "10", "11"}, {"2", "11", "7"}, {"7", "8", "12"},
                     {"8", "9", "12"},  {"9", "10", "12"}, {"10", "11", "12"}, {"11", "7", "12"}};
            break;
    }
    return Triangulation::build(faces);
}

Triangulation projective_plane_6() {
    return Triangulation::build({{"1", "2", "4"},
                                 {"1", "2", "5"},
                                 {"1", "3", "4"},
                                 {"1", "3", "6"},
                                 {"1", "5", "6"},
                                 {"2", "3", "5"},
                                 {"2", "3", "6"},
                                 {"2", "4", "6"},
                                 {"3", "4", "5"},
                                 {"4", "5", "6"}});
}

Triangulation torus_k7() {
    std::vector<std::array<VertexLabel, 3>> faces;
    for (int i = 0; i < 7; ++i) {
        faces.push_back({std::to_string(i), std::to_string((i + 1) % 7), std::to_string((i + 3) % 7)});
        faces.push_back({std::to_string(i), std::to_string((i + 2) % 7), std::to_string((i + 3) % 7)});
    }
    return Triangulation::build(faces);
}

Triangulation subdivide_face(const Triangulation& t, const Face& f, const VertexLabel& new_label) {
    if (!t.has_face(f))
        throw DomainError(ErrorKind::FaceNotInTriangulation,
                          "face " + f.v[0] + "-" + f.v[1] + "-" + f.v[2] + " is not in the triangulation");
    if (t.has_vertex(new_label))
        throw DomainError(ErrorKind::LabelInUse, "label '" + new_label + "' is already a vertex");
    auto faces = with_face_removed(t, f);
    faces.push_back({f.v[0], f.v[1], new_label});
    faces.push_back({f.v[0], f.v[2], new_label});
    faces.push_back({f.v[1], f.v[2], new_label});
    return Triangulation::build(faces);
}

Triangulation flip_edge(const Triangulation& t, const Edge& e) {
    const int u = t.vertex_id(e.a), v = t.vertex_id(e.b);
    const int eid = (u >= 0 && v >= 0) ? t.edge_id(u, v) : -1;
    if (eid < 0)
        throw DomainError(ErrorKind::EdgeNotInTriangulation,
                          "edge {" + e.a + "," + e.b + "} is not in the triangulation");
    const auto [fid1, fid2] = t.edge_face_ids(eid);
    const Face f1 = t.face_at(fid1), f2 = t.face_at(fid2);
    const VertexLabel c = third_vertex(f1, e);
    const VertexLabel d = third_vertex(f2, e);
    if (t.has_edge(Edge(c, d)))
        throw DomainError(ErrorKind::IllegalFlip,
                          "replacement edge {" + c + "," + d + "} already exists");
    const Face r1(e.a, c, d), r2(e.b, c, d);
    if (t.has_face(r1) || t.has_face(r2))
        throw DomainError(ErrorKind::IllegalFlip, "a replacement face already exists");

    std::vector<std::array<VertexLabel, 3>> faces;
    for (const auto& g : t.faces()) {
        if (g == f1 || g == f2) continue;
        faces.push_back({g.v[0], g.v[1], g.v[2]});
    }
    faces.push_back({r1.v[0], r1.v[1], r1.v[2]});
    faces.push_back({r2.v[0], r2.v[1], r2.v[2]});
    return Triangulation::build(faces);
}

std::string BaseDescriptor::name() const {
    switch (kind) {
        case Kind::tetrahedron: return "tetrahedron";
        case Kind::bipyramid: return "bipyramid:" + std::to_string(n);
        case Kind::projective_plane: return "rp2";
        case Kind::torus: return "torus-k7";
    }
    return "?";
}

BaseDescriptor BaseDescriptor::parse(const std::string& text) {
    if (text == "tetrahedron") return {Kind::tetrahedron, 0};
    if (text == "rp2") return {Kind::projective_plane, 0};
    if (text == "torus-k7") return {Kind::torus, 0};
    std::string num;
    if (text.rfind("bipyramid:", 0) == 0)
        num = text.substr(10);
    else if (text.rfind("bp", 0) == 0)
        num = text.substr(2);
    if (!num.empty() && std::all_of(num.begin(), num.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        return {Kind::bipyramid, std::stoi(num)};
    throw DomainError(ErrorKind::InvalidParameter,
                      "unknown base '" + text + "' (want tetrahedron, bipyramid:N, rp2, torus-k7)");
}

Triangulation BaseDescriptor::instantiate() const {
    switch (kind) {
        case Kind::tetrahedron: return platonic(PlatonicKind::tetrahedron);
        case Kind::bipyramid: return bipyramid(n);
        case Kind::projective_plane: return projective_plane_6();
        case Kind::torus: return torus_k7();
    }
    throw DomainError(ErrorKind::InvalidParameter, "bad base descriptor");
}

std::string MutationLog::to_text() const {
    std::ostringstream os;
    os << "base " << base << "\n";
    os << "seed " << seed << "\n";
    os << "steps " << requested_steps << "\n";
    for (const auto& s : steps) {
        if (s.kind == MutationStep::Kind::subdivide) {
            os << "subdivide " << s.face[0] << ' ' << s.face[1] << ' ' << s.face[2] << " -> "
               << s.new_label << "\n";
        } else {
            os << "flip " << s.edge[0] << ' ' << s.edge[1];
            if (!s.accepted) os << " rejected (" << s.reject_reason << ")";
            os << "\n";
        }
    }
    return os.str();
}

namespace {

VertexLabel fresh_label(const Triangulation& t, int& counter) {
    while (true) {
        VertexLabel candidate = "v" + std::to_string(counter++);
        if (!t.has_vertex(candidate)) return candidate;
    }
}

}  // namespace

RandomResult random_triangulation(const BaseDescriptor& base, int steps, std::uint64_t seed) {
    if (steps < 0) throw DomainError(ErrorKind::InvalidParameter, "steps must be >= 0");
    Triangulation t = base.instantiate();
    MutationLog log{base.name(), seed, steps, {}};
    SplitMix64 rng(seed);
    int fresh_counter = 1;
    int applied = 0;
    while (applied < steps) {
        if (rng.next() % 2 == 0) {
            const auto faces = t.faces();
            const Face& f = faces[static_cast<size_t>(rng.next() % faces.size())];
            const VertexLabel label = fresh_label(t, fresh_counter);
            t = subdivide_face(t, f, label);
            log.steps.push_back({MutationStep::Kind::subdivide, f.v, {}, label, true, {}});
            ++applied;
        } else {
            const auto edges = t.edges();
            const Edge& e = edges[static_cast<size_t>(rng.next() % edges.size())];
            MutationStep entry{MutationStep::Kind::flip, {}, {e.a, e.b}, {}, true, {}};
            try {
                t = flip_edge(t, e);
                ++applied;
            } catch (const DomainError& err) {
                if (err.kind() != ErrorKind::IllegalFlip) throw;
                entry.accepted = false;
                entry.reject_reason = err.what();
            }
            log.steps.push_back(std::move(entry));
        }
    }
    return {std::move(t), std::move(log)};
}

Triangulation replay(const MutationLog& log) {
    Triangulation t = BaseDescriptor::parse(log.base).instantiate();
    for (const auto& s : log.steps) {
        if (!s.accepted) continue;
        if (s.kind == MutationStep::Kind::subdivide)
            t = subdivide_face(t, Face(s.face[0], s.face[1], s.face[2]), s.new_label);
        else
            t = flip_edge(t, Edge(s.edge[0], s.edge[1]));
    }
    return t;
}

}  // namespace zmono
