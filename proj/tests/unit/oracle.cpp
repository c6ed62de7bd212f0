#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace zmono::oracle {

namespace {

using EdgePair = std::pair<Edge, Edge>;

std::optional<VertexLabel> shared_vertex(const Edge& e, const Edge& f) {
    for (const VertexLabel& v : {e.a, e.b}) {
        if (f.contains(v)) return v;
    }
    return std::nullopt;
}

bool disjoint(const Edge& e, const Edge& f) { return !e.contains(f.a) && !e.contains(f.b); }

// The face containing two adjacent edges (unique in a triangulation).
std::optional<Face> common_face(const Edge& e, const Edge& f, const Triangulation& t) {
    std::set<VertexLabel> verts{e.a, e.b, f.a, f.b};
    if (verts.size() != 3) return std::nullopt;
    auto it = verts.begin();
    const VertexLabel a = *it++;
    const VertexLabel b = *it++;
    const VertexLabel c = *it;
    Face candidate(a, b, c);
    if (!t.has_face(candidate)) return std::nullopt;
    return candidate;
}

// Successor of the adjacent pair (e, e'): the unique (e', e'') whose common
// face differs and with e'' disjoint from e.
EdgePair successor(const EdgePair& state, const Triangulation& t) {
    const auto& [e, e2] = state;
    const Face f = *common_face(e, e2, t);
    const Face f2 = t.other_face(e2, f);
    std::vector<Edge> candidates;
    for (const Edge& cand : f2.edges()) {
        if (cand == e2) continue;
        if (disjoint(e, cand)) candidates.push_back(cand);
    }
    if (candidates.size() != 1) throw std::logic_error("oracle: successor is not unique");
    return {e2, candidates.front()};
}

}  // namespace

std::vector<Edge> canonical_cycle(std::vector<Edge> seq) {
    const size_t n = seq.size();
    std::vector<Edge> best;
    for (int dir = 0; dir < 2; ++dir) {
        for (size_t r = 0; r < n; ++r) {
            std::vector<Edge> rot(seq.begin() + static_cast<long>(r), seq.end());
            rot.insert(rot.end(), seq.begin(), seq.begin() + static_cast<long>(r));
            if (best.empty() || rot < best) best = rot;
        }
        std::reverse(seq.begin(), seq.end());
    }
    return best;
}

std::vector<std::vector<Edge>> zigzag_pairs(const Triangulation& t) {
    // all ordered adjacent pairs sharing a face
    std::vector<EdgePair> states;
    const auto edges = t.edges();
    for (const Edge& e : edges) {
        for (const Edge& f : edges) {
            if (e == f || !shared_vertex(e, f)) continue;
            if (common_face(e, f, t)) states.push_back({e, f});
        }
    }

    std::set<EdgePair> visited;
    std::vector<std::vector<Edge>> raw;  // one entry per directed zigzag
    for (const EdgePair& start : states) {
        if (visited.count(start)) continue;
        std::vector<Edge> seq;
        EdgePair cur = start;
        do {
            visited.insert(cur);
            seq.push_back(cur.second);
            cur = successor(cur, t);
        } while (cur != start);
        raw.push_back(std::move(seq));
    }

    // group the two directions of each zigzag
    std::map<std::vector<Edge>, int> seen;
    std::vector<std::vector<Edge>> out;
    for (auto& seq : raw) {
        auto canon = canonical_cycle(seq);
        if (seen.emplace(canon, 1).second)
            out.push_back(std::move(canon));
        else
            ++seen[canon];
    }
    for (const auto& [canon, count] : seen) {
        if (count != 2) throw std::logic_error("oracle: directed zigzags must pair off 2:1");
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Orientations induced by traversal order: each edge leaves the vertex it
// shares with its predecessor.
std::vector<OrientedEdge> orient(const std::vector<Edge>& seq) {
    const size_t n = seq.size();
    std::vector<OrientedEdge> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const Edge& prev = seq[(i + n - 1) % n];
        const Edge& cur = seq[i];
        const auto v = shared_vertex(prev, cur);
        if (!v) throw std::logic_error("oracle: consecutive zigzag edges must share a vertex");
        out.emplace_back(*v, cur.a == *v ? cur.b : cur.a);
    }
    return out;
}

}  // namespace

OrientedEdge monodromy_image(const Face& f, const OrientedEdge& e, const Triangulation& t) {
    // e = x->y; its predecessor under D_F is z->x.
    const VertexLabel z = third_vertex(f, e.undirected());
    const OrientedEdge e0(z, e.tail);

    for (const auto& rep : zigzag_pairs(t)) {
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<Edge> seq = rep;
            if (dir == 1) std::reverse(seq.begin(), seq.end());
            const auto oriented = orient(seq);
            const size_t n = oriented.size();
            for (size_t i = 0; i < n; ++i) {
                if (!(oriented[i] == e0 && oriented[(i + 1) % n] == e)) continue;
                for (size_t k = 2; k <= n + 1; ++k) {
                    const OrientedEdge& cand = oriented[(i + k) % n];
                    if (f.contains(cand.tail) && f.contains(cand.head)) return cand;
                }
                throw std::logic_error("oracle: no return to the face");
            }
        }
    }
    throw std::logic_error("oracle: the pair (D^-1 e, e) occurs in no zigzag");
}

}  // namespace zmono::oracle
