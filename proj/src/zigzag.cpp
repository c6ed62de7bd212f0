#include "zmono/zigzag.hpp"

#include <algorithm>

namespace zmono {

namespace {

// Oriented edges of face (a<b<c) in omega order: ab, ac, ba, bc, ca, cb.
std::array<std::pair<int, int>, 6> omega_pairs(const std::array<int, 3>& fv) {
    const int a = fv[0], b = fv[1], c = fv[2];
    return {{{a, b}, {a, c}, {b, a}, {b, c}, {c, a}, {c, b}}};
}

long long edge_key(int tail, int head, int vertex_count) {
    return static_cast<long long>(tail) * vertex_count + head;
}

int encode_state(const Triangulation& t, int fid, int tail, int head) {
    const auto pairs = omega_pairs(t.face_vertex_ids(fid));
    for (int k = 0; k < 6; ++k) {
        if (pairs[static_cast<size_t>(k)] == std::make_pair(tail, head)) return fid * 6 + k;
    }
    internal_check(false, "oriented edge does not belong to the face");
    return -1;
}

// Index of the lexicographically least rotation (classic two-pointer scan).
size_t least_rotation(const std::vector<long long>& s) {
    const size_t n = s.size();
    size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const long long a = s[(i + k) % n];
        const long long b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

std::vector<long long> edge_keys(const std::vector<int>& states, const StepTable& st) {
    const int v = st.triangulation().vertex_count();
    std::vector<long long> keys;
    keys.reserve(states.size());
    for (int s : states) {
        auto d = st.decode(s);
        keys.push_back(edge_key(d.tail, d.head, v));
    }
    return keys;
}

void canonical_rotate(std::vector<int>& states, const StepTable& st) {
    const size_t r = least_rotation(edge_keys(states, st));
    std::rotate(states.begin(), states.begin() + static_cast<long>(r), states.end());
}

// Re-check the two local zigzag conditions along the orbit: the faces of
// consecutive states are distinct and e_i, e_{i+2} share no vertex.
void audit_orbit(const std::vector<int>& states, const StepTable& st) {
    const int n = static_cast<int>(states.size());
    for (int i = 0; i < n; ++i) {
        auto cur = st.decode(states[static_cast<size_t>(i)]);
        auto nxt = st.decode(states[static_cast<size_t>((i + 1) % n)]);
        auto nnx = st.decode(states[static_cast<size_t>((i + 2) % n)]);
        internal_check(cur.face != nxt.face, "zigzag visits the same face twice in a row");
        internal_check(cur.tail != nnx.tail && cur.tail != nnx.head && cur.head != nnx.tail &&
                           cur.head != nnx.head,
                       "edges two apart in a zigzag must be disjoint");
    }
}

bool keyseq_less(const Zigzag& x, const Zigzag& y, const StepTable& st) {
    if (x.length() != y.length()) return x.length() < y.length();
    auto kx = edge_keys(x.states, st);
    auto ky = edge_keys(y.states, st);
    return kx < ky;
}

}  // namespace

StepTable::StepTable(const Triangulation& t) : t_(&t) {
    const int n = 6 * t.face_count();
    next_.resize(static_cast<size_t>(n));
    prev_.resize(static_cast<size_t>(n));
    rho_.resize(static_cast<size_t>(n));
    for (int f = 0; f < t.face_count(); ++f) {
        const auto pairs = omega_pairs(t.face_vertex_ids(f));
        for (int k = 0; k < 6; ++k) {
            const int s = f * 6 + k;
            const auto [tail, head] = pairs[static_cast<size_t>(k)];
            const int eid = t.edge_id(tail, head);
            const int f2 = t.other_face_id(eid, f);
            const int x = t.third_vertex_id(f2, tail, head);
            next_[static_cast<size_t>(s)] = encode_state(*t_, f2, head, x);
            const int u = t.third_vertex_id(f, tail, head);
            rho_[static_cast<size_t>(s)] = encode_state(*t_, f, tail, u);
        }
    }
    for (int s = 0; s < n; ++s) prev_[static_cast<size_t>(next_[static_cast<size_t>(s)])] = s;
}

StepTable::Decoded StepTable::decode(int s) const {
    const int fid = s / 6;
    const auto pairs = omega_pairs(t_->face_vertex_ids(fid));
    const auto [tail, head] = pairs[static_cast<size_t>(s % 6)];
    return {fid, tail, head};
}

int StepTable::encode(int fid, int tail, int head) const {
    if (fid < 0 || fid >= t_->face_count()) return -1;
    const auto pairs = omega_pairs(t_->face_vertex_ids(fid));
    for (int k = 0; k < 6; ++k) {
        if (pairs[static_cast<size_t>(k)] == std::make_pair(tail, head)) return fid * 6 + k;
    }
    return -1;
}

int state_id(const ZigzagState& s, const Triangulation& t) {
    const int fid = t.face_id(s.face);
    if (fid < 0)
        throw DomainError(ErrorKind::FaceNotInTriangulation,
                          "state face " + s.face.v[0] + "-" + s.face.v[1] + "-" + s.face.v[2] +
                              " is not in the triangulation");
    const int tail = t.vertex_id(s.current.tail);
    const int head = t.vertex_id(s.current.head);
    if (tail < 0 || head < 0 || t.third_vertex_id(fid, tail, head) < 0)
        throw DomainError(ErrorKind::EdgeNotInFace,
                          "oriented edge " + s.current.tail + "->" + s.current.head +
                              " is not an edge of the state's face");
    const auto pairs = omega_pairs(t.face_vertex_ids(fid));
    for (int k = 0; k < 6; ++k) {
        if (pairs[static_cast<size_t>(k)] == std::make_pair(tail, head)) return fid * 6 + k;
    }
    internal_check(false, "state encoding failed");
    return -1;
}

ZigzagState state_at(int sid, const Triangulation& t) {
    const int fid = sid / 6;
    const auto pairs = omega_pairs(t.face_vertex_ids(fid));
    const auto [tail, head] = pairs[static_cast<size_t>(sid % 6)];
    return {t.face_at(fid), OrientedEdge(t.label(tail), t.label(head))};
}

ZigzagState step(const ZigzagState& s, const Triangulation& t) {
    StepTable st(t);
    return state_at(st.next(state_id(s, t)), t);
}

ZigzagState reverse_state(const ZigzagState& s) {
    const VertexLabel u = third_vertex(s.face, s.current.undirected());
    return {s.face, OrientedEdge(s.current.tail, u)};
}

Zigzag trace(int sid, const StepTable& st) {
    Zigzag z;
    int s = sid;
    do {
        z.states.push_back(s);
        s = st.next(s);
    } while (s != sid);
    audit_orbit(z.states, st);
    canonical_rotate(z.states, st);
    return z;
}

Zigzag trace(const ZigzagState& s, const Triangulation& t) {
    StepTable st(t);
    return trace(state_id(s, t), st);
}

Zigzag reverse_zigzag(const Zigzag& z, const StepTable& st) {
    Zigzag r;
    r.states.reserve(z.states.size());
    for (auto it = z.states.rbegin(); it != z.states.rend(); ++it) r.states.push_back(st.rho(*it));
    canonical_rotate(r.states, st);
    return r;
}

std::vector<Zigzag> enumerate_zigzags(const StepTable& st) {
    const int n = st.state_count();
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<Zigzag> reps;
    for (int s0 = 0; s0 < n; ++s0) {
        if (visited[static_cast<size_t>(s0)]) continue;
        Zigzag z = trace(s0, st);
        for (int s : z.states) visited[static_cast<size_t>(s)] = 1;
        Zigzag rz = reverse_zigzag(z, st);
        for (int s : rz.states) {
            internal_check(!visited[static_cast<size_t>(s)], "a zigzag cannot be self-reversed");
            visited[static_cast<size_t>(s)] = 1;
        }
        reps.push_back(keyseq_less(z, rz, st) ? std::move(z) : std::move(rz));
    }
    std::sort(reps.begin(), reps.end(),
              [&](const Zigzag& x, const Zigzag& y) { return keyseq_less(x, y, st); });
    return reps;
}

std::vector<Zigzag> enumerate_zigzags(const Triangulation& t) {
    StepTable st(t);
    return enumerate_zigzags(st);
}

std::vector<OrientedEdge> oriented_edges(const Zigzag& z, const Triangulation& t) {
    StepTable st(t);
    std::vector<OrientedEdge> out;
    out.reserve(z.states.size());
    for (int s : z.states) {
        auto d = st.decode(s);
        out.emplace_back(t.label(d.tail), t.label(d.head));
    }
    return out;
}

std::vector<Edge> undirected_edges(const Zigzag& z, const Triangulation& t) {
    std::vector<Edge> out;
    out.reserve(z.states.size());
    for (const auto& oe : oriented_edges(z, t)) out.push_back(oe.undirected());
    return out;
}

bool is_edge_simple(const Zigzag& z, const Triangulation& t) {
    StepTable st(t);
    std::vector<int> eids;
    eids.reserve(z.states.size());
    for (int s : z.states) {
        auto d = st.decode(s);
        eids.push_back(t.edge_id(d.tail, d.head));
    }
    std::sort(eids.begin(), eids.end());
    return std::adjacent_find(eids.begin(), eids.end()) == eids.end();
}

std::vector<int> shadow_face_ids(const Zigzag& z) {
    const size_t n = z.states.size();
    std::vector<int> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = z.states[(i + 1) % n] / 6;
    return out;
}

std::vector<Face> face_shadow(const Zigzag& z, const Triangulation& t) {
    std::vector<Face> out;
    out.reserve(z.states.size());
    for (int fid : shadow_face_ids(z)) out.push_back(t.face_at(fid));
    return out;
}

namespace {

// Edge ids of f, as a sorted triple.
std::array<int, 3> face_edge_ids(int fid, const Triangulation& t) {
    const auto& fv = t.face_vertex_ids(fid);
    return {t.edge_id(fv[0], fv[1]), t.edge_id(fv[0], fv[2]), t.edge_id(fv[1], fv[2])};
}

}  // namespace

std::vector<std::vector<int>> pair_indices_by_face(const std::vector<Zigzag>& reps,
                                                   const Triangulation& t) {
    StepTable st(t);
    // pair lists per edge first, then union over the three edges of each face.
    std::vector<std::vector<int>> by_edge(static_cast<size_t>(t.edge_count()));
    for (int p = 0; p < static_cast<int>(reps.size()); ++p) {
        for (int s : reps[static_cast<size_t>(p)].states) {
            auto d = st.decode(s);
            auto& lst = by_edge[static_cast<size_t>(t.edge_id(d.tail, d.head))];
            if (lst.empty() || lst.back() != p) lst.push_back(p);
        }
    }
    for (auto& lst : by_edge) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    std::vector<std::vector<int>> by_face(static_cast<size_t>(t.face_count()));
    for (int f = 0; f < t.face_count(); ++f) {
        auto& lst = by_face[static_cast<size_t>(f)];
        for (int e : face_edge_ids(f, t)) {
            lst.insert(lst.end(), by_edge[static_cast<size_t>(e)].begin(),
                       by_edge[static_cast<size_t>(e)].end());
        }
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    return by_face;
}

std::vector<Zigzag> zigzags_through_face(const Face& f, const Triangulation& t) {
    const int fid = t.face_id(f);
    if (fid < 0)
        throw DomainError(ErrorKind::FaceNotInTriangulation,
                          "face " + f.v[0] + "-" + f.v[1] + "-" + f.v[2] + " is not in the triangulation");
    auto reps = enumerate_zigzags(t);
    auto by_face = pair_indices_by_face(reps, t);
    std::vector<Zigzag> out;
    StepTable st(t);
    const auto fe = face_edge_ids(fid, t);
    for (int p : by_face[static_cast<size_t>(fid)]) {
        // Every member of Z(F) must use at least two distinct edges of F.
        std::vector<int> used;
        for (int s : reps[static_cast<size_t>(p)].states) {
            auto d = st.decode(s);
            const int e = t.edge_id(d.tail, d.head);
            if (std::find(fe.begin(), fe.end(), e) != fe.end()) used.push_back(e);
        }
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        internal_check(used.size() >= 2, "a zigzag through a face uses at least two of its edges");
        out.push_back(reps[static_cast<size_t>(p)]);
    }
    return out;
}

OccurrenceWord shadow_occurrence_word(const Zigzag& z, const Face& f, const Face& f2,
                                      const Triangulation& t) {
    if (f == f2)
        throw DomainError(ErrorKind::InvalidParameter, "occurrence word needs two distinct faces");
    const int fid = t.face_id(f);
    const int fid2 = t.face_id(f2);
    if (fid < 0 || fid2 < 0)
        throw DomainError(ErrorKind::FaceNotInTriangulation,
                          "occurrence word face is not in the triangulation");
    OccurrenceWord w;
    const auto shadow = shadow_face_ids(z);
    w.shadow_length = static_cast<int>(shadow.size());
    for (int i = 0; i < w.shadow_length; ++i) {
        if (shadow[static_cast<size_t>(i)] == fid) {
            w.positions.push_back(i);
            w.letters.push_back(0);
        } else if (shadow[static_cast<size_t>(i)] == fid2) {
            w.positions.push_back(i);
            w.letters.push_back(1);
        }
    }
    return w;
}

bool matches_interleaving(const OccurrenceWord& w, InterleavingPattern pattern) {
    static const std::array<int, 6> blocked{0, 1, 1, 1, 0, 0};
    static const std::array<int, 6> alternating{0, 1, 0, 1, 0, 1};
    const auto& pat = pattern == InterleavingPattern::blocked ? blocked : alternating;

    const int m = static_cast<int>(w.letters.size());
    if (m != 6) return false;
    const int n = w.shadow_length;
    for (int swap = 0; swap < 2; ++swap) {
        for (int dir : {1, -1}) {
            for (int r = 0; r < m; ++r) {
                auto idx = [&](int k) { return ((r + dir * k) % m + m) % m; };
                bool ok = true;
                for (int k = 0; k < m && ok; ++k)
                    ok = (w.letters[static_cast<size_t>(idx(k))] ^ swap) == pat[static_cast<size_t>(k)];
                if (!ok) continue;
                // the pattern's first two letters must be shadow-adjacent
                const int p0 = w.positions[static_cast<size_t>(idx(0))];
                const int p1 = w.positions[static_cast<size_t>(idx(1))];
                if (((p0 + dir) % n + n) % n == p1) return true;
            }
        }
    }
    return false;
}

}  // namespace zmono
