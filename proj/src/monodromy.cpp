#include "zmono/monodromy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zmono {

const char* to_string(MonodromyTag tag) {
    switch (tag) {
        case MonodromyTag::M1: return "M1";
        case MonodromyTag::M2: return "M2";
        case MonodromyTag::M3: return "M3";
        case MonodromyTag::M4: return "M4";
        case MonodromyTag::M5: return "M5";
        case MonodromyTag::M6: return "M6";
        case MonodromyTag::M7: return "M7";
    }
    return "?";
}

bool is_z_knotted_type(MonodromyTag tag) {
    return tag == MonodromyTag::M1 || tag == MonodromyTag::M2 || tag == MonodromyTag::M3 ||
           tag == MonodromyTag::M4;
}

namespace {

using IndexMap = std::array<std::uint8_t, 6>;

int omega_index(const Face& f, const OrientedEdge& e) {
    const auto om = f.omega();
    for (int k = 0; k < 6; ++k) {
        if (om[static_cast<size_t>(k)] == e) return k;
    }
    return -1;
}

// Index of the reversed oriented edge, in omega order (ab,ac,ba,bc,ca,cb).
constexpr IndexMap kNegate{2, 4, 0, 5, 1, 3};

constexpr IndexMap kIdentity{0, 1, 2, 3, 4, 5};

IndexMap invert(const IndexMap& p) {
    IndexMap inv{};
    for (int k = 0; k < 6; ++k) inv[p[static_cast<size_t>(k)]] = static_cast<std::uint8_t>(k);
    return inv;
}

// The two 3-cycles of a fixed-point-free pair-of-3-cycles permutation.
std::array<std::array<int, 3>, 2> two_cycles(const IndexMap& p) {
    std::array<std::array<int, 3>, 2> cycles{};
    std::array<bool, 6> seen{};
    int next_cycle = 0;
    for (int start = 0; start < 6; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::array<int, 3> c{};
        int x = start;
        for (int i = 0; i < 3; ++i) {
            c[static_cast<size_t>(i)] = x;
            seen[static_cast<size_t>(x)] = true;
            x = p[static_cast<size_t>(x)];
        }
        internal_check(x == start && next_cycle < 2, "expected two 3-cycles");
        cycles[static_cast<size_t>(next_cycle++)] = c;
    }
    internal_check(next_cycle == 2, "expected two 3-cycles");
    return cycles;
}

// All rotations of both cycles: the six ordered choices of (e1,e2,e3).
std::vector<std::array<int, 3>> cycle_choices(const IndexMap& p) {
    std::vector<std::array<int, 3>> out;
    for (const auto& c : two_cycles(p)) {
        for (int r = 0; r < 3; ++r)
            out.push_back({c[static_cast<size_t>(r)], c[static_cast<size_t>((r + 1) % 3)],
                           c[static_cast<size_t>((r + 2) % 3)]});
    }
    return out;
}

struct Candidate {
    IndexMap map;
    std::optional<std::array<int, 3>> witness;
};

std::vector<Candidate> candidates_for(MonodromyTag tag, const IndexMap& d) {
    const auto neg = [](int k) { return static_cast<int>(kNegate[static_cast<size_t>(k)]); };
    std::vector<Candidate> out;
    switch (tag) {
        case MonodromyTag::M1:
            out.push_back({kIdentity, std::nullopt});
            break;
        case MonodromyTag::M2:
            out.push_back({d, std::nullopt});
            break;
        case MonodromyTag::M5:
            out.push_back({invert(d), std::nullopt});
            break;
        case MonodromyTag::M3:
        case MonodromyTag::M6: {
            const IndexMap base = tag == MonodromyTag::M3 ? d : invert(d);
            for (const auto& [e1, e2, e3] : cycle_choices(base)) {
                // (-e1,e2,e3)(-e3,-e2,e1)
                IndexMap p = kIdentity;
                p[static_cast<size_t>(neg(e1))] = static_cast<std::uint8_t>(e2);
                p[static_cast<size_t>(e2)] = static_cast<std::uint8_t>(e3);
                p[static_cast<size_t>(e3)] = static_cast<std::uint8_t>(neg(e1));
                p[static_cast<size_t>(neg(e3))] = static_cast<std::uint8_t>(neg(e2));
                p[static_cast<size_t>(neg(e2))] = static_cast<std::uint8_t>(e1);
                p[static_cast<size_t>(e1)] = static_cast<std::uint8_t>(neg(e3));
                out.push_back({p, std::array<int, 3>{e1, e2, e3}});
            }
            break;
        }
        case MonodromyTag::M4:
            for (const auto& [e1, e2, e3] : cycle_choices(d)) {
                // (e1,-e2)(e2,-e1), e3 and -e3 fixed
                IndexMap p = kIdentity;
                p[static_cast<size_t>(e1)] = static_cast<std::uint8_t>(neg(e2));
                p[static_cast<size_t>(neg(e2))] = static_cast<std::uint8_t>(e1);
                p[static_cast<size_t>(e2)] = static_cast<std::uint8_t>(neg(e1));
                p[static_cast<size_t>(neg(e1))] = static_cast<std::uint8_t>(e2);
                out.push_back({p, std::array<int, 3>{e1, e2, e3}});
            }
            break;
        case MonodromyTag::M7:
            for (const auto& [e1, e2, e3] : cycle_choices(d)) {
                // (e1,e2)(-e1,-e2), e3 and -e3 fixed
                IndexMap p = kIdentity;
                p[static_cast<size_t>(e1)] = static_cast<std::uint8_t>(e2);
                p[static_cast<size_t>(e2)] = static_cast<std::uint8_t>(e1);
                p[static_cast<size_t>(neg(e1))] = static_cast<std::uint8_t>(neg(e2));
                p[static_cast<size_t>(neg(e2))] = static_cast<std::uint8_t>(neg(e1));
                out.push_back({p, std::array<int, 3>{e1, e2, e3}});
            }
            break;
    }
    return out;
}

}  // namespace

OmegaPermutation OmegaPermutation::identity(const Face& f) { return {f, kIdentity}; }

OrientedEdge OmegaPermutation::apply(const OrientedEdge& e) const {
    const int k = omega_index(face, e);
    if (k < 0)
        throw DomainError(ErrorKind::EdgeNotInFace,
                          "oriented edge " + e.tail + "->" + e.head + " is not in Omega of the face");
    return face.omega()[map[static_cast<size_t>(k)]];
}

OmegaPermutation OmegaPermutation::inverse() const { return {face, invert(map)}; }

OmegaPermutation OmegaPermutation::after(const OmegaPermutation& inner) const {
    internal_check(face == inner.face, "composing permutations of different faces");
    IndexMap composed{};
    for (int k = 0; k < 6; ++k) composed[static_cast<size_t>(k)] = map[inner.map[static_cast<size_t>(k)]];
    return {face, composed};
}

bool OmegaPermutation::is_identity() const { return map == kIdentity; }

std::string OmegaPermutation::cycle_notation() const {
    if (is_identity()) return "id";
    const auto om = face.omega();
    std::ostringstream os;
    std::array<bool, 6> seen{};
    for (int start = 0; start < 6; ++start) {
        if (seen[static_cast<size_t>(start)] || map[static_cast<size_t>(start)] == start) continue;
        os << '(';
        int x = start;
        bool first = true;
        do {
            if (!first) os << ' ';
            first = false;
            os << om[static_cast<size_t>(x)].tail << "->" << om[static_cast<size_t>(x)].head;
            seen[static_cast<size_t>(x)] = true;
            x = map[static_cast<size_t>(x)];
        } while (x != start);
        os << ')';
    }
    return os.str();
}

OmegaPermutation rotation(const Face& f) {
    const auto om = f.omega();
    IndexMap map{};
    for (int k = 0; k < 6; ++k) {
        const auto& e = om[static_cast<size_t>(k)];
        const VertexLabel z = third_vertex(f, e.undirected());
        const int target = omega_index(f, OrientedEdge(e.head, z));
        internal_check(target >= 0, "rotation image must be in Omega");
        map[static_cast<size_t>(k)] = static_cast<std::uint8_t>(target);
    }
    return {f, map};
}

OmegaPermutation z_monodromy(int fid, const StepTable& st) {
    const Triangulation& t = st.triangulation();
    const auto& fv = t.face_vertex_ids(fid);
    auto in_face = [&](int v) { return v == fv[0] || v == fv[1] || v == fv[2]; };

    IndexMap map{};
    for (int k = 0; k < 6; ++k) {
        int s = st.next(fid * 6 + k);
        int guard = st.state_count();
        while (true) {
            const auto d = st.decode(s);
            if (in_face(d.tail) && in_face(d.head)) {
                const int target = st.encode(fid, d.tail, d.head) - fid * 6;
                internal_check(target >= 0 && target < 6, "monodromy image must be in Omega");
                map[static_cast<size_t>(k)] = static_cast<std::uint8_t>(target);
                break;
            }
            s = st.next(s);
            internal_check(--guard > 0, "monodromy walk failed to return to the face");
        }
    }
    std::array<bool, 6> hit{};
    for (auto v : map) hit[v] = true;
    internal_check(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
                   "z-monodromy must be a permutation of Omega");
    return {t.face_at(fid), map};
}

OmegaPermutation z_monodromy(const Face& f, const Triangulation& t) {
    const int fid = t.face_id(f);
    if (fid < 0)
        throw DomainError(ErrorKind::FaceNotInTriangulation,
                          "face " + f.v[0] + "-" + f.v[1] + "-" + f.v[2] + " is not in the triangulation");
    StepTable st(t);
    return z_monodromy(fid, st);
}

MonodromyType classify(const OmegaPermutation& m, const Face& f) {
    internal_check(m.face == f, "classify: permutation belongs to a different face");
    const IndexMap d = rotation(f).map;

    std::optional<MonodromyTag> matched;
    std::optional<std::array<int, 3>> witness;
    for (MonodromyTag tag : {MonodromyTag::M1, MonodromyTag::M2, MonodromyTag::M3, MonodromyTag::M4,
                             MonodromyTag::M5, MonodromyTag::M6, MonodromyTag::M7}) {
        std::optional<std::array<int, 3>> best;
        bool any = false;
        for (const auto& cand : candidates_for(tag, d)) {
            if (cand.map != m.map) continue;
            any = true;
            if (cand.witness && (!best || *cand.witness < *best)) best = cand.witness;
        }
        if (!any) continue;
        if (matched)
            throw DomainError(ErrorKind::Unclassifiable,
                              std::string("monodromy matches both ") + to_string(*matched) + " and " +
                                  to_string(tag));
        matched = tag;
        witness = best;
    }
    if (!matched)
        throw DomainError(ErrorKind::Unclassifiable,
                          "monodromy " + m.cycle_notation() + " matches none of the seven types");

    MonodromyType out{*matched, std::nullopt};
    if (witness) {
        const auto om = f.omega();
        out.witness = {om[static_cast<size_t>((*witness)[0])], om[static_cast<size_t>((*witness)[1])],
                       om[static_cast<size_t>((*witness)[2])]};
    }
    return out;
}

bool is_locally_z_knotted(const Face& f, const Triangulation& t) {
    const bool local = zigzags_through_face(f, t).size() == 1;
    const MonodromyType type = classify(z_monodromy(f, t), f);
    internal_check(local == is_z_knotted_type(type.tag),
                   "local z-knottedness must agree with the monodromy type");
    return local;
}

bool is_z_knotted(const Triangulation& t) { return enumerate_zigzags(t).size() == 1; }

TraversalProfile traversal_profile(const Face& f, const Triangulation& t) {
    auto through = zigzags_through_face(f, t);
    if (through.size() != 1)
        throw DomainError(ErrorKind::NotLocallyZKnotted,
                          "face " + f.v[0] + "-" + f.v[1] + "-" + f.v[2] + " is met by " +
                              std::to_string(through.size()) + " zigzag pairs");
    const Zigzag& z = through.front();
    StepTable st(t);

    TraversalProfile profile;
    profile.face = f;
    const auto edges = f.edges();
    for (int i = 0; i < 3; ++i) {
        const Edge& e = edges[static_cast<size_t>(i)];
        const int eid = t.edge_id(t.vertex_id(e.a), t.vertex_id(e.b));
        std::vector<OrientedEdge> passes;
        for (int s : z.states) {
            const auto dec = st.decode(s);
            if (t.edge_id(dec.tail, dec.head) == eid)
                passes.emplace_back(t.label(dec.tail), t.label(dec.head));
        }
        internal_check(passes.size() == 2, "the pair through a locally z-knotted face passes each edge twice");
        profile.edges[static_cast<size_t>(i)] =
            TraversalProfile::EdgePass{e, {passes[0], passes[1]}, passes[0] == passes[1]};
    }
    return profile;
}

std::vector<FaceReport> face_reports(const Triangulation& t) {
    StepTable st(t);
    const auto reps = enumerate_zigzags(st);
    const auto by_face = pair_indices_by_face(reps, t);

    std::vector<FaceReport> out;
    out.reserve(static_cast<size_t>(t.face_count()));
    for (int fid = 0; fid < t.face_count(); ++fid) {
        FaceReport r{t.face_at(fid),
                     rotation(t.face_at(fid)),
                     z_monodromy(fid, st),
                     {},
                     false,
                     static_cast<int>(by_face[static_cast<size_t>(fid)].size())};
        r.type = classify(r.m, r.face);
        r.locally_z_knotted = r.zigzag_pair_count_through_face == 1;
        internal_check(r.locally_z_knotted == is_z_knotted_type(r.type.tag),
                       "local z-knottedness must agree with the monodromy type");
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace zmono
