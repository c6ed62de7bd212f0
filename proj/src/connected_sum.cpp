#include "zmono/connected_sum.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace zmono {

VertexLabel SpecialMap::image_of(const VertexLabel& v) const {
    for (const auto& [from, to] : pairing) {
        if (from == v) return to;
    }
    throw DomainError(ErrorKind::InvalidParameter, "vertex '" + v + "' is not on the glued face");
}

std::array<SpecialMap, 6> special_maps(const Face& f1, const Face& f2) {
    std::array<VertexLabel, 3> image = f2.v;  // ascending: permutations come out in lex order
    std::array<SpecialMap, 6> out;
    for (int i = 0; i < 6; ++i) {
        out[static_cast<size_t>(i)] =
            SpecialMap{f1, f2, {{{f1.v[0], image[0]}, {f1.v[1], image[1]}, {f1.v[2], image[2]}}}};
        std::next_permutation(image.begin(), image.end());
    }
    return out;
}

SumResult connected_sum(const Triangulation& t1, const Triangulation& t2, const SpecialMap& m) {
    if (!t1.has_face(m.f1))
        throw DomainError(ErrorKind::FaceNotInTriangulation,
                          "glue face is not in the first triangulation");
    if (!t2.has_face(m.f2))
        throw DomainError(ErrorKind::FaceNotInTriangulation,
                          "glue face is not in the second triangulation");

    // Identified vertices take the labels of the first summand.
    std::map<VertexLabel, VertexLabel> rename;
    for (const auto& [v, w] : m.pairing) rename[w] = v;

    std::set<VertexLabel> used;
    for (const auto& w : t2.vertex_labels()) {
        if (rename.count(w)) continue;
        VertexLabel candidate = w;
        while (t1.has_vertex(candidate) || used.count(candidate)) candidate += "_2";
        used.insert(candidate);
        rename[w] = candidate;
    }

    std::vector<std::array<VertexLabel, 3>> faces;
    for (const auto& f : t1.faces()) {
        if (f == m.f1) continue;
        faces.push_back({f.v[0], f.v[1], f.v[2]});
    }
    for (const auto& f : t2.faces()) {
        if (f == m.f2) continue;
        faces.push_back({rename.at(f.v[0]), rename.at(f.v[1]), rename.at(f.v[2])});
    }

    SumResult out{[&] {
                      try {
                          return Triangulation::build(faces);
                      } catch (const DomainError& e) {
                          throw DomainError(ErrorKind::ValidationFailed,
                                            std::string("connected sum is not a valid triangulation (") +
                                                e.what() + ")");
                      }
                  }(),
                  {rename.begin(), rename.end()}};

    internal_check(out.sum.vertex_count() == t1.vertex_count() + t2.vertex_count() - 3,
                   "connected sum vertex count");
    internal_check(out.sum.edge_count() == t1.edge_count() + t2.edge_count() - 3,
                   "connected sum edge count");
    internal_check(out.sum.face_count() == t1.face_count() + t2.face_count() - 2,
                   "connected sum face count");
    internal_check(euler_characteristic(out.sum) ==
                       euler_characteristic(t1) + euler_characteristic(t2) - 2,
                   "connected sum Euler characteristic");
    return out;
}

ZKnottedSum find_z_knotted_sum(const Triangulation& t1, const Triangulation& t2) {
    if (!is_z_knotted(t1))
        throw DomainError(ErrorKind::InputNotZKnotted, "first summand is not z-knotted");
    if (!is_z_knotted(t2))
        throw DomainError(ErrorKind::InputNotZKnotted, "second summand is not z-knotted");

    // Only faces with non-identity monodromy are eligible gluing sites.
    auto eligible = [](const Triangulation& t) {
        std::vector<Face> out;
        for (const auto& r : face_reports(t)) {
            if (r.type.tag != MonodromyTag::M1) out.push_back(r.face);
        }
        return out;
    };

    for (const auto& f1 : eligible(t1)) {
        for (const auto& f2 : eligible(t2)) {
            for (const auto& m : special_maps(f1, f2)) {
                SumResult candidate = connected_sum(t1, t2, m);
                if (is_z_knotted(candidate.sum)) return {m, std::move(candidate)};
            }
        }
    }
    throw DomainError(ErrorKind::Exhausted,
                      "no special map yields a z-knotted sum; this contradicts the theory");
}

Face non_identity_face(const Triangulation& t) {
    for (const auto& r : face_reports(t)) {
        if (r.type.tag != MonodromyTag::M1) return r.face;
    }
    internal_check(false, "every triangulation has a face with non-identity monodromy");
    return t.face_at(0);
}

}  // namespace zmono
