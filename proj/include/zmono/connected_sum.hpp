#pragma once

#include <utility>

#include "zmono/monodromy.hpp"

namespace zmono {

// One of the six vertex bijections between two face boundaries.  pairing[i]
// sends a vertex of f1 (ascending order) to a vertex of f2.
struct SpecialMap {
    Face f1, f2;
    std::array<std::pair<VertexLabel, VertexLabel>, 3> pairing;

    VertexLabel image_of(const VertexLabel& v) const;

    friend bool operator==(const SpecialMap&, const SpecialMap&) = default;
};

// All six special maps between f1 and f2, ordered lexicographically by the
// image triple.
std::array<SpecialMap, 6> special_maps(const Face& f1, const Face& f2);

struct SumResult {
    Triangulation sum;
    // every vertex of the second summand -> its label in the sum
    std::vector<std::pair<VertexLabel, VertexLabel>> renaming;
};

// Glue t1 and t2 along m: drop f1 and f2, identify their boundaries via the
// pairing, rename the remaining vertices of t2 away from collisions by
// appending "_2" as often as needed.  The result is rebuilt through full
// validation.
SumResult connected_sum(const Triangulation& t1, const Triangulation& t2, const SpecialMap& m);

struct ZKnottedSum {
    SpecialMap map;
    SumResult result;
};

// First (in canonical order) face pair with non-identity monodromies and
// special map whose connected sum is z-knotted.  Exhaustion contradicts the
// theory and is reported as a defect.
ZKnottedSum find_z_knotted_sum(const Triangulation& t1, const Triangulation& t2);

// The least face whose z-monodromy is not the identity (always exists).
Face non_identity_face(const Triangulation& t);

}  // namespace zmono
