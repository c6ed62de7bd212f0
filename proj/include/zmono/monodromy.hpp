#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "zmono/zigzag.hpp"

namespace zmono {

// The seven shapes a z-monodromy can take.  M1..M4 are exactly the locally
// z-knotted ones.
enum class MonodromyTag : std::uint8_t { M1 = 1, M2, M3, M4, M5, M6, M7 };

const char* to_string(MonodromyTag tag);
bool is_z_knotted_type(MonodromyTag tag);

// A permutation of the six oriented edges of one fixed face; entries index
// Face::omega() of that face.
struct OmegaPermutation {
    Face face;
    std::array<std::uint8_t, 6> map;

    static OmegaPermutation identity(const Face& f);

    OrientedEdge apply(const OrientedEdge& e) const;
    OmegaPermutation inverse() const;
    OmegaPermutation after(const OmegaPermutation& inner) const;  // this o inner
    bool is_identity() const;

    // "(1->2 2->3 3->1)(...)"; fixed points omitted, identity prints "id".
    std::string cycle_notation() const;

    friend bool operator==(const OmegaPermutation&, const OmegaPermutation&) = default;
};

struct MonodromyType {
    MonodromyTag tag;
    // The defining cycle (e1,e2,e3) for M3/M4/M6/M7; the lexicographically
    // least choice that matches.
    std::optional<std::array<OrientedEdge, 3>> witness;
};

struct FaceReport {
    Face face;
    OmegaPermutation d;  // D_F
    OmegaPermutation m;  // M_F
    MonodromyType type;
    bool locally_z_knotted = false;
    int zigzag_pair_count_through_face = 0;
};

// How the single zigzag pair through a locally z-knotted face passes each of
// its three edges: twice in the same direction or once each way.
struct TraversalProfile {
    struct EdgePass {
        Edge edge;
        std::array<OrientedEdge, 2> passes;
        bool same_direction = false;
    };
    Face face;
    std::array<EdgePass, 3> edges;
};

// D_F: xy -> yz (z the third vertex); two 3-cycles, D_F^3 = id.
OmegaPermutation rotation(const Face& f);

// M_F: e -> the first oriented edge of F met by the zigzag through
// (D_F^-1(e), e) strictly after e (possibly e itself or -e).
OmegaPermutation z_monodromy(const Face& f, const Triangulation& t);
OmegaPermutation z_monodromy(int fid, const StepTable& st);

// Match m against the generated candidate permutations of the seven types;
// exactly one type fits (anything else throws Unclassifiable).
MonodromyType classify(const OmegaPermutation& m, const Face& f);

bool is_locally_z_knotted(const Face& f, const Triangulation& t);
bool is_z_knotted(const Triangulation& t);

TraversalProfile traversal_profile(const Face& f, const Triangulation& t);

// Reports for every face, computed over one shared step table and census.
std::vector<FaceReport> face_reports(const Triangulation& t);

}  // namespace zmono
