#pragma once

#include <vector>

#include "zmono/surface.hpp"

namespace zmono {

// A zigzag traversal state: a face together with one of its six oriented
// edges.  The state (F, v->w) stands for the consecutive edge pair
// ({u,v},{v,w}) with u the third vertex of F, so states are in bijection with
// the ordered adjacent-edge pairs of the classical definition.  There are
// 6*|F| = 4*|E| states in total.
struct ZigzagState {
    Face face;
    OrientedEdge current;

    friend bool operator==(const ZigzagState&, const ZigzagState&) = default;
    friend auto operator<=>(const ZigzagState&, const ZigzagState&) = default;
};

// Precomputed transition tables over the integer state encoding
// state = face_id * 6 + k, where k indexes Face::omega() of that face.
// step is a bijection; rho is the reversal involution with
// rho . step . rho == step^-1.
class StepTable {
public:
    explicit StepTable(const Triangulation& t);

    const Triangulation& triangulation() const { return *t_; }
    int state_count() const { return static_cast<int>(next_.size()); }
    int next(int s) const { return next_[static_cast<size_t>(s)]; }
    int prev(int s) const { return prev_[static_cast<size_t>(s)]; }
    int rho(int s) const { return rho_[static_cast<size_t>(s)]; }

    struct Decoded {
        int face, tail, head;
    };
    Decoded decode(int s) const;
    int encode(int fid, int tail, int head) const;  // -1 if (tail,head) is not an oriented edge of fid

private:
    const Triangulation* t_;
    std::vector<int> next_, prev_, rho_;
};

int state_id(const ZigzagState& s, const Triangulation& t);
ZigzagState state_at(int sid, const Triangulation& t);

// One step of the zigzag transition: from (F, v->w) move to (F', w->x) where
// F' is the other face on {v,w} and x its third vertex.
ZigzagState step(const ZigzagState& s, const Triangulation& t);

// The reversal involution on states: (F, v->w) -> (F, v->u), u the third
// vertex of F.
ZigzagState reverse_state(const ZigzagState& s);

// A zigzag: one step-orbit, stored as the state sequence rotated so that the
// oriented-edge sequence (compared by (tail,head) vertex ids) is
// lexicographically least.
struct Zigzag {
    std::vector<int> states;

    int length() const { return static_cast<int>(states.size()); }

    friend bool operator==(const Zigzag&, const Zigzag&) = default;
};

Zigzag trace(const ZigzagState& s, const Triangulation& t);
Zigzag trace(int sid, const StepTable& st);

Zigzag reverse_zigzag(const Zigzag& z, const StepTable& st);

// All zigzags up to reversal: one canonical representative per (Z, Z^-1)
// pair (the direction whose canonical rotation is smaller), ordered by
// (length, oriented-edge sequence).
std::vector<Zigzag> enumerate_zigzags(const Triangulation& t);
std::vector<Zigzag> enumerate_zigzags(const StepTable& st);

std::vector<OrientedEdge> oriented_edges(const Zigzag& z, const Triangulation& t);
std::vector<Edge> undirected_edges(const Zigzag& z, const Triangulation& t);
bool is_edge_simple(const Zigzag& z, const Triangulation& t);

// The face shadow: entry i is the face containing edges e_i and e_{i+1},
// i.e. the face of state i+1.
std::vector<Face> face_shadow(const Zigzag& z, const Triangulation& t);
std::vector<int> shadow_face_ids(const Zigzag& z);

// Z(F): the zigzag pairs whose traversal uses at least one edge of f
// (each then uses at least two, which is asserted).
std::vector<Zigzag> zigzags_through_face(const Face& f, const Triangulation& t);

// pair index list per face id, over the given representatives.
std::vector<std::vector<int>> pair_indices_by_face(const std::vector<Zigzag>& reps,
                                                   const Triangulation& t);

// The subsequence of the face shadow restricted to two chosen faces, as a
// cyclic word; letters[i] is 0 for f and 1 for f2, positions are the shadow
// indices.
struct OccurrenceWord {
    std::vector<int> positions;
    std::vector<int> letters;
    int shadow_length = 0;
};

OccurrenceWord shadow_occurrence_word(const Zigzag& z, const Face& f, const Face& f2,
                                      const Triangulation& t);

// The two interleaving shapes of the forest lemmas, checked up to rotation,
// reversal and swapping the roles of the two faces.  The first two letters of
// the pattern must sit at consecutive shadow positions.
//   blocked:     F F' F' F' F F   (identity-monodromy neighbours)
//   alternating: F F' F F' F F'   (rotation-monodromy neighbours)
enum class InterleavingPattern { blocked, alternating };

bool matches_interleaving(const OccurrenceWord& w, InterleavingPattern pattern);

}  // namespace zmono
