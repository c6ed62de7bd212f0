#pragma once

#include <cstdint>
#include <string>

#include "zmono/surface.hpp"

namespace zmono {

// The n-gonal bipyramid: ring vertices "1".."n" joined to apexes "a" and "b".
Triangulation bipyramid(int n);

enum class PlatonicKind { tetrahedron, octahedron, icosahedron };
Triangulation platonic(PlatonicKind kind);

// The 10-face triangulation of the projective plane on K6.
Triangulation projective_plane_6();

// The 7-vertex triangulation of the torus (faces {i,i+1,i+3} and {i,i+2,i+3} mod 7).
Triangulation torus_k7();

// Replace f by the three faces joining its edges to a new vertex.
Triangulation subdivide_face(const Triangulation& t, const Face& f, const VertexLabel& new_label);

// Replace the two faces {a,b,c},{a,b,d} on e={a,b} by {a,c,d},{b,c,d}.
// Illegal when {c,d} is already an edge or a replacement face already exists.
Triangulation flip_edge(const Triangulation& t, const Edge& e);

// Bases accepted by the random generator.
struct BaseDescriptor {
    enum class Kind { tetrahedron, bipyramid, projective_plane, torus } kind;
    int n = 0;  // bipyramid size

    std::string name() const;
    static BaseDescriptor parse(const std::string& text);
    Triangulation instantiate() const;
};

struct MutationStep {
    enum class Kind { subdivide, flip } kind;
    // subdivide: face + fresh label; flip: edge
    std::array<VertexLabel, 3> face{};
    std::array<VertexLabel, 2> edge{};
    VertexLabel new_label;
    bool accepted = true;
    std::string reject_reason;
};

struct MutationLog {
    std::string base;
    std::uint64_t seed = 0;
    int requested_steps = 0;
    std::vector<MutationStep> steps;  // includes rejected flip attempts

    std::string to_text() const;
};

struct RandomResult {
    Triangulation triangulation;
    MutationLog log;
};

// Seeded random walk over the two moves (equal weight); rejected flips are
// logged but do not count toward `steps`.  The generator is splitmix64, so a
// (base, steps, seed) triple reproduces bit-identically anywhere.
RandomResult random_triangulation(const BaseDescriptor& base, int steps, std::uint64_t seed);

// Re-applies the accepted steps of a log to its base; reproduces the
// triangulation exactly.
Triangulation replay(const MutationLog& log);

// The named 64-bit mixing generator behind random_triangulation.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

}  // namespace zmono
