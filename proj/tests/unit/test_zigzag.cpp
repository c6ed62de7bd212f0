#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracle.hpp"
#include "zmono/connected_sum.hpp"
#include "zmono/generators.hpp"
#include "zmono/zigzag.hpp"

using namespace zmono;

namespace {

// The unique BP_3 zigzag as printed in the source example.
std::vector<Edge> bp3_reference_sequence() {
    const std::vector<std::pair<std::string, std::string>> raw = {
        {"a", "1"}, {"1", "2"}, {"2", "b"}, {"b", "3"}, {"3", "1"}, {"1", "a"},
        {"a", "2"}, {"2", "3"}, {"3", "b"}, {"b", "1"}, {"1", "2"}, {"2", "a"},
        {"a", "3"}, {"3", "1"}, {"1", "b"}, {"b", "2"}, {"2", "3"}, {"3", "a"}};
    std::vector<Edge> out;
    for (const auto& [x, y] : raw) out.emplace_back(x, y);
    return out;
}

Triangulation example3_sum() {
    const auto bp3 = bipyramid(3);
    const Face s("a", "1", "2");
    const auto maps = special_maps(s, s);
    // identity pairing a->a, 1->1, 2->2
    for (const auto& m : maps) {
        if (m.image_of("a") == "a" && m.image_of("1") == "1") return connected_sum(bp3, bp3, m).sum;
    }
    throw std::logic_error("identity special map not found");
}

}  // namespace

TEST_CASE("step follows the traced examples") {
    const auto tet = platonic(PlatonicKind::tetrahedron);
    CHECK(step({Face("1", "2", "3"), OrientedEdge("2", "3")}, tet) ==
          ZigzagState{Face("2", "3", "4"), OrientedEdge("3", "4")});

    const auto bp3 = bipyramid(3);
    CHECK(step({Face("a", "1", "2"), OrientedEdge("1", "2")}, bp3) ==
          ZigzagState{Face("b", "1", "2"), OrientedEdge("2", "b")});
    // from the example sequence "2b, b3, 31": the state after (b13, b->3) is (a13, 3->1)
    CHECK(step({Face("b", "1", "3"), OrientedEdge("b", "3")}, bp3) ==
          ZigzagState{Face("a", "1", "3"), OrientedEdge("3", "1")});
}

TEST_CASE("step rejects foreign states") {
    const auto tet = platonic(PlatonicKind::tetrahedron);
    CHECK_THROWS_AS(step({Face("1", "2", "9"), OrientedEdge("1", "2")}, tet), DomainError);
    CHECK_THROWS_AS(step({Face("1", "2", "3"), OrientedEdge("1", "4")}, tet), DomainError);
}

TEST_CASE("reverse_state is the third-vertex involution") {
    CHECK(reverse_state({Face("1", "2", "3"), OrientedEdge("2", "3")}) ==
          ZigzagState{Face("1", "2", "3"), OrientedEdge("2", "1")});

    const auto bp3 = bipyramid(3);
    for (int sid = 0; sid < 36; ++sid) {
        const auto s = state_at(sid, bp3);
        CHECK(reverse_state(reverse_state(s)) == s);
    }
}

TEST_CASE("rho conjugates step into its inverse, exhaustively") {
    for (const auto& t : {platonic(PlatonicKind::tetrahedron), bipyramid(3)}) {
        const StepTable st(t);
        for (int s = 0; s < st.state_count(); ++s) {
            CHECK(st.rho(st.next(st.rho(s))) == st.prev(s));
            CHECK(st.rho(st.rho(s)) == s);
            CHECK(st.next(st.prev(s)) == s);
        }
    }
}

TEST_CASE("tracing a tetrahedron quadrilateral") {
    const auto tet = platonic(PlatonicKind::tetrahedron);
    // the orbit through (124, 1->2) is the Petrie quadrilateral 12,23,34,41
    const auto z = trace({Face("1", "2", "4"), OrientedEdge("1", "2")}, tet);
    CHECK(z.length() == 4);
    const auto edges = oriented_edges(z, tet);
    CHECK(edges[0] == OrientedEdge("1", "2"));
    CHECK(edges[1] == OrientedEdge("2", "3"));
    CHECK(edges[2] == OrientedEdge("3", "4"));
    CHECK(edges[3] == OrientedEdge("4", "1"));

    // the orbit through (123, 1->2) runs 12,24,43,31 instead: the state
    // (123, 1->2) encodes the pair ({3,1},{1,2})
    const auto z2 = trace({Face("1", "2", "3"), OrientedEdge("1", "2")}, tet);
    CHECK(z2.length() == 4);
    std::multiset<Edge> used;
    for (const auto& e : undirected_edges(z2, tet)) used.insert(e);
    CHECK(used == std::multiset<Edge>{Edge("1", "2"), Edge("2", "4"), Edge("3", "4"), Edge("1", "3")});
}

TEST_CASE("trace canonicalizes the rotation, so orbits compare equal") {
    const auto bp3 = bipyramid(3);
    const auto s0 = ZigzagState{Face("a", "1", "2"), OrientedEdge("1", "2")};
    CHECK(trace(s0, bp3) == trace(step(s0, bp3), bp3));
}

TEST_CASE("BP_3 has one pair of length 18 matching the printed sequence") {
    const auto bp3 = bipyramid(3);
    const auto reps = enumerate_zigzags(bp3);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].length() == 18);
    CHECK(oracle::canonical_cycle(undirected_edges(reps[0], bp3)) ==
          oracle::canonical_cycle(bp3_reference_sequence()));

    // the same sequence comes out of the state encoding the pair (a1, 12)
    const auto z = trace({Face("a", "1", "2"), OrientedEdge("1", "2")}, bp3);
    CHECK(z == reps[0]);
}

TEST_CASE("zigzag censuses of the stock fixtures") {
    auto lengths = [](const Triangulation& t) {
        std::vector<int> out;
        for (const auto& z : enumerate_zigzags(t)) out.push_back(z.length());
        return out;
    };
    CHECK(lengths(platonic(PlatonicKind::tetrahedron)) == std::vector<int>{4, 4, 4});
    CHECK(lengths(platonic(PlatonicKind::octahedron)) == std::vector<int>{6, 6, 6, 6});
    CHECK(lengths(platonic(PlatonicKind::icosahedron)) ==
          std::vector<int>{10, 10, 10, 10, 10, 10});
    CHECK(lengths(bipyramid(6)) == std::vector<int>{18, 18});
}

TEST_CASE("enumeration agrees with the edge-pair oracle") {
    for (const auto& t : {platonic(PlatonicKind::tetrahedron), platonic(PlatonicKind::octahedron),
                          platonic(PlatonicKind::icosahedron), bipyramid(3), bipyramid(4),
                          bipyramid(5), bipyramid(6), projective_plane_6(), torus_k7(),
                          example3_sum()}) {
        const auto expected = oracle::zigzag_pairs(t);
        std::vector<std::vector<Edge>> got;
        for (const auto& z : enumerate_zigzags(t)) got.push_back(oracle::canonical_cycle(undirected_edges(z, t)));
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("orbit partition and the double edge traversal") {
    for (const auto& t : {bipyramid(3), bipyramid(6), projective_plane_6(), torus_k7()}) {
        const auto reps = enumerate_zigzags(t);
        int total = 0;
        std::map<Edge, int> per_edge;
        for (const auto& z : reps) {
            total += 2 * z.length();
            for (const auto& e : undirected_edges(z, t)) ++per_edge[e];
        }
        CHECK(total == 6 * t.face_count());
        CHECK(per_edge.size() == static_cast<size_t>(t.edge_count()));
        for (const auto& [e, count] : per_edge) CHECK(count == 2);
    }
}

TEST_CASE("face shadows") {
    const auto tet = platonic(PlatonicKind::tetrahedron);
    const auto z = trace({Face("1", "2", "4"), OrientedEdge("1", "2")}, tet);
    CHECK(face_shadow(z, tet) == std::vector<Face>{Face("1", "2", "3"), Face("2", "3", "4"),
                                                   Face("1", "3", "4"), Face("1", "2", "4")});

    // BP_3 is z-knotted: each face shows up exactly three times in the shadow
    const auto bp3 = bipyramid(3);
    const auto reps = enumerate_zigzags(bp3);
    std::map<Face, int> counts;
    for (const auto& f : face_shadow(reps[0], bp3)) ++counts[f];
    CHECK(counts.size() == 6);
    for (const auto& [f, n] : counts) CHECK(n == 3);
}

TEST_CASE("no face appears more than three times in any shadow") {
    for (const auto& t : {platonic(PlatonicKind::icosahedron), bipyramid(6), torus_k7(),
                          projective_plane_6()}) {
        for (const auto& z : enumerate_zigzags(t)) {
            std::map<int, int> counts;
            for (int fid : shadow_face_ids(z)) ++counts[fid];
            for (const auto& [fid, n] : counts) CHECK(n <= 3);
        }
    }
}

TEST_CASE("zigzags through a face") {
    const auto bp3 = bipyramid(3);
    for (const auto& f : bp3.faces()) CHECK(zigzags_through_face(f, bp3).size() == 1);

    const auto tet = platonic(PlatonicKind::tetrahedron);
    CHECK(zigzags_through_face(Face("1", "2", "3"), tet).size() == 3);

    const auto bp6 = bipyramid(6);
    CHECK(zigzags_through_face(Face("a", "1", "2"), bp6).size() == 2);

    CHECK_THROWS_AS(zigzags_through_face(Face("1", "2", "9"), tet), DomainError);
}

TEST_CASE("occurrence words and the interleaving patterns") {
    SUBCASE("an adjacent identity-type pair interleaves in blocks") {
        // Example-4-style sum: BP_6 # BP_6 along a,1,2 -> 2,a,1
        const auto bp6 = bipyramid(6);
        const Face s("a", "1", "2");
        SpecialMap chosen;
        for (const auto& m : special_maps(s, s)) {
            if (m.image_of("a") == "2" && m.image_of("1") == "a") chosen = m;
        }
        const auto sum = connected_sum(bp6, bp6, chosen).sum;
        const auto reps = enumerate_zigzags(sum);
        REQUIRE(reps.size() == 1);
        const Face f("a", "2", "3"), f2("a", "3", "4");  // both of type M1, adjacent
        const auto w = shadow_occurrence_word(reps[0], f, f2, sum);
        CHECK(w.letters.size() == 6);
        CHECK(matches_interleaving(w, InterleavingPattern::blocked));
        CHECK(!matches_interleaving(w, InterleavingPattern::alternating));
    }
    SUBCASE("an adjacent rotation-type pair alternates") {
        const auto sum = example3_sum();
        const auto reps = enumerate_zigzags(sum);
        REQUIRE(reps.size() == 1);
        const Face f("b", "1", "2"), f2("b_2", "1", "2");  // both of type M2, adjacent
        const auto w = shadow_occurrence_word(reps[0], f, f2, sum);
        CHECK(w.letters.size() == 6);
        CHECK(matches_interleaving(w, InterleavingPattern::alternating));
        CHECK(!matches_interleaving(w, InterleavingPattern::blocked));
    }
    SUBCASE("a face outside the shadow leaves a one-letter alphabet") {
        const auto oct = platonic(PlatonicKind::octahedron);
        const auto reps = enumerate_zigzags(oct);
        const auto z = reps[0];
        std::set<int> in_shadow(shadow_face_ids(z).begin(), shadow_face_ids(z).end());
        int inside = -1, outside = -1;
        for (int fid = 0; fid < oct.face_count(); ++fid) {
            if (in_shadow.count(fid))
                inside = inside < 0 ? fid : inside;
            else
                outside = outside < 0 ? fid : outside;
        }
        REQUIRE(inside >= 0);
        REQUIRE(outside >= 0);
        const auto w = shadow_occurrence_word(z, oct.face_at(inside), oct.face_at(outside), oct);
        CHECK(!w.letters.empty());
        CHECK(w.letters.size() <= 3);
        for (int letter : w.letters) CHECK(letter == 0);
        CHECK(!matches_interleaving(w, InterleavingPattern::blocked));
    }
    SUBCASE("argument validation") {
        const auto tet = platonic(PlatonicKind::tetrahedron);
        const auto z = enumerate_zigzags(tet)[0];
        CHECK_THROWS_AS(shadow_occurrence_word(z, Face("1", "2", "3"), Face("1", "2", "3"), tet),
                        DomainError);
        CHECK_THROWS_AS(shadow_occurrence_word(z, Face("1", "2", "3"), Face("1", "2", "9"), tet),
                        DomainError);
    }
}

TEST_CASE("edge-simple detection") {
    const auto tet = platonic(PlatonicKind::tetrahedron);
    for (const auto& z : enumerate_zigzags(tet)) CHECK(is_edge_simple(z, tet));
    const auto bp3 = bipyramid(3);
    for (const auto& z : enumerate_zigzags(bp3)) CHECK(!is_edge_simple(z, bp3));
}
