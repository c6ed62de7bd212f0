#include <doctest.h>

#include "zmono/generators.hpp"

using namespace zmono;

TEST_CASE("bipyramid family") {
    for (int n = 3; n <= 13; ++n) {
        const auto t = bipyramid(n);
        CHECK(t.vertex_count() == n + 2);
        CHECK(t.edge_count() == 3 * n);
        CHECK(t.face_count() == 2 * n);
        CHECK(euler_characteristic(t) == 2);
        CHECK(t.orientability() == Orientability::orientable);
    }
    CHECK_THROWS_AS(bipyramid(2), DomainError);
}

TEST_CASE("platonic triangulations") {
    const auto tet = platonic(PlatonicKind::tetrahedron);
    CHECK(tet.vertex_count() == 4);
    CHECK(tet.edge_count() == 6);
    CHECK(tet.face_count() == 4);
    const auto oct = platonic(PlatonicKind::octahedron);
    CHECK(oct.vertex_count() == 6);
    CHECK(oct.edge_count() == 12);
    CHECK(oct.face_count() == 8);
    const auto ico = platonic(PlatonicKind::icosahedron);
    CHECK(ico.vertex_count() == 12);
    CHECK(ico.edge_count() == 30);
    CHECK(ico.face_count() == 20);
    for (const auto& t : {tet, oct, ico}) CHECK(euler_characteristic(t) == 2);
}

TEST_CASE("projective plane on K6") {
    const auto t = projective_plane_6();
    CHECK(t.vertex_count() == 6);
    CHECK(t.edge_count() == 15);
    CHECK(t.face_count() == 10);
    CHECK(euler_characteristic(t) == 1);
    CHECK(t.orientability() == Orientability::non_orientable);
}

TEST_CASE("7-vertex torus") {
    const auto t = torus_k7();
    CHECK(t.vertex_count() == 7);
    CHECK(t.edge_count() == 21);
    CHECK(t.face_count() == 14);
    CHECK(euler_characteristic(t) == 0);
    CHECK(t.orientability() == Orientability::orientable);
}

TEST_CASE("face subdivision") {
    const auto t = platonic(PlatonicKind::tetrahedron);
    const auto s = subdivide_face(t, Face("1", "2", "3"), "x");
    CHECK(s.face_count() == 6);
    CHECK(s.vertex_count() == 5);
    CHECK(euler_characteristic(s) == 2);
    CHECK(s.orientability() == Orientability::orientable);
    // twice over is still fine
    const auto s2 = subdivide_face(s, Face("1", "2", "x"), "y");
    CHECK(euler_characteristic(s2) == 2);

    CHECK_THROWS_AS(subdivide_face(t, Face("1", "2", "9"), "x"), DomainError);
    try {
        (void)subdivide_face(t, Face("1", "2", "3"), "4");
        FAIL("should throw");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::LabelInUse);
    }
}

TEST_CASE("edge flips") {
    SUBCASE("every tetrahedron flip is illegal (K4 skeleton is complete)") {
        const auto t = platonic(PlatonicKind::tetrahedron);
        for (const auto& e : t.edges()) {
            try {
                (void)flip_edge(t, e);
                FAIL("should throw");
            } catch (const DomainError& err) {
                CHECK(err.kind() == ErrorKind::IllegalFlip);
            }
        }
    }
    SUBCASE("BP_3 edge {1,2} flips to {a,b}") {
        const auto t = bipyramid(3);
        const auto flipped = flip_edge(t, Edge("1", "2"));
        CHECK(flipped.has_edge(Edge("a", "b")));
        CHECK(!flipped.has_edge(Edge("1", "2")));
        CHECK(euler_characteristic(flipped) == 2);
        CHECK(flipped.orientability() == Orientability::orientable);
    }
    SUBCASE("every octahedron flip is legal") {
        const auto t = platonic(PlatonicKind::octahedron);
        for (const auto& e : t.edges()) {
            const auto flipped = flip_edge(t, e);
            CHECK(euler_characteristic(flipped) == 2);
        }
    }
    SUBCASE("missing edge") {
        CHECK_THROWS_AS(flip_edge(bipyramid(3), Edge("a", "b")), DomainError);
    }
}

TEST_CASE("seeded random triangulations are deterministic and conservative") {
    const BaseDescriptor base{BaseDescriptor::Kind::tetrahedron, 0};
    const auto zero = random_triangulation(base, 0, 99);
    CHECK(zero.triangulation.face_list() == platonic(PlatonicKind::tetrahedron).face_list());

    const auto a = random_triangulation(base, 50, 1);
    const auto b = random_triangulation(base, 50, 1);
    CHECK(a.triangulation.face_list() == b.triangulation.face_list());
    const auto c = random_triangulation(base, 50, 2);
    CHECK(a.triangulation.face_list() != c.triangulation.face_list());

    // moves preserve the Euler characteristic and orientability
    const auto rp = random_triangulation(BaseDescriptor::parse("rp2"), 40, 7);
    CHECK(euler_characteristic(rp.triangulation) == 1);
    CHECK(rp.triangulation.orientability() == Orientability::non_orientable);
    const auto to = random_triangulation(BaseDescriptor::parse("torus-k7"), 40, 7);
    CHECK(euler_characteristic(to.triangulation) == 0);
    CHECK(to.triangulation.orientability() == Orientability::orientable);
}

TEST_CASE("mutation logs replay exactly") {
    const auto r = random_triangulation(BaseDescriptor::parse("bipyramid:5"), 30, 123);
    CHECK(replay(r.log).face_list() == r.triangulation.face_list());
    CHECK(r.log.base == "bipyramid:5");
    CHECK(r.log.seed == 123);
    // the log records rejected flips too; only accepted steps count
    int accepted = 0;
    for (const auto& s : r.log.steps) accepted += s.accepted ? 1 : 0;
    CHECK(accepted == 30);
    CHECK(r.log.to_text().rfind("base bipyramid:5", 0) == 0);
}

TEST_CASE("base descriptor parsing") {
    CHECK(BaseDescriptor::parse("tetrahedron").name() == "tetrahedron");
    CHECK(BaseDescriptor::parse("bp6").name() == "bipyramid:6");
    CHECK(BaseDescriptor::parse("bipyramid:4").name() == "bipyramid:4");
    CHECK(BaseDescriptor::parse("rp2").name() == "rp2");
    CHECK(BaseDescriptor::parse("torus-k7").name() == "torus-k7");
    CHECK_THROWS_AS(BaseDescriptor::parse("cube"), DomainError);
}
