#include <doctest.h>

#include "zmono/generators.hpp"
#include "zmono/trig_io.hpp"

using namespace zmono;

TEST_CASE("trig parsing handles comments and blank lines") {
    const std::string text =
        "# a tetrahedron\n"
        "1 2 3\n"
        "\n"
        "1 2 4   # on edge 12\n"
        "1 3 4\n"
        "2 3 4\n";
    const auto t = parse_trig(text);
    CHECK(t.face_count() == 4);
    CHECK(euler_characteristic(t) == 2);
}

TEST_CASE("trig parse errors") {
    CHECK_THROWS_AS(parse_trig("1 2\n"), DomainError);
    CHECK_THROWS_AS(parse_trig("1 2 3 4\n"), DomainError);
    CHECK_THROWS_AS(parse_trig("# nothing here\n"), DomainError);
}

TEST_CASE("writer emits ascending canonical faces and round-trips") {
    const auto t = bipyramid(4);
    const std::string text = to_trig(t);
    CHECK(text == "1 2 a\n1 2 b\n1 4 a\n1 4 b\n2 3 a\n2 3 b\n3 4 a\n3 4 b\n");
    const auto back = parse_trig(text);
    CHECK(back.face_list() == t.face_list());
    CHECK(to_trig(back) == text);
}
