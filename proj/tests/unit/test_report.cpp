#include <doctest.h>

#include "zmono/generators.hpp"
#include "zmono/report.hpp"

using namespace zmono;

TEST_CASE("analyze ties the pieces together consistently") {
    const auto t = bipyramid(3);
    const auto r = analyze(t);
    CHECK(r.vertices == 5);
    CHECK(r.faces == 6);
    CHECK(r.euler == 2);
    CHECK(r.z_knotted);
    CHECK(r.zigzag_pairs.size() == 1);
    CHECK(r.type_histogram == std::array<int, 7>{0, 0, 6, 0, 0, 0, 0});
    CHECK(r.g1.forest);
    CHECK(r.g2.forest);
    CHECK(r.g1_graph.node_count() == 0);
}

TEST_CASE("json report carries the documented schema") {
    const auto t = bipyramid(3);
    const auto j = report_to_json(analyze(t), t);
    CHECK(j.at("schema") == "1");
    CHECK(j.at("surface").at("vertices") == 5);
    CHECK(j.at("surface").at("orientability") == "orientable");
    CHECK(j.at("zigzags").at("pair_count") == 1);
    CHECK(j.at("zigzags").at("lengths")[0] == 18);
    CHECK(j.at("monodromy").at("histogram").at("M3") == 6);
    CHECK(j.at("monodromy").at("faces").size() == 6);
    CHECK(j.at("z_knotted") == true);
    CHECK(j.at("g1").at("verdict") == "forest");
    CHECK(j.at("g2").at("components").empty());
}

TEST_CASE("reports are byte-stable across runs") {
    const auto t = torus_k7();
    const auto a = report_to_json(analyze(t), t, true).dump(2);
    const auto b = report_to_json(analyze(t), t, true).dump(2);
    CHECK(a == b);
    CHECK(report_to_text(analyze(t), t) == report_to_text(analyze(t), t));
}

TEST_CASE("text report mentions the essentials") {
    const auto t = platonic(PlatonicKind::tetrahedron);
    const auto text = report_to_text(analyze(t), t);
    CHECK(text.find("V=4 E=6 F=4 chi=2 orientable") != std::string::npos);
    CHECK(text.find("zigzag pairs: 3") != std::string::npos);
    CHECK(text.find("z-knotted: no") != std::string::npos);
    CHECK(text.find("M5=4") != std::string::npos);
}
