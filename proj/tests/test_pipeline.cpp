#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "dimerkit/pipeline.hpp"

using namespace dimerkit;

namespace {
const IMat kB2 = {{0, 1, 1, -2}, {-1, 0, 2, -1}};
}

TEST_CASE("analyze is deterministic for a fixed seed") {
    PipelineConfig cfg;
    cfg.B = kB2;
    cfg.seed = 7;
    std::string a = cmd_analyze(cfg).dump();
    std::string b = cmd_analyze(cfg).dump();
    CHECK(a == b);
}

TEST_CASE("input parsing") {
    CHECK(parse_int_matrix("[[0,1,1,-2],[-1,0,2,-1]]") == kB2);
    CHECK(parse_int_matrix("{\"B\": [[1,2],[3,4]]}") == IMat{{1, 2}, {3, 4}});
    CHECK_THROWS(parse_int_matrix("not json"));
    auto pts = parse_point_list("[[0,0],[1,0],[1,1],[0,1]]");
    CHECK(pts.size() == 4);
    CHECK_THROWS(parse_point_list("[[0,0,0]]"));

    PipelineConfig two;
    two.B = kB2;
    two.C = IMat{{0, 1}, {-1, 0}};
    CHECK_THROWS(lattice_from_config(two));
    CHECK_THROWS(lattice_from_config(PipelineConfig{}));
    CHECK_THROWS(weights_from_name("bogus"));
}

TEST_CASE("polygon input runs the same pipeline") {
    // unit square: the smallest quadrangle, no interior point
    PipelineConfig cfg;
    cfg.polygon = std::vector<std::array<Int, 2>>{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    auto j = cmd_analyze(cfg);
    CHECK(j["gkz"]["vol_A"] == 1);
    CHECK(j["dessin"]["genus"] == 0);
    CHECK(j["kasteleyn"]["newton_equals_secondary"] == true);

    // the diamond of the printed F0 model II has one interior point, genus 1
    PipelineConfig cfg2;
    cfg2.polygon = std::vector<std::array<Int, 2>>{{0, 0}, {1, -1}, {2, 0}, {1, 1}};
    auto j2 = cmd_analyze(cfg2);
    CHECK(j2["gkz"]["vol_A"] == 2);
    CHECK(j2["dessin"]["genus"] == 1);
}

TEST_CASE("plucker matrix input") {
    auto L = validate_lattice(kB2);
    PipelineConfig cfg;
    cfg.C = plucker_form(L).C;
    auto j = cmd_analyze(cfg);
    CHECK(j["lattice"]["plucker"] == nlohmann::json(plucker_form(L).C));
}

TEST_CASE("ea fixture loader multiplies the lines") {
    const char* path = "ea_fixture_test.txt";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "1*u^[1,0] + 1*u^[0,1]\n";
        out << "2*u^[1,0]\n";
    }
    LaurentPoly p = load_ea_fixture(path, 2);
    LaurentPoly expect(2);
    expect.add_term({2, 0}, 2);
    expect.add_term({1, 1}, 2);
    CHECK(poly_equal(p, expect));
    std::remove(path);
    CHECK_THROWS(load_ea_fixture("missing_file.txt", 2));
}

TEST_CASE("svg emitters produce svg") {
    auto L = validate_lattice(kB2);
    std::string fan = svg_fan(L, secondary_fan(L));
    CHECK(fan.find("<svg") != std::string::npos);
    std::string poly = svg_polygon(delta_polygon(L));
    CHECK(poly.find("<svg") != std::string::npos);
    auto perf = find_perfect(enumerate_surfaces(L, 1).surfaces);
    REQUIRE(!perf.empty());
    std::string til = svg_tiling(perf[0], true);
    CHECK(til.find("<svg") != std::string::npos);
    CHECK(til.find("stroke-dasharray") != std::string::npos); // period frame
}

TEST_CASE("first step only keeps the initial surface") {
    PipelineConfig cfg;
    cfg.B = kB2;
    cfg.first_step_only = true;
    auto j = cmd_analyze(cfg);
    CHECK(j["surfaces"]["count"] == 1);
}

TEST_CASE("dessin classes are deterministic and indexable") {
    auto L = validate_lattice(IMat{{-1, -1, 0, 1, 1, 0}, {1, -1, -1, 0, 0, 1}});
    auto dc = dessin_classes(enumerate_surfaces(L, 1).surfaces);
    CHECK(dc.representatives.size() == 3);
    int total = 0;
    for (int s : dc.class_size) total += s;
    CHECK((size_t)total == dc.perfect.size());
    PipelineConfig cfg;
    cfg.B = IMat{{-1, -1, 0, 1, 1, 0}, {1, -1, -1, 0, 0, 1}};
    cfg.dessin_index = 99;
    CHECK_THROWS(cmd_analyze(cfg));
}
