// Command-line front end: lattice in, fan / surfaces / dessin / Kasteleyn
// determinant / A-determinant checks out.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "dimerkit/pipeline.hpp"

using namespace dimerkit;
using nlohmann::json;

namespace {

// exit codes: 0 ok, 2 validation failure, 3 conjecture mismatch, 4 cap exceeded
constexpr int kExitValidation = 2;
constexpr int kExitConjecture = 3;
constexpr int kExitCap = 4;

struct CommonArgs {
    std::string B, C, polygon;
    uint64_t seed = 1;
    size_t cap = 100000;
    std::string weights = "critical";
    int dessin = 0;
    bool first_step_only = false;
    std::string ea_fixture;
    std::string svg;
};

void add_input_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--B", args.B, "2xN integer matrix as JSON, e.g. [[0,1,1,-2],[-1,0,2,-1]]");
    cmd->add_option("--C", args.C, "NxN antisymmetric Plucker matrix as JSON");
    cmd->add_option("--polygon", args.polygon,
                    "counterclockwise boundary lattice points as JSON, e.g. [[0,0],[1,0],[1,1],[0,1]]");
}

PipelineConfig make_config(const CommonArgs& args) {
    PipelineConfig cfg;
    if (!args.B.empty()) cfg.B = parse_int_matrix(args.B);
    if (!args.C.empty()) cfg.C = parse_int_matrix(args.C);
    if (!args.polygon.empty()) cfg.polygon = parse_point_list(args.polygon);
    cfg.seed = args.seed;
    cfg.cap = args.cap;
    cfg.weights = args.weights;
    cfg.dessin_index = args.dessin;
    cfg.first_step_only = args.first_step_only;
    if (!args.ea_fixture.empty()) cfg.ea_fixture_path = args.ea_fixture;
    return cfg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dimerkit: rank-2 lattices, secondary fans, dimer models and Kasteleyn determinants"};
    app.require_subcommand(1);
    CommonArgs args;

    auto* analyze = app.add_subcommand("analyze", "run the whole pipeline, emit one JSON report");
    add_input_flags(analyze, args);
    analyze->add_option("--seed", args.seed, "seed for the grid offset");
    analyze->add_option("--cap", args.cap, "surface enumeration cap");
    analyze->add_option("--weights", args.weights, "unit | critical | symbolic");
    analyze->add_option("--dessin", args.dessin, "dessin class index");
    analyze->add_option("--ea-fixture", args.ea_fixture, "principal A-determinant fixture file");
    analyze->add_flag("--first-step-only", args.first_step_only,
                      "only the initial surface, no elementary transformations");
    analyze->add_option("--svg", args.svg, "also write a rhombus tiling SVG to this path");

    auto* fan = app.add_subcommand("fan", "secondary fan, secondary polygon and Delta");
    add_input_flags(fan, args);
    fan->add_option("--svg", args.svg, "write a fan SVG to this path");

    auto* gkz = app.add_subcommand("gkz", "A-sequence, vol_A, relations, unimodularity");
    add_input_flags(gkz, args);

    auto* surface = app.add_subcommand("surface", "enumerate L-periodic square-tiled surfaces");
    add_input_flags(surface, args);
    surface->add_option("--seed", args.seed, "seed for the grid offset");
    surface->add_option("--cap", args.cap, "surface enumeration cap");
    surface->add_flag("--first-step-only", args.first_step_only,
                      "only the initial surface, no elementary transformations");
    surface->add_option("--svg", args.svg, "write a rhombus tiling SVG to this path");

    auto* dessin = app.add_subcommand("dessin", "quadruple list, constellation, superpotential");
    add_input_flags(dessin, args);
    dessin->add_option("--seed", args.seed, "seed for the grid offset");
    dessin->add_option("--cap", args.cap, "surface enumeration cap");
    dessin->add_option("--dessin", args.dessin, "dessin class index");

    auto* kasteleyn = app.add_subcommand("kasteleyn", "bi-adjacency matrix and its determinant");
    add_input_flags(kasteleyn, args);
    kasteleyn->add_option("--seed", args.seed, "seed for the grid offset");
    kasteleyn->add_option("--cap", args.cap, "surface enumeration cap");
    kasteleyn->add_option("--weights", args.weights, "unit | critical | symbolic");
    kasteleyn->add_option("--dessin", args.dessin, "dessin class index");

    auto* adet = app.add_subcommand("adet", "critical-weight conjecture check");
    add_input_flags(adet, args);
    adet->add_option("--seed", args.seed, "seed for the grid offset");
    adet->add_option("--cap", args.cap, "surface enumeration cap");
    adet->add_option("--dessin", args.dessin, "dessin class index");
    adet->add_option("--ea-fixture", args.ea_fixture, "principal A-determinant fixture file");

    auto* svg = app.add_subcommand("svg", "SVG output: tiling (default), fan or Delta polygon");
    add_input_flags(svg, args);
    svg->add_option("--seed", args.seed, "seed for the grid offset");
    svg->add_option("--cap", args.cap, "surface enumeration cap");
    svg->add_option("--dessin", args.dessin, "dessin class index");
    std::string out_path = "out.svg";
    bool with_zigzag = false, fan_pic = false, polygon_pic = false;
    svg->add_option("--out", out_path, "output path");
    svg->add_flag("--zigzag", with_zigzag, "overlay the zigzag loops");
    svg->add_flag("--fan", fan_pic, "draw the secondary fan instead of the tiling");
    svg->add_flag("--delta", polygon_pic, "draw the Delta polygon instead of the tiling");

    CLI11_PARSE(app, argc, argv);

    try {
        PipelineConfig cfg = make_config(args);
        if (analyze->parsed()) {
            json report = cmd_analyze(cfg);
            if (!args.svg.empty()) {
                LatticeEmbedding L = lattice_from_config(cfg);
                auto dc = dessin_classes(enumerate_surfaces(L, cfg.seed, cfg.cap).surfaces);
                if (!dc.perfect.empty())
                    write_file(args.svg,
                               svg_tiling(dc.perfect[dc.surface_index.at(0)], true));
            }
            emit(report);
            return 0;
        }
        LatticeEmbedding L = lattice_from_config(cfg);
        if (fan->parsed()) {
            if (!args.svg.empty()) write_file(args.svg, svg_fan(L, secondary_fan(L)));
            emit(fan_report(L));
            return 0;
        }
        if (gkz->parsed()) {
            json j = gkz_report(L);
            j["plucker"] = plucker_form(L).C;
            emit(j);
            return 0;
        }
        auto need_surfaces = [&]() {
            auto ctx = std::make_shared<SurfaceContext>(L);
            GridOffset off = random_offset(L, cfg.seed);
            std::vector<DiscreteSurface> all;
            if (cfg.first_step_only) all.push_back(initial_surface(ctx, off));
            else all = enumerate_surfaces(ctx, off, cfg.cap).surfaces;
            return all;
        };
        if (surface->parsed()) {
            auto all = need_surfaces();
            DessinClasses dc = dessin_classes(all);
            json j;
            j["count"] = all.size();
            j["perfect"] = dc.perfect.size();
            j["dessin_classes"] = dc.representatives.size();
            if (!args.svg.empty() && !dc.perfect.empty())
                write_file(args.svg, svg_tiling(dc.perfect[0], false));
            else if (!args.svg.empty())
                write_file(args.svg, svg_tiling(all.at(0), false));
            emit(j);
            return 0;
        }
        auto pick_dessin = [&](const DessinClasses& dc) -> const DessinData& {
            if (dc.representatives.empty())
                throw std::runtime_error("no perfect surface found");
            if (cfg.dessin_index < 0 || cfg.dessin_index >= (int)dc.representatives.size())
                throw std::invalid_argument("dessin index out of range");
            return dc.representatives[cfg.dessin_index];
        };
        if (dessin->parsed()) {
            DessinClasses dc = dessin_classes(need_surfaces());
            emit(dessin_report(pick_dessin(dc)));
            return 0;
        }
        if (kasteleyn->parsed()) {
            DessinClasses dc = dessin_classes(need_surfaces());
            emit(kasteleyn_report(L, pick_dessin(dc), weights_from_name(cfg.weights)));
            return 0;
        }
        if (adet->parsed()) {
            DessinClasses dc = dessin_classes(need_surfaces());
            std::optional<LaurentPoly> ea;
            if (cfg.ea_fixture_path) ea = load_ea_fixture(*cfg.ea_fixture_path, L.N);
            json j = adet_report(L, pick_dessin(dc), ea);
            emit(j);
            if (j["status"] == "mismatch") return kExitConjecture;
            return 0;
        }
        if (svg->parsed()) {
            if (fan_pic) {
                write_file(out_path, svg_fan(L, secondary_fan(L)));
            } else if (polygon_pic) {
                write_file(out_path, svg_polygon(delta_polygon(L)));
            } else {
                DessinClasses dc = dessin_classes(need_surfaces());
                if (dc.representatives.empty())
                    throw std::runtime_error("no perfect surface found");
                if (cfg.dessin_index < 0 || cfg.dessin_index >= (int)dc.surface_index.size())
                    throw std::invalid_argument("dessin index out of range");
                write_file(out_path,
                           svg_tiling(dc.perfect[dc.surface_index[cfg.dessin_index]],
                                      with_zigzag));
            }
            std::cout << "{\"written\": \"" << out_path << "\"}" << std::endl;
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitValidation;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitValidation;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}
