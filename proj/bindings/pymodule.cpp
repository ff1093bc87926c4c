#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dimerkit/pipeline.hpp"

namespace py = pybind11;
using namespace dimerkit;

namespace {

PipelineConfig config_from_kwargs(std::optional<IMat> B, std::optional<IMat> C,
                                  std::optional<std::vector<std::array<Int, 2>>> polygon,
                                  uint64_t seed, size_t cap, const std::string& weights,
                                  int dessin, bool first_step_only,
                                  std::optional<std::string> ea_fixture) {
    PipelineConfig cfg;
    cfg.B = std::move(B);
    cfg.C = std::move(C);
    cfg.polygon = std::move(polygon);
    cfg.seed = seed;
    cfg.cap = cap;
    cfg.weights = weights;
    cfg.dessin_index = dessin;
    cfg.first_step_only = first_step_only;
    cfg.ea_fixture_path = std::move(ea_fixture);
    return cfg;
}

LatticeEmbedding lattice_of(const IMat& B) { return validate_lattice(B); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "rank-2 lattices, secondary fans, dimer models, Kasteleyn determinants";

    m.def(
        "analyze_json",
        [](std::optional<IMat> B, std::optional<IMat> C,
           std::optional<std::vector<std::array<Int, 2>>> polygon, uint64_t seed,
           size_t cap, const std::string& weights, int dessin, bool first_step_only,
           std::optional<std::string> ea_fixture) {
            return cmd_analyze(config_from_kwargs(std::move(B), std::move(C),
                                                  std::move(polygon), seed, cap, weights,
                                                  dessin, first_step_only,
                                                  std::move(ea_fixture)))
                .dump();
        },
        py::arg("B") = std::nullopt, py::arg("C") = std::nullopt,
        py::arg("polygon") = std::nullopt, py::arg("seed") = 1,
        py::arg("cap") = 100000, py::arg("weights") = "critical", py::arg("dessin") = 0,
        py::arg("first_step_only") = false, py::arg("ea_fixture") = std::nullopt,
        "Run the full pipeline and return the report as a JSON string.");

    m.def("plucker_form",
          [](const IMat& B) { return plucker_form(lattice_of(B)).C; });
    m.def("vol_A", [](const IMat& B) { return vol_A(lattice_of(B)); });
    m.def("unimodular_exists",
          [](const IMat& B) { return unimodular_exists(lattice_of(B)); });
    m.def("secondary_fan_json",
          [](const IMat& B) { return fan_report(lattice_of(B)).dump(); });
    m.def("gkz_json", [](const IMat& B) { return gkz_report(lattice_of(B)).dump(); });
    m.def(
        "kasteleyn_det",
        [](const IMat& B, const std::string& weights, uint64_t seed, int dessin) {
            LatticeEmbedding L = lattice_of(B);
            auto all = enumerate_surfaces(L, seed).surfaces;
            DessinClasses dc = dessin_classes(all);
            if (dc.representatives.empty())
                throw std::runtime_error("no perfect surface found");
            return poly_format(kasteleyn_det(dc.representatives.at(dessin),
                                             weights_from_name(weights)));
        },
        py::arg("B"), py::arg("weights") = "critical", py::arg("seed") = 1,
        py::arg("dessin") = 0,
        "Text form of det K for one dessin class of the lattice.");
    m.def(
        "superpotential",
        [](const IMat& B, uint64_t seed, int dessin) {
            LatticeEmbedding L = lattice_of(B);
            auto all = enumerate_surfaces(L, seed).surfaces;
            DessinClasses dc = dessin_classes(all);
            if (dc.representatives.empty())
                throw std::runtime_error("no perfect surface found");
            Constellation c = constellation_from_list(dc.representatives.at(dessin));
            return format_superpotential(superpotential(c));
        },
        py::arg("B"), py::arg("seed") = 1, py::arg("dessin") = 0);
    m.def(
        "factor_antisymmetric",
        [](const IMat& C) { return factor_antisymmetric(C).B; },
        "B with B^t J B = C for a rank-2 antisymmetric C (default gcd choice).");
    m.def(
        "lattice_from_polygon",
        [](const std::vector<std::array<Int, 2>>& pts) {
            return lattice_from_polygon(pts).B;
        },
        "Embedding whose Delta polygon reproduces the given boundary points.");
}
