#pragma once

#include <json.hpp>

#include "dimerkit/adet.hpp"
#include "dimerkit/dessin.hpp"
#include "dimerkit/gkz.hpp"
#include "dimerkit/kasteleyn.hpp"
#include "dimerkit/secondary.hpp"
#include "dimerkit/surface.hpp"
#include "dimerkit/svg.hpp"

namespace dimerkit {

struct PipelineConfig {
    std::optional<IMat> B;
    std::optional<IMat> C;
    std::optional<std::vector<std::array<Int, 2>>> polygon;
    uint64_t seed = 1;
    size_t cap = 100000;
    std::string weights = "critical"; // unit | critical | symbolic
    int dessin_index = 0;
    bool first_step_only = false;
    std::optional<std::string> ea_fixture_path;
};

// Exactly one of B / C / polygon must be present.
LatticeEmbedding lattice_from_config(const PipelineConfig& cfg);

IMat parse_int_matrix(const std::string& text);
std::vector<std::array<Int, 2>> parse_point_list(const std::string& text);

// E_A fixture file: one polynomial per non-empty line in the poly_format
// text syntax; the fixture is the product of the lines.
LaurentPoly load_ea_fixture(const std::string& path, int vars);

WeightSpec weights_from_name(const std::string& name);

// Perfect dessins grouped by isomorphism class, deterministic order.
struct DessinClasses {
    std::vector<DessinData> representatives;
    std::vector<int> surface_index;  // representative surface per class
    std::vector<int> class_size;
    std::vector<DiscreteSurface> perfect; // all perfect surfaces
};
DessinClasses dessin_classes(const std::vector<DiscreteSurface>& enumerated);

nlohmann::json lattice_report(const LatticeEmbedding& L);
nlohmann::json fan_report(const LatticeEmbedding& L);
nlohmann::json gkz_report(const LatticeEmbedding& L);
nlohmann::json dessin_report(const DessinData& M);
nlohmann::json kasteleyn_report(const LatticeEmbedding& L, const DessinData& M,
                                const WeightSpec& w);
nlohmann::json adet_report(const LatticeEmbedding& L, const DessinData& M,
                           const std::optional<LaurentPoly>& ea_fixture);

// The whole pipeline: lattice -> fan -> gkz -> surfaces -> dessin ->
// Kasteleyn -> conjecture, as one JSON report.
nlohmann::json cmd_analyze(const PipelineConfig& cfg);

} // namespace dimerkit
