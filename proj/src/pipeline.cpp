#include "dimerkit/pipeline.hpp"

#include <fstream>
#include <sstream>

namespace dimerkit {

using nlohmann::json;

IMat parse_int_matrix(const std::string& text) {
    json j = json::parse(text);
    if (j.is_object()) {
        if (j.contains("B")) j = j["B"];
        else if (j.contains("C")) j = j["C"];
    }
    IMat m;
    for (const auto& row : j) {
        IVec r;
        for (const auto& v : row) r.push_back(v.get<Int>());
        m.push_back(std::move(r));
    }
    return m;
}

std::vector<std::array<Int, 2>> parse_point_list(const std::string& text) {
    json j = json::parse(text);
    std::vector<std::array<Int, 2>> pts;
    for (const auto& p : j) {
        if (p.size() != 2) throw std::invalid_argument("polygon points must be pairs");
        pts.push_back({p[0].get<Int>(), p[1].get<Int>()});
    }
    return pts;
}

LatticeEmbedding lattice_from_config(const PipelineConfig& cfg) {
    int sources = (cfg.B ? 1 : 0) + (cfg.C ? 1 : 0) + (cfg.polygon ? 1 : 0);
    if (sources != 1)
        throw std::invalid_argument("exactly one of B, C, polygon must be given");
    if (cfg.B) return validate_lattice(*cfg.B);
    if (cfg.C) return factor_antisymmetric(*cfg.C);
    return lattice_from_polygon(*cfg.polygon);
}

WeightSpec weights_from_name(const std::string& name) {
    if (name == "unit") return WeightSpec::unit();
    if (name == "critical") return WeightSpec::critical();
    if (name == "symbolic") return WeightSpec::symbolic();
    throw std::invalid_argument("unknown weight spec: " + name);
}

LaurentPoly load_ea_fixture(const std::string& path, int vars) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open E_A fixture: " + path);
    LaurentPoly prod = LaurentPoly::constant(vars, 1);
    std::string line;
    bool any = false;
    while (std::getline(in, line)) {
        std::string trimmed;
        for (char c : line)
            if (!isspace((unsigned char)c) || !trimmed.empty()) trimmed.push_back(c);
        while (!trimmed.empty() && isspace((unsigned char)trimmed.back())) trimmed.pop_back();
        if (trimmed.empty() || trimmed[0] == '#') continue;
        prod = poly_mul(prod, poly_parse(trimmed, vars));
        any = true;
    }
    if (!any) throw std::invalid_argument("E_A fixture is empty: " + path);
    return prod;
}

DessinClasses dessin_classes(const std::vector<DiscreteSurface>& enumerated) {
    DessinClasses dc;
    dc.perfect = find_perfect(enumerated);
    std::map<std::string, int> by_canon;
    for (size_t k = 0; k < dc.perfect.size(); ++k) {
        DessinData M = quadruple_list(dc.perfect[k]);
        std::string canon = canonical_dessin(M);
        auto it = by_canon.find(canon);
        if (it == by_canon.end()) {
            by_canon[canon] = (int)dc.representatives.size();
            dc.representatives.push_back(std::move(M));
            dc.surface_index.push_back((int)k);
            dc.class_size.push_back(1);
        } else {
            dc.class_size[it->second] += 1;
        }
    }
    // deterministic order: sort classes by canonical string
    std::vector<int> order;
    for (auto& [canon, idx] : by_canon) order.push_back(idx);
    DessinClasses out;
    out.perfect = std::move(dc.perfect);
    for (int idx : order) {
        out.representatives.push_back(dc.representatives[idx]);
        out.surface_index.push_back(dc.surface_index[idx]);
        out.class_size.push_back(dc.class_size[idx]);
    }
    return out;
}

json lattice_report(const LatticeEmbedding& L) {
    json j;
    j["N"] = L.N;
    j["B"] = L.B;
    j["plucker"] = plucker_form(L).C;
    CosetCalculator coset(L);
    j["torsion"] = coset.torsion_factors();
    j["free_rank"] = coset.free_rank();
    return j;
}

json fan_report(const LatticeEmbedding& L) {
    json j;
    SecondaryFan fan = secondary_fan(L);
    json cones = json::array();
    for (const auto& c : fan.cones) {
        json jc;
        jc["rays"] = json::array({c.ray_right + 1, c.ray_left + 1});
        json pairs = json::array();
        for (auto [a, b] : c.pairs) pairs.push_back(json::array({a + 1, b + 1}));
        jc["L_C"] = pairs;
        jc["psi"] = c.psi;
        cones.push_back(jc);
    }
    j["cones"] = cones;
    SecondaryPolygon sp = psi_vertices(L, fan);
    j["secondary_polygon_vertices"] = sp.vertices_zn;
    DeltaPolygon d = delta_polygon(L);
    json delta;
    json order = json::array();
    for (int i : d.order) order.push_back(i + 1);
    delta["order"] = order;
    delta["points"] = d.points;
    AreaInterior ai = area_and_interior(L, fan.cones.at(0));
    delta["twice_area"] = ai.twice_area;
    delta["interior_points"] = ai.interior;
    j["delta"] = delta;
    return j;
}

json gkz_report(const LatticeEmbedding& L) {
    json j;
    {
        Quiver q = quiver_from_plucker(plucker_form(L));
        json arrows = json::array();
        for (auto [s, t] : q.arrows) arrows.push_back(json::array({s + 1, t + 1}));
        j["quiver_arrows"] = arrows;
    }
    ASequence A = a_sequence(L);
    j["A"] = A.a;
    j["torsion"] = A.torsion;
    j["torsion_labels"] = A.torsion_labels;
    j["vol_A"] = vol_A(L);
    j["unimodular"] = unimodular_exists(L);
    j["minimal_relations"] = minimal_relations(L);
    try {
        j["f_A"] = poly_format(f_A_symbolic(L));
    } catch (const std::invalid_argument&) {
        j["f_A"] = nullptr; // torsion
    }
    return j;
}

json dessin_report(const DessinData& M) {
    json j;
    json quads = json::array();
    for (const auto& q : M.quads)
        quads.push_back(json{{"b", q.b + 1}, {"w", q.w + 1}, {"r", q.r + 1}, {"rp", q.rp + 1}});
    j["quadruples"] = quads;
    j["blacks"] = M.blacks;
    j["whites"] = M.whites;
    j["edges"] = M.quads.size();
    Constellation c = constellation_from_list(M);
    auto cycles_str = [](const std::vector<int>& perm) {
        std::ostringstream os;
        for (const auto& cyc : permutation_cycles(perm)) {
            os << "(";
            for (size_t i = 0; i < cyc.size(); ++i) {
                if (i) os << ",";
                os << cyc[i] + 1;
            }
            os << ")";
        }
        return os.str();
    };
    j["sigma0"] = cycles_str(c.s0);
    j["sigma1"] = cycles_str(c.s1);
    j["superpotential"] = format_superpotential(superpotential(c));
    j["genus"] = genus(M);
    QuiverWeights qw = quiver_and_critical_weight(M);
    json crit = json::array();
    for (size_t e = 0; e < qw.crit.size(); ++e)
        crit.push_back(json::array({qw.source[e] + 1, qw.target[e] + 1, qw.crit[e]}));
    j["arrows_with_crit"] = crit;
    return j;
}

json kasteleyn_report(const LatticeEmbedding& L, const DessinData& M, const WeightSpec& w) {
    json j;
    PolyMatrix K = biadjacency(M, w);
    json mat = json::array();
    for (int r = 0; r < K.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < K.cols; ++c) row.push_back(poly_format(K.at(r, c)));
        mat.push_back(row);
    }
    j["matrix"] = mat;
    LaurentPoly det = kasteleyn_det(M, w);
    j["det"] = poly_format(det);
    j["matchings"] = perfect_matchings(M).size();
    if (w.kind == WeightSpec::Kind::Symbolic) {
        LaurentPoly unit_det = poly_set_tail_to_one(det, L.N);
        j["newton_equals_secondary"] = newton_polygon(unit_det, L).equals_secondary;
    } else {
        j["newton_equals_secondary"] = newton_polygon(det, L).equals_secondary;
    }
    return j;
}

json adet_report(const LatticeEmbedding& L, const DessinData& M,
                 const std::optional<LaurentPoly>& ea_fixture) {
    json j;
    ConjectureReport rep = conjecture_check(L, M, ea_fixture);
    j["lhs"] = poly_format(rep.lhs);
    j["newton_matches_sigma_A"] = rep.newton_ok;
    j["vertex_coefficients_ok"] = rep.vertex_coeffs_ok;
    if (!rep.checked) {
        j["status"] = "no-EA-source";
        return j;
    }
    j["rhs"] = poly_format(rep.rhs);
    j["status"] = rep.match ? "match" : "mismatch";
    j["sign_flipped"] = rep.sign_flipped;
    j["diffs"] = rep.diffs;
    return j;
}

json cmd_analyze(const PipelineConfig& cfg) {
    json j;
    LatticeEmbedding L = lattice_from_config(cfg);
    j["lattice"] = lattice_report(L);
    j["fan"] = fan_report(L);
    j["gkz"] = gkz_report(L);

    auto ctx = std::make_shared<SurfaceContext>(L);
    GridOffset off = random_offset(L, cfg.seed);
    json lam = json::array();
    for (const auto& r : off.lambda)
        lam.push_back(std::to_string(r.num) + "/" + std::to_string(r.den));
    std::vector<DiscreteSurface> all;
    if (cfg.first_step_only) {
        all.push_back(initial_surface(ctx, off));
    } else {
        all = enumerate_surfaces(ctx, off, cfg.cap).surfaces;
    }
    DessinClasses dc = dessin_classes(all);
    json surf;
    surf["seed"] = cfg.seed;
    surf["lambda"] = lam;
    surf["count"] = all.size();
    surf["perfect"] = dc.perfect.size();
    surf["dessin_classes"] = dc.representatives.size();
    j["surfaces"] = surf;

    if (dc.representatives.empty()) {
        j["dessin"] = nullptr; // legitimate: no perfect surface found
        return j;
    }
    if (cfg.dessin_index < 0 || cfg.dessin_index >= (int)dc.representatives.size())
        throw std::invalid_argument("dessin index out of range");
    const DessinData& M = dc.representatives[cfg.dessin_index];
    j["dessin"] = dessin_report(M);
    j["kasteleyn"] = kasteleyn_report(L, M, weights_from_name(cfg.weights));
    std::optional<LaurentPoly> ea;
    if (cfg.ea_fixture_path) ea = load_ea_fixture(*cfg.ea_fixture_path, L.N);
    j["adet"] = adet_report(L, M, ea);
    return j;
}

} // namespace dimerkit
