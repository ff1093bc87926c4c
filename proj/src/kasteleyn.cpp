#include "dimerkit/kasteleyn.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dimerkit {

WeightSpec WeightSpec::numeric_weights(std::vector<Int> w) {
    WeightSpec s;
    s.kind = Kind::Numeric;
    s.numeric = std::move(w);
    return s;
}

int ring_size(const DessinData& M, const WeightSpec& w) {
    return w.kind == WeightSpec::Kind::Symbolic ? M.N + (int)M.quads.size() : M.N;
}

namespace {

mpz_class numeric_weight(const DessinData& M, const WeightSpec& w, int e,
                         const std::map<std::pair<int, int>, Int>& parallel) {
    switch (w.kind) {
        case WeightSpec::Kind::Unit: return 1;
        case WeightSpec::Kind::Critical:
            return mpz_class((long)parallel.at({M.quads[e].r, M.quads[e].rp}));
        case WeightSpec::Kind::Numeric: {
            if (w.numeric.size() != M.quads.size())
                throw std::invalid_argument("numeric weights: size mismatch");
            if (w.numeric[e] == 0)
                throw std::invalid_argument("numeric weights must be nonzero");
            return mpz_class((long)w.numeric[e]);
        }
        default: return 1;
    }
}

std::map<std::pair<int, int>, Int> parallel_counts(const DessinData& M) {
    std::map<std::pair<int, int>, Int> parallel;
    for (const auto& q : M.quads) parallel[{q.r, q.rp}]++;
    return parallel;
}

// monomial of edge e: weight * u_r u_r'
LaurentPoly edge_entry(const DessinData& M, const WeightSpec& w, int e, int vars,
                       const std::map<std::pair<int, int>, Int>& parallel) {
    Monomial mono(vars, 0);
    mono[M.quads[e].r] += 1;
    mono[M.quads[e].rp] += 1;
    mpz_class c = 1;
    if (w.kind == WeightSpec::Kind::Symbolic) mono[M.N + e] = 1;
    else c = numeric_weight(M, w, e, parallel);
    return LaurentPoly::term(vars, mono, c);
}

} // namespace

PolyMatrix biadjacency(const DessinData& M, const WeightSpec& w) {
    if (M.blacks != M.whites)
        throw std::invalid_argument("biadjacency: black and white counts differ");
    int vars = ring_size(M, w);
    auto parallel = parallel_counts(M);
    PolyMatrix K(M.blacks, M.whites, vars);
    for (int e = 0; e < (int)M.quads.size(); ++e) {
        const auto& q = M.quads[e];
        K.at(q.b, q.w) = poly_add(K.at(q.b, q.w), edge_entry(M, w, e, vars, parallel));
    }
    return K;
}

std::vector<PerfectMatching> perfect_matchings(const DessinData& M) {
    int nb = M.blacks;
    std::vector<std::vector<int>> edges_of_black(nb);
    for (int e = 0; e < (int)M.quads.size(); ++e)
        edges_of_black[M.quads[e].b].push_back(e);

    std::vector<PerfectMatching> out;
    std::vector<int> chosen(nb, -1);
    std::vector<bool> white_used(M.whites, false);
    auto rec = [&](auto&& self, int b) -> void {
        if (b == nb) {
            PerfectMatching pm;
            pm.edges = chosen;
            pm.phat.assign(M.N, 0);
            std::vector<int> wperm(nb);
            for (int k = 0; k < nb; ++k) {
                pm.phat[M.quads[chosen[k]].r] += 1;
                pm.phat[M.quads[chosen[k]].rp] += 1;
                wperm[k] = M.quads[chosen[k]].w;
            }
            // parity relative to the identity reference bijection
            int sign = 1;
            std::vector<bool> seen(nb, false);
            for (int k = 0; k < nb; ++k) {
                if (seen[k]) continue;
                int len = 0, cur = k;
                while (!seen[cur]) {
                    seen[cur] = true;
                    cur = wperm[cur];
                    ++len;
                }
                if (len % 2 == 0) sign = -sign;
            }
            pm.sign = sign;
            out.push_back(std::move(pm));
            return;
        }
        for (int e : edges_of_black[b]) {
            int w = M.quads[e].w;
            if (white_used[w]) continue;
            white_used[w] = true;
            chosen[b] = e;
            self(self, b + 1);
            chosen[b] = -1;
            white_used[w] = false;
        }
    };
    rec(rec, 0);
    return out;
}

NewtonReport newton_polygon(const LaurentPoly& p, const LatticeEmbedding& L) {
    NewtonReport rep;
    if (p.is_zero()) return rep;
    std::vector<IVec> exps;
    for (const auto& [e, c] : p.terms) {
        IVec q(L.N);
        for (int i = 0; i < L.N; ++i) q[i] = e[i];
        for (size_t i = L.N; i < e.size(); ++i)
            if (e[i] != 0)
                throw std::invalid_argument("newton_polygon: non-node variable in use");
        exps.push_back(q);
    }
    const IVec& base = exps[0];
    std::vector<std::array<Int, 2>> pts;
    std::map<std::array<Int, 2>, IVec> back;
    for (const auto& q : exps) {
        IVec diff(L.N);
        for (int i = 0; i < L.N; ++i) diff[i] = q[i] - base[i];
        auto v = solve_integer(imat_transpose(L.B), diff);
        if (!v) throw std::invalid_argument("newton_polygon: exponent difference not in L");
        pts.push_back({(*v)[0], (*v)[1]});
        back[pts.back()] = q;
    }
    rep.hull2d = convex_hull_2d(pts);
    for (const auto& v : rep.hull2d.vertices) rep.vertices_zn.push_back(back[v]);
    std::sort(rep.vertices_zn.begin(), rep.vertices_zn.end());
    SecondaryPolygon sp = psi_vertices(L, secondary_fan(L));
    rep.equals_secondary = (rep.vertices_zn == sp.vertices_zn);
    return rep;
}

LaurentPoly kasteleyn_det(const DessinData& M, const WeightSpec& w) {
    int vars = ring_size(M, w);
    auto parallel = parallel_counts(M);
    LaurentPoly det(vars);
    for (const auto& pm : perfect_matchings(M)) {
        LaurentPoly term = LaurentPoly::constant(vars, pm.sign);
        for (int e : pm.edges) term = poly_mul(term, edge_entry(M, w, e, vars, parallel));
        det = poly_add(det, term);
    }
    LaurentPoly via_det = poly_det(biadjacency(M, w));
    if (!poly_equal(det, via_det))
        throw std::runtime_error("kasteleyn_det: matching sum disagrees with poly_det");
    if (det.is_zero()) return det;
    // Global sign: the lexicographically least exponent of the support is a
    // Newton-polygon vertex; make its coefficient positive.
    if (det.terms.begin()->second < 0) det = poly_neg(det);
    return det;
}

PerfectMatching matching_for_cone(const DessinData& M, const SecondaryCone& C) {
    std::vector<int> chosen;
    for (int e = 0; e < (int)M.quads.size(); ++e) {
        std::pair<int, int> t{std::min(M.quads[e].r, M.quads[e].rp),
                              std::max(M.quads[e].r, M.quads[e].rp)};
        if (std::binary_search(C.pairs.begin(), C.pairs.end(), t)) chosen.push_back(e);
    }
    std::vector<int> black_edge(M.blacks, -1);
    std::vector<bool> white_used(M.whites, false);
    for (int e : chosen) {
        if (black_edge[M.quads[e].b] != -1 || white_used[M.quads[e].w])
            throw std::runtime_error("matching_for_cone: P_C is not a matching");
        black_edge[M.quads[e].b] = e;
        white_used[M.quads[e].w] = true;
    }
    for (int b = 0; b < M.blacks; ++b)
        if (black_edge[b] < 0)
            throw std::runtime_error("matching_for_cone: P_C misses a black cell");
    PerfectMatching pm;
    pm.edges = black_edge;
    pm.phat.assign(M.N, 0);
    std::vector<int> wperm(M.blacks);
    for (int k = 0; k < M.blacks; ++k) {
        pm.phat[M.quads[black_edge[k]].r] += 1;
        pm.phat[M.quads[black_edge[k]].rp] += 1;
        wperm[k] = M.quads[black_edge[k]].w;
    }
    int sign = 1;
    std::vector<bool> seen(M.blacks, false);
    for (int k = 0; k < M.blacks; ++k) {
        if (seen[k]) continue;
        int len = 0, cur = k;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = wperm[cur];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    pm.sign = sign;
    return pm;
}

} // namespace dimerkit
