#pragma once

#include "dimerkit/dessin.hpp"
#include "dimerkit/polyring.hpp"
#include "dimerkit/secondary.hpp"

namespace dimerkit {

// Edge weights for the bi-adjacency matrix. Symbolic weights get one extra
// ring variable per edge, indexed after the N node variables in the order of
// the quadruple list.
struct WeightSpec {
    enum class Kind { Unit, Critical, Numeric, Symbolic };
    Kind kind = Kind::Unit;
    std::vector<Int> numeric; // used when kind == Numeric

    static WeightSpec unit() { return {Kind::Unit, {}}; }
    static WeightSpec critical() { return {Kind::Critical, {}}; }
    static WeightSpec symbolic() { return {Kind::Symbolic, {}}; }
    static WeightSpec numeric_weights(std::vector<Int> w);
};

int ring_size(const DessinData& M, const WeightSpec& w);

// vol_A x vol_A matrix; entry (b, w) sums weight(e) u_{r(e)} u_{r'(e)} over
// the edges with that black/white pair. Rows and columns follow the canonical
// cell order of the quadruple list.
PolyMatrix biadjacency(const DessinData& M, const WeightSpec& w);

struct PerfectMatching {
    std::vector<int> edges; // one edge per black cell, in black order
    IVec phat;              // sum of e_{r} + e_{r'} over the matching
    int sign = 1;           // parity of the induced white permutation
};

// All perfect matchings, by backtracking over black cells in canonical order.
std::vector<PerfectMatching> perfect_matchings(const DessinData& M);

// Signed sum over matchings; asserted equal to poly_det of the bi-adjacency
// matrix, then sign-normalized so the coefficient of the lexicographically
// least Newton-polygon vertex is positive.
LaurentPoly kasteleyn_det(const DessinData& M, const WeightSpec& w);

struct NewtonReport {
    std::vector<IVec> vertices_zn; // hull vertices as exponent vectors, sorted
    LatticePolygon hull2d;
    bool equals_secondary = false;
};

// Newton polygon of a polynomial in the u-ring of L; all exponent
// differences must lie in L. Compares the vertex set against Sigma(L).
NewtonReport newton_polygon(const LaurentPoly& p, const LatticeEmbedding& L);

// P_C = { e : {r(e), r'(e)} in L_C }; checked to be a perfect matching, with
// exponent vector psi_C.
PerfectMatching matching_for_cone(const DessinData& M, const SecondaryCone& C);

} // namespace dimerkit
