#pragma once

#include <array>

#include "dimerkit/lattice.hpp"

namespace dimerkit {

// One 2-dimensional cone of the secondary fan. ray_right/ray_left are column
// indices spanning the boundary half-lines (right = clockwise boundary);
// several parallel columns share a ray, so right_indices/left_indices carry
// all of them.
struct SecondaryCone {
    int ray_right = 0, ray_left = 0;
    std::vector<int> right_indices, left_indices;
    std::vector<std::pair<int, int>> pairs; // L_C, each pair (i<j), sorted
    IVec psi;                               // psi_C in Z^N
};

struct SecondaryFan {
    std::vector<SecondaryCone> cones; // counterclockwise order
};

SecondaryFan secondary_fan(const LatticeEmbedding& L);

// 2-D lattice polygon, counterclockwise convex hull vertices.
struct LatticePolygon {
    std::vector<std::array<Int, 2>> vertices;
};

LatticePolygon convex_hull_2d(std::vector<std::array<Int, 2>> pts);
Int polygon_twice_area(const LatticePolygon& p);
Int polygon_boundary_points(const LatticePolygon& p);
Int polygon_interior_points(const LatticePolygon& p); // Pick

// Secondary polygon Sigma(L): vertices among the psi_C in Z^N, plus the hull
// in lattice coordinates of the plane spanned by them.
struct SecondaryPolygon {
    std::vector<IVec> psi;         // one per cone, fan order
    std::vector<IVec> vertices_zn; // hull vertices as points of Z^N, sorted
    LatticePolygon hull2d;         // same polygon in L-plane coordinates
};
SecondaryPolygon psi_vertices(const LatticeEmbedding& L, const SecondaryFan& fan);

// Polygon Delta of partial sums of the counterclockwise-reordered columns.
struct DeltaPolygon {
    std::vector<int> order;                   // permutation applied to columns
    std::vector<std::array<Int, 2>> points;   // partial sums p_1..p_N (p_N = 0)
    LatticePolygon hull;
};
DeltaPolygon delta_polygon(const LatticeEmbedding& L);

// Area of Delta (doubled, so it stays an integer) and interior lattice point
// count, computed from the fan data of one cone; independent of the cone.
struct AreaInterior {
    Int twice_area = 0;
    Int interior = 0;
};
AreaInterior area_and_interior(const LatticeEmbedding& L, const SecondaryCone& C);

// Sigma(L) obtained by rotating Delta clockwise over 90 degrees, embedding it
// along with L into Z^N and translating by psi of the cone whose left
// boundary is the first reordered ray. Equality with psi_vertices is a
// structural check used by the tests.
std::vector<IVec> secondary_polygon_via_delta(const LatticeEmbedding& L);

// Inverse construction: boundary lattice points (counterclockwise, all
// vertices included) -> embedding whose Delta reproduces the polygon up to
// translation.
LatticeEmbedding lattice_from_polygon(const std::vector<std::array<Int, 2>>& points);

} // namespace dimerkit
