#pragma once

#include <string>

#include "dimerkit/secondary.hpp"
#include "dimerkit/surface.hpp"

namespace dimerkit {

// Secondary fan: rays with column labels and the L_C list of every cone.
std::string svg_fan(const LatticeEmbedding& L, const SecondaryFan& fan);

// Delta polygon on the lattice grid, interior points marked.
std::string svg_polygon(const DeltaPolygon& d);

// Rhombus tiling of one period of the surface, with black/grey/white vertex
// dots, the period parallelogram dashed, and optional zigzag-loop overlay.
std::string svg_tiling(const DiscreteSurface& S, bool zigzag);

} // namespace dimerkit
