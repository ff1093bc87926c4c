#pragma once

#include <string>

#include "dimerkit/surface.hpp"

namespace dimerkit {

// The list M of quadruples (b(e), w(e), r(e), r'(e)): one record per tile of
// the torus. b/w are 0-based cell ids, r/r' are 0-based column indices with
// det(b_r, b_r') > 0.
struct DessinData {
    int N = 0;
    int blacks = 0, whites = 0;
    struct Quad {
        int b = 0, w = 0, r = 0, rp = 0;
    };
    std::vector<Quad> quads; // sorted by (r, rp, b, w)
};

// From a perfect surface. Cell ids follow the sorted order of the black and
// white vertex keys.
DessinData quadruple_list(const DiscreteSurface& S);

// Permutation pair acting on the tiles; transitive by construction.
struct Constellation {
    int n = 0;
    std::vector<int> s0, s1; // images, 0-based
};

std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& perm);
std::vector<int> permutation_inverse(const std::vector<int>& perm);
std::vector<int> permutation_compose(const std::vector<int>& a,
                                     const std::vector<int>& b); // a after b
bool constellation_transitive(const Constellation& c);

// Orientation propagation of the conversion rules: orient |z_1| (both ways
// are mirror dessins; flip selects the seed), spread to the black/white
// cyclic sets and onwards, then sigma0 = product of black cycles and
// sigma1 = product of inverted white cycles.
Constellation constellation_from_list(const DessinData& M, bool flip = false);

// b, w, r from the cycles of sigma0, sigma1, sigma0 sigma1^{-1};
// r'(e) = r(sigma1(e)). Labels are cycle ids, not lattice indices.
DessinData list_from_constellation(const Constellation& c);

struct Superpotential {
    std::vector<std::vector<int>> pos, neg; // cycles, lex-least rotation, sorted
};

Superpotential superpotential(const Constellation& c);
// "X3*X7*X15 + ... - X4*X8*X15 - ..." with 1-based edge numbers
std::string format_superpotential(const Superpotential& w);

// Arrows of the reconstructed quiver and the critical weight. The arrow of a
// tile runs r(e) -> r'(e); crit(e) counts parallel arrows.
struct QuiverWeights {
    std::vector<int> source, target;
    std::vector<Int> crit;
};
QuiverWeights quiver_and_critical_weight(const DessinData& M);

// Genus of the untwisted surface via its Euler characteristic
// (V = N + 2 vol_A with the red points merged, E = 2 #tiles, F = #tiles).
int genus(const DessinData& M);

// Canonical encoding up to relabeling of tiles (minimum over BFS labelings);
// equal strings iff the constellations are isomorphic.
std::string canonical_constellation(const Constellation& c);

// Canonical form of the dessin including the mirror ambiguity of the
// orientation seed.
std::string canonical_dessin(const DessinData& M);

} // namespace dimerkit
