#pragma once

#include "dimerkit/lattice.hpp"
#include "dimerkit/polyring.hpp"
#include "dimerkit/secondary.hpp"

namespace dimerkit {

// The point configuration A = (e_i mod L). Free parts are h-normalized so the
// first coordinate of every a_i is 1; torsion classes are kept as separate
// labels per index.
struct ASequence {
    int N = 0;
    IMat a;              // columns a_1..a_N, each of length N-2 (free part)
    IVec torsion;        // invariant factors > 1
    IMat torsion_labels; // one row per torsion factor, labels in [0, d)
};

ASequence a_sequence(const LatticeEmbedding& L);

// Normalized volume of the primary polytope; computed per 2-dimensional cone
// and asserted identical across the fan.
Int vol_A(const LatticeEmbedding& L);

// Rows of the Plucker form, each annihilating A.
IMat minimal_relations(const LatticeEmbedding& L);

// f_A = sum_i u_i x^{a_i} in the ring (u_1..u_N, x_1..x_{N-2}).
// Requires Z^N / L torsion free.
LaurentPoly f_A_symbolic(const LatticeEmbedding& L);

// true iff some cone of the secondary fan has |det(b_i,b_j)| = 1 on all of L_C
bool unimodular_exists(const LatticeEmbedding& L);

} // namespace dimerkit
