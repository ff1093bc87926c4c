#pragma once

#include <array>
#include <optional>
#include <string>

#include "dimerkit/intmat.hpp"

namespace dimerkit {

// Rank-2 sublattice of Z^N given by the rows of a 2xN matrix B. The row order
// fixes the orientation; nothing here reorients silently.
struct LatticeEmbedding {
    int N = 0;
    IMat B; // 2 x N
    std::array<Int, 2> col(int i) const { return {B[0][i], B[1][i]}; }
};

// det(b_i, b_j) for columns of a validated embedding
Int col_det(const LatticeEmbedding& L, int i, int j);

struct PluckerForm {
    IMat C; // N x N, antisymmetric, rank 2
};

struct Quiver {
    int nodes = 0;
    std::vector<std::pair<int, int>> arrows; // (source, target), 0-based, multiplicity expanded
};

// Validation errors carry which condition failed.
LatticeEmbedding validate_lattice(const IMat& B);

PluckerForm plucker_form(const LatticeEmbedding& L);

Quiver quiver_from_plucker(const PluckerForm& C);

// Antisymmetrized adjacency matrix of a quiver (for round-trip checks).
IMat quiver_antisymmetrized_adjacency(const Quiver& q);

// Constructive inverse of the Plucker form (rank-2 antisymmetric C -> B with
// B^t J B = C). When gcd of the entries is d > 1 the row span depends on a
// 2x2 integer matrix G with det G = d; default G = diag(1, d).
LatticeEmbedding factor_antisymmetric(const IMat& C,
                                      std::optional<IMat> G = std::nullopt);

// Canonicalization of Z^N modulo the row span of B, from the Smith normal
// form of B^t. Keys are coordinate vectors in Z/d1 x Z/d2 x Z^{N-2}; the
// torsion coordinates are reduced into [0, d).
class CosetCalculator {
  public:
    explicit CosetCalculator(const LatticeEmbedding& L);

    int N() const { return n_; }
    IVec key(const IVec& p) const;          // canonical key of p in Z^N
    IVec key_shift(const IVec& key, int var, int dir) const; // key of p + dir*e_var
    IVec representative(const IVec& key) const;              // a point of Z^N in the coset
    Int coordinate_sum(const IVec& key) const;               // s(p), well defined mod L
    IVec torsion_factors() const;           // invariant factors > 1
    int free_rank() const { return n_ - 2; }
    // coordinates of e_var in the quotient (unreduced)
    const IVec& quotient_image_of_basis(int var) const { return ucols_[var]; }
    const IVec& diag() const { return d_; }
    const IMat& U() const { return u_; }
    const IMat& Uinv() const { return uinv_; }

  private:
    int n_;
    IMat u_, uinv_; // U * p = quotient coordinates, p = Uinv * w
    IVec d_;        // (d1, d2): L corresponds to d1 Z x d2 Z x 0^{N-2}
    std::vector<IVec> ucols_;
    IVec srow_; // s(p) = srow . key
    void reduce(IVec& w) const;
};

} // namespace dimerkit
