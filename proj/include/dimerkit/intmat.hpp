#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dimerkit {

using Int = long long;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>; // row-major

IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
IVec imat_vec(const IMat& a, const IVec& v);
IMat imat_transpose(const IMat& a);
bool imat_equal(const IMat& a, const IMat& b);

// Rank over Q, fraction-free elimination.
int imat_rank(IMat a);

// Row-style Hermite normal form (basis of the row lattice, zero rows dropped).
// Used to compare row spans of integer matrices exactly.
IMat hnf_rows(IMat a);

// Smith normal form with transforms: U * A * V = D, U and V unimodular.
// Uinv and Vinv are the integer inverses.
struct SmithForm {
    IMat U, Uinv, V, Vinv, D;
    IVec diag; // invariant factors d1 | d2 | ..., nonnegative
};
SmithForm smith_form(const IMat& a);

// Solve A x = b over the integers (A need not be square). Returns nullopt when
// no rational solution exists or the rational solution is not integral.
std::optional<IVec> solve_integer(const IMat& a, const IVec& b);

Int ivec_gcd(const IVec& v);

} // namespace dimerkit
