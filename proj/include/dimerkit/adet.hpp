#pragma once

#include "dimerkit/gkz.hpp"
#include "dimerkit/kasteleyn.hpp"

namespace dimerkit {

// One-variable support m_1 < ... < m_N with the coefficient variable index
// (0-based ring variable) attached to each exponent.
struct UnivariateSupport {
    std::vector<Int> exps;
    std::vector<int> uidx;
    int nvars = 0;
};

// From the h-normalized A-sequence; requires a torsion-free quotient with
// free rank 2 and pairwise distinct exponents.
UnivariateSupport univariate_support(const LatticeEmbedding& L);

// Resultant of f and f' as a Sylvester poly_det, with the monomial and
// integer content removed. The sign convention is pinned to the printed cubic
// discriminant (positive 27 u1^2 u2^2 term), which is Res(f, f')/lc without
// the classical (-1)^{n(n-1)/2} factor.
LaurentPoly sylvester_discriminant(const UnivariateSupport& s);

// E_A for a one-dimensional primary polytope: endpoint coefficients times the
// full-support discriminant, all face multiplicities 1.
LaurentPoly principal_a_det_univariate(const LatticeEmbedding& L);

struct ConjectureReport {
    bool checked = false;        // an E_A source existed
    bool match = false;          // equality up to one global sign
    bool sign_flipped = false;   // matched after flipping the sign of the LHS
    bool newton_ok = false;      // Newton(LHS) = Sigma(A) (checkable without E_A)
    bool vertex_coeffs_ok = false; // |vertex coefficient| = prod |det|^{|det|}
    LaurentPoly lhs, rhs;
    std::vector<std::string> diffs; // per-monomial discrepancies
};

// Left side of the critical-weight conjecture:
// (u_1...u_N)^{vol_A} det K^crit(u^{-1}).
LaurentPoly conjecture_lhs(const LatticeEmbedding& L, const DessinData& M);

// Compares the LHS against E_A (computed for univariate supports unless a
// fixture polynomial is supplied). The structural Newton/vertex-coefficient
// checks run regardless.
ConjectureReport conjecture_check(const LatticeEmbedding& L, const DessinData& M,
                                  std::optional<LaurentPoly> ea_fixture = std::nullopt);

} // namespace dimerkit
