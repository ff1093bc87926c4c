#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "dimerkit/intmat.hpp"

namespace dimerkit {

// Exponent vector of one monomial; length = number of ring variables.
// Entries may be negative (Laurent), though none of the fixtures need that
// on the u-side.
using Monomial = std::vector<int>;

// Sparse Laurent polynomial over Z in a fixed number of variables. The term
// map is keyed on exact exponent vectors in lexicographic order, which makes
// the text serialization reproducible.
struct LaurentPoly {
    int vars = 0;
    std::map<Monomial, mpz_class> terms;

    LaurentPoly() = default;
    explicit LaurentPoly(int v) : vars(v) {}

    static LaurentPoly zero(int vars) { return LaurentPoly(vars); }
    static LaurentPoly constant(int vars, const mpz_class& c);
    // c * prod_i u_i^{e_i}
    static LaurentPoly term(int vars, const Monomial& e, const mpz_class& c);
    // single variable u_idx (0-based)
    static LaurentPoly variable(int vars, int idx);

    bool is_zero() const { return terms.empty(); }
    void add_term(const Monomial& e, const mpz_class& c);
};

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_neg(const LaurentPoly& a);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);
bool poly_equal(const LaurentPoly& a, const LaurentPoly& b);

struct PolyMatrix {
    int rows = 0, cols = 0;
    std::vector<LaurentPoly> entries; // row-major, rows*cols

    PolyMatrix() = default;
    PolyMatrix(int r, int c, int vars)
        : rows(r), cols(c), entries(r * c, LaurentPoly(vars)) {}
    LaurentPoly& at(int r, int c) { return entries[r * cols + c]; }
    const LaurentPoly& at(int r, int c) const { return entries[r * cols + c]; }
};

// Division-free determinant: expansion over rows with memoization on column
// subsets. Permutations through zero entries are skipped, so sparse matrices
// stay cheap. Matrices above 20 columns are rejected.
LaurentPoly poly_det(const PolyMatrix& m);

// Exact division; throws std::domain_error when b does not divide a.
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

// gcd of all coefficients (non-negative; 0 for the zero polynomial)
mpz_class poly_content(const LaurentPoly& a);
// componentwise minimum of all exponent vectors (the largest monomial
// dividing every term)
Monomial poly_monomial_content(const LaurentPoly& a);

// u_i -> u_i^{-1} for every variable
LaurentPoly poly_invert_vars(const LaurentPoly& a);
// multiply by c * u^e
LaurentPoly poly_shift(const LaurentPoly& a, const Monomial& e, const mpz_class& c);
// drop trailing variables that occur in no term (used to compare polynomials
// living in rings of different nominal size)
LaurentPoly poly_restrict_vars(const LaurentPoly& a, int vars);
// substitute 1 for all variables with index >= keep (weights evaluation)
LaurentPoly poly_set_tail_to_one(const LaurentPoly& a, int keep);

// Text form: terms sorted lexicographically, "c*u^[e1,...,eN]" joined by
// " + " / " - "; "0" for the zero polynomial.
std::string poly_format(const LaurentPoly& a);
LaurentPoly poly_parse(const std::string& text, int vars);

} // namespace dimerkit
