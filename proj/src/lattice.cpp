#include "dimerkit/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace dimerkit {

Int col_det(const LatticeEmbedding& L, int i, int j) {
    return L.B[0][i] * L.B[1][j] - L.B[1][i] * L.B[0][j];
}

LatticeEmbedding validate_lattice(const IMat& B) {
    if (B.size() != 2) throw std::invalid_argument("lattice: B must have 2 rows");
    int N = (int)B[0].size();
    if ((int)B[1].size() != N) throw std::invalid_argument("lattice: ragged matrix");
    if (N < 3) throw std::invalid_argument("lattice: need at least 3 columns");
    for (int r = 0; r < 2; ++r) {
        Int s = 0;
        for (Int x : B[r]) s += x;
        if (s != 0) throw std::invalid_argument("lattice: row sum is not zero");
    }
    LatticeEmbedding L{N, B};
    if (imat_rank(B) != 2) throw std::invalid_argument("lattice: rank of B is not 2");
    for (int i = 0; i < N; ++i) {
        bool hit = false;
        for (int j = 0; j < N && !hit; ++j) hit = (col_det(L, i, j) != 0);
        if (!hit)
            throw std::invalid_argument(
                "lattice: index " + std::to_string(i + 1) + " lies in a coordinate hyperplane");
    }
    return L;
}

PluckerForm plucker_form(const LatticeEmbedding& L) {
    IMat C(L.N, IVec(L.N, 0));
    for (int i = 0; i < L.N; ++i)
        for (int j = 0; j < L.N; ++j) C[i][j] = col_det(L, i, j);
    return PluckerForm{C};
}

Quiver quiver_from_plucker(const PluckerForm& P) {
    int N = (int)P.C.size();
    Quiver q{N, {}};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (Int k = 0; k < P.C[i][j]; ++k) q.arrows.emplace_back(i, j);
    return q;
}

IMat quiver_antisymmetrized_adjacency(const Quiver& q) {
    IMat A(q.nodes, IVec(q.nodes, 0));
    for (auto [s, t] : q.arrows) {
        A[s][t] += 1;
        A[t][s] -= 1;
    }
    return A;
}

LatticeEmbedding factor_antisymmetric(const IMat& C, std::optional<IMat> G) {
    int N = (int)C.size();
    if (N == 0) throw std::invalid_argument("factor: empty matrix");
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (C[i][j] != -C[j][i]) throw std::invalid_argument("factor: not antisymmetric");
    if (imat_rank(C) != 2) throw std::invalid_argument("factor: rank is not 2");

    Int d = 0;
    for (const auto& row : C) d = std::gcd(d, ivec_gcd(row));
    IMat Cp(N, IVec(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) Cp[i][j] = C[i][j] / d;

    // Basis D of the column lattice of C' via the Smith form U C' V = S:
    // column k of C'V equals diag_k * (column k of Uinv), so those two columns
    // form a basis D with D = C'E for E = first two columns of V.
    SmithForm sf = smith_form(Cp);
    IMat D(N, IVec(2, 0));
    IMat E(N, IVec(2, 0));
    for (int k = 0; k < 2; ++k) {
        if (sf.diag[k] == 0) throw std::invalid_argument("factor: rank defect");
        for (int r = 0; r < N; ++r) D[r][k] = sf.Uinv[r][k] * sf.diag[k];
        for (int r = 0; r < N; ++r) E[r][k] = sf.V[r][k];
    }
    // F with C' = D F: solve the 2-variable system per column.
    IMat F(2, IVec(N, 0));
    for (int j = 0; j < N; ++j) {
        IMat A(N, IVec(2));
        IVec b(N);
        for (int r = 0; r < N; ++r) {
            A[r][0] = D[r][0];
            A[r][1] = D[r][1];
            b[r] = Cp[r][j];
        }
        auto x = solve_integer(A, b);
        if (!x) throw std::invalid_argument("factor: column not in column lattice");
        F[0][j] = (*x)[0];
        F[1][j] = (*x)[1];
    }
    // D^t E must be f*J with f = +-1; adjust F so that C' = F^t J F.
    Int f01 = 0, f00 = 0;
    {
        IMat DtE = imat_mul(imat_transpose(D), E);
        f00 = DtE[0][0];
        f01 = DtE[0][1];
        if (f00 != 0 || DtE[1][1] != 0 || DtE[1][0] != -f01 || (f01 != 1 && f01 != -1))
            throw std::invalid_argument("factor: unexpected pairing matrix");
    }
    // C' = -f * F^t J F, so for f = +1 swap the rows of F (negates F^t J F).
    if (f01 == 1) std::swap(F[0], F[1]);
    {
        LatticeEmbedding Ltest{N, F};
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (col_det(Ltest, i, j) != Cp[i][j])
                    throw std::invalid_argument("factor: construction failed");
    }
    IMat g = G.value_or(IMat{{1, 0}, {0, d}});
    if (g.size() != 2 || g[0].size() != 2 || g[0][0] * g[1][1] - g[0][1] * g[1][0] != d)
        throw std::invalid_argument("factor: G must be 2x2 with determinant gcd(C)");
    IMat B = imat_mul(g, F);
    return validate_lattice(B);
}

CosetCalculator::CosetCalculator(const LatticeEmbedding& L) : n_(L.N) {
    SmithForm sf = smith_form(imat_transpose(L.B)); // N x 2
    u_ = sf.U;
    uinv_ = sf.Uinv;
    d_ = {sf.diag[0], sf.diag[1]};
    if (d_[0] <= 0 || d_[1] <= 0) throw std::invalid_argument("coset: rank defect");
    ucols_.resize(n_);
    for (int i = 0; i < n_; ++i) {
        IVec e(n_, 0);
        e[i] = 1;
        ucols_[i] = imat_vec(u_, e);
    }
    srow_.assign(n_, 0);
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) srow_[j] += uinv_[i][j];
}

void CosetCalculator::reduce(IVec& w) const {
    for (int k = 0; k < 2; ++k) {
        Int m = w[k] % d_[k];
        if (m < 0) m += d_[k];
        w[k] = m;
    }
}

IVec CosetCalculator::key(const IVec& p) const {
    if ((int)p.size() != n_) throw std::invalid_argument("coset: length mismatch");
    IVec w = imat_vec(u_, p);
    reduce(w);
    return w;
}

IVec CosetCalculator::key_shift(const IVec& k, int var, int dir) const {
    IVec w = k;
    for (int i = 0; i < n_; ++i) w[i] += dir * ucols_[var][i];
    reduce(w);
    return w;
}

IVec CosetCalculator::representative(const IVec& k) const { return imat_vec(uinv_, k); }

Int CosetCalculator::coordinate_sum(const IVec& k) const {
    Int s = 0;
    for (int i = 0; i < n_; ++i) s += srow_[i] * k[i];
    return s;
}

IVec CosetCalculator::torsion_factors() const {
    IVec t;
    for (Int d : d_)
        if (d > 1) t.push_back(d);
    return t;
}

} // namespace dimerkit
