#include "dimerkit/gkz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dimerkit {

namespace {

// Unimodular matrix whose first row is the primitive vector h: take column
// operations V with h V = e_1^t, then T = V^{-1}.
IMat complete_to_unimodular(const IVec& h) {
    int n = (int)h.size();
    SmithForm sf = smith_form(IMat{h});
    // U (1x1) * h * V = [d, 0, ..., 0]; h primitive and U = +-1, so
    // (U h) V = e_1^t and T = V^{-1} has first row U*h. Fix the sign so the
    // first row is h itself.
    if (sf.diag[0] != 1) throw std::runtime_error("h is not primitive");
    IMat T = sf.Vinv;
    if (sf.U[0][0] == -1)
        for (auto& x : T[0]) x = -x;
    return T;
}

} // namespace

ASequence a_sequence(const LatticeEmbedding& L) {
    CosetCalculator coset(L);
    ASequence A;
    A.N = L.N;
    const IVec& d = coset.diag();
    for (int k = 0; k < 2; ++k)
        if (d[k] > 1) A.torsion.push_back(d[k]);
    int nfree = L.N - 2;
    IMat raw(nfree, IVec(L.N, 0));
    A.torsion_labels.assign(A.torsion.size(), IVec(L.N, 0));
    for (int i = 0; i < L.N; ++i) {
        const IVec& w = coset.quotient_image_of_basis(i);
        for (int r = 0; r < nfree; ++r) raw[r][i] = w[2 + r];
        int t = 0;
        for (int k = 0; k < 2; ++k)
            if (d[k] > 1) {
                Int m = w[k] % d[k];
                if (m < 0) m += d[k];
                A.torsion_labels[t++][i] = m;
            }
    }
    // h with h . a_i = 1 for all i (exists because (1,...,1) kills L)
    IMat sys(L.N, IVec(nfree));
    for (int i = 0; i < L.N; ++i)
        for (int r = 0; r < nfree; ++r) sys[i][r] = raw[r][i];
    auto h = solve_integer(sys, IVec(L.N, 1));
    if (!h) throw std::runtime_error("a_sequence: no affine functional h");
    IMat T = complete_to_unimodular(*h);
    A.a = imat_mul(T, raw);
    for (int i = 0; i < L.N; ++i)
        if (A.a[0][i] != 1) throw std::runtime_error("a_sequence: h-normalization failed");
    if (nfree == 2) {
        // pin the second coordinate: shift the minimum to 0, then pick the
        // lexicographically smaller of the sequence and its reflection
        IVec m = A.a[1];
        Int lo = *std::min_element(m.begin(), m.end());
        for (auto& x : m) x -= lo;
        IVec rev = m;
        Int hi = *std::max_element(m.begin(), m.end());
        for (auto& x : rev) x = hi - x;
        A.a[1] = std::min(m, rev);
    }
    return A;
}

Int vol_A(const LatticeEmbedding& L) {
    SecondaryFan fan = secondary_fan(L);
    Int vol = -1;
    for (const auto& c : fan.cones) {
        Int v = 0;
        for (auto [i, j] : c.pairs) v += std::abs(col_det(L, i, j));
        if (vol < 0) vol = v;
        else if (vol != v)
            throw std::runtime_error("vol_A differs between cones");
    }
    return vol;
}

IMat minimal_relations(const LatticeEmbedding& L) {
    IMat C = plucker_form(L).C;
    ASequence A = a_sequence(L);
    for (int i = 0; i < L.N; ++i) {
        for (int r = 0; r < L.N - 2; ++r) {
            Int s = 0;
            for (int j = 0; j < L.N; ++j) s += C[i][j] * A.a[r][j];
            if (s != 0) throw std::runtime_error("relation does not annihilate A");
        }
        for (size_t t = 0; t < A.torsion.size(); ++t) {
            Int s = 0;
            for (int j = 0; j < L.N; ++j) s += C[i][j] * A.torsion_labels[t][j];
            if (s % A.torsion[t] != 0)
                throw std::runtime_error("relation does not annihilate torsion labels");
        }
    }
    return C;
}

LaurentPoly f_A_symbolic(const LatticeEmbedding& L) {
    ASequence A = a_sequence(L);
    if (!A.torsion.empty())
        throw std::invalid_argument("f_A: quotient has torsion");
    int nfree = L.N - 2;
    int vars = L.N + nfree;
    LaurentPoly f(vars);
    for (int i = 0; i < L.N; ++i) {
        Monomial e(vars, 0);
        e[i] = 1;
        for (int r = 0; r < nfree; ++r) e[L.N + r] = (int)A.a[r][i];
        f.add_term(e, 1);
    }
    return f;
}

bool unimodular_exists(const LatticeEmbedding& L) {
    SecondaryFan fan = secondary_fan(L);
    for (const auto& c : fan.cones) {
        bool uni = true;
        for (auto [i, j] : c.pairs)
            if (std::abs(col_det(L, i, j)) != 1) {
                uni = false;
                break;
            }
        if (uni) return true;
    }
    return false;
}

} // namespace dimerkit
