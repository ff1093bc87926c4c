#include "dimerkit/intmat.hpp"

#include <numeric>

namespace dimerkit {

IMat imat_identity(int n) {
    IMat m(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    int n = (int)a.size(), k = (int)b.size(), m = (int)b[0].size();
    IMat c(n, IVec(m, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

IVec imat_vec(const IMat& a, const IVec& v) {
    IVec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

IMat imat_transpose(const IMat& a) {
    if (a.empty()) return {};
    IMat t(a[0].size(), IVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

bool imat_equal(const IMat& a, const IMat& b) { return a == b; }

int imat_rank(IMat a) {
    if (a.empty()) return 0;
    int rows = (int)a.size(), cols = (int)a[0].size();
    // Fraction-free (Bareiss) elimination in __int128 to avoid overflow.
    std::vector<std::vector<__int128>> m(rows, std::vector<__int128>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = a[i][j];
    int rank = 0;
    __int128 prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

IMat hnf_rows(IMat a) {
    if (a.empty()) return a;
    int rows = (int)a.size(), cols = (int)a[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // gcd out column c below row r using row operations
        while (true) {
            int piv = -1;
            for (int i = r; i < rows; ++i)
                if (a[i][c] != 0 && (piv < 0 || std::abs(a[i][c]) < std::abs(a[piv][c]))) piv = i;
            if (piv < 0) break;
            std::swap(a[r], a[piv]);
            bool done = true;
            for (int i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                Int q = a[i][c] / a[r][c];
                for (int j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (int j = 0; j < cols; ++j) a[r][j] = -a[r][j];
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            Int q = a[i][c] / a[r][c];
            if (a[i][c] % a[r][c] < 0) q -= 1;
            if (q != 0)
                for (int j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

SmithForm smith_form(const IMat& a) {
    int rows = (int)a.size(), cols = (int)a[0].size();
    SmithForm s;
    s.D = a;
    s.U = imat_identity(rows);
    s.Uinv = imat_identity(rows);
    s.V = imat_identity(cols);
    s.Vinv = imat_identity(cols);
    IMat& D = s.D;

    auto row_swap = [&](int i, int j) {
        std::swap(D[i], D[j]);
        std::swap(s.U[i], s.U[j]);
        for (int k = 0; k < rows; ++k) std::swap(s.Uinv[k][i], s.Uinv[k][j]);
    };
    auto row_add = [&](int dst, int src, Int q) { // row dst += q * row src
        for (int k = 0; k < cols; ++k) D[dst][k] += q * D[src][k];
        for (int k = 0; k < rows; ++k) s.U[dst][k] += q * s.U[src][k];
        for (int k = 0; k < rows; ++k) s.Uinv[k][src] -= q * s.Uinv[k][dst];
    };
    auto row_neg = [&](int i) {
        for (int k = 0; k < cols; ++k) D[i][k] = -D[i][k];
        for (int k = 0; k < rows; ++k) s.U[i][k] = -s.U[i][k];
        for (int k = 0; k < rows; ++k) s.Uinv[k][i] = -s.Uinv[k][i];
    };
    auto col_swap = [&](int i, int j) {
        for (int k = 0; k < rows; ++k) std::swap(D[k][i], D[k][j]);
        for (int k = 0; k < cols; ++k) std::swap(s.V[k][i], s.V[k][j]);
        std::swap(s.Vinv[i], s.Vinv[j]);
    };
    auto col_add = [&](int dst, int src, Int q) { // col dst += q * col src
        for (int k = 0; k < rows; ++k) D[k][dst] += q * D[k][src];
        for (int k = 0; k < cols; ++k) s.V[k][dst] += q * s.V[k][src];
        for (int k = 0; k < cols; ++k) s.Vinv[src][k] -= q * s.Vinv[dst][k];
    };
    auto col_neg = [&](int i) {
        for (int k = 0; k < rows; ++k) D[k][i] = -D[k][i];
        for (int k = 0; k < cols; ++k) s.V[k][i] = -s.V[k][i];
        for (int k = 0; k < cols; ++k) s.Vinv[i][k] = -s.Vinv[i][k];
    };

    int t = 0;
    int nmin = std::min(rows, cols);
    while (t < nmin) {
        // find a nonzero pivot in the lower-right block
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (D[i][j] != 0 && (pi < 0 || std::abs(D[i][j]) < std::abs(D[pi][pj]))) {
                    pi = i; pj = j;
                }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        bool clean = true;
        for (int i = t + 1; i < rows; ++i)
            if (D[i][t] != 0) {
                row_add(i, t, -(D[i][t] / D[t][t]));
                if (D[i][t] != 0) clean = false;
            }
        for (int j = t + 1; j < cols; ++j)
            if (D[t][j] != 0) {
                col_add(j, t, -(D[t][j] / D[t][t]));
                if (D[t][j] != 0) clean = false;
            }
        if (!clean) continue; // smaller remainders appeared, repeat with new pivot
        // divisibility fix-up: D[t][t] must divide everything below-right
        bool redo = false;
        for (int i = t + 1; i < rows && !redo; ++i)
            for (int j = t + 1; j < cols && !redo; ++j)
                if (D[i][j] % D[t][t] != 0) {
                    row_add(t, i, 1);
                    redo = true;
                }
        if (redo) continue;
        if (D[t][t] < 0) { row_neg(t); }
        ++t;
    }
    (void)col_neg;
    s.diag.assign(nmin, 0);
    for (int i = 0; i < nmin; ++i) s.diag[i] = D[i][i];
    return s;
}

std::optional<IVec> solve_integer(const IMat& a, const IVec& b) {
    // Rational Gaussian elimination with exact arithmetic on __int128 fractions
    // would be fussy; instead solve via the Smith form: A = Uinv D Vinv, so
    // A x = b  <=>  D (Vinv x) = U b.
    SmithForm s = smith_form(a);
    IVec ub = imat_vec(s.U, b);
    int rows = (int)a.size(), cols = (int)a[0].size();
    int nmin = std::min(rows, cols);
    IVec y(cols, 0);
    for (int i = 0; i < nmin; ++i) {
        if (s.diag[i] == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % s.diag[i] != 0) return std::nullopt;
            y[i] = ub[i] / s.diag[i];
        }
    }
    for (int i = nmin; i < rows; ++i)
        if (ub[i] != 0) return std::nullopt;
    return imat_vec(s.V, y);
}

Int ivec_gcd(const IVec& v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

} // namespace dimerkit
