#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "dimerkit/dessin.hpp"
#include "dimerkit/gkz.hpp"

using namespace dimerkit;

namespace {

const IMat kB1 = {{2, -1, -1}, {1, 1, -2}};
const IMat kB2 = {{0, 1, 1, -2}, {-1, 0, 2, -1}};
const IMat kB10 = {{0, 0, 1, 1, 1, -3}, {-1, -1, 0, 0, 0, 2}};

// The printed quadruple table for model IV of dP3 (labels as printed; the
// node numbering differs from the column order of kB10 by a relabeling).
DessinData dp3iv_table() {
    DessinData M;
    M.N = 6;
    M.blacks = 6;
    M.whites = 6;
    int bs[] = {6, 5, 1, 2, 4, 3, 1, 5, 3, 6, 4, 2, 5, 6, 1, 2, 3, 4};
    int ws[] = {5, 6, 2, 1, 3, 4, 3, 1, 5, 2, 6, 4, 5, 6, 1, 2, 3, 4};
    int rs[] = {2, 2, 3, 3, 4, 4, 1, 1, 1, 1, 1, 1, 5, 6, 5, 6, 5, 6};
    int rp[] = {1, 1, 1, 1, 1, 1, 5, 5, 5, 6, 6, 6, 2, 2, 3, 3, 4, 4};
    for (int e = 0; e < 18; ++e)
        M.quads.push_back({bs[e] - 1, ws[e] - 1, rs[e] - 1, rp[e] - 1});
    return M;
}

Constellation from_cycles(int n, const std::vector<std::vector<int>>& pos,
                          const std::vector<std::vector<int>>& neg) {
    Constellation c;
    c.n = n;
    c.s0.resize(n);
    c.s1.resize(n);
    for (const auto& cyc : pos)
        for (size_t k = 0; k < cyc.size(); ++k) c.s0[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
    for (const auto& cyc : neg)
        for (size_t k = 0; k < cyc.size(); ++k) c.s1[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
    return c;
}

Constellation dp3iv_constellation() {
    return from_cycles(18,
                       {{3, 7, 15}, {4, 12, 16}, {6, 9, 17}, {5, 11, 18}, {2, 8, 13}, {1, 10, 14}},
                       {{4, 8, 15}, {3, 10, 16}, {5, 7, 17}, {6, 12, 18}, {1, 9, 13}, {2, 11, 14}});
}

DessinData first_dessin(const IMat& B, uint64_t seed = 1) {
    auto L = validate_lattice(B);
    auto perf = find_perfect(enumerate_surfaces(L, seed).surfaces);
    REQUIRE(!perf.empty());
    return quadruple_list(perf[0]);
}

} // namespace

TEST_CASE("the printed dP3-IV table converts to the printed constellation") {
    DessinData M = dp3iv_table();
    Constellation c = constellation_from_list(M);
    CHECK(canonical_constellation(c) == canonical_constellation(dp3iv_constellation()));
}

TEST_CASE("our dP3-IV dessin is isomorphic to the printed one") {
    DessinData ours = first_dessin(kB10);
    CHECK(ours.quads.size() == 18);
    CHECK(ours.blacks == 6);
    CHECK(canonical_dessin(ours) == canonical_dessin(dp3iv_table()));
    // every {r, r'} pair count equals |det|
    auto L = validate_lattice(kB10);
    std::map<std::pair<int, int>, Int> cnt;
    for (const auto& q : ours.quads) {
        cnt[{std::min(q.r, q.rp), std::max(q.r, q.rp)}]++;
        CHECK(col_det(L, q.r, q.rp) > 0); // orientation convention
    }
    for (auto& [t, c] : cnt) CHECK(c == std::abs(col_det(L, t.first, t.second)));
}

TEST_CASE("superpotential rendering of the printed constellation") {
    Superpotential w = superpotential(dp3iv_constellation());
    CHECK(format_superpotential(w) ==
          "X1*X10*X14 + X2*X8*X13 + X3*X7*X15 + X4*X12*X16 + X5*X11*X18 + X6*X9*X17"
          " - X1*X9*X13 - X2*X11*X14 - X3*X10*X16 - X4*X8*X15 - X5*X7*X17 - X6*X12*X18");
    for (const auto& cyc : w.pos) CHECK(cyc.size() == 3);
    for (const auto& cyc : w.neg) CHECK(cyc.size() == 3);
}

TEST_CASE("list <-> constellation round trip") {
    for (const auto& c : {dp3iv_constellation(),
                          constellation_from_list(first_dessin(kB2))}) {
        DessinData M = list_from_constellation(c);
        Constellation c2 = constellation_from_list(M);
        CHECK(canonical_constellation(c) == canonical_constellation(c2));
    }
    // smallest constellation: one 3-cycle pair
    Constellation tiny = from_cycles(3, {{1, 2, 3}}, {{1, 2, 3}});
    DessinData Mt = list_from_constellation(tiny);
    CHECK(Mt.quads.size() == 3);
    CHECK(Mt.blacks == 1);
    CHECK(Mt.whites == 1);
    // identity pair on more than one edge is not transitive
    Constellation bad;
    bad.n = 2;
    bad.s0 = {0, 1};
    bad.s1 = {0, 1};
    CHECK_THROWS(list_from_constellation(bad));
    CHECK_THROWS(superpotential(bad));
}

TEST_CASE("mirror flag inverts both permutations") {
    DessinData M = dp3iv_table();
    Constellation c = constellation_from_list(M, false);
    Constellation m = constellation_from_list(M, true);
    CHECK(m.s0 == permutation_inverse(c.s0));
    CHECK(m.s1 == permutation_inverse(c.s1));
}

TEST_CASE("pre-untwist constellation keeps the black-white pairs") {
    // Remark: replacing sigma1 by its inverse gives the torus dessin
    Constellation c = dp3iv_constellation();
    Constellation torus{c.n, c.s0, permutation_inverse(c.s1)};
    DessinData a = list_from_constellation(c);
    DessinData b = list_from_constellation(torus);
    std::multiset<std::pair<int, int>> pa, pb;
    for (const auto& q : a.quads) pa.insert({q.b, q.w});
    for (const auto& q : b.quads) pb.insert({q.b, q.w});
    CHECK(pa == pb);
}

TEST_CASE("critical weight from parallel arrows") {
    DessinData M1 = first_dessin(kB1);
    QuiverWeights qw1 = quiver_and_critical_weight(M1);
    CHECK(qw1.crit.size() == 9);
    for (Int c : qw1.crit) CHECK(c == 3);

    DessinData M2 = first_dessin(kB2);
    QuiverWeights qw2 = quiver_and_critical_weight(M2);
    std::multiset<Int> crit(qw2.crit.begin(), qw2.crit.end());
    CHECK(crit == std::multiset<Int>{1, 1, 1, 2, 2, 2, 2, 3, 3, 3});

    // reconstructed quiver = Plucker quiver
    for (const auto& B : {kB1, kB2, kB10}) {
        DessinData M = first_dessin(B);
        auto L = validate_lattice(B);
        QuiverWeights qw = quiver_and_critical_weight(M);
        IMat adj(L.N, IVec(L.N, 0));
        for (size_t e = 0; e < qw.source.size(); ++e) {
            adj[qw.source[e]][qw.target[e]] += 1;
            adj[qw.target[e]][qw.source[e]] -= 1;
        }
        CHECK(adj == plucker_form(L).C);
        // sum of crit per node pair is |det|^2
        std::map<std::pair<int, int>, Int> sums;
        for (size_t e = 0; e < qw.crit.size(); ++e)
            sums[{qw.source[e], qw.target[e]}] += qw.crit[e];
        for (auto& [t, s] : sums) {
            Int d = std::abs(col_det(L, t.first, t.second));
            CHECK(s == d * d);
        }
    }
}

TEST_CASE("genus equals the interior point count") {
    CHECK(genus(first_dessin(kB10)) == 1);
    CHECK(genus(first_dessin(kB2)) == 1);
    CHECK(genus(dp3iv_table()) == 1);
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(17);
    Constellation c = dp3iv_constellation();
    std::string canon = canonical_constellation(c);
    for (int it = 0; it < 5; ++it) {
        std::vector<int> phi(c.n);
        for (int i = 0; i < c.n; ++i) phi[i] = i;
        std::shuffle(phi.begin(), phi.end(), rng);
        Constellation r;
        r.n = c.n;
        r.s0.resize(c.n);
        r.s1.resize(c.n);
        for (int e = 0; e < c.n; ++e) {
            r.s0[phi[e]] = phi[c.s0[e]];
            r.s1[phi[e]] = phi[c.s1[e]];
        }
        CHECK(canonical_constellation(r) == canon);
    }
}

TEST_CASE("genus with a multi-component zigzag structure") {
    // parallel non-primitive columns: one red point per zigzag component
    DessinData M = first_dessin({{1, 1, 0, -2, 0}, {0, 0, 1, 1, -2}});
    CHECK(genus(M) == 1);
}
