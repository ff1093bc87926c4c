#include "dimerkit/dessin.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dimerkit {

namespace {

// A cyclic set of the conversion procedure: elements listed in one of the two
// cyclic orders; orient = 0 while the orientation is still unknown.
struct CyclicSet {
    std::vector<int> elems;
    int orient = 0;
    int kind = 0; // 0 black, 1 white, 2 zigzag

    int size() const { return (int)elems.size(); }
    int pos_of(int e) const {
        auto it = std::find(elems.begin(), elems.end(), e);
        return it == elems.end() ? -1 : (int)(it - elems.begin());
    }
    int succ(int e) const {
        int p = pos_of(e);
        int n = size();
        return orient >= 0 ? elems[(p + 1) % n] : elems[(p + n - 1) % n];
    }
    bool cycle_adjacent(int e, int f) const {
        int n = size();
        int p = pos_of(e), q = pos_of(f);
        if (n < 2 || p < 0 || q < 0) return false;
        return (p + 1) % n == q || (q + 1) % n == p;
    }
};

// Extract the unique cyclic order of a set whose neighbor relation is given
// by `adj`. Sizes <= 2 are trivially cyclic; larger sets must induce a single
// cycle (every element exactly two neighbors).
CyclicSet make_cycle(const std::vector<int>& members,
                     const std::function<bool(int, int)>& adj) {
    CyclicSet cs;
    int n = (int)members.size();
    if (n <= 2) {
        cs.elems = members;
        cs.orient = 1; // no orientation information in a 1- or 2-cycle
        return cs;
    }
    std::map<int, std::vector<int>> nb;
    for (int a : members)
        for (int b : members) {
            if (a == b) continue;
            if (adj(a, b)) nb[a].push_back(b);
        }
    for (int a : members)
        if ((int)nb[a].size() != 2)
            throw std::runtime_error("dessin: ambiguous neighbor structure");
    cs.elems.push_back(members.front());
    cs.elems.push_back(nb[members.front()][0]);
    while ((int)cs.elems.size() < n) {
        int cur = cs.elems.back();
        int prev = cs.elems[cs.elems.size() - 2];
        int nxt = (nb[cur][0] == prev) ? nb[cur][1] : nb[cur][0];
        cs.elems.push_back(nxt);
    }
    int last = cs.elems.back();
    if (nb[last][0] != cs.elems.front() && nb[last][1] != cs.elems.front())
        throw std::runtime_error("dessin: neighbor relation is not a single cycle");
    return cs;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& perm) {
    int n = (int)perm.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> cycles;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int cur = i;
        while (!seen[cur]) {
            seen[cur] = true;
            cyc.push_back(cur);
            cur = perm[cur];
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

std::vector<int> permutation_inverse(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = (int)i;
    return inv;
}

std::vector<int> permutation_compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

bool constellation_transitive(const Constellation& c) {
    if (c.n == 0) return false;
    std::vector<bool> seen(c.n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : {c.s0[x], c.s1[x]})
            if (!seen[y]) {
                seen[y] = true;
                ++count;
                stack.push_back(y);
            }
    }
    return count == c.n;
}

DessinData quadruple_list(const DiscreteSurface& S) {
    auto pc = perfect_coloring(S);
    if (!pc) throw std::invalid_argument("quadruple_list: surface is not perfect");
    const auto& coset = S.ctx->coset;
    const LatticeEmbedding& L = S.ctx->L;

    std::vector<IVec> black_keys, white_keys;
    for (int k : pc->blacks) black_keys.push_back(S.verts[k]);
    for (int k : pc->whites) white_keys.push_back(S.verts[k]);
    std::sort(black_keys.begin(), black_keys.end());
    std::sort(white_keys.begin(), white_keys.end());

    DessinData M;
    M.N = L.N;
    M.blacks = (int)black_keys.size();
    M.whites = (int)white_keys.size();
    for (const auto& sq : S.squares) {
        // base corner is white, opposite corner is black
        if (coset.coordinate_sum(sq.base) != pc->mid - 1)
            throw std::runtime_error("quadruple_list: square base is not white");
        IVec top = coset.key_shift(coset.key_shift(sq.base, sq.i, +1), sq.j, +1);
        int b = (int)(std::lower_bound(black_keys.begin(), black_keys.end(), top) -
                      black_keys.begin());
        int w = (int)(std::lower_bound(white_keys.begin(), white_keys.end(), sq.base) -
                      white_keys.begin());
        DessinData::Quad q;
        q.b = b;
        q.w = w;
        // (r, r') ordered so that det(b_r, b_r') > 0
        if (col_det(L, sq.i, sq.j) > 0) { q.r = sq.i; q.rp = sq.j; }
        else { q.r = sq.j; q.rp = sq.i; }
        M.quads.push_back(q);
    }
    std::sort(M.quads.begin(), M.quads.end(), [](const auto& a, const auto& b) {
        return std::tie(a.r, a.rp, a.b, a.w) < std::tie(b.r, b.rp, b.b, b.w);
    });
    return M;
}

Constellation constellation_from_list(const DessinData& M, bool flip) {
    int n = (int)M.quads.size();
    if (n == 0) throw std::invalid_argument("constellation: empty data");
    auto share_type = [&](int a, int b) {
        const auto& qa = M.quads[a];
        const auto& qb = M.quads[b];
        return qa.r == qb.r || qa.r == qb.rp || qa.rp == qb.r || qa.rp == qb.rp;
    };
    auto share_cell = [&](int a, int b) {
        return M.quads[a].b == M.quads[b].b || M.quads[a].w == M.quads[b].w;
    };

    // cyclic sets: one per black cell, one per white cell, one per connected
    // component of each |z_i|
    std::vector<CyclicSet> sets;
    std::vector<int> bset(M.blacks, -1), wset(M.whites, -1);
    {
        std::map<int, std::vector<int>> by_b, by_w, by_z;
        for (int e = 0; e < n; ++e) {
            by_b[M.quads[e].b].push_back(e);
            by_w[M.quads[e].w].push_back(e);
            by_z[M.quads[e].r].push_back(e);
            by_z[M.quads[e].rp].push_back(e);
        }
        for (auto& [b, members] : by_b) {
            bset[b] = (int)sets.size();
            sets.push_back(make_cycle(members, share_type));
            sets.back().kind = 0;
        }
        for (auto& [w, members] : by_w) {
            wset[w] = (int)sets.size();
            sets.push_back(make_cycle(members, share_type));
            sets.back().kind = 1;
        }
        for (auto& [i, members] : by_z) {
            // split into connected components of the share_cell relation
            std::vector<int> rest = members;
            while (!rest.empty()) {
                std::vector<int> comp{rest.front()};
                rest.erase(rest.begin());
                bool grew = true;
                while (grew) {
                    grew = false;
                    for (auto it = rest.begin(); it != rest.end();) {
                        bool touches = false;
                        for (int c : comp)
                            if (share_cell(c, *it)) { touches = true; break; }
                        if (touches) {
                            comp.push_back(*it);
                            it = rest.erase(it);
                            grew = true;
                        } else ++it;
                    }
                }
                sets.push_back(make_cycle(sorted_unique(comp), share_cell));
                sets.back().kind = 2;
            }
        }
    }

    // membership index: which sets contain a given edge
    std::vector<std::vector<int>> sets_of(n);
    for (size_t s = 0; s < sets.size(); ++s)
        for (int e : sets[s].elems) sets_of[e].push_back((int)s);

    // seed: the first set of size >= 3 (the spec's loop-1 orientation);
    // orientation +1 as extracted
    std::vector<int> queue;
    for (auto& cs : sets)
        if (cs.orient != 0) queue.push_back((int)(&cs - sets.data()));
    bool seeded = false;
    for (size_t s = 0; s < sets.size(); ++s)
        if (sets[s].orient == 0 && !seeded) {
            sets[s].orient = 1;
            queue.push_back((int)s);
            seeded = true;
        }
    // Propagate: a consecutive pair of an oriented set of size >= 3 fixes the
    // orientation of every other set in which the pair is cycle-adjacent.
    // Around a black cell the successor satisfies r(next) = r'(cur), around a
    // white cell the relation is inverted, so transport between a black and a
    // white set reverses the direction; all other combinations keep it.
    // Zigzag-to-zigzag pairs carry no independent information (such a pair
    // already shares a black or white set) and are skipped.
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        const CyclicSet& X = sets[queue[qi]];
        if (X.size() <= 2) continue;
        for (int idx = 0; idx < X.size(); ++idx) {
            int e = X.elems[idx];
            int f = X.succ(e);
            for (int sY : sets_of[e]) {
                if (sY == queue[qi]) continue;
                CyclicSet& Y = sets[sY];
                if (Y.size() <= 2) continue;
                if (X.kind == 2 && Y.kind == 2) continue;
                if (!Y.cycle_adjacent(e, f)) continue;
                int flip = (X.kind + Y.kind == 1) ? -1 : 1; // black <-> white
                int want = ((Y.pos_of(e) + 1) % Y.size() == Y.pos_of(f)) ? 1 : -1;
                want *= flip;
                if (Y.orient == 0) {
                    Y.orient = want;
                    queue.push_back(sY);
                } else if (Y.orient != want) {
                    throw std::runtime_error("constellation: inconsistent orientations");
                }
            }
        }
    }
    for (int b = 0; b < M.blacks; ++b)
        if (sets[bset[b]].orient == 0)
            throw std::runtime_error("constellation: orientation propagation stalled");
    for (int w = 0; w < M.whites; ++w)
        if (sets[wset[w]].orient == 0)
            throw std::runtime_error("constellation: orientation propagation stalled");

    Constellation c;
    c.n = n;
    c.s0.resize(n);
    c.s1.resize(n);
    for (int b = 0; b < M.blacks; ++b)
        for (int e : sets[bset[b]].elems) c.s0[e] = sets[bset[b]].succ(e);
    for (int w = 0; w < M.whites; ++w) {
        // sigma1 inverts the white cycles
        for (int e : sets[wset[w]].elems) c.s1[sets[wset[w]].succ(e)] = e;
    }
    if (!constellation_transitive(c))
        throw std::runtime_error("constellation: data is not transitive");

    // Fix the global orientation against the quadruples: along both sigma0
    // and sigma1 the outgoing type of e is the incoming type of its image.
    auto consistent = [&](const Constellation& cc) {
        for (int e = 0; e < n; ++e) {
            if (M.quads[cc.s1[e]].r != M.quads[e].rp) return false;
            if (M.quads[cc.s0[e]].r != M.quads[e].rp) return false;
        }
        return true;
    };
    if (!consistent(c)) {
        c.s0 = permutation_inverse(c.s0);
        c.s1 = permutation_inverse(c.s1);
        if (!consistent(c))
            throw std::runtime_error("constellation: cannot match quadruple orientation");
    }
    if (flip) {
        c.s0 = permutation_inverse(c.s0);
        c.s1 = permutation_inverse(c.s1);
    }
    return c;
}

DessinData list_from_constellation(const Constellation& c) {
    if (!constellation_transitive(c))
        throw std::invalid_argument("list_from_constellation: not transitive");
    DessinData M;
    auto label_by_cycles = [](const std::vector<std::vector<int>>& cycles, int n) {
        std::vector<int> lab(n, -1);
        for (size_t k = 0; k < cycles.size(); ++k)
            for (int e : cycles[k]) lab[e] = (int)k;
        return lab;
    };
    auto c0 = permutation_cycles(c.s0);
    auto c1 = permutation_cycles(c.s1);
    auto cr = permutation_cycles(permutation_compose(c.s0, permutation_inverse(c.s1)));
    auto lb = label_by_cycles(c0, c.n);
    auto lw = label_by_cycles(c1, c.n);
    auto lr = label_by_cycles(cr, c.n);
    M.N = (int)cr.size();
    M.blacks = (int)c0.size();
    M.whites = (int)c1.size();
    for (int e = 0; e < c.n; ++e) {
        DessinData::Quad q;
        q.b = lb[e];
        q.w = lw[e];
        q.r = lr[e];
        q.rp = lr[c.s1[e]];
        M.quads.push_back(q);
    }
    std::sort(M.quads.begin(), M.quads.end(), [](const auto& a, const auto& b) {
        return std::tie(a.r, a.rp, a.b, a.w) < std::tie(b.r, b.rp, b.b, b.w);
    });
    return M;
}

Superpotential superpotential(const Constellation& c) {
    if (!constellation_transitive(c))
        throw std::invalid_argument("superpotential: not transitive");
    auto rotate_min = [](std::vector<int> cyc) {
        auto it = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), it, cyc.end());
        return cyc;
    };
    Superpotential w;
    for (auto& cyc : permutation_cycles(c.s0)) w.pos.push_back(rotate_min(cyc));
    for (auto& cyc : permutation_cycles(c.s1)) w.neg.push_back(rotate_min(cyc));
    std::sort(w.pos.begin(), w.pos.end());
    std::sort(w.neg.begin(), w.neg.end());
    return w;
}

std::string format_superpotential(const Superpotential& w) {
    std::ostringstream os;
    auto term = [&](const std::vector<int>& cyc) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) os << "*";
            os << "X" << (cyc[i] + 1);
        }
    };
    for (size_t k = 0; k < w.pos.size(); ++k) {
        if (k) os << " + ";
        term(w.pos[k]);
    }
    for (const auto& cyc : w.neg) {
        os << " - ";
        term(cyc);
    }
    return os.str();
}

QuiverWeights quiver_and_critical_weight(const DessinData& M) {
    QuiverWeights qw;
    std::map<std::pair<int, int>, Int> parallel;
    for (const auto& q : M.quads) parallel[{q.r, q.rp}]++;
    for (const auto& q : M.quads) {
        qw.source.push_back(q.r);
        qw.target.push_back(q.rp);
        qw.crit.push_back(parallel[{q.r, q.rp}]);
    }
    return qw;
}

int genus(const DessinData& M) {
    if (M.blacks != M.whites)
        throw std::invalid_argument("genus: black and white counts differ");
    // Cells of the square-tiled surface: blacks + whites + red points,
    // 2#tiles edges, #tiles faces. Red points are the cycles of
    // sigma0 sigma1^{-1}; when every zigzag loop is connected there are
    // exactly N of them, and a loop with several components contributes one
    // red point per component (the label-merged space would be pinched).
    Constellation c = constellation_from_list(M);
    Int reds = (Int)permutation_cycles(
                   permutation_compose(c.s0, permutation_inverse(c.s1)))
                   .size();
    Int tiles = (Int)M.quads.size();
    Int chi = (Int)M.blacks + (Int)M.whites + reds - tiles; // V - 2F + F
    Int g2 = 2 - chi;
    if (g2 < 0 || g2 % 2 != 0) throw std::runtime_error("genus: odd Euler characteristic");
    return (int)(g2 / 2);
}

std::string canonical_constellation(const Constellation& c) {
    if (!constellation_transitive(c))
        throw std::invalid_argument("canonical_constellation: not transitive");
    std::string best;
    for (int seed = 0; seed < c.n; ++seed) {
        std::vector<int> label(c.n, -1), order;
        label[seed] = 0;
        order.push_back(seed);
        for (size_t k = 0; k < order.size(); ++k) {
            int x = order[k];
            for (int y : {c.s0[x], c.s1[x]})
                if (label[y] < 0) {
                    label[y] = (int)order.size();
                    order.push_back(y);
                }
        }
        std::ostringstream os;
        for (int k = 0; k < c.n; ++k) os << label[c.s0[order[k]]] << ",";
        os << "|";
        for (int k = 0; k < c.n; ++k) os << label[c.s1[order[k]]] << ",";
        std::string enc = os.str();
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

std::string canonical_dessin(const DessinData& M) {
    return canonical_constellation(constellation_from_list(M));
}

} // namespace dimerkit
