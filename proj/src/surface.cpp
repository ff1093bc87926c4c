#include "dimerkit/surface.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dimerkit {

namespace {

constexpr long long kOffsetPrime = 10007;

// z_i(x, y) = lambda_i + x B[0][i] + y B[1][i]; grid line (i, k) is z_i = k.
// Intersection of lines (i, k) and (j, m) for non-parallel families.
struct GridPoint {
    Rat x, y;
};

std::optional<GridPoint> intersect(const LatticeEmbedding& L, const GridOffset& off,
                                   int i, Int k, int j, Int m) {
    Int det = L.B[0][i] * L.B[1][j] - L.B[1][i] * L.B[0][j];
    if (det == 0) return std::nullopt;
    Rat rhs1 = Rat(k) - off.lambda[i];
    Rat rhs2 = Rat(m) - off.lambda[j];
    Rat x = (rhs1 * Rat(L.B[1][j]) - rhs2 * Rat(L.B[1][i])) / Rat(det);
    Rat y = (Rat(L.B[0][i]) * rhs2 - Rat(L.B[0][j]) * rhs1) / Rat(det);
    return GridPoint{x, y};
}

Rat coord_at(const LatticeEmbedding& L, const GridOffset& off, int i, const GridPoint& p) {
    return off.lambda[i] + p.x * Rat(L.B[0][i]) + p.y * Rat(L.B[1][i]);
}

// integer range of z_i over the closed unit square in (x, y)
std::pair<Int, Int> line_range(const LatticeEmbedding& L, const GridOffset& off, int i) {
    Rat lo = off.lambda[i], hi = off.lambda[i];
    for (Int c : {L.B[0][i], L.B[1][i]}) {
        if (c > 0) hi = hi + Rat(c);
        else lo = lo + Rat(c);
    }
    return {lo.floor(), hi.floor() + 1};
}

} // namespace

bool is_nonresonant(const LatticeEmbedding& L, const GridOffset& off) {
    if ((int)off.lambda.size() != L.N)
        throw std::invalid_argument("offset length mismatch");
    // coinciding lines within parallel families
    for (int i = 0; i < L.N; ++i)
        for (int j = i + 1; j < L.N; ++j) {
            if (col_det(L, i, j) != 0) continue;
            // b_j = (p/q) b_i; lines coincide iff p*lambda_i - q*lambda_j is integral
            auto bi = L.col(i);
            auto bj = L.col(j);
            Int p = 0, q = 0;
            if (bi[0] != 0) { p = bj[0]; q = bi[0]; }
            else { p = bj[1]; q = bi[1]; }
            Int g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
            p /= g; q /= g;
            Rat t = Rat(p) * off.lambda[i] - Rat(q) * off.lambda[j];
            if (t.is_integer()) return false;
        }
    // triple points: every pairwise intersection in the fundamental domain is
    // tested against every third family
    for (int i = 0; i < L.N; ++i)
        for (int j = i + 1; j < L.N; ++j) {
            if (col_det(L, i, j) == 0) continue;
            auto [klo, khi] = line_range(L, off, i);
            auto [mlo, mhi] = line_range(L, off, j);
            for (Int k = klo; k <= khi; ++k)
                for (Int m = mlo; m <= mhi; ++m) {
                    auto pt = intersect(L, off, i, k, j, m);
                    if (!pt) continue;
                    if (pt->x < Rat(0) || pt->x >= Rat(1)) continue;
                    if (pt->y < Rat(0) || pt->y >= Rat(1)) continue;
                    for (int l = 0; l < L.N; ++l) {
                        if (l == i || l == j) continue;
                        if (coord_at(L, off, l, *pt).is_integer()) return false;
                    }
                }
        }
    return true;
}

GridOffset random_offset(const LatticeEmbedding& L, uint64_t seed, int max_tries) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(1, kOffsetPrime - 1);
    for (int t = 0; t < max_tries; ++t) {
        GridOffset off;
        off.lambda.reserve(L.N);
        for (int i = 0; i < L.N; ++i) off.lambda.push_back(Rat(dist(rng), kOffsetPrime));
        if (is_nonresonant(L, off)) return off;
    }
    throw std::runtime_error("random_offset: no non-resonant offset found");
}

bool DiscreteSurface::vertex_present(const IVec& key) const {
    return std::binary_search(verts.begin(), verts.end(), key);
}

int DiscreteSurface::square_index(const IVec& base, int i, int j) const {
    for (size_t s = 0; s < squares.size(); ++s)
        if (squares[s].i == i && squares[s].j == j && squares[s].base == base) return (int)s;
    return -1;
}

std::string DiscreteSurface::canonical_form() const {
    // The flip moves can translate a surface by vectors of Z^N (the grid
    // surfaces of lambda and lambda + e_1 are translates of each other), so
    // the enumerated list is only finite modulo translation. Canonicalize by
    // translating each vertex in turn to the origin of Z^N / L and keeping
    // the least encoding.
    const IVec& d = ctx->coset.diag();
    int n = ctx->L.N;
    auto sub = [&](const IVec& a, const IVec& b) {
        IVec r(n);
        for (int k = 0; k < n; ++k) r[k] = a[k] - b[k];
        for (int k = 0; k < 2; ++k) {
            Int m = r[k] % d[k];
            if (m < 0) m += d[k];
            r[k] = m;
        }
        return r;
    };
    std::string best;
    for (const auto& v : verts) {
        std::vector<std::tuple<int, int, IVec>> enc;
        for (const auto& sq : squares) enc.emplace_back(sq.i, sq.j, sub(sq.base, v));
        std::sort(enc.begin(), enc.end());
        std::ostringstream os;
        for (const auto& [i, j, base] : enc) {
            os << i << ',' << j << ':';
            for (Int x : base) os << x << ',';
            os << ';';
        }
        std::string s = os.str();
        if (best.empty() || s < best) best = s;
    }
    return best;
}

DiscreteSurface surface_from_vertices(std::shared_ptr<const SurfaceContext> ctx,
                                      std::vector<IVec> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    DiscreteSurface S;
    S.ctx = std::move(ctx);
    S.verts = std::move(verts);
    const auto& coset = S.ctx->coset;
    int N = S.ctx->L.N;
    for (const auto& v : S.verts)
        for (int i = 0; i < N; ++i) {
            IVec vi = coset.key_shift(v, i, +1);
            if (!S.vertex_present(vi)) continue;
            for (int j = i + 1; j < N; ++j) {
                IVec vj = coset.key_shift(v, j, +1);
                if (!S.vertex_present(vj)) continue;
                IVec vij = coset.key_shift(vi, j, +1);
                if (!S.vertex_present(vij)) continue;
                S.squares.push_back({v, i, j});
            }
        }
    std::sort(S.squares.begin(), S.squares.end(), [](const auto& a, const auto& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.base < b.base;
    });
    return S;
}

DiscreteSurface initial_surface(const LatticeEmbedding& L, const GridOffset& offset) {
    return initial_surface(std::make_shared<SurfaceContext>(L), offset);
}

DiscreteSurface initial_surface(std::shared_ptr<const SurfaceContext> ctx,
                                const GridOffset& off) {
    const LatticeEmbedding& L = ctx->L;
    if (!is_nonresonant(L, off))
        throw std::invalid_argument("initial_surface: offset is resonant");
    std::vector<IVec> verts;
    size_t nsquares = 0;
    for (int i = 0; i < L.N; ++i)
        for (int j = i + 1; j < L.N; ++j) {
            if (col_det(L, i, j) == 0) continue;
            auto [klo, khi] = line_range(L, off, i);
            auto [mlo, mhi] = line_range(L, off, j);
            for (Int k = klo; k <= khi; ++k)
                for (Int m = mlo; m <= mhi; ++m) {
                    auto pt = intersect(L, off, i, k, j, m);
                    if (!pt) continue;
                    if (pt->x < Rat(0) || pt->x >= Rat(1)) continue;
                    if (pt->y < Rat(0) || pt->y >= Rat(1)) continue;
                    // floor image of the intersection point: exact integers on
                    // families i and j, floors elsewhere
                    IVec top(L.N);
                    for (int l = 0; l < L.N; ++l) {
                        if (l == i) top[l] = k;
                        else if (l == j) top[l] = m;
                        else top[l] = coord_at(L, off, l, *pt).floor();
                    }
                    ++nsquares;
                    IVec key = ctx->coset.key(top);
                    verts.push_back(key);
                    verts.push_back(ctx->coset.key_shift(key, i, -1));
                    verts.push_back(ctx->coset.key_shift(key, j, -1));
                    verts.push_back(
                        ctx->coset.key_shift(ctx->coset.key_shift(key, i, -1), j, -1));
                }
        }
    DiscreteSurface S = surface_from_vertices(ctx, std::move(verts));
    if (S.squares.size() != nsquares)
        throw std::runtime_error("initial_surface: square set inconsistent with grid");
    return S;
}

std::vector<ElementarySite> elementary_sites(const DiscreteSurface& S) {
    const auto& coset = S.ctx->coset;
    int N = S.ctx->L.N;
    std::vector<ElementarySite> sites;
    for (const auto& v : S.verts) {
        ElementarySite site;
        site.p0 = v;
        int found = 0;
        bool over = false;
        for (int i = 0; i < N && !over; ++i)
            for (int dir : {+1, -1}) {
                if (S.vertex_present(coset.key_shift(v, i, dir))) {
                    if (found == 3) { over = true; break; }
                    site.var[found] = i;
                    site.dir[found] = dir;
                    ++found;
                }
            }
        if (over || found != 3) continue;
        // far corners p_a + p_b - p_0 for all three pairs
        bool ok = true;
        for (int a = 0; a < 3 && ok; ++a)
            for (int b = a + 1; b < 3 && ok; ++b) {
                IVec far = coset.key_shift(coset.key_shift(v, site.var[a], site.dir[a]),
                                           site.var[b], site.dir[b]);
                ok = S.vertex_present(far);
            }
        if (ok) sites.push_back(site);
    }
    return sites;
}

DiscreteSurface apply_elementary(const DiscreteSurface& S, const ElementarySite& site) {
    const auto& coset = S.ctx->coset;
    if (!S.vertex_present(site.p0)) throw std::invalid_argument("stale site");
    // p' = p1 + p2 + p3 - 2 p0 = p0 + sum of the three neighbor steps
    IVec pnew = site.p0;
    for (int a = 0; a < 3; ++a) pnew = coset.key_shift(pnew, site.var[a], site.dir[a]);
    std::vector<IVec> verts;
    verts.reserve(S.verts.size());
    for (const auto& v : S.verts)
        if (v != site.p0) verts.push_back(v);
    verts.push_back(pnew);
    DiscreteSurface out = surface_from_vertices(S.ctx, std::move(verts));
    if (out.squares.size() != S.squares.size() || out.verts.size() != S.verts.size())
        throw std::runtime_error("apply_elementary: cell counts changed");
    return out;
}

EnumerationResult enumerate_surfaces(const LatticeEmbedding& L, uint64_t seed, size_t cap) {
    auto ctx = std::make_shared<SurfaceContext>(L);
    return enumerate_surfaces(ctx, random_offset(L, seed), cap);
}

EnumerationResult enumerate_surfaces(std::shared_ptr<const SurfaceContext> ctx,
                                     const GridOffset& offset, size_t cap) {
    EnumerationResult res;
    res.offset = offset;
    DiscreteSurface first = initial_surface(ctx, offset);
    std::set<std::string> seen;
    seen.insert(first.canonical_form());
    std::deque<DiscreteSurface> frontier;
    frontier.push_back(first);
    res.surfaces.push_back(std::move(first));
    while (!frontier.empty()) {
        DiscreteSurface cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& site : elementary_sites(cur)) {
            DiscreteSurface nxt = apply_elementary(cur, site);
            std::string key = nxt.canonical_form();
            if (seen.count(key)) continue;
            if (seen.size() >= cap)
                throw CapExceeded("enumerate_surfaces: cap of " +
                                  std::to_string(cap) + " surfaces exceeded");
            seen.insert(std::move(key));
            frontier.push_back(nxt);
            res.surfaces.push_back(std::move(nxt));
        }
    }
    return res;
}

std::optional<PerfectColoring> perfect_coloring(const DiscreteSurface& S) {
    const auto& coset = S.ctx->coset;
    std::map<Int, int> values;
    for (const auto& v : S.verts) values[coset.coordinate_sum(v)]++;
    if (values.size() != 3) return std::nullopt;
    auto it = values.begin();
    Int lo = it->first;
    Int mid = std::next(it)->first;
    Int hi = std::next(it, 2)->first;
    if (mid - lo != 1 || hi - mid != 1)
        throw std::runtime_error("perfect surface values are not consecutive");
    PerfectColoring pc;
    pc.mid = mid;
    pc.color.resize(S.verts.size());
    for (size_t k = 0; k < S.verts.size(); ++k) {
        Int s = coset.coordinate_sum(S.verts[k]);
        pc.color[k] = (s == mid) ? 0 : (s > mid ? +1 : -1);
        if (pc.color[k] > 0) pc.blacks.push_back((int)k);
        if (pc.color[k] < 0) pc.whites.push_back((int)k);
    }
    return pc;
}

std::vector<DiscreteSurface> find_perfect(const std::vector<DiscreteSurface>& all) {
    std::vector<DiscreteSurface> out;
    for (const auto& s : all)
        if (perfect_coloring(s)) out.push_back(s);
    return out;
}

std::vector<ZigzagLoop> zigzag_loops(const DiscreteSurface& S) {
    const auto& coset = S.ctx->coset;
    const LatticeEmbedding& L = S.ctx->L;
    // side (base key, type) -> incident squares
    std::map<std::pair<IVec, int>, std::vector<int>> side_squares;
    for (size_t s = 0; s < S.squares.size(); ++s) {
        const auto& sq = S.squares[s];
        IVec vi = coset.key_shift(sq.base, sq.i, +1);
        IVec vj = coset.key_shift(sq.base, sq.j, +1);
        side_squares[{sq.base, sq.i}].push_back((int)s);
        side_squares[{vj, sq.i}].push_back((int)s);
        side_squares[{sq.base, sq.j}].push_back((int)s);
        side_squares[{vi, sq.j}].push_back((int)s);
    }
    for (const auto& [side, sqs] : side_squares)
        if (sqs.size() != 2)
            throw std::runtime_error("surface is not closed: side not shared by 2 squares");

    std::vector<ZigzagLoop> loops;
    for (int i = 0; i < L.N; ++i) {
        ZigzagLoop loop;
        loop.index = i;
        std::vector<int> todo;
        for (size_t s = 0; s < S.squares.size(); ++s)
            if (S.squares[s].i == i || S.squares[s].j == i) todo.push_back((int)s);
        std::set<int> unvisited(todo.begin(), todo.end());
        while (!unvisited.empty()) {
            int start = *unvisited.begin();
            std::vector<int> comp;
            int cur = start;
            do {
                comp.push_back(cur);
                unvisited.erase(cur);
                const auto& sq = S.squares[cur];
                int other = (sq.i == i) ? sq.j : sq.i;
                Int d = col_det(L, i, other);
                // segment of loop i crosses the two e_i-parallel sides,
                // oriented as sign(det(b_i, b_other)) * e_other
                IVec exit_side = (d > 0) ? coset.key_shift(sq.base, other, +1) : sq.base;
                const auto& pair = side_squares.at({exit_side, i});
                cur = (pair[0] == cur) ? pair[1] : pair[0];
                // the flow through the next square must enter where we exited
                const auto& nsq = S.squares[cur];
                int nother = (nsq.i == i) ? nsq.j : nsq.i;
                Int nd = col_det(L, i, nother);
                IVec entry = (nd > 0) ? nsq.base : coset.key_shift(nsq.base, nother, +1);
                if (entry != exit_side)
                    throw std::runtime_error("zigzag orientation inconsistent");
            } while (cur != start);
            loop.components.push_back(std::move(comp));
        }
        loops.push_back(std::move(loop));
    }
    return loops;
}

} // namespace dimerkit
