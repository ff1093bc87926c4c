#include "dimerkit/secondary.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dimerkit {

namespace {

Int cross(const std::array<Int, 2>& a, const std::array<Int, 2>& b) {
    return a[0] * b[1] - a[1] * b[0];
}

// angular half: 0 for angle in [0, pi), 1 for [pi, 2pi)
int half_of(const std::array<Int, 2>& v) {
    if (v[1] > 0) return 0;
    if (v[1] < 0) return 1;
    return v[0] > 0 ? 0 : 1;
}

// strict counterclockwise comparison of directions starting at the +x axis
bool angle_less(const std::array<Int, 2>& a, const std::array<Int, 2>& b) {
    int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

std::array<Int, 2> primitive(std::array<Int, 2> v) {
    Int g = std::gcd(v[0] < 0 ? -v[0] : v[0], v[1] < 0 ? -v[1] : v[1]);
    return {v[0] / g, v[1] / g};
}

} // namespace

SecondaryFan secondary_fan(const LatticeEmbedding& L) {
    // distinct ray directions, each carrying the column indices on it
    std::vector<std::pair<std::array<Int, 2>, std::vector<int>>> rays;
    for (int i = 0; i < L.N; ++i) {
        auto dir = primitive(L.col(i));
        bool found = false;
        for (auto& [d, idxs] : rays)
            if (d == dir) {
                idxs.push_back(i);
                found = true;
            }
        if (!found) rays.push_back({dir, {i}});
    }
    std::sort(rays.begin(), rays.end(),
              [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });

    SecondaryFan fan;
    int R = (int)rays.size();
    for (int r = 0; r < R; ++r) {
        const auto& right = rays[r];
        const auto& left = rays[(r + 1) % R];
        SecondaryCone cone;
        cone.ray_right = right.second.front();
        cone.ray_left = left.second.front();
        cone.right_indices = right.second;
        cone.left_indices = left.second;
        // {k,l} is in L_C iff the positive span of b_k, b_l contains the
        // cone, i.e. both boundary rays lie in it: for the ordering with
        // det(b_k, b_l) > 0 this reads det(b_k, b) >= 0 and det(b, b_l) >= 0
        // for b = b_i and b = b_j.
        auto bi = L.col(cone.ray_right);
        auto bj = L.col(cone.ray_left);
        for (int k = 0; k < L.N; ++k)
            for (int l = 0; l < L.N; ++l) {
                auto bk = L.col(k);
                auto bl = L.col(l);
                if (cross(bk, bl) <= 0) continue;
                if (cross(bk, bi) >= 0 && cross(bi, bl) >= 0 && cross(bk, bj) >= 0 &&
                    cross(bj, bl) >= 0)
                    cone.pairs.emplace_back(std::min(k, l), std::max(k, l));
            }
        std::sort(cone.pairs.begin(), cone.pairs.end());
        cone.pairs.erase(std::unique(cone.pairs.begin(), cone.pairs.end()), cone.pairs.end());
        cone.psi.assign(L.N, 0);
        for (auto [i, j] : cone.pairs) {
            Int d = col_det(L, i, j);
            if (d < 0) d = -d;
            cone.psi[i] += d;
            cone.psi[j] += d;
        }
        fan.cones.push_back(std::move(cone));
    }
    return fan;
}

LatticePolygon convex_hull_2d(std::vector<std::array<Int, 2>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    LatticePolygon poly;
    int n = (int)pts.size();
    if (n <= 2) {
        poly.vertices = pts;
        return poly;
    }
    // monotone chain, strict turns so collinear boundary points are dropped
    std::vector<std::array<Int, 2>> h(2 * n);
    int k = 0;
    auto turn = [](const std::array<Int, 2>& o, const std::array<Int, 2>& a,
                   const std::array<Int, 2>& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (int i = n - 2, lower = k + 1; i >= 0; --i) {
        while (k >= lower && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    poly.vertices = h;
    return poly;
}

Int polygon_twice_area(const LatticePolygon& p) {
    Int s = 0;
    int n = (int)p.vertices.size();
    for (int i = 0; i < n; ++i) {
        const auto& a = p.vertices[i];
        const auto& b = p.vertices[(i + 1) % n];
        s += a[0] * b[1] - a[1] * b[0];
    }
    return s;
}

Int polygon_boundary_points(const LatticePolygon& p) {
    int n = (int)p.vertices.size();
    if (n == 1) return 1;
    Int cnt = 0;
    for (int i = 0; i < n; ++i) {
        const auto& a = p.vertices[i];
        const auto& b = p.vertices[(i + 1) % n];
        cnt += std::gcd(std::abs(b[0] - a[0]), std::abs(b[1] - a[1]));
    }
    return cnt;
}

Int polygon_interior_points(const LatticePolygon& p) {
    // Pick: 2A = 2I + B - 2
    return (polygon_twice_area(p) - polygon_boundary_points(p) + 2) / 2;
}

SecondaryPolygon psi_vertices(const LatticeEmbedding& L, const SecondaryFan& fan) {
    SecondaryPolygon sp;
    for (const auto& c : fan.cones) sp.psi.push_back(c.psi);
    if (sp.psi.empty()) return sp;
    // map to coordinates in the L-plane: psi - psi_0 = v . B
    const IVec& base = sp.psi[0];
    std::vector<std::array<Int, 2>> pts2d;
    std::map<std::array<Int, 2>, IVec> back;
    for (const auto& q : sp.psi) {
        IVec diff(L.N);
        for (int i = 0; i < L.N; ++i) diff[i] = q[i] - base[i];
        auto v = solve_integer(imat_transpose(L.B), diff);
        if (!v) throw std::runtime_error("psi difference not in the lattice");
        std::array<Int, 2> p2{(*v)[0], (*v)[1]};
        pts2d.push_back(p2);
        back[p2] = q;
    }
    sp.hull2d = convex_hull_2d(pts2d);
    for (const auto& v : sp.hull2d.vertices) sp.vertices_zn.push_back(back[v]);
    std::sort(sp.vertices_zn.begin(), sp.vertices_zn.end());
    return sp;
}

DeltaPolygon delta_polygon(const LatticeEmbedding& L) {
    DeltaPolygon d;
    d.order.resize(L.N);
    std::iota(d.order.begin(), d.order.end(), 0);
    std::stable_sort(d.order.begin(), d.order.end(), [&](int a, int b) {
        auto ca = L.col(a), cb = L.col(b);
        int ha = half_of(ca), hb = half_of(cb);
        if (ha != hb) return ha < hb;
        Int cr = cross(ca, cb);
        if (cr != 0) return cr > 0;
        return a < b;
    });
    std::array<Int, 2> run{0, 0};
    std::vector<std::array<Int, 2>> pts;
    for (int idx : d.order) {
        auto c = L.col(idx);
        run[0] += c[0];
        run[1] += c[1];
        pts.push_back(run);
    }
    if (run != std::array<Int, 2>{0, 0})
        throw std::runtime_error("delta: partial sums do not close up");
    d.points = pts;
    d.hull = convex_hull_2d(pts);
    return d;
}

AreaInterior area_and_interior(const LatticeEmbedding& L, const SecondaryCone& C) {
    Int total = 0;
    for (int i = 0; i < L.N; ++i)
        for (int j = i + 1; j < L.N; ++j) total += std::abs(col_det(L, i, j));
    Int vol = 0;
    for (auto [i, j] : C.pairs) vol += std::abs(col_det(L, i, j));
    AreaInterior ai;
    ai.twice_area = total - 2 * vol;
    DeltaPolygon d = delta_polygon(L);
    if (polygon_twice_area(d.hull) != ai.twice_area)
        throw std::runtime_error("area formula disagrees with the polygon");
    // Pick's formula; when every column is primitive the boundary count is N
    // and this is the half-difference formula of the interior-point corollary
    ai.interior = polygon_interior_points(d.hull);
    return ai;
}

std::vector<IVec> secondary_polygon_via_delta(const LatticeEmbedding& L) {
    DeltaPolygon d = delta_polygon(L);
    SecondaryFan fan = secondary_fan(L);
    // cone whose left boundary carries the first reordered column
    int first = d.order[0];
    const SecondaryCone* cone = nullptr;
    for (const auto& c : fan.cones) {
        if (std::find(c.left_indices.begin(), c.left_indices.end(), first) !=
            c.left_indices.end()) {
            cone = &c;
            break;
        }
    }
    if (!cone) throw std::runtime_error("no cone left-bounded by the first ray");
    std::vector<IVec> out;
    for (const auto& p : d.points) {
        // quarter turn v -> vJ, i.e. (x, y) -> (-y, x), then embed
        std::array<Int, 2> r{-p[1], p[0]};
        IVec q(L.N);
        for (int i = 0; i < L.N; ++i)
            q[i] = r[0] * L.B[0][i] + r[1] * L.B[1][i] + cone->psi[i];
        out.push_back(q);
    }
    return out;
}

LatticeEmbedding lattice_from_polygon(const std::vector<std::array<Int, 2>>& points) {
    int N = (int)points.size();
    if (N < 3) throw std::invalid_argument("polygon: need at least 3 points");
    LatticePolygon hull = convex_hull_2d({points.begin(), points.end()});
    if ((int)hull.vertices.size() < 3 || polygon_twice_area(hull) <= 0)
        throw std::invalid_argument("polygon: degenerate (empty interior)");
    // all points must lie on the boundary, ordered counterclockwise
    Int doubled = 0;
    for (int i = 0; i < N; ++i) {
        const auto& a = points[i];
        const auto& b = points[(i + 1) % N];
        doubled += a[0] * b[1] - a[1] * b[0];
    }
    if (doubled != polygon_twice_area(hull))
        throw std::invalid_argument("polygon: points not counterclockwise on the boundary");
    // translate so the last point is the origin, then take step vectors
    std::array<Int, 2> last = points[N - 1];
    IMat B(2, IVec(N, 0));
    for (int i = 0; i < N; ++i) {
        std::array<Int, 2> cur{points[i][0] - last[0], points[i][1] - last[1]};
        std::array<Int, 2> prev{0, 0};
        if (i > 0) prev = {points[i - 1][0] - last[0], points[i - 1][1] - last[1]};
        B[0][i] = cur[0] - prev[0];
        B[1][i] = cur[1] - prev[1];
    }
    return validate_lattice(B);
}

} // namespace dimerkit
