#include "dimerkit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace dimerkit {

namespace {

const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                          "#ff7f00", "#a65628", "#f781bf", "#999999"};

struct Canvas {
    std::ostringstream body;
    double minx = 1e18, miny = 1e18, maxx = -1e18, maxy = -1e18;

    void grow(double x, double y) {
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    }
    void line(double x1, double y1, double x2, double y2, const std::string& style) {
        grow(x1, y1);
        grow(x2, y2);
        body << "<line x1='" << x1 << "' y1='" << -y1 << "' x2='" << x2 << "' y2='"
             << -y2 << "' " << style << "/>\n";
    }
    void circle(double x, double y, double r, const std::string& style) {
        grow(x, y);
        body << "<circle cx='" << x << "' cy='" << -y << "' r='" << r << "' " << style
             << "/>\n";
    }
    void poly(const std::vector<std::pair<double, double>>& pts, const std::string& style) {
        body << "<polygon points='";
        for (auto [x, y] : pts) {
            grow(x, y);
            body << x << "," << -y << " ";
        }
        body << "' " << style << "/>\n";
    }
    void text(double x, double y, const std::string& s, double size = 0.25) {
        grow(x, y);
        body << "<text x='" << x << "' y='" << -y << "' font-size='" << size
             << "' font-family='sans-serif'>" << s << "</text>\n";
    }
    std::string finish() const {
        double pad = 0.6;
        double w = (maxx - minx) + 2 * pad, h = (maxy - miny) + 2 * pad;
        std::ostringstream os;
        os << "<svg xmlns='http://www.w3.org/2000/svg' viewBox='" << (minx - pad) << " "
           << (-maxy - pad) << " " << w << " " << h << "' width='" << w * 80
           << "' height='" << h * 80 << "'>\n"
           << body.str() << "</svg>\n";
        return os.str();
    }
};

} // namespace

std::string svg_fan(const LatticeEmbedding& L, const SecondaryFan& fan) {
    Canvas cv;
    double scale = 2.0;
    for (int i = 0; i < L.N; ++i) {
        auto b = L.col(i);
        double len = std::hypot((double)b[0], (double)b[1]);
        double x = scale * b[0] / len, y = scale * b[1] / len;
        cv.line(0, 0, x, y, "stroke='black' stroke-width='0.03'");
        cv.text(x * 1.12, y * 1.12, "b" + std::to_string(i + 1));
    }
    for (const auto& cone : fan.cones) {
        auto br = L.col(cone.ray_right);
        auto bl = L.col(cone.ray_left);
        double ar = std::atan2((double)br[1], (double)br[0]);
        double al = std::atan2((double)bl[1], (double)bl[0]);
        if (al <= ar) al += 2 * M_PI;
        double mid = (ar + al) / 2;
        std::ostringstream lab;
        for (auto [i, j] : cone.pairs) lab << "{" << i + 1 << "," << j + 1 << "}";
        cv.text(1.3 * std::cos(mid) - 0.3, 1.3 * std::sin(mid), lab.str(), 0.16);
    }
    return cv.finish();
}

std::string svg_polygon(const DeltaPolygon& d) {
    Canvas cv;
    Int minx = 0, maxx = 0, miny = 0, maxy = 0;
    for (const auto& p : d.points) {
        minx = std::min(minx, p[0]);
        maxx = std::max(maxx, p[0]);
        miny = std::min(miny, p[1]);
        maxy = std::max(maxy, p[1]);
    }
    std::vector<std::pair<double, double>> outline;
    for (const auto& v : d.hull.vertices) outline.push_back({(double)v[0], (double)v[1]});
    cv.poly(outline, "fill='#f5f5dc' stroke='black' stroke-width='0.04'");
    auto inside = [&](Int x, Int y) {
        int n = (int)d.hull.vertices.size();
        for (int k = 0; k < n; ++k) {
            const auto& a = d.hull.vertices[k];
            const auto& b = d.hull.vertices[(k + 1) % n];
            Int cr = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
            if (cr <= 0) return false;
        }
        return true;
    };
    for (Int x = minx - 1; x <= maxx + 1; ++x)
        for (Int y = miny - 1; y <= maxy + 1; ++y) {
            bool strict = inside(x, y);
            cv.circle((double)x, (double)y, strict ? 0.1 : 0.05,
                      strict ? "fill='white' stroke='black' stroke-width='0.03'"
                             : "fill='black'");
        }
    for (const auto& p : d.points)
        cv.circle((double)p[0], (double)p[1], 0.09, "fill='black'");
    return cv.finish();
}

std::string svg_tiling(const DiscreteSurface& S, bool zigzag) {
    const auto& L = S.ctx->L;
    const auto& coset = S.ctx->coset;
    // honest lifts of the square bases, BFS over shared sides
    int n = (int)S.squares.size();
    std::vector<IVec> lift(n);
    std::vector<bool> have(n, false);
    std::map<std::pair<IVec, int>, std::vector<int>> side_squares;
    for (int s = 0; s < n; ++s) {
        const auto& sq = S.squares[s];
        IVec vi = coset.key_shift(sq.base, sq.i, +1);
        IVec vj = coset.key_shift(sq.base, sq.j, +1);
        side_squares[{sq.base, sq.i}].push_back(s);
        side_squares[{vj, sq.i}].push_back(s);
        side_squares[{sq.base, sq.j}].push_back(s);
        side_squares[{vi, sq.j}].push_back(s);
    }
    std::vector<int> order;
    lift[0] = coset.representative(S.squares[0].base);
    have[0] = true;
    order.push_back(0);
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int s = order[qi];
        const auto& sq = S.squares[s];
        // the four sides with their honest base offsets relative to lift[s]
        struct SideRef { IVec key; int type; IVec offset; };
        auto shift = [&](const IVec& v, int var, int d) {
            IVec r = v;
            r[var] += d;
            return r;
        };
        IVec zero(L.N, 0);
        std::vector<SideRef> sides = {
            {sq.base, sq.i, zero},
            {coset.key_shift(sq.base, sq.j, +1), sq.i, shift(zero, sq.j, +1)},
            {sq.base, sq.j, zero},
            {coset.key_shift(sq.base, sq.i, +1), sq.j, shift(zero, sq.i, +1)},
        };
        for (const auto& side : sides) {
            IVec side_lift = lift[s];
            for (int k = 0; k < L.N; ++k) side_lift[k] += side.offset[k];
            for (int t : side_squares.at({side.key, side.type})) {
                if (have[t]) continue;
                const auto& tq = S.squares[t];
                // which side of t matches: base-side or shifted side
                IVec tbase = side_lift;
                if (tq.base == side.key) {
                    // side is t's own base side
                } else {
                    int o = (side.type == tq.i) ? tq.j : tq.i;
                    tbase[o] -= 1;
                }
                lift[t] = tbase;
                have[t] = true;
                order.push_back(t);
            }
        }
    }
    Canvas cv;
    auto proj = [&](const IVec& p) {
        double x = 0, y = 0;
        for (int k = 0; k < L.N; ++k) {
            x += (double)L.B[0][k] * p[k];
            y += (double)L.B[1][k] * p[k];
        }
        return std::pair<double, double>{x, y};
    };
    auto pc = perfect_coloring(S);
    for (int s = 0; s < n; ++s) {
        const auto& sq = S.squares[s];
        auto p0 = proj(lift[s]);
        double bix = L.B[0][sq.i], biy = L.B[1][sq.i];
        double bjx = L.B[0][sq.j], bjy = L.B[1][sq.j];
        cv.poly({{p0.first, p0.second},
                 {p0.first + bix, p0.second + biy},
                 {p0.first + bix + bjx, p0.second + biy + bjy},
                 {p0.first + bjx, p0.second + bjy}},
                "fill='#fdf6e3' stroke='#555' stroke-width='0.03'");
    }
    // vertex dots: black / grey / white by coordinate sum when perfect,
    // otherwise plain dots
    for (int s = 0; s < n; ++s) {
        const auto& sq = S.squares[s];
        IVec corners[4] = {lift[s], lift[s], lift[s], lift[s]};
        corners[1][sq.i] += 1;
        corners[2][sq.j] += 1;
        corners[3][sq.i] += 1;
        corners[3][sq.j] += 1;
        for (const auto& c : corners) {
            auto [x, y] = proj(c);
            if (pc) {
                Int sum = 0;
                for (Int v : c) sum += v;
                if (sum == pc->mid + 1)
                    cv.circle(x, y, 0.12, "fill='black'");
                else if (sum == pc->mid - 1)
                    cv.circle(x, y, 0.12, "fill='white' stroke='black' stroke-width='0.03'");
                else
                    cv.circle(x, y, 0.07, "fill='#888'");
            } else {
                cv.circle(x, y, 0.07, "fill='#333'");
            }
        }
    }
    if (zigzag) {
        for (int i = 0; i < L.N; ++i) {
            const char* color = kPalette[i % 8];
            for (int s = 0; s < n; ++s) {
                const auto& sq = S.squares[s];
                if (sq.i != i && sq.j != i) continue;
                int other = (sq.i == i) ? sq.j : sq.i;
                Int d = col_det(L, i, other);
                auto p0 = proj(lift[s]);
                double bix = L.B[0][i], biy = L.B[1][i];
                double box = L.B[0][other], boy = L.B[1][other];
                // midpoints of the two e_i-parallel sides
                double m1x = p0.first + bix / 2, m1y = p0.second + biy / 2;
                double m2x = m1x + box, m2y = m1y + boy;
                std::ostringstream st;
                st << "stroke='" << color << "' stroke-width='0.05'";
                if (d > 0) cv.line(m1x, m1y, m2x, m2y, st.str());
                else cv.line(m2x, m2y, m1x, m1y, st.str());
            }
        }
    }
    // period parallelogram from the Gram matrix of B
    {
        double g00 = 0, g01 = 0, g10 = 0, g11 = 0;
        for (int k = 0; k < L.N; ++k) {
            g00 += (double)L.B[0][k] * L.B[0][k];
            g01 += (double)L.B[0][k] * L.B[1][k];
            g10 += (double)L.B[1][k] * L.B[0][k];
            g11 += (double)L.B[1][k] * L.B[1][k];
        }
        std::string dash = "stroke='#d33' stroke-width='0.05' stroke-dasharray='0.2,0.15'";
        cv.line(0, 0, g00, g10, dash);
        cv.line(0, 0, g01, g11, dash);
        cv.line(g00, g10, g00 + g01, g10 + g11, dash);
        cv.line(g01, g11, g00 + g01, g10 + g11, dash);
    }
    return cv.finish();
}

} // namespace dimerkit
