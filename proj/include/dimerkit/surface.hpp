#pragma once

#include <memory>
#include <stdexcept>
#include <set>
#include <string>

#include "dimerkit/lattice.hpp"
#include "dimerkit/rat.hpp"

namespace dimerkit {

struct GridOffset {
    std::vector<Rat> lambda;
};

// Exact check of Def "non-resonant": no three grid lines through one point.
// Also rejects coinciding lines of parallel families.
bool is_nonresonant(const LatticeEmbedding& L, const GridOffset& offset);

// Offsets k_i / P for a fixed prime P, retried until is_nonresonant holds.
GridOffset random_offset(const LatticeEmbedding& L, uint64_t seed, int max_tries = 64);

// Shared immutable data for all surfaces over one lattice.
struct SurfaceContext {
    LatticeEmbedding L;
    CosetCalculator coset;
    explicit SurfaceContext(const LatticeEmbedding& l) : L(l), coset(l) {}
};

// An L-periodic square-tiled surface, stored modulo L. The vertex set
// determines everything: squares are all unit squares with vertices in the
// set, edges are the square sides.
struct DiscreteSurface {
    std::shared_ptr<const SurfaceContext> ctx;
    std::vector<IVec> verts; // canonical coset keys, sorted

    struct Square {
        IVec base; // key of the corner p; other corners p+e_i, p+e_j, p+e_i+e_j
        int i = 0, j = 0; // type, i < j (0-based)
    };
    std::vector<Square> squares; // derived from verts, sorted

    std::string canonical_form() const;
    bool vertex_present(const IVec& key) const;
    // index of the square with this base key and type, -1 when absent
    int square_index(const IVec& base, int i, int j) const;
};

// Derives squares from the vertex set and checks the Prop "count cells"
// bounds hold (#squares of each type <= |det|).
DiscreteSurface surface_from_vertices(std::shared_ptr<const SurfaceContext> ctx,
                                      std::vector<IVec> verts);

DiscreteSurface initial_surface(const LatticeEmbedding& L, const GridOffset& offset);
DiscreteSurface initial_surface(std::shared_ptr<const SurfaceContext> ctx,
                                const GridOffset& offset);

// A flip site: vertex of degree three whose far corners are present.
struct ElementarySite {
    IVec p0;                   // vertex key
    std::array<int, 3> var{};  // neighbor directions p0 + dir*e_var
    std::array<int, 3> dir{};
};

std::vector<ElementarySite> elementary_sites(const DiscreteSurface& S);
DiscreteSurface apply_elementary(const DiscreteSurface& S, const ElementarySite& site);

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerationResult {
    std::vector<DiscreteSurface> surfaces; // breadth-first discovery order
    GridOffset offset;
};

// Breadth-first closure of the initial surface under elementary
// transformations, deduplicated by canonical form. Throws when the cap is
// exceeded.
EnumerationResult enumerate_surfaces(const LatticeEmbedding& L, uint64_t seed,
                                     size_t cap = 100000);
EnumerationResult enumerate_surfaces(std::shared_ptr<const SurfaceContext> ctx,
                                     const GridOffset& offset, size_t cap = 100000);

// Coordinate-sum classification of a perfect surface.
struct PerfectColoring {
    Int mid = 0;                      // the middle value a
    std::vector<int> color;          // per vertex: +1 black, 0 grey, -1 white
    std::vector<int> blacks, whites; // vertex indices
};

// nullopt when the surface is not perfect
std::optional<PerfectColoring> perfect_coloring(const DiscreteSurface& S);

std::vector<DiscreteSurface> find_perfect(const std::vector<DiscreteSurface>& all);

// The i-th zigzag loop of a perfect surface: connected components as cyclic
// sequences of square indices, oriented by sign(det(b_i, b_j)).
struct ZigzagLoop {
    int index = 0; // 0-based column index
    std::vector<std::vector<int>> components;
};

std::vector<ZigzagLoop> zigzag_loops(const DiscreteSurface& S);

} // namespace dimerkit
