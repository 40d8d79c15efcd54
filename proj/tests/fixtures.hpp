#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "topoplan/path.hpp"
#include "topoplan/surface.hpp"

namespace fixtures {

// 4x4 grid on [0,3]^2 with the (1,1) cell removed: one hole, 16 vertices,
// 32 edges, 16 triangles. Source/destination below are chosen so the two
// classes have different shortest lengths (1 + 2*sqrt(2) vs 3 + sqrt(2)).
inline topoplan::SimplicialSurface tiny_annulus() {
    topoplan::GridSpec spec;
    spec.rows = 4;
    spec.cols = 4;
    spec.bounds = {0.0, 0.0, 3.0, 3.0};
    spec.holes = {{1.0, 1.0, 2.0, 2.0}};
    return topoplan::build_grid_complex(spec);
}
inline constexpr int kAnnulusSource = 0;   // grid (0,0)
inline constexpr int kAnnulusDest = 11;    // grid (2,3)

// Reference path for the annulus staying in the longer (upper) class:
// up the left column, across the top row, down one step.
inline topoplan::Path tiny_annulus_reference() {
    return topoplan::Path{{0, 4, 8, 12, 13, 14, 15, 11}};
}

// 4x6 grid on [0,5]x[0,3] with cells (1,1) and (3,1) removed: two holes,
// 24 vertices. Simple paths fall into four classes.
inline topoplan::SimplicialSurface two_hole_strip() {
    topoplan::GridSpec spec;
    spec.rows = 4;
    spec.cols = 6;
    spec.bounds = {0.0, 0.0, 5.0, 3.0};
    spec.holes = {{1.0, 1.0, 2.0, 2.0}, {3.0, 1.0, 4.0, 2.0}};
    return topoplan::build_grid_complex(spec);
}
inline constexpr int kTwoHoleSource = 0;   // grid (0,0)
inline constexpr int kTwoHoleDest = 17;    // grid (2,5)

// Reference path above both holes.
inline topoplan::Path two_hole_reference() {
    return topoplan::Path{{0, 6, 12, 18, 19, 20, 21, 22, 23, 17}};
}

// Disk with no holes.
inline topoplan::SimplicialSurface small_disk() {
    topoplan::GridSpec spec;
    spec.rows = 4;
    spec.cols = 4;
    spec.bounds = {0.0, 0.0, 3.0, 3.0};
    return topoplan::build_grid_complex(spec);
}

inline topoplan::SimplicialSurface single_triangle() {
    return topoplan::SimplicialSurface::from_parts(
        {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}},
        {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, std::sqrt(2.0)}},
        {topoplan::OrientedTriangle{{0, 1, 2}}});
}

struct RandomSurface {
    topoplan::SimplicialSurface surface;
    int holes_placed = 0;
};

// Random grid with cell-aligned holes separated by at least one clear cell
// from each other and from the boundary, so every hole stays manifold and
// contributes exactly one boundary cycle.
inline RandomSurface random_surface(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> size_dist(5, 19);
    const int rows = size_dist(rng);
    const int cols = size_dist(rng);
    const int cell_rows = rows - 1;
    const int cell_cols = cols - 1;

    std::uniform_int_distribution<int> want_dist(0, 9);
    const int want = want_dist(rng);

    struct CellRect {
        int x0, y0, x1, y1;  // cell-line coordinates
    };
    std::vector<CellRect> placed;
    std::uniform_int_distribution<int> extent_dist(1, 3);
    for (int attempt = 0; attempt < 300 && static_cast<int>(placed.size()) < want; ++attempt) {
        const int w = std::min(extent_dist(rng), cell_cols - 2);
        const int h = std::min(extent_dist(rng), cell_rows - 2);
        if (w < 1 || h < 1) break;
        std::uniform_int_distribution<int> x_dist(1, cell_cols - 1 - w);
        std::uniform_int_distribution<int> y_dist(1, cell_rows - 1 - h);
        const CellRect r{0, 0, 0, 0};
        (void)r;
        const int x0 = x_dist(rng);
        const int y0 = y_dist(rng);
        const CellRect cand{x0, y0, x0 + w, y0 + h};
        bool ok = true;
        for (const auto& p : placed) {
            const bool apart = cand.x1 + 1 <= p.x0 || p.x1 + 1 <= cand.x0 ||
                               cand.y1 + 1 <= p.y0 || p.y1 + 1 <= cand.y0;
            if (!apart) {
                ok = false;
                break;
            }
        }
        if (ok) placed.push_back(cand);
    }

    topoplan::GridSpec spec;
    spec.rows = rows;
    spec.cols = cols;
    spec.bounds = {0.0, 0.0, static_cast<double>(cols - 1), static_cast<double>(rows - 1)};
    for (const auto& p : placed) {
        spec.holes.push_back(topoplan::Rect{static_cast<double>(p.x0), static_cast<double>(p.y0),
                                            static_cast<double>(p.x1),
                                            static_cast<double>(p.y1)});
    }
    return RandomSurface{topoplan::build_grid_complex(spec), static_cast<int>(placed.size())};
}

// Uniform random walk of the given number of steps starting at `start`.
inline topoplan::Path random_walk(const topoplan::SimplicialSurface& surface,
                                  std::mt19937_64& rng, int start, int steps) {
    topoplan::Path path;
    path.nodes.push_back(start);
    for (int i = 0; i < steps; ++i) {
        const auto nbs = surface.neighbors(path.nodes.back());
        std::uniform_int_distribution<std::size_t> pick(0, nbs.size() - 1);
        path.nodes.push_back(nbs[pick(rng)].vertex);
    }
    return path;
}

}  // namespace fixtures
