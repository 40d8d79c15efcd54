#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/SparseCore>

#include "topoplan/geometry.hpp"

namespace topoplan {

// Canonically oriented edge: tail < head by vertex index.
struct OrientedEdge {
    int tail = 0;
    int head = 0;
    double weight = 0.0;
};

// Canonically oriented triangle: strictly increasing vertex indices.
struct OrientedTriangle {
    std::array<int, 3> v{0, 0, 0};
};

struct GridSpec {
    int rows = 0;
    int cols = 0;
    Rect bounds;
    std::vector<Rect> holes;
};

// Oriented 2-D simplicial surface (triangulated disk with holes).
// Immutable after construction; safe to share across concurrent readers.
class SimplicialSurface {
public:
    struct Neighbor {
        int vertex;
        int edge;
        double weight;
        double orientation;  // +1 when the step follows the stored tail->head direction
    };

    // Validates closure, canonical orientation, manifoldness (each edge in at
    // most two triangles) and connectivity. Edges and triangles are sorted
    // into lexicographic order.
    static SimplicialSurface from_parts(std::vector<Vec2> positions,
                                        std::vector<OrientedEdge> edges,
                                        std::vector<OrientedTriangle> triangles);

    int vertex_count() const { return static_cast<int>(positions_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int triangle_count() const { return static_cast<int>(triangles_.size()); }

    const Vec2& position(int v) const { return positions_[static_cast<std::size_t>(v)]; }
    const std::vector<Vec2>& positions() const { return positions_; }
    const std::vector<OrientedEdge>& edges() const { return edges_; }
    const std::vector<OrientedTriangle>& triangles() const { return triangles_; }

    std::span<const Neighbor> neighbors(int v) const;

    // Index of the canonical edge joining u and v, or -1 when absent.
    int edge_between(int u, int v) const;

    // Grid bookkeeping; populated by build_grid_complex only.
    int grid_rows() const { return grid_rows_; }
    int grid_cols() const { return grid_cols_; }
    // Vertex id at a grid coordinate, or -1 (removed by a hole / not a grid build).
    int vertex_at(int row, int col) const;
    // Number of hole rectangles that removed at least one triangle.
    int hole_count() const { return hole_count_; }

private:
    friend SimplicialSurface build_grid_complex(const GridSpec&);

    void build_adjacency();
    void validate() const;

    std::vector<Vec2> positions_;
    std::vector<OrientedEdge> edges_;
    std::vector<OrientedTriangle> triangles_;
    std::vector<Neighbor> adjacency_;
    std::vector<int> adjacency_offsets_;
    int grid_rows_ = 0;
    int grid_cols_ = 0;
    std::vector<int> grid_to_vertex_;
    int hole_count_ = 0;
};

// Triangulates a uniform rows x cols grid of points over `bounds`, splitting
// every cell along its lower-left to upper-right diagonal, then carves holes:
// a triangle is removed when its centroid lies in an open hole rectangle, an
// edge when all of its original triangles were removed and its midpoint lies
// in a hole, and finally any isolated vertex. Edge weights are Euclidean
// distances between endpoint positions.
SimplicialSurface build_grid_complex(const GridSpec& spec);

// Signed incidence matrix of the k-th boundary operator, k in {1, 2}.
Eigen::SparseMatrix<double> boundary_matrix(const SimplicialSurface& surface, int k);

int euler_characteristic(const SimplicialSurface& surface);

// Closed vertex loops (front == back) tracing each hole perimeter, in
// deterministic order. The outer boundary loop is excluded.
std::vector<std::vector<int>> hole_boundary_cycles(const SimplicialSurface& surface);

}  // namespace topoplan
