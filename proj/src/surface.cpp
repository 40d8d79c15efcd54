#include "topoplan/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace topoplan {

namespace {

void check(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

}  // namespace

SimplicialSurface SimplicialSurface::from_parts(std::vector<Vec2> positions,
                                                std::vector<OrientedEdge> edges,
                                                std::vector<OrientedTriangle> triangles) {
    SimplicialSurface s;
    s.positions_ = std::move(positions);
    s.edges_ = std::move(edges);
    s.triangles_ = std::move(triangles);
    std::sort(s.edges_.begin(), s.edges_.end(), [](const OrientedEdge& a, const OrientedEdge& b) {
        return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
    });
    std::sort(s.triangles_.begin(), s.triangles_.end(),
              [](const OrientedTriangle& a, const OrientedTriangle& b) { return a.v < b.v; });
    s.build_adjacency();
    s.validate();
    return s;
}

void SimplicialSurface::build_adjacency() {
    const int n = vertex_count();
    adjacency_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& e : edges_) {
        ++adjacency_offsets_[static_cast<std::size_t>(e.tail) + 1];
        ++adjacency_offsets_[static_cast<std::size_t>(e.head) + 1];
    }
    for (int v = 0; v < n; ++v) adjacency_offsets_[v + 1] += adjacency_offsets_[v];

    adjacency_.resize(2 * edges_.size());
    std::vector<int> cursor(adjacency_offsets_.begin(), adjacency_offsets_.end() - 1);
    for (int e = 0; e < edge_count(); ++e) {
        const auto& edge = edges_[static_cast<std::size_t>(e)];
        adjacency_[cursor[edge.tail]++] = Neighbor{edge.head, e, edge.weight, +1.0};
        adjacency_[cursor[edge.head]++] = Neighbor{edge.tail, e, edge.weight, -1.0};
    }
    for (int v = 0; v < n; ++v) {
        std::sort(adjacency_.begin() + adjacency_offsets_[v],
                  adjacency_.begin() + adjacency_offsets_[v + 1],
                  [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
}

std::span<const SimplicialSurface::Neighbor> SimplicialSurface::neighbors(int v) const {
    const auto begin = adjacency_offsets_[static_cast<std::size_t>(v)];
    const auto end = adjacency_offsets_[static_cast<std::size_t>(v) + 1];
    return {adjacency_.data() + begin, adjacency_.data() + end};
}

int SimplicialSurface::edge_between(int u, int v) const {
    const auto span = neighbors(u);
    auto it = std::lower_bound(span.begin(), span.end(), v,
                               [](const Neighbor& nb, int target) { return nb.vertex < target; });
    if (it != span.end() && it->vertex == v) return it->edge;
    return -1;
}

int SimplicialSurface::vertex_at(int row, int col) const {
    if (grid_rows_ <= 0 || row < 0 || col < 0 || row >= grid_rows_ || col >= grid_cols_) return -1;
    return grid_to_vertex_[static_cast<std::size_t>(row) * grid_cols_ + col];
}

void SimplicialSurface::validate() const {
    const int n = vertex_count();
    check(n >= 1, "surface needs at least one vertex");
    for (const auto& p : positions_)
        check(std::isfinite(p.x) && std::isfinite(p.y), "vertex positions must be finite");

    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        check(e.tail >= 0 && e.head < n && e.tail < e.head, "edge must satisfy 0 <= tail < head < V");
        check(std::isfinite(e.weight) && e.weight > 0.0, "edge weights must be positive");
        if (i > 0) {
            const auto& prev = edges_[i - 1];
            check(std::pair(prev.tail, prev.head) < std::pair(e.tail, e.head),
                  "duplicate edge");
        }
    }

    std::vector<int> edge_tri_count(edges_.size(), 0);
    for (std::size_t i = 0; i < triangles_.size(); ++i) {
        const auto& t = triangles_[i].v;
        check(t[0] >= 0 && t[0] < t[1] && t[1] < t[2] && t[2] < n,
              "triangle vertices must be strictly increasing");
        if (i > 0) check(triangles_[i - 1].v < t, "duplicate triangle");
        const int eab = edge_between(t[0], t[1]);
        const int eac = edge_between(t[0], t[2]);
        const int ebc = edge_between(t[1], t[2]);
        check(eab >= 0 && eac >= 0 && ebc >= 0, "triangle edge missing from edge set");
        ++edge_tri_count[static_cast<std::size_t>(eab)];
        ++edge_tri_count[static_cast<std::size_t>(eac)];
        ++edge_tri_count[static_cast<std::size_t>(ebc)];
    }
    for (int c : edge_tri_count) check(c <= 2, "edge belongs to more than two triangles");

    // Connectivity over the 1-skeleton.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (const auto& nb : neighbors(u)) {
            if (!seen[static_cast<std::size_t>(nb.vertex)]) {
                seen[static_cast<std::size_t>(nb.vertex)] = 1;
                ++reached;
                stack.push_back(nb.vertex);
            }
        }
    }
    check(reached == n, "surface is disconnected");
}

SimplicialSurface build_grid_complex(const GridSpec& spec) {
    check(spec.rows >= 2 && spec.cols >= 2, "grid needs at least 2 rows and 2 cols");
    check(spec.bounds.valid(), "grid bounds are empty");
    for (const auto& hole : spec.holes) {
        check(hole.valid(), "hole rectangle is empty");
        check(hole.strictly_inside(spec.bounds), "hole lies outside the grid bounds");
    }

    const int rows = spec.rows;
    const int cols = spec.cols;
    const double dx = (spec.bounds.xmax - spec.bounds.xmin) / (cols - 1);
    const double dy = (spec.bounds.ymax - spec.bounds.ymin) / (rows - 1);
    auto flat = [cols](int r, int c) { return r * cols + c; };

    std::vector<Vec2> pos(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            pos[static_cast<std::size_t>(flat(r, c))] =
                Vec2{spec.bounds.xmin + c * dx, spec.bounds.ymin + r * dy};

    auto in_some_hole = [&spec](const Vec2& p) {
        for (const auto& hole : spec.holes)
            if (hole.contains_open(p)) return true;
        return false;
    };

    // Two triangles per cell along the lower-left to upper-right diagonal.
    std::vector<std::array<int, 3>> tris;
    tris.reserve(static_cast<std::size_t>(rows - 1) * (cols - 1) * 2);
    for (int r = 0; r + 1 < rows; ++r) {
        for (int c = 0; c + 1 < cols; ++c) {
            const int ll = flat(r, c);
            const int lr = ll + 1;
            const int ul = ll + cols;
            const int ur = ul + 1;
            tris.push_back({ll, lr, ur});
            tris.push_back({ll, ul, ur});
        }
    }

    std::vector<char> tri_removed(tris.size(), 0);
    std::vector<char> hole_hit(spec.holes.size(), 0);
    for (std::size_t t = 0; t < tris.size(); ++t) {
        const auto& v = tris[t];
        const Vec2 centroid{
            (pos[v[0]].x + pos[v[1]].x + pos[v[2]].x) / 3.0,
            (pos[v[0]].y + pos[v[1]].y + pos[v[2]].y) / 3.0,
        };
        for (std::size_t h = 0; h < spec.holes.size(); ++h) {
            if (spec.holes[h].contains_open(centroid)) {
                tri_removed[t] = 1;
                hole_hit[h] = 1;
            }
        }
    }

    // Edge -> incident triangles, keyed in lexicographic order.
    std::map<std::pair<int, int>, std::vector<int>> edge_tris;
    for (std::size_t t = 0; t < tris.size(); ++t) {
        const auto& v = tris[t];
        edge_tris[{v[0], v[1]}].push_back(static_cast<int>(t));
        edge_tris[{v[0], v[2]}].push_back(static_cast<int>(t));
        edge_tris[{v[1], v[2]}].push_back(static_cast<int>(t));
    }

    auto edge_removed = [&](const std::pair<int, int>& key, const std::vector<int>& owners) {
        for (int t : owners)
            if (!tri_removed[static_cast<std::size_t>(t)]) return false;
        const Vec2 mid{(pos[key.first].x + pos[key.second].x) / 2.0,
                       (pos[key.first].y + pos[key.second].y) / 2.0};
        return in_some_hole(mid);
    };

    std::vector<char> vertex_kept(pos.size(), 0);
    std::vector<std::pair<int, int>> kept_edges;
    for (const auto& [key, owners] : edge_tris) {
        if (edge_removed(key, owners)) continue;
        kept_edges.push_back(key);
        vertex_kept[static_cast<std::size_t>(key.first)] = 1;
        vertex_kept[static_cast<std::size_t>(key.second)] = 1;
    }

    std::vector<int> remap(pos.size(), -1);
    std::vector<Vec2> final_pos;
    for (std::size_t v = 0; v < pos.size(); ++v) {
        if (vertex_kept[v]) {
            remap[v] = static_cast<int>(final_pos.size());
            final_pos.push_back(pos[v]);
        }
    }

    std::vector<OrientedEdge> final_edges;
    final_edges.reserve(kept_edges.size());
    for (const auto& [a, b] : kept_edges) {
        final_edges.push_back(OrientedEdge{remap[a], remap[b], distance(pos[a], pos[b])});
    }

    std::vector<OrientedTriangle> final_tris;
    for (std::size_t t = 0; t < tris.size(); ++t) {
        if (tri_removed[t]) continue;
        const auto& v = tris[t];
        final_tris.push_back(OrientedTriangle{{remap[v[0]], remap[v[1]], remap[v[2]]}});
    }

    SimplicialSurface surface =
        SimplicialSurface::from_parts(std::move(final_pos), std::move(final_edges),
                                      std::move(final_tris));
    surface.grid_rows_ = rows;
    surface.grid_cols_ = cols;
    surface.grid_to_vertex_ = std::move(remap);
    surface.hole_count_ = static_cast<int>(std::count(hole_hit.begin(), hole_hit.end(), 1));
    return surface;
}

Eigen::SparseMatrix<double> boundary_matrix(const SimplicialSurface& surface, int k) {
    check(k == 1 || k == 2, "boundary operator index must be 1 or 2");
    std::vector<Eigen::Triplet<double>> triplets;
    if (k == 1) {
        triplets.reserve(2 * static_cast<std::size_t>(surface.edge_count()));
        for (int e = 0; e < surface.edge_count(); ++e) {
            const auto& edge = surface.edges()[static_cast<std::size_t>(e)];
            triplets.emplace_back(edge.tail, e, -1.0);
            triplets.emplace_back(edge.head, e, +1.0);
        }
        Eigen::SparseMatrix<double> m(surface.vertex_count(), surface.edge_count());
        m.setFromTriplets(triplets.begin(), triplets.end());
        return m;
    }
    triplets.reserve(3 * static_cast<std::size_t>(surface.triangle_count()));
    for (int t = 0; t < surface.triangle_count(); ++t) {
        const auto& v = surface.triangles()[static_cast<std::size_t>(t)].v;
        // Alternating-sum faces of [a, b, c]: +[b,c] - [a,c] + [a,b].
        triplets.emplace_back(surface.edge_between(v[1], v[2]), t, +1.0);
        triplets.emplace_back(surface.edge_between(v[0], v[2]), t, -1.0);
        triplets.emplace_back(surface.edge_between(v[0], v[1]), t, +1.0);
    }
    Eigen::SparseMatrix<double> m(surface.edge_count(), surface.triangle_count());
    m.setFromTriplets(triplets.begin(), triplets.end());
    return m;
}

int euler_characteristic(const SimplicialSurface& surface) {
    return surface.vertex_count() - surface.edge_count() + surface.triangle_count();
}

std::vector<std::vector<int>> hole_boundary_cycles(const SimplicialSurface& surface) {
    std::vector<int> tri_count(static_cast<std::size_t>(surface.edge_count()), 0);
    for (const auto& t : surface.triangles()) {
        ++tri_count[static_cast<std::size_t>(surface.edge_between(t.v[0], t.v[1]))];
        ++tri_count[static_cast<std::size_t>(surface.edge_between(t.v[0], t.v[2]))];
        ++tri_count[static_cast<std::size_t>(surface.edge_between(t.v[1], t.v[2]))];
    }

    // Boundary edges per vertex; manifold boundaries give exactly two.
    std::vector<std::vector<int>> vertex_boundary(static_cast<std::size_t>(surface.vertex_count()));
    std::vector<int> boundary_edges;
    for (int e = 0; e < surface.edge_count(); ++e) {
        if (tri_count[static_cast<std::size_t>(e)] != 1) continue;
        boundary_edges.push_back(e);
        const auto& edge = surface.edges()[static_cast<std::size_t>(e)];
        vertex_boundary[static_cast<std::size_t>(edge.tail)].push_back(e);
        vertex_boundary[static_cast<std::size_t>(edge.head)].push_back(e);
    }

    std::vector<char> used(static_cast<std::size_t>(surface.edge_count()), 0);
    std::vector<std::vector<int>> cycles;
    for (int e0 : boundary_edges) {
        if (used[static_cast<std::size_t>(e0)]) continue;
        std::vector<int> loop;
        const auto& first = surface.edges()[static_cast<std::size_t>(e0)];
        loop.push_back(first.tail);
        loop.push_back(first.head);
        used[static_cast<std::size_t>(e0)] = 1;
        while (loop.back() != loop.front()) {
            const int v = loop.back();
            int next_edge = -1;
            for (int e : vertex_boundary[static_cast<std::size_t>(v)]) {
                if (!used[static_cast<std::size_t>(e)]) {
                    if (next_edge != -1)
                        throw std::runtime_error("non-manifold boundary at a vertex");
                    next_edge = e;
                }
            }
            if (next_edge == -1)
                throw std::runtime_error("boundary walk failed to close a cycle");
            used[static_cast<std::size_t>(next_edge)] = 1;
            const auto& edge = surface.edges()[static_cast<std::size_t>(next_edge)];
            loop.push_back(edge.tail == v ? edge.head : edge.tail);
        }
        cycles.push_back(std::move(loop));
    }

    if (cycles.empty()) return cycles;

    // The outer boundary encloses everything, so it has the largest bbox area.
    std::size_t outer = 0;
    double best_area = -1.0;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
        for (int v : cycles[i]) {
            const auto& p = surface.position(v);
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
        const double area = (xmax - xmin) * (ymax - ymin);
        if (area > best_area) {
            best_area = area;
            outer = i;
        }
    }
    cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(outer));
    return cycles;
}

}  // namespace topoplan
