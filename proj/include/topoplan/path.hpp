#pragma once

#include <vector>

#include "topoplan/surface.hpp"

namespace topoplan {

// Edge-connected vertex sequence. Paths are plain sequences and may revisit
// vertices; rollout stage references rely on that.
struct Path {
    std::vector<int> nodes;

    int source() const { return nodes.front(); }
    int destination() const { return nodes.back(); }
    std::size_t edge_steps() const { return nodes.empty() ? 0 : nodes.size() - 1; }

    bool operator==(const Path&) const = default;
};

struct Keypoints {
    std::vector<int> waypoints;
};

bool is_valid_path(const SimplicialSurface& surface, const Path& path);
void require_valid_path(const SimplicialSurface& surface, const Path& path, const char* what);

// Sum of edge weights along the path; zero for a single-node path.
double path_weight(const SimplicialSurface& surface, const Path& path);

// Concatenation; requires a's last node to equal b's first node.
Path concat(const Path& a, const Path& b);

// Reversal.
Path negate(const Path& a);

// Extends a by one step to v; the edge (last(a), v) must exist.
Path append_node(const SimplicialSurface& surface, const Path& a, int v);

struct DijkstraResult {
    Path path;
    double distance;
};

// Deterministic Dijkstra; ties broken toward the smallest vertex index.
DijkstraResult dijkstra_shortest_path(const SimplicialSurface& surface, int source, int dest);

// Concatenation of pairwise shortest paths between consecutive keypoints.
// Repeated keypoints act as the identity.
Path reference_from_keypoints(const SimplicialSurface& surface, const Keypoints& kps);

}  // namespace topoplan
