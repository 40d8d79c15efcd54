#include "topoplan/path.hpp"

#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace topoplan {

namespace {

void check(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

}  // namespace

bool is_valid_path(const SimplicialSurface& surface, const Path& path) {
    if (path.nodes.empty()) return false;
    for (int v : path.nodes)
        if (v < 0 || v >= surface.vertex_count()) return false;
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i)
        if (surface.edge_between(path.nodes[i], path.nodes[i + 1]) < 0) return false;
    return true;
}

void require_valid_path(const SimplicialSurface& surface, const Path& path, const char* what) {
    if (!is_valid_path(surface, path))
        throw std::invalid_argument(std::string(what) + ": not an edge-connected path");
}

double path_weight(const SimplicialSurface& surface, const Path& path) {
    check(!path.nodes.empty(), "path must contain at least one node");
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
        const int e = surface.edge_between(path.nodes[i], path.nodes[i + 1]);
        check(e >= 0, "path step does not follow an edge");
        total += surface.edges()[static_cast<std::size_t>(e)].weight;
    }
    return total;
}

Path concat(const Path& a, const Path& b) {
    check(!a.nodes.empty() && !b.nodes.empty(), "cannot concatenate an empty path");
    check(a.nodes.back() == b.nodes.front(), "paths do not share a junction node");
    Path out;
    out.nodes.reserve(a.nodes.size() + b.nodes.size() - 1);
    out.nodes = a.nodes;
    out.nodes.insert(out.nodes.end(), b.nodes.begin() + 1, b.nodes.end());
    return out;
}

Path negate(const Path& a) {
    Path out;
    out.nodes.assign(a.nodes.rbegin(), a.nodes.rend());
    return out;
}

Path append_node(const SimplicialSurface& surface, const Path& a, int v) {
    check(!a.nodes.empty(), "cannot extend an empty path");
    check(surface.edge_between(a.nodes.back(), v) >= 0, "no edge to the appended node");
    Path out = a;
    out.nodes.push_back(v);
    return out;
}

DijkstraResult dijkstra_shortest_path(const SimplicialSurface& surface, int source, int dest) {
    const int n = surface.vertex_count();
    check(source >= 0 && source < n && dest >= 0 && dest < n, "vertex id out of range");

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(n), kInf);
    std::vector<int> prev(static_cast<std::size_t>(n), -1);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);

    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
    dist[static_cast<std::size_t>(source)] = 0.0;
    open.emplace(0.0, source);

    while (!open.empty()) {
        const auto [d, u] = open.top();
        open.pop();
        if (visited[static_cast<std::size_t>(u)]) continue;
        visited[static_cast<std::size_t>(u)] = 1;
        if (u == dest) break;
        for (const auto& nb : surface.neighbors(u)) {
            if (visited[static_cast<std::size_t>(nb.vertex)]) continue;
            const double nd = d + nb.weight;
            if (nd < dist[static_cast<std::size_t>(nb.vertex)]) {
                dist[static_cast<std::size_t>(nb.vertex)] = nd;
                prev[static_cast<std::size_t>(nb.vertex)] = u;
                open.emplace(nd, nb.vertex);
            }
        }
    }

    if (!visited[static_cast<std::size_t>(dest)])
        throw std::runtime_error("dijkstra: destination unreachable");

    Path path;
    for (int v = dest; v != -1; v = prev[static_cast<std::size_t>(v)]) path.nodes.push_back(v);
    std::reverse(path.nodes.begin(), path.nodes.end());
    return {std::move(path), dist[static_cast<std::size_t>(dest)]};
}

Path reference_from_keypoints(const SimplicialSurface& surface, const Keypoints& kps) {
    check(kps.waypoints.size() >= 2, "keypoints need at least two entries");
    for (int v : kps.waypoints)
        check(v >= 0 && v < surface.vertex_count(), "keypoint vertex out of range");

    Path out;
    out.nodes.push_back(kps.waypoints.front());
    for (std::size_t i = 1; i < kps.waypoints.size(); ++i) {
        const int a = kps.waypoints[i - 1];
        const int b = kps.waypoints[i];
        if (a == b) continue;  // degenerate segment acts as the identity
        out = concat(out, dijkstra_shortest_path(surface, a, b).path);
    }
    return out;
}

}  // namespace topoplan
