#include "topoplan/hstar.hpp"

#include <cmath>
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

SearchResult hstar_search(const SimplicialSurface& surface, const HarmonicBasis& basis,
                          int source, int dest, const Path& reference, double alpha,
                          const HStarOptions& options) {
    const int n = surface.vertex_count();
    check(source >= 0 && source < n && dest >= 0 && dest < n, "vertex id out of range");
    check(source != dest, "source and destination must differ");
    check(alpha >= 0.0 && std::isfinite(alpha), "alpha must be finite and non-negative");
    check(basis.edge_count() == surface.edge_count(), "basis does not match the surface");
    require_valid_path(surface, reference, "hstar reference");
    check(reference.source() == source && reference.destination() == dest,
          "reference must connect source to destination");

    const int dim = basis.dimension();
    const Eigen::VectorXd ref_proj = accumulate_projection(surface, basis, reference);

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> weight(static_cast<std::size_t>(n), kInf);
    std::vector<double> cost(static_cast<std::size_t>(n), kInf);
    std::vector<double> proj_diff(static_cast<std::size_t>(n), ref_proj.norm());
    std::vector<int> prev(static_cast<std::size_t>(n), -1);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(dim, n);

    weight[static_cast<std::size_t>(source)] = 0.0;
    cost[static_cast<std::size_t>(source)] = alpha * proj_diff[static_cast<std::size_t>(source)];

    using Item = std::tuple<double, double, int>;  // cost, weight, vertex
    std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
    open.emplace(cost[static_cast<std::size_t>(source)], 0.0, source);

    long long pops = 0;
    bool reached = false;
    Eigen::VectorXd candidate(dim);
    while (!open.empty()) {
        const auto [c, w, u] = open.top();
        open.pop();
        if (visited[static_cast<std::size_t>(u)]) continue;
        visited[static_cast<std::size_t>(u)] = 1;
        ++pops;
        if (options.trace)
            options.trace->push_back({pops, u, weight[static_cast<std::size_t>(u)],
                                      proj_diff[static_cast<std::size_t>(u)],
                                      cost[static_cast<std::size_t>(u)]});
        if (u == dest) {
            reached = true;
            break;
        }
        for (const auto& nb : surface.neighbors(u)) {
            const auto vi = static_cast<std::size_t>(nb.vertex);
            if (visited[vi]) continue;
            const double w2 = weight[static_cast<std::size_t>(u)] + nb.weight;
            candidate = gamma.col(u) + nb.orientation * basis.columns().row(nb.edge).transpose();
            const double pd2 = (candidate - ref_proj).norm();
            const double c2 = w2 + alpha * pd2;
            if (c2 < cost[vi]) {
                cost[vi] = c2;
                weight[vi] = w2;
                proj_diff[vi] = pd2;
                gamma.col(nb.vertex) = candidate;
                prev[vi] = u;
                open.emplace(c2, w2, nb.vertex);
            }
        }
    }

    if (!reached) throw std::runtime_error("hstar: destination unreachable");

    Path path;
    for (int v = dest; v != -1; v = prev[static_cast<std::size_t>(v)]) path.nodes.push_back(v);
    std::reverse(path.nodes.begin(), path.nodes.end());

    SearchResult result;
    result.length = path_weight(surface, path);
    result.proj_diff =
        projection_difference(accumulate_projection(surface, basis, path), ref_proj);
    result.total_cost = result.length + alpha * result.proj_diff;
    result.visited_count = pops;
    result.path = std::move(path);
    return result;
}

}  // namespace topoplan
