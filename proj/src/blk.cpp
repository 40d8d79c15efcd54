#include "topoplan/blk.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace topoplan {

namespace {

void check(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

struct AugKey {
    int vertex;
    SignatureKey key;
    bool operator==(const AugKey&) const = default;
};

struct AugKeyHash {
    std::size_t operator()(const AugKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(k.vertex);
        for (std::int64_t v : k.key) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

struct AugNode {
    int vertex;
    SignatureKey key;
    double dist;
    Eigen::VectorXd gamma;
    int parent;  // pool index, -1 at the start node
    bool closed = false;
};

struct QueueItem {
    double dist;
    int vertex;
    SignatureKey key;
    int pool_index;
};

struct QueueGreater {
    bool operator()(const QueueItem& a, const QueueItem& b) const {
        if (a.dist != b.dist) return a.dist > b.dist;
        if (a.vertex != b.vertex) return a.vertex > b.vertex;
        return a.key > b.key;
    }
};

Path reconstruct(const std::vector<AugNode>& pool, int index) {
    Path path;
    for (int i = index; i != -1; i = pool[static_cast<std::size_t>(i)].parent)
        path.nodes.push_back(pool[static_cast<std::size_t>(i)].vertex);
    std::reverse(path.nodes.begin(), path.nodes.end());
    return path;
}

}  // namespace

std::vector<Eigen::VectorXd> hole_loop_projections(const SimplicialSurface& surface,
                                                   const HarmonicBasis& basis) {
    std::vector<Eigen::VectorXd> loops;
    for (const auto& cycle : hole_boundary_cycles(surface)) {
        Path loop;
        loop.nodes = cycle;
        loops.push_back(accumulate_projection(surface, basis, loop));
    }
    return loops;
}

BlkResult blk_search(const SimplicialSurface& surface, const HarmonicBasis& basis,
                     int source, int dest, const Path& reference) {
    const int n = surface.vertex_count();
    check(source >= 0 && source < n && dest >= 0 && dest < n, "vertex id out of range");
    check(source != dest, "source and destination must differ");
    check(basis.edge_count() == surface.edge_count(), "basis does not match the surface");
    require_valid_path(surface, reference, "blk reference");
    check(reference.source() == source && reference.destination() == dest,
          "reference must connect source to destination");

    const int dim = basis.dimension();
    const Eigen::VectorXd ref_proj = accumulate_projection(surface, basis, reference);
    const SignatureKey target_key = quantize_projection(ref_proj);

    // Winding bound: allow the box spanned by {0, reference projection},
    // inflated by one full perimeter-loop value per hole.
    Eigen::VectorXd box_lo(dim), box_hi(dim);
    for (int d = 0; d < dim; ++d) {
        box_lo(d) = std::min(0.0, ref_proj(d));
        box_hi(d) = std::max(0.0, ref_proj(d));
    }
    for (const auto& loop : hole_loop_projections(surface, basis)) {
        box_lo -= loop.cwiseAbs();
        box_hi += loop.cwiseAbs();
    }
    const double margin = 1e-6;
    box_lo.array() -= margin;
    box_hi.array() += margin;

    std::vector<AugNode> pool;
    std::unordered_map<AugKey, int, AugKeyHash> index;
    std::priority_queue<QueueItem, std::vector<QueueItem>, QueueGreater> open;

    const SignatureKey start_key = quantize_projection(Eigen::VectorXd::Zero(dim));
    pool.push_back(AugNode{source, start_key, 0.0, Eigen::VectorXd::Zero(dim), -1});
    index.emplace(AugKey{source, start_key}, 0);
    open.push(QueueItem{0.0, source, start_key, 0});

    long long pops = 0;
    int found = -1;
    std::vector<ClassRecord> records;
    Eigen::VectorXd candidate(dim);

    while (!open.empty()) {
        const QueueItem item = open.top();
        open.pop();
        AugNode& node = pool[static_cast<std::size_t>(item.pool_index)];
        if (node.closed || item.dist != node.dist) continue;
        node.closed = true;
        ++pops;

        if (node.vertex == dest) {
            if (node.key == target_key) {
                found = item.pool_index;
                break;
            }
            Path representative = reconstruct(pool, item.pool_index);
            records.push_back(ClassRecord{node.key, path_weight(surface, representative),
                                          std::move(representative),
                                          static_cast<int>(records.size()), node.gamma});
        }

        // Copy out before relaxing: pushing nodes may reallocate the pool.
        const int u = node.vertex;
        const double u_dist = node.dist;
        const Eigen::VectorXd u_gamma = node.gamma;

        for (const auto& nb : surface.neighbors(u)) {
            candidate = u_gamma + nb.orientation * basis.columns().row(nb.edge).transpose();
            if ((candidate.array() < box_lo.array()).any() ||
                (candidate.array() > box_hi.array()).any())
                continue;
            const double d2 = u_dist + nb.weight;
            SignatureKey k2 = quantize_projection(candidate);
            const AugKey aug{nb.vertex, k2};
            auto it = index.find(aug);
            if (it == index.end()) {
                const int idx = static_cast<int>(pool.size());
                pool.push_back(AugNode{nb.vertex, std::move(k2), d2, candidate, item.pool_index});
                index.emplace(AugKey{nb.vertex, pool.back().key}, idx);
                open.push(QueueItem{d2, nb.vertex, pool.back().key, idx});
            } else {
                AugNode& existing = pool[static_cast<std::size_t>(it->second)];
                if (!existing.closed && d2 < existing.dist) {
                    existing.dist = d2;
                    existing.gamma = candidate;
                    existing.parent = item.pool_index;
                    open.push(QueueItem{d2, nb.vertex, existing.key, it->second});
                }
            }
        }
    }

    if (found < 0)
        throw std::runtime_error(
            "blk: reference class unreachable within the winding bound");

    BlkResult out;
    Path path = reconstruct(pool, found);
    out.result.length = path_weight(surface, path);
    out.result.proj_diff =
        projection_difference(accumulate_projection(surface, basis, path), ref_proj);
    out.result.total_cost = out.result.length;
    out.result.visited_count = pops;
    out.result.path = std::move(path);
    out.records = std::move(records);
    return out;
}

double alpha_threshold(const std::vector<ClassRecord>& records, double target_length,
                       const Eigen::VectorXd& reference_projection) {
    double best = 0.0;
    for (const auto& record : records) {
        if (!(record.shortest_length < target_length)) continue;
        const double gap = projection_difference(record.projection, reference_projection);
        if (gap < 1e-9)
            throw std::runtime_error(
                "alpha_threshold: shorter class with zero projection difference");
        best = std::max(best, (target_length - record.shortest_length) / gap);
    }
    return best;
}

}  // namespace topoplan
