#include "topoplan/rollout.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace topoplan {

namespace {

void check(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

SearchResult rollout_impl(const SimplicialSurface& surface, const HarmonicBasis& basis,
                          int source, int dest, const Path& reference, double alpha,
                          std::optional<double> epsilon, const RolloutOptions& options) {
    const int n = surface.vertex_count();
    check(source >= 0 && source < n && dest >= 0 && dest < n, "vertex id out of range");
    check(source != dest, "source and destination must differ");
    if (epsilon) check(*epsilon > 0.0 && std::isfinite(*epsilon), "epsilon must be positive");
    require_valid_path(surface, reference, "rollout reference");
    check(reference.source() == source && reference.destination() == dest,
          "reference must connect source to destination");

    const Eigen::VectorXd ref_proj = accumulate_projection(surface, basis, reference);

    long long pops = 0;
    auto run_inner = [&](int from, const Path& ref, int stage) {
        std::vector<PopTrace> local;
        HStarOptions hopt;
        if (options.trace) hopt.trace = &local;
        SearchResult r = hstar_search(surface, basis, from, dest, ref, alpha, hopt);
        pops += r.visited_count;
        if (options.trace)
            for (const auto& t : local) options.trace->push_back({stage, t});
        return r;
    };

    const SearchResult base = run_inner(source, reference, 0);
    Path incumbent = base.path;
    double incumbent_cost = base.total_cost;

    Path partial;
    partial.nodes.push_back(source);
    Eigen::VectorXd partial_gamma = Eigen::VectorXd::Zero(basis.dimension());

    Path previous_full;  // anti-stall marker, empty before the first stage
    const long long stage_limit =
        static_cast<long long>(options.stage_limit_factor) * static_cast<long long>(n);
    bool limit_hit = false;

    long long stage = 0;
    while (partial.destination() != dest) {
        if (stage >= stage_limit) {
            limit_hit = true;
            break;
        }
        ++stage;
        const int u = partial.destination();
        const auto nbs = surface.neighbors(u);

        std::vector<int> candidates;
        candidates.reserve(nbs.size());
        if (epsilon) {
            const double current_pd = (partial_gamma - ref_proj).norm();
            for (const auto& nb : nbs) {
                const double pd =
                    (partial_gamma + nb.orientation * basis.columns().row(nb.edge).transpose() -
                     ref_proj)
                        .norm();
                if (pd < current_pd + *epsilon) candidates.push_back(nb.vertex);
            }
            if (candidates.empty())  // fallback keeps the rollout complete
                for (const auto& nb : nbs) candidates.push_back(nb.vertex);
        } else {
            for (const auto& nb : nbs) candidates.push_back(nb.vertex);
        }

        int best_vertex = -1;
        double best_cost = std::numeric_limits<double>::infinity();
        Path best_full;
        int skipped_vertex = -1;
        double skipped_cost = 0.0;
        Path skipped_full;

        for (int v : candidates) {
            Path full;
            full.nodes = partial.nodes;
            if (v == dest) {
                full.nodes.push_back(v);
            } else {
                const Path stage_ref = stage_reference(surface, partial, v, reference);
                SearchResult inner = run_inner(v, stage_ref, static_cast<int>(stage));
                full.nodes.insert(full.nodes.end(), inner.path.nodes.begin(),
                                  inner.path.nodes.end());
            }
            const double c = path_cost(surface, basis, full, ref_proj, alpha);
            // Anti-stall: a backtracking step that reproduces the previous
            // stage's full path makes no progress; keep it only as a last
            // resort. Forward steps along the same plan are normal progress.
            const bool backtrack =
                partial.nodes.size() >= 2 && v == partial.nodes[partial.nodes.size() - 2];
            if (backtrack && !previous_full.nodes.empty() && full.nodes == previous_full.nodes) {
                if (skipped_vertex < 0) {
                    skipped_vertex = v;
                    skipped_cost = c;
                    skipped_full = std::move(full);
                }
                continue;
            }
            if (c < best_cost) {
                best_cost = c;
                best_vertex = v;
                best_full = std::move(full);
            }
        }

        if (best_vertex < 0) {
            best_vertex = skipped_vertex;
            best_cost = skipped_cost;
            best_full = std::move(skipped_full);
        }

        partial_gamma += (u < best_vertex ? +1.0 : -1.0) *
                         basis.columns().row(surface.edge_between(u, best_vertex)).transpose();
        partial.nodes.push_back(best_vertex);
        previous_full = best_full;
        if (best_cost < incumbent_cost) {
            incumbent_cost = best_cost;
            incumbent = std::move(best_full);
        }
    }

    SearchResult result;
    result.length = path_weight(surface, incumbent);
    result.proj_diff =
        projection_difference(accumulate_projection(surface, basis, incumbent), ref_proj);
    result.total_cost = result.length + alpha * result.proj_diff;
    result.visited_count = pops;
    result.stage_limit_hit = limit_hit;
    result.path = std::move(incumbent);
    return result;
}

}  // namespace

Path stage_reference(const SimplicialSurface& surface, const Path& partial, int v,
                     const Path& reference) {
    require_valid_path(surface, partial, "rollout partial");
    require_valid_path(surface, reference, "rollout reference");
    check(v >= 0 && v < surface.vertex_count(), "vertex id out of range");
    check(partial.source() == reference.source(),
          "partial path must start at the reference source");

    Path out;
    out.nodes.reserve(partial.nodes.size() + reference.nodes.size() + 1);
    const int last = partial.destination();
    if (v != last) {
        check(surface.edge_between(v, last) >= 0, "node is not adjacent to the partial path");
        out.nodes.push_back(v);
    }
    out.nodes.insert(out.nodes.end(), partial.nodes.rbegin(), partial.nodes.rend());
    out.nodes.insert(out.nodes.end(), reference.nodes.begin() + 1, reference.nodes.end());
    return out;
}

SearchResult fortified_rollout(const SimplicialSurface& surface, const HarmonicBasis& basis,
                               int source, int dest, const Path& reference, double alpha,
                               const RolloutOptions& options) {
    return rollout_impl(surface, basis, source, dest, reference, alpha, std::nullopt, options);
}

SearchResult pruned_rollout(const SimplicialSurface& surface, const HarmonicBasis& basis,
                            int source, int dest, const Path& reference, double alpha,
                            double epsilon, const RolloutOptions& options) {
    return rollout_impl(surface, basis, source, dest, reference, alpha, epsilon, options);
}

double default_pruning_epsilon(const Eigen::VectorXd& reference_projection) {
    return std::max(0.05 * reference_projection.norm(), 1e-9);
}

}  // namespace topoplan
