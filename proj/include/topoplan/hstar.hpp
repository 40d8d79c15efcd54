#pragma once

#include "topoplan/homology.hpp"

namespace topoplan {

struct PopTrace {
    long long pop_index;
    int vertex;
    double weight;
    double proj_diff;
    double cost;
};

struct SearchResult {
    Path path;
    double length = 0.0;
    double proj_diff = 0.0;
    double total_cost = 0.0;  // length + alpha * proj_diff
    long long visited_count = 0;
    bool stage_limit_hit = false;  // rollout only
};

struct HStarOptions {
    std::vector<PopTrace>* trace = nullptr;
};

// Best-first search over vertices minimizing W + alpha * ||gamma - gamma_ref||
// of partial paths. Vertices are visited at most once and never reopened; the
// returned path is reconstructed from predecessors when the destination pops.
SearchResult hstar_search(const SimplicialSurface& surface, const HarmonicBasis& basis,
                          int source, int dest, const Path& reference, double alpha,
                          const HStarOptions& options = {});

}  // namespace topoplan
