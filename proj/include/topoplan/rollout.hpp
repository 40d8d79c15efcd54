#pragma once

#include "topoplan/hstar.hpp"

namespace topoplan {

// Reference path at a rollout stage for a candidate node v: from v back along
// the reversed partial path to the original source, then along the reference.
// When v equals the partial's last node the step to v is omitted.
Path stage_reference(const SimplicialSurface& surface, const Path& partial, int v,
                     const Path& reference);

struct RolloutPop {
    int stage;
    PopTrace pop;
};

struct RolloutOptions {
    std::vector<RolloutPop>* trace = nullptr;
    int stage_limit_factor = 4;  // stage limit = factor * vertex count
};

// Fortified rollout: extends a partial path one node at a time, scoring each
// candidate neighbor by the full path it induces through an inner search, and
// keeps the best full path seen so far as the incumbent. The incumbent starts
// at the plain search output, so the result never costs more than it.
SearchResult fortified_rollout(const SimplicialSurface& surface, const HarmonicBasis& basis,
                               int source, int dest, const Path& reference, double alpha,
                               const RolloutOptions& options = {});

// Fortified rollout with the candidate neighborhood restricted to nodes that
// do not increase the projection difference by more than epsilon; falls back
// to the full neighborhood when the restriction empties it.
SearchResult pruned_rollout(const SimplicialSurface& surface, const HarmonicBasis& basis,
                            int source, int dest, const Path& reference, double alpha,
                            double epsilon, const RolloutOptions& options = {});

// 0.05 * ||reference projection||, floored away from zero.
double default_pruning_epsilon(const Eigen::VectorXd& reference_projection);

}  // namespace topoplan
