#pragma once

#include "topoplan/hstar.hpp"

namespace topoplan {

// Shortest path of one homology class discovered during the augmented search.
struct ClassRecord {
    SignatureKey signature_key;
    double shortest_length = 0.0;
    Path representative;
    int discovery_rank = 0;
    Eigen::VectorXd projection;
};

struct BlkResult {
    SearchResult result;
    std::vector<ClassRecord> records;
};

// Uniform-cost search over augmented nodes (vertex, quantized projection).
// Terminates when the destination pops under the reference signature and
// returns the exact shortest homologous path plus one ClassRecord per other
// class in which the destination popped earlier, in pop order. Augmented
// nodes whose projection leaves the box spanned by {0, reference projection}
// inflated by one full loop value per hole are discarded, which keeps the
// signature space finite by excluding complete loops around holes.
BlkResult blk_search(const SimplicialSurface& surface, const HarmonicBasis& basis,
                     int source, int dest, const Path& reference);

// Largest (target_length - length_i) / proj_diff_i over records shorter than
// the target; zero when no class is shorter. A shorter record with zero
// projection difference signals a homology bookkeeping bug and throws.
double alpha_threshold(const std::vector<ClassRecord>& records, double target_length,
                       const Eigen::VectorXd& reference_projection);

// Harmonic projection of each hole's perimeter cycle.
std::vector<Eigen::VectorXd> hole_loop_projections(const SimplicialSurface& surface,
                                                   const HarmonicBasis& basis);

}  // namespace topoplan
