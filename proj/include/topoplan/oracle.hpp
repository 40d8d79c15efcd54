#pragma once

#include <functional>
#include <map>

#include "topoplan/homology.hpp"

namespace topoplan {

struct ClassInfo {
    double shortest_length = 0.0;
    Path representative;
    long long member_count = 0;
    Eigen::VectorXd projection;
};

// Ground-truth class table keyed by quantized harmonic signature.
struct ClassTable {
    std::map<SignatureKey, ClassInfo> classes;
};

// Visits every simple path (no vertex revisits) from source to dest in
// deterministic DFS order, passing the running weight and projection.
void for_each_simple_path(
    const SimplicialSurface& surface, const HarmonicBasis& basis, int source, int dest,
    const std::function<void(const Path&, double weight, const Eigen::VectorXd& projection)>& fn);

inline constexpr int kMaxOracleVertices = 30;

// Exhaustive enumeration of simple paths grouped by quantized harmonic
// signature, cross-checked against the boundary-image membership test on one
// representative pair per class pair. Guarded to tiny surfaces.
ClassTable enumerate_classes(const SimplicialSurface& surface, const HarmonicBasis& basis,
                             int source, int dest, int max_nodes = kMaxOracleVertices);

// Least-squares membership test for the image of the triangle boundary map.
class BoundaryImageTester {
public:
    explicit BoundaryImageTester(const SimplicialSurface& surface);

    // Component of the chain orthogonal to im(B2).
    Eigen::VectorXd residual(const ChainVector& chain) const;
    double residual_norm(const ChainVector& chain) const;
    bool contains(const ChainVector& chain, double tol = 1e-8) const;

private:
    Eigen::MatrixXd image_basis_;
};

}  // namespace topoplan
