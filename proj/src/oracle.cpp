#include "topoplan/oracle.hpp"

#include <stdexcept>

#include <Eigen/QR>

namespace topoplan {

namespace {

void check(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

}  // namespace

void for_each_simple_path(
    const SimplicialSurface& surface, const HarmonicBasis& basis, int source, int dest,
    const std::function<void(const Path&, double, const Eigen::VectorXd&)>& fn) {
    const int n = surface.vertex_count();
    check(source >= 0 && source < n && dest >= 0 && dest < n, "vertex id out of range");
    check(basis.edge_count() == surface.edge_count(), "basis does not match the surface");

    Path path;
    path.nodes.reserve(static_cast<std::size_t>(n));
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    Eigen::VectorXd gamma = Eigen::VectorXd::Zero(basis.dimension());
    double weight = 0.0;

    // DFS in ascending-neighbor order; depth is bounded by the vertex count.
    std::function<void(int)> visit = [&](int u) {
        path.nodes.push_back(u);
        on_path[static_cast<std::size_t>(u)] = 1;
        if (u == dest) {
            fn(path, weight, gamma);
        } else {
            for (const auto& nb : surface.neighbors(u)) {
                if (on_path[static_cast<std::size_t>(nb.vertex)]) continue;
                const Eigen::VectorXd step =
                    nb.orientation * basis.columns().row(nb.edge).transpose();
                weight += nb.weight;
                gamma += step;
                visit(nb.vertex);
                gamma -= step;
                weight -= nb.weight;
            }
        }
        on_path[static_cast<std::size_t>(u)] = 0;
        path.nodes.pop_back();
    };
    visit(source);
}

ClassTable enumerate_classes(const SimplicialSurface& surface, const HarmonicBasis& basis,
                             int source, int dest, int max_nodes) {
    check(max_nodes <= kMaxOracleVertices, "oracle size guard exceeds the supported maximum");
    check(surface.vertex_count() <= max_nodes, "surface too large for exhaustive enumeration");

    ClassTable table;
    for_each_simple_path(surface, basis, source, dest,
                         [&](const Path& path, double weight, const Eigen::VectorXd& gamma) {
                             SignatureKey key = quantize_projection(gamma);
                             auto it = table.classes.find(key);
                             if (it == table.classes.end()) {
                                 table.classes.emplace(std::move(key),
                                                       ClassInfo{weight, path, 1, gamma});
                             } else {
                                 ++it->second.member_count;
                                 if (weight < it->second.shortest_length) {
                                     it->second.shortest_length = weight;
                                     it->second.representative = path;
                                     it->second.projection = gamma;
                                 }
                             }
                         });

    // Signature grouping must agree with the boundary-image membership test.
    const BoundaryImageTester tester(surface);
    for (auto a = table.classes.begin(); a != table.classes.end(); ++a) {
        for (auto b = std::next(a); b != table.classes.end(); ++b) {
            const ChainVector diff = chain_of_path(surface, a->second.representative) -
                                     chain_of_path(surface, b->second.representative);
            if (tester.contains(diff))
                throw std::runtime_error(
                    "oracle: distinct signatures map to a boundary-image difference");
        }
    }
    return table;
}

BoundaryImageTester::BoundaryImageTester(const SimplicialSurface& surface) {
    const Eigen::MatrixXd b2(boundary_matrix(surface, 2));
    if (b2.cols() == 0) {
        image_basis_ = Eigen::MatrixXd(b2.rows(), 0);
        return;
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(b2);
    const Eigen::Index rank = qr.rank();
    image_basis_ =
        qr.householderQ() * Eigen::MatrixXd::Identity(b2.rows(), rank);
}

Eigen::VectorXd BoundaryImageTester::residual(const ChainVector& chain) const {
    check(chain.size() == image_basis_.rows(), "chain dimension does not match");
    if (image_basis_.cols() == 0) return chain;
    return chain - image_basis_ * (image_basis_.transpose() * chain);
}

double BoundaryImageTester::residual_norm(const ChainVector& chain) const {
    return residual(chain).norm();
}

bool BoundaryImageTester::contains(const ChainVector& chain, double tol) const {
    return residual_norm(chain) <= tol;
}

}  // namespace topoplan
