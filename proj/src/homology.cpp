#include "topoplan/homology.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace topoplan {

namespace {

void check(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

// Sign of traversing from u to v over the canonical (min, max) edge.
double step_orientation(int u, int v) {
    return u < v ? +1.0 : -1.0;
}

}  // namespace

HarmonicBasis::HarmonicBasis(Eigen::MatrixXd columns, double null_tolerance)
    : columns_(std::move(columns)), null_tolerance_(null_tolerance) {
    check(null_tolerance_ > 0.0, "null tolerance must be positive");
    if (columns_.cols() > 0) {
        const Eigen::MatrixXd gram = columns_.transpose() * columns_;
        const double err =
            (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
        check(err < 1e-8, "harmonic basis columns must be orthonormal");
    }
}

Eigen::SparseMatrix<double> hodge_laplacian_1(const SimplicialSurface& surface) {
    const Eigen::SparseMatrix<double> b1 = boundary_matrix(surface, 1);
    const Eigen::SparseMatrix<double> b2 = boundary_matrix(surface, 2);
    Eigen::SparseMatrix<double> l1 =
        Eigen::SparseMatrix<double>(b1.transpose() * b1) +
        Eigen::SparseMatrix<double>(b2 * b2.transpose());
    l1.makeCompressed();
    return l1;
}

HarmonicBasis harmonic_basis(const Eigen::SparseMatrix<double>& laplacian,
                             double null_tolerance) {
    check(laplacian.rows() == laplacian.cols(), "laplacian must be square");
    check(null_tolerance > 0.0, "null tolerance must be positive");
    const Eigen::Index m = laplacian.rows();
    if (m == 0) return HarmonicBasis(Eigen::MatrixXd(0, 0), null_tolerance);

    const Eigen::MatrixXd dense(laplacian);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition of the 1-Laplacian failed");

    const Eigen::VectorXd evals = solver.eigenvalues();  // ascending
    const double scale = std::max(std::abs(evals(m - 1)), 1e-300);
    const double threshold = null_tolerance * scale;

    Eigen::Index dim = 0;
    while (dim < m && std::abs(evals(dim)) < threshold) ++dim;

    if (dim > 0 && dim < m) {
        const double kernel_top = std::abs(evals(dim - 1));
        const double first_nonzero = evals(dim);
        if (kernel_top > 0.0 && first_nonzero / kernel_top < 1e3)
            throw std::runtime_error(
                "no clear spectral gap separates the kernel from the first nonzero eigenvalue");
    }

    return HarmonicBasis(solver.eigenvectors().leftCols(dim), null_tolerance);
}

ChainVector chain_of_path(const SimplicialSurface& surface, const Path& path) {
    require_valid_path(surface, path, "chain_of_path");
    ChainVector x = ChainVector::Zero(surface.edge_count());
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
        const int u = path.nodes[i];
        const int v = path.nodes[i + 1];
        const int e = surface.edge_between(u, v);
        x(e) += step_orientation(u, v);
    }
    return x;
}

Eigen::VectorXd harmonic_projection(const HarmonicBasis& basis, const ChainVector& chain) {
    check(chain.size() == basis.edge_count(), "chain dimension does not match the basis");
    return basis.columns().transpose() * chain;
}

Eigen::VectorXd accumulate_projection(const SimplicialSurface& surface,
                                      const HarmonicBasis& basis, const Path& path) {
    require_valid_path(surface, path, "accumulate_projection");
    check(basis.edge_count() == surface.edge_count(), "basis does not match the surface");
    Eigen::VectorXd gamma = Eigen::VectorXd::Zero(basis.dimension());
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
        const int u = path.nodes[i];
        const int v = path.nodes[i + 1];
        const int e = surface.edge_between(u, v);
        gamma += step_orientation(u, v) * basis.columns().row(e).transpose();
    }
    return gamma;
}

double projection_difference(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    check(a.size() == b.size(), "projection dimensions do not match");
    return (a - b).norm();
}

bool are_homologous(const SimplicialSurface& surface, const HarmonicBasis& basis,
                    const Path& p1, const Path& p2, double tol) {
    check(!p1.nodes.empty() && !p2.nodes.empty(), "paths must be non-empty");
    check(p1.source() == p2.source() && p1.destination() == p2.destination(),
          "paths must share source and destination");
    const Eigen::VectorXd g1 = accumulate_projection(surface, basis, p1);
    const Eigen::VectorXd g2 = accumulate_projection(surface, basis, p2);
    return projection_difference(g1, g2) <= tol;
}

SignatureKey quantize_projection(const Eigen::VectorXd& projection, double quantum) {
    check(quantum > 0.0, "quantum must be positive");
    SignatureKey key(static_cast<std::size_t>(projection.size()));
    for (Eigen::Index i = 0; i < projection.size(); ++i)
        key[static_cast<std::size_t>(i)] = std::llround(projection(i) / quantum);
    return key;
}

std::string format_signature_key(const SignatureKey& key) {
    std::string out;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i > 0) out.push_back(':');
        out += std::to_string(key[i]);
    }
    return out;
}

double path_cost(const SimplicialSurface& surface, const HarmonicBasis& basis,
                 const Path& path, const Eigen::VectorXd& reference_projection,
                 double alpha) {
    check(alpha >= 0.0 && std::isfinite(alpha), "alpha must be finite and non-negative");
    const double weight = path_weight(surface, path);
    const Eigen::VectorXd gamma = accumulate_projection(surface, basis, path);
    return weight + alpha * projection_difference(gamma, reference_projection);
}

}  // namespace topoplan
