#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "topoplan/path.hpp"

namespace topoplan {

// Real coefficient vector indexed by oriented edges.
using ChainVector = Eigen::VectorXd;

// Orthonormal columns spanning the numerical kernel of the Hodge 1-Laplacian.
// The column count equals the number of holes of the surface.
class HarmonicBasis {
public:
    HarmonicBasis() = default;
    HarmonicBasis(Eigen::MatrixXd columns, double null_tolerance);

    int dimension() const { return static_cast<int>(columns_.cols()); }
    int edge_count() const { return static_cast<int>(columns_.rows()); }
    double null_tolerance() const { return null_tolerance_; }
    const Eigen::MatrixXd& columns() const { return columns_; }

private:
    Eigen::MatrixXd columns_;
    double null_tolerance_ = 0.0;
};

// L1 = B1^T B1 + B2 B2^T, the unweighted combinatorial form.
Eigen::SparseMatrix<double> hodge_laplacian_1(const SimplicialSurface& surface);

inline constexpr double kDefaultNullTolerance = 1e-9;

// Kernel extraction by dense symmetric eigendecomposition. Eigenvalues below
// null_tolerance times the largest eigenvalue count as kernel. Throws when no
// clear spectral gap (ratio >= 1e3) separates the kernel from the first
// nonzero eigenvalue.
HarmonicBasis harmonic_basis(const Eigen::SparseMatrix<double>& laplacian,
                             double null_tolerance = kDefaultNullTolerance);

// Signed sum of traversed oriented edges.
ChainVector chain_of_path(const SimplicialSurface& surface, const Path& path);

// H^T x.
Eigen::VectorXd harmonic_projection(const HarmonicBasis& basis, const ChainVector& chain);

// Edge-ordered accumulation of the harmonic projection along a path. Every
// module derives class keys through this routine so quantization always sees
// identically computed floats.
Eigen::VectorXd accumulate_projection(const SimplicialSurface& surface,
                                      const HarmonicBasis& basis, const Path& path);

double projection_difference(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

inline constexpr double kDefaultHomologyTolerance = 1e-6;

// True iff the harmonic projections of two co-terminal paths agree within tol.
bool are_homologous(const SimplicialSurface& surface, const HarmonicBasis& basis,
                    const Path& p1, const Path& p2,
                    double tol = kDefaultHomologyTolerance);

using SignatureKey = std::vector<std::int64_t>;

inline constexpr double kSignatureQuantum = 1e-6;

SignatureKey quantize_projection(const Eigen::VectorXd& projection,
                                 double quantum = kSignatureQuantum);

// Colon-joined integer rendering used in CSV output.
std::string format_signature_key(const SignatureKey& key);

// W(path) + alpha * || gamma(path) - reference_projection ||_2, computed in
// one canonical order so algorithm comparisons are bitwise reproducible.
double path_cost(const SimplicialSurface& surface, const HarmonicBasis& basis,
                 const Path& path, const Eigen::VectorXd& reference_projection,
                 double alpha);

}  // namespace topoplan
