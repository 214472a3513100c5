#pragma once

#include "sbpbox/matrix.hpp"

namespace sbpbox {

/// Full decomposition of a real symmetric matrix. Eigenvalues ascending,
/// eigenvectors the matching columns of `eigenvectors`, orthonormal in the
/// Euclidean inner product. residual_bound is the measured
/// max_i ||A v_i - lambda_i v_i||_2 / ||A||_F.
struct EigenDecomposition {
    RealVector eigenvalues;
    RealMatrix eigenvectors;
    double residual_bound = 0.0;
};

/// Dense symmetric eigensolver: cyclic Jacobi rotations with a relative
/// rotation threshold, so graded matrices (e.g. a 1e7 wall over O(1) levels)
/// keep small eigenvalues accurate. Deterministic for identical input.
///
/// Throws ContractViolation for non-square or asymmetric input
/// (asymmetry > 1e-12 * ||A||_F), ConvergenceError after 60 sweeps.
EigenDecomposition symmetric_eigensolve(const RealMatrix& a);

} // namespace sbpbox
