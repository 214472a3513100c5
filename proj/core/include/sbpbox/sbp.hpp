#pragma once

#include "sbpbox/grid.hpp"
#include "sbpbox/matrix.hpp"

namespace sbpbox {

/// The SBP21 triple (H, Q, D = H^-1 Q) on a grid.
///
///   H = dx * diag(1/2, 1, ..., 1, 1/2)          (trapezoidal quadrature)
///   Q entries in {0, +-1/2}, exactly:  Q^T + Q = diag(-1, 0, ..., 0, 1)
///   D = (1/(2 dx)) * [ -2  2          ]
///                    [ -1  0  1       ]
///                    [       ...      ]
///                    [      -1  0  1  ]
///                    [         -2  2  ]
///
/// Second order in the interior, first order on the two boundary rows.
struct SbpOperator {
    Grid grid;
    RealVector norm_diag;  // diagonal of H, units of length
    RealMatrix q_matrix;   // dimensionless
    RealMatrix d_matrix;   // units 1/length
    int order = 2;

    std::size_t size() const { return grid.n_points; }
};

/// Builds the SBP21 operator. Throws ContractViolation for n_points < 3
/// (the two one-sided boundary stencils would overlap).
SbpOperator build_sbp21(const Grid& grid);

/// D * psi. Length mismatch throws ContractViolation.
ComplexVector apply_derivative(const SbpOperator& op, const ComplexVector& psi);
RealVector apply_derivative(const SbpOperator& op, const RealVector& psi);

/// Discrete inner product psi^dagger H chi. Conjugate-symmetric.
Complex inner_product(const SbpOperator& op, const ComplexVector& psi, const ComplexVector& chi);
double inner_product(const SbpOperator& op, const RealVector& psi, const RealVector& chi);

/// sqrt((psi, psi)_H)
double h_norm(const SbpOperator& op, const ComplexVector& psi);
double h_norm(const SbpOperator& op, const RealVector& psi);

/// |(D psi, chi) + (psi, D chi) - (conj(psi_{N-1}) chi_{N-1} - conj(psi_0) chi_0)|.
/// Zero up to roundoff for every input pair; this is the summation-by-parts
/// identity that Q^T + Q enforces.
double verify_sbp_identity(const SbpOperator& op, const ComplexVector& psi, const ComplexVector& chi);

} // namespace sbpbox
