#pragma once

#include "sbpbox/matrix.hpp"

namespace sbpbox {

inline constexpr std::size_t kOracleMaxDim = 12;

/// Brute-force spectrum of a small general complex matrix: all n roots of the
/// characteristic polynomial, with multiplicity, sorted by (real, imag).
///
/// Route: Householder reduction to Hessenberg form, characteristic-polynomial
/// coefficients from the Hessenberg determinant recurrence (long double),
/// Durand-Kerner root iteration, Newton polish. Coefficients below
/// 64*n*eps*max|c| are snapped to zero so structurally-multiple zero
/// eigenvalues (the SBP zero modes) come out exact rather than as an
/// eps^(1/m) cluster.
///
/// Refuses dimensions above max_dim (default and hard cap 12); this is a
/// small-n oracle, conditioning of the coefficient route degrades beyond
/// that.
std::vector<Complex> general_eigen_oracle(const ComplexMatrix& a,
                                          std::size_t max_dim = kOracleMaxDim);

} // namespace sbpbox
