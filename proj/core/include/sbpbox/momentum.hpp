#pragma once

#include "sbpbox/oracle.hpp"
#include "sbpbox/sbp.hpp"

namespace sbpbox {

/// Discrete momentum operator P = -i hbar D. Non-hermitean: the boundary
/// rows of D break the anti-symmetry that would make P self-adjoint, exactly
/// reproducing the integration-by-parts boundary term in the H inner product.
struct MomentumOperator {
    SbpOperator sbp;
    double hbar = 1.0;

    std::size_t size() const { return sbp.size(); }
    /// P * psi = -i hbar (D * psi)
    ComplexVector apply(const ComplexVector& psi) const;
    /// Dense matrix of P (for the small-n oracle and tests).
    ComplexMatrix matrix() const;
};

MomentumOperator make_momentum(const Grid& grid, double hbar = 1.0);

/// One closed-form eigenpair of P on an even grid.
///
/// xi = cos(l pi / (N-1)) is the dimensionless eigenvalue of dx*D/i;
/// p = hbar * xi / dx. The eigenvector is psi_k = c1 r1^k + c2 r2^k with
/// r_{1,2} = i xi +- sqrt(1 - xi^2) (so r1 r2 = -1) and c1, c2 fixed by the
/// left boundary stencil; it is H-normalized with the phase chosen so the
/// first significant component has nonnegative real part.
struct MomentumEigenpair {
    int index_l = 0;
    double eigenvalue = 0.0;  // p_l, momentum units
    double xi = 0.0;          // dimensionless
    Complex r1, r2;
    Complex c1, c2;
    ComplexVector vector;
};

/// All N eigenvalues of P on an even grid: p_l = (hbar/dx) sin((l/(N-1)+1/2) pi)
/// for l = 1..N-2, followed by the two zeros. The +-pairing p_l = -p_{N-1-l}
/// holds bit-exactly. Odd N has no closed form in this family; throws
/// ContractViolation directing the caller to numerical_spectrum.
RealVector analytic_eigenvalues(const Grid& grid, double hbar = 1.0);

/// Closed-form eigenpair for 1 <= l <= N-2 on an even grid.
MomentumEigenpair analytic_eigenvector(const Grid& grid, int l, double hbar = 1.0);

/// |det| of the row-normalized 2x2 matrix of left/right boundary coefficient
/// vectors (c^L; c^R) at dimensionless eigenvalue candidate xi. Vanishes iff
/// the interior ansatz is consistent with both boundary stencils, i.e. iff xi
/// is an eigenvalue.
double boundary_determinant(const Grid& grid, double xi);

/// Full complex spectrum of P via the characteristic-polynomial oracle.
/// Refuses N > 12.
std::vector<Complex> numerical_spectrum(const Grid& grid, double hbar = 1.0);

/// Discrete probability flux j_k = (1/2mi)(psi* o (D psi) - (D psi)* o psi)_k.
/// The result is real; the imaginary parts of the defining expression vanish
/// identically and are asserted below 1e-12 of the local scale.
RealVector probability_flux(const MomentumOperator& op, const ComplexVector& psi, double mass = 1.0);

/// Remnant boundary leakage: the larger of the two current jumps at the
/// walls, max(|j_0 - j_1|, |j_{N-1} - j_{N-2}|), with m = 1. A state whose
/// current is smooth up to the walls does not leak; for the closed-form
/// eigenvectors this decays as dx^2. (The endpoint values |j_0|, |j_{N-1}|
/// themselves converge to |p|/L: the SBP identity pins |psi_0| = |psi_{N-1}|
/// for every real-eigenvalue eigenvector, so they cannot decay.)
double boundary_leakage(const MomentumOperator& op, const ComplexVector& psi);

struct CommutatorDefect {
    ComplexVector commutator;    // (PX - XP) psi
    double interior_deviation;   // max interior |(PX-XP)psi_k + i hbar psi_k|
};

/// (PX - XP) psi with X = diag(grid coordinates). Entrywise the result is
/// exactly -i hbar (psi_1, (psi_0+psi_2)/2, ..., (psi_{N-3}+psi_{N-1})/2, psi_{N-2});
/// the interior deviation from -i hbar psi measures the midpoint-average
/// error, O(dx^2) on smooth states.
CommutatorDefect commutator_defect(const MomentumOperator& op, const Grid& grid, const ComplexVector& psi);

/// Infinite-domain dispersion relation of the interior stencil:
/// p(kappa) = hbar sin(kappa dx)/dx for |kappa| < pi/dx. Out-of-range kappa
/// throws ContractViolation.
double dispersion_interior(double kappa, double dx, double hbar = 1.0);

} // namespace sbpbox
