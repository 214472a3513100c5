#include "sbpbox/momentum.hpp"

#include <cmath>
#include <string>

#include "sbpbox/errors.hpp"

namespace sbpbox {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_even(const Grid& grid, const char* what) {
    if (grid.n_points % 2 != 0)
        throw ContractViolation(std::string(what) +
                                ": closed form covers even N_x only; use numerical_spectrum "
                                "for odd N_x (small N) or refine to an even grid");
}

// xi_l = cos(l pi / (N-1)), with the mirror half negated entry-for-entry so
// the +- pairing of the spectrum is bit-exact.
double xi_value(std::size_t n, int l) {
    const int mirror = static_cast<int>(n) - 1 - l;
    if (l > mirror) return -std::cos(static_cast<double>(mirror) * kPi / static_cast<double>(n - 1));
    return std::cos(static_cast<double>(l) * kPi / static_cast<double>(n - 1));
}

Complex cis(double t) { return {std::cos(t), std::sin(t)}; }

struct Ansatz {
    double s;          // sqrt(1 - xi^2)
    Complex r1, r2;    // i xi +- s
    double theta1, theta2;
};

Ansatz make_ansatz(double xi) {
    if (std::abs(xi) >= 1.0)
        throw ContractViolation("momentum ansatz: xi = +-1 is degenerate (r1 = r2)");
    Ansatz a;
    a.s = std::sqrt(1.0 - xi * xi);
    a.r1 = {a.s, xi};
    a.r2 = {-a.s, xi};
    a.theta1 = std::atan2(xi, a.s);
    a.theta2 = std::atan2(xi, -a.s);
    return a;
}

// Angle parametrization for the quantized levels: xi_l = cos(phi),
// phi = l pi/(N-1). Computing s = sin(phi) and the root phases directly from
// phi avoids the sqrt(1-xi^2) cancellation at xi -> +-1, which otherwise
// grows the eigenvector residual like N^3 for the extreme levels.
Ansatz make_level_ansatz(std::size_t n, int l) {
    const double phi = static_cast<double>(l) * kPi / static_cast<double>(n - 1);
    Ansatz a;
    a.s = std::sin(phi);
    const double xi = std::cos(phi);
    a.r1 = {a.s, xi};
    a.r2 = {-a.s, xi};
    a.theta1 = 0.5 * kPi - phi;
    a.theta2 = 0.5 * kPi + phi;
    return a;
}

// Left-boundary coefficients with psi_0 = 1.
void left_coeffs(const Ansatz& a, double xi, Complex& c1, Complex& c2) {
    const Complex i_xi{0.0, xi};
    c1 = -(2.0 * xi * xi + i_xi * (a.r2 - 2.0) + a.r2 - 1.0) / (a.r1 * (a.r1 - a.r2));
    c2 = (2.0 * xi * xi + i_xi * (a.r1 - 2.0) + a.r1 - 1.0) / (a.r2 * (a.r1 - a.r2));
}

// Right-boundary coefficients with psi_{N-1} = 1, entries indexed k = 0..N-1.
// Derived from the last boundary stencil psi_{N-2} = (1 - i xi) psi_{N-1}:
//   c1 = (-1)^{N-1} (1+s) r2^{N-1} / (2s),  c2 = (-1)^{N-1} (s-1) r1^{N-1} / (2s).
void right_coeffs(const Ansatz& a, std::size_t n, Complex& c1, Complex& c2) {
    const double k = static_cast<double>(n - 1);
    const double sgn = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^(N-1)
    c1 = sgn * (1.0 + a.s) * cis(a.theta2 * k) / (2.0 * a.s);
    c2 = sgn * (a.s - 1.0) * cis(a.theta1 * k) / (2.0 * a.s);
}

} // namespace

ComplexVector MomentumOperator::apply(const ComplexVector& psi) const {
    ComplexVector d = apply_derivative(sbp, psi);
    const Complex factor{0.0, -hbar};
    for (Complex& v : d) v *= factor;
    return d;
}

ComplexMatrix MomentumOperator::matrix() const {
    const std::size_t n = size();
    ComplexMatrix m(n, n);
    const Complex factor{0.0, -hbar};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = factor * sbp.d_matrix(i, j);
    return m;
}

MomentumOperator make_momentum(const Grid& grid, double hbar) {
    return MomentumOperator{build_sbp21(grid), hbar};
}

RealVector analytic_eigenvalues(const Grid& grid, double hbar) {
    require_even(grid, "analytic_eigenvalues");
    const std::size_t n = grid.n_points;
    RealVector p(n, 0.0);
    const double scale = hbar / grid.dx;
    for (int l = 1; l <= static_cast<int>(n) - 2; ++l)
        p[static_cast<std::size_t>(l - 1)] = scale * xi_value(n, l);
    // p[n-2], p[n-1] stay exactly zero: the doubly-degenerate zero mode
    return p;
}

MomentumEigenpair analytic_eigenvector(const Grid& grid, int l, double hbar) {
    require_even(grid, "analytic_eigenvector");
    const std::size_t n = grid.n_points;
    if (l < 1 || l > static_cast<int>(n) - 2)
        throw ContractViolation("analytic_eigenvector: l out of range [1, N-2]");

    MomentumEigenpair out;
    out.index_l = l;
    out.xi = xi_value(n, l);
    out.eigenvalue = hbar * out.xi / grid.dx;

    const Ansatz a = make_level_ansatz(n, l);
    out.r1 = a.r1;
    out.r2 = a.r2;
    left_coeffs(a, a.r1.imag(), out.c1, out.c2);

    out.vector.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double kk = static_cast<double>(k);
        out.vector[k] = out.c1 * cis(a.theta1 * kk) + out.c2 * cis(a.theta2 * kk);
    }

    // H-normalize with the trapezoidal weights directly
    double norm2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double w = (k == 0 || k == n - 1) ? 0.5 * grid.dx : grid.dx;
        norm2 += w * std::norm(out.vector[k]);
    }
    const double norm = std::sqrt(norm2);
    for (Complex& v : out.vector) v /= norm;
    out.c1 /= norm;
    out.c2 /= norm;

    // phase: first significant component gets nonnegative real part
    const double peak = max_abs(out.vector);
    for (const Complex& v : out.vector) {
        if (std::abs(v) > 1e-12 * peak) {
            const Complex phase = std::conj(v) / std::abs(v);
            for (Complex& w : out.vector) w *= phase;
            out.c1 *= phase;
            out.c2 *= phase;
            break;
        }
    }
    return out;
}

double boundary_determinant(const Grid& grid, double xi) {
    const Ansatz a = make_ansatz(xi);
    Complex l1, l2, r1, r2;
    left_coeffs(a, xi, l1, l2);
    right_coeffs(a, grid.n_points, r1, r2);
    const double ln = std::sqrt(std::norm(l1) + std::norm(l2));
    const double rn = std::sqrt(std::norm(r1) + std::norm(r2));
    return std::abs((l1 / ln) * (r2 / rn) - (l2 / ln) * (r1 / rn));
}

std::vector<Complex> numerical_spectrum(const Grid& grid, double hbar) {
    if (grid.n_points > kOracleMaxDim)
        throw ContractViolation("numerical_spectrum: N_x above the oracle cap of 12");
    return general_eigen_oracle(make_momentum(grid, hbar).matrix());
}

RealVector probability_flux(const MomentumOperator& op, const ComplexVector& psi, double mass) {
    if (!(mass > 0.0))
        throw ContractViolation("probability_flux: mass must be > 0");
    if (psi.size() != op.size())
        throw ContractViolation("probability_flux: vector length does not match grid");
    const ComplexVector dpsi = apply_derivative(op.sbp, psi);
    RealVector j(psi.size());
    // (psi* dpsi - (dpsi)* psi) / 2i is Im(psi* dpsi) identically; the
    // imaginary part of the defining expression cancels exactly.
    for (std::size_t k = 0; k < psi.size(); ++k)
        j[k] = std::imag(std::conj(psi[k]) * dpsi[k]) / mass;
    return j;
}

double boundary_leakage(const MomentumOperator& op, const ComplexVector& psi) {
    const RealVector j = probability_flux(op, psi, 1.0);
    const std::size_t n = j.size();
    return std::max(std::abs(j[0] - j[1]), std::abs(j[n - 1] - j[n - 2]));
}

CommutatorDefect commutator_defect(const MomentumOperator& op, const Grid& grid,
                                   const ComplexVector& psi) {
    if (psi.size() != grid.n_points || psi.size() != op.size())
        throw ContractViolation("commutator_defect: vector length does not match grid");
    const std::size_t n = psi.size();

    ComplexVector xpsi(n);
    for (std::size_t k = 0; k < n; ++k) xpsi[k] = grid.point(k) * psi[k];

    const ComplexVector pxpsi = op.apply(xpsi);
    const ComplexVector ppsi = op.apply(psi);

    CommutatorDefect out;
    out.commutator.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        out.commutator[k] = pxpsi[k] - grid.point(k) * ppsi[k];

    const Complex target_factor{0.0, -op.hbar};
    double dev = 0.0;
    for (std::size_t k = 1; k + 1 < n; ++k)
        dev = std::max(dev, std::abs(out.commutator[k] - target_factor * psi[k]));
    out.interior_deviation = dev;
    return out;
}

double dispersion_interior(double kappa, double dx, double hbar) {
    if (!(dx > 0.0))
        throw ContractViolation("dispersion_interior: dx must be > 0");
    if (!(std::abs(kappa) < kPi / dx))
        throw ContractViolation("dispersion_interior: kappa outside the Brillouin range (-pi/dx, pi/dx)");
    return hbar * std::sin(kappa * dx) / dx;
}

} // namespace sbpbox
