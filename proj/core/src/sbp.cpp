#include "sbpbox/sbp.hpp"

#include <cmath>

#include "sbpbox/errors.hpp"

namespace sbpbox {

namespace {

void check_length(const SbpOperator& op, std::size_t len, const char* where) {
    if (len != op.size())
        throw ContractViolation(std::string(where) + ": vector length does not match grid");
}

} // namespace

SbpOperator build_sbp21(const Grid& grid) {
    const std::size_t n = grid.n_points;
    if (n < 3)
        throw ContractViolation("build_sbp21: need n_points >= 3, boundary stencils overlap");

    SbpOperator op;
    op.grid = grid;
    op.order = 2;

    op.norm_diag.assign(n, grid.dx);
    op.norm_diag.front() = 0.5 * grid.dx;
    op.norm_diag.back() = 0.5 * grid.dx;

    // Q entries are exact in {0, +-1/2}; the Q^T + Q = E_N - E_1 identity is
    // then bit-exact.
    op.q_matrix = RealMatrix(n, n);
    op.q_matrix(0, 0) = -0.5;
    op.q_matrix(0, 1) = 0.5;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        op.q_matrix(k, k - 1) = -0.5;
        op.q_matrix(k, k + 1) = 0.5;
    }
    op.q_matrix(n - 1, n - 2) = -0.5;
    op.q_matrix(n - 1, n - 1) = 0.5;

    const double e = 1.0 / grid.dx;        // boundary rows
    const double c = 0.5 / grid.dx;        // interior stencil
    op.d_matrix = RealMatrix(n, n);
    op.d_matrix(0, 0) = -e;
    op.d_matrix(0, 1) = e;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        op.d_matrix(k, k - 1) = -c;
        op.d_matrix(k, k + 1) = c;
    }
    op.d_matrix(n - 1, n - 2) = -e;
    op.d_matrix(n - 1, n - 1) = e;
    return op;
}

ComplexVector apply_derivative(const SbpOperator& op, const ComplexVector& psi) {
    check_length(op, psi.size(), "apply_derivative");
    const std::size_t n = op.size();
    ComplexVector out(n);
    const double e = op.d_matrix(0, 1);
    const double c = (n > 2) ? op.d_matrix(1, 2) : 0.0;
    out[0] = -e * psi[0] + e * psi[1];
    for (std::size_t k = 1; k + 1 < n; ++k) out[k] = -c * psi[k - 1] + c * psi[k + 1];
    out[n - 1] = -e * psi[n - 2] + e * psi[n - 1];
    return out;
}

RealVector apply_derivative(const SbpOperator& op, const RealVector& psi) {
    check_length(op, psi.size(), "apply_derivative");
    const std::size_t n = op.size();
    RealVector out(n);
    const double e = op.d_matrix(0, 1);
    const double c = (n > 2) ? op.d_matrix(1, 2) : 0.0;
    out[0] = -e * psi[0] + e * psi[1];
    for (std::size_t k = 1; k + 1 < n; ++k) out[k] = -c * psi[k - 1] + c * psi[k + 1];
    out[n - 1] = -e * psi[n - 2] + e * psi[n - 1];
    return out;
}

Complex inner_product(const SbpOperator& op, const ComplexVector& psi, const ComplexVector& chi) {
    check_length(op, psi.size(), "inner_product");
    check_length(op, chi.size(), "inner_product");
    Complex acc{};
    for (std::size_t k = 0; k < op.size(); ++k)
        acc += std::conj(psi[k]) * op.norm_diag[k] * chi[k];
    return acc;
}

double inner_product(const SbpOperator& op, const RealVector& psi, const RealVector& chi) {
    check_length(op, psi.size(), "inner_product");
    check_length(op, chi.size(), "inner_product");
    double acc = 0.0;
    for (std::size_t k = 0; k < op.size(); ++k) acc += psi[k] * op.norm_diag[k] * chi[k];
    return acc;
}

double h_norm(const SbpOperator& op, const ComplexVector& psi) {
    return std::sqrt(inner_product(op, psi, psi).real());
}

double h_norm(const SbpOperator& op, const RealVector& psi) {
    return std::sqrt(inner_product(op, psi, psi));
}

double verify_sbp_identity(const SbpOperator& op, const ComplexVector& psi, const ComplexVector& chi) {
    check_length(op, psi.size(), "verify_sbp_identity");
    check_length(op, chi.size(), "verify_sbp_identity");
    const ComplexVector dpsi = apply_derivative(op, psi);
    const ComplexVector dchi = apply_derivative(op, chi);
    const Complex lhs = inner_product(op, dpsi, chi) + inner_product(op, psi, dchi);
    const Complex boundary =
        std::conj(psi.back()) * chi.back() - std::conj(psi.front()) * chi.front();
    return std::abs(lhs - boundary);
}

} // namespace sbpbox
