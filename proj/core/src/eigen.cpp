#include "sbpbox/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "sbpbox/errors.hpp"

namespace sbpbox {

namespace {

constexpr int kMaxSweeps = 60;

// One Jacobi rotation annihilating a_pq, applied to A (symmetric, full
// storage) and accumulated into V whose ROWS are the eigenvector candidates
// (row layout keeps both updates contiguous).
void rotate(RealMatrix& a, RealMatrix& v, std::size_t p, std::size_t q) {
    const std::size_t n = a.rows();
    const double apq = a(p, q);
    const double app = a(p, p);
    const double aqq = a(q, q);

    const double theta = (aqq - app) / (2.0 * apq);
    // smaller-angle root of t^2 + 2 theta t - 1 = 0
    double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    a(p, p) = app - t * apq;
    a(q, q) = aqq + t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    double* rowp = a.row_data(p);
    double* rowq = a.row_data(q);
    for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const double akp = rowp[k];
        const double akq = rowq[k];
        rowp[k] = akp - s * (akq + tau * akp);
        rowq[k] = akq + s * (akp - tau * akq);
    }
    // mirror the two touched rows into the columns
    for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        a(k, p) = rowp[k];
        a(k, q) = rowq[k];
    }

    double* vp = v.row_data(p);
    double* vq = v.row_data(q);
    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = vp[k];
        const double vkq = vq[k];
        vp[k] = vkp - s * (vkq + tau * vkp);
        vq[k] = vkq + s * (vkp - tau * vkq);
    }
}

} // namespace

EigenDecomposition symmetric_eigensolve(const RealMatrix& input) {
    const std::size_t n = input.rows();
    if (n == 0 || input.cols() != n)
        throw ContractViolation("symmetric_eigensolve: matrix must be square and non-empty");
    const double fro = input.frobenius_norm();
    if (input.asymmetry() > 1e-12 * std::max(fro, std::numeric_limits<double>::min()))
        throw ContractViolation("symmetric_eigensolve: input not symmetric within 1e-12*||A||_F");

    RealMatrix a = input;
    // symmetrize roundoff-level asymmetry so the sweep sees one value per pair
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double m = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = m;
            a(j, i) = m;
        }

    RealMatrix vrows = RealMatrix::identity(n);  // rows are eigenvectors

    // Relative rotation threshold: keeps small eigenvalues of graded
    // matrices (1e7 wall over O(1) levels) relatively accurate.
    const double eps = std::numeric_limits<double>::epsilon();
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = std::abs(a(p, q));
                if (apq == 0.0) continue;
                const double scale = std::sqrt(std::abs(a(p, p)) * std::abs(a(q, q)));
                if (apq > eps * std::max(scale, eps * fro)) {
                    rotate(a, vrows, p, q);
                    rotated = true;
                }
            }
        }
        if (!rotated) break;
    }
    if (sweep == kMaxSweeps)
        throw ConvergenceError("symmetric_eigensolve: no convergence after " +
                               std::to_string(kMaxSweeps) + " cyclic Jacobi sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = RealMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]);
        const double* row = vrows.row_data(order[k]);
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = row[i];
    }

    // measured residual against the original input
    double worst = 0.0;
    RealVector v(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) v[i] = out.eigenvectors(i, k);
        RealVector av = input.apply(v);
        double r2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = av[i] - out.eigenvalues[k] * v[i];
            r2 += d * d;
        }
        worst = std::max(worst, std::sqrt(r2));
    }
    out.residual_bound = fro > 0.0 ? worst / fro : 0.0;
    return out;
}

} // namespace sbpbox
