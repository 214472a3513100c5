#include "sbpbox/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "sbpbox/errors.hpp"

namespace sbpbox {

namespace {

using LComplex = std::complex<long double>;
using Poly = std::vector<LComplex>;  // ascending powers, monic leading coefficient last

long double cabs(const LComplex& z) { return std::abs(z); }

// Unitary similarity reduction to upper Hessenberg form (complex Householder).
std::vector<LComplex> to_hessenberg(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<LComplex> h(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h[i * n + j] = LComplex(a(i, j).real(), a(i, j).imag());

    auto at = [&](std::size_t i, std::size_t j) -> LComplex& { return h[i * n + j]; };

    for (std::size_t k = 0; k + 2 < n; ++k) {
        long double xnorm2 = 0.0L;
        for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(at(i, k));
        const long double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0L) continue;

        const LComplex x0 = at(k + 1, k);
        const LComplex phase = (cabs(x0) > 0.0L) ? x0 / cabs(x0) : LComplex(1.0L);
        const LComplex alpha = -phase * xnorm;

        std::vector<LComplex> v(n, LComplex{});
        v[k + 1] = x0 - alpha;
        for (std::size_t i = k + 2; i < n; ++i) v[i] = at(i, k);
        long double vnorm2 = 0.0L;
        for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
        if (vnorm2 == 0.0L) continue;
        const long double beta = 2.0L / vnorm2;

        // left: H <- (I - beta v v^H) H
        for (std::size_t j = 0; j < n; ++j) {
            LComplex w{};
            for (std::size_t i = k + 1; i < n; ++i) w += std::conj(v[i]) * at(i, j);
            w *= beta;
            for (std::size_t i = k + 1; i < n; ++i) at(i, j) -= v[i] * w;
        }
        // right: H <- H (I - beta v v^H)
        for (std::size_t i = 0; i < n; ++i) {
            LComplex w{};
            for (std::size_t j = k + 1; j < n; ++j) w += at(i, j) * v[j];
            w *= beta;
            for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= w * std::conj(v[j]);
        }
        at(k + 1, k) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) at(i, k) = LComplex{};
    }
    return h;
}

// det(z I_k - H_k) recurrence over leading blocks of an upper Hessenberg
// matrix: p_k(z) = (z - h_kk) p_{k-1}(z) - sum_m h_mk (prod subdiag) p_{m-1}(z).
Poly char_poly(const std::vector<LComplex>& h, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) { return h[i * n + j]; };

    std::vector<Poly> p(n + 1);
    p[0] = {LComplex(1.0L)};
    for (std::size_t k = 1; k <= n; ++k) {
        Poly pk(k + 1, LComplex{});
        const LComplex hkk = at(k - 1, k - 1);
        for (std::size_t j = 0; j < k; ++j) {
            pk[j + 1] += p[k - 1][j];      // z * p_{k-1}
            pk[j] -= hkk * p[k - 1][j];    // -h_kk * p_{k-1}
        }
        LComplex subprod(1.0L);
        for (std::size_t m = k - 1; m >= 1; --m) {
            subprod *= at(m, m - 1);       // h_{m+1,m} in 1-based terms
            const LComplex coeff = at(m - 1, k - 1) * subprod;
            for (std::size_t j = 0; j < m; ++j) pk[j] -= coeff * p[m - 1][j];
        }
        p[k] = std::move(pk);
    }
    return p[n];
}

// Coefficients that vanish in exact arithmetic come out at roundoff level;
// snapping them restores exact structural roots (the SBP zero modes) that a
// root iteration could only locate to eps^(1/multiplicity).
void snap_coefficients(Poly& c) {
    long double maxc = 0.0L;
    for (const LComplex& v : c) maxc = std::max(maxc, cabs(v));
    const long double thresh =
        64.0L * static_cast<long double>(c.size()) * std::numeric_limits<long double>::epsilon() * maxc;
    for (std::size_t j = 0; j + 1 < c.size(); ++j)
        if (cabs(c[j]) <= thresh) c[j] = LComplex{};
}

LComplex poly_eval(const Poly& c, const LComplex& z) {
    LComplex acc{};
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * z + c[j];
    return acc;
}

// Durand-Kerner simultaneous iteration on a monic polynomial with all-simple
// (or at worst clustered) roots.
std::vector<LComplex> durand_kerner(const Poly& c) {
    const std::size_t d = c.size() - 1;
    std::vector<LComplex> z(d);
    if (d == 0) return z;
    if (d == 1) {
        z[0] = -c[0];
        return z;
    }

    // Fujiwara root bound
    long double radius = 0.0L;
    for (std::size_t j = 0; j < d; ++j) {
        const long double t = std::pow(cabs(c[j]), 1.0L / static_cast<long double>(d - j));
        radius = std::max(radius, t);
    }
    radius = 2.0L * radius + 1.0L;

    const long double pi = 3.14159265358979323846264338327950288L;
    for (std::size_t i = 0; i < d; ++i) {
        const long double ang = 2.0L * pi * static_cast<long double>(i) / static_cast<long double>(d) + 0.4L;
        z[i] = radius * LComplex(std::cos(ang), std::sin(ang));
    }

    const long double tol = 64.0L * std::numeric_limits<long double>::epsilon();
    for (int iter = 0; iter < 2000; ++iter) {
        long double worst = 0.0L;
        for (std::size_t i = 0; i < d; ++i) {
            LComplex denom(1.0L);
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (denom == LComplex{}) {
                z[i] += LComplex(1e-6L * radius, 1e-6L * radius);
                worst = radius;
                continue;
            }
            const LComplex step = poly_eval(c, z[i]) / denom;
            z[i] -= step;
            worst = std::max(worst, cabs(step) / (1.0L + cabs(z[i])));
        }
        if (worst <= tol) break;
    }
    return z;
}

} // namespace

std::vector<Complex> general_eigen_oracle(const ComplexMatrix& a, std::size_t max_dim) {
    const std::size_t n = a.rows();
    if (a.cols() != n)
        throw ContractViolation("general_eigen_oracle: matrix must be square");
    if (max_dim > kOracleMaxDim) max_dim = kOracleMaxDim;
    if (n > max_dim)
        throw ContractViolation("general_eigen_oracle: dimension " + std::to_string(n) +
                                " above the small-n cap " + std::to_string(max_dim));
    if (n == 0) return {};

    const std::vector<LComplex> h = to_hessenberg(a);
    Poly c = char_poly(h, n);
    snap_coefficients(c);

    // exact zero roots from trailing zero coefficients
    std::size_t zero_count = 0;
    while (zero_count < n && c[zero_count] == LComplex{}) ++zero_count;
    Poly deflated(c.begin() + static_cast<std::ptrdiff_t>(zero_count), c.end());

    std::vector<LComplex> roots = durand_kerner(deflated);

    // Multiple nonzero roots come out of the iteration as a cluster of
    // radius ~eps^(1/m); the cluster centroid cancels the leading
    // perturbation, so replace each cluster by its mean (union-find over
    // pairwise distances; genuinely distinct eigenvalues of the matrices
    // this oracle serves are separated by orders of magnitude more).
    {
        const std::size_t d = roots.size();
        std::vector<std::size_t> parent(d);
        for (std::size_t i = 0; i < d; ++i) parent[i] = i;
        auto find = [&](std::size_t i) {
            while (parent[i] != i) i = parent[i] = parent[parent[i]];
            return i;
        };
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (cabs(roots[i] - roots[j]) <=
                    1e-5L * (1.0L + cabs(roots[i]) + cabs(roots[j])))
                    parent[find(i)] = find(j);
        std::vector<LComplex> sum(d, LComplex{});
        std::vector<std::size_t> count(d, 0);
        for (std::size_t i = 0; i < d; ++i) {
            const std::size_t r = find(i);
            sum[r] += roots[i];
            ++count[r];
        }
        for (std::size_t i = 0; i < d; ++i) {
            const std::size_t r = find(i);
            roots[i] = sum[r] / static_cast<long double>(count[r]);
        }
    }
    std::vector<Complex> out;
    out.reserve(n);
    for (std::size_t i = 0; i < zero_count; ++i) out.emplace_back(0.0, 0.0);
    for (const LComplex& r : roots)
        out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));

    std::sort(out.begin(), out.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return out;
}

} // namespace sbpbox
