#include "sbpbox/well.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sbpbox/errors.hpp"

namespace sbpbox {

namespace {

constexpr double kPi = 3.14159265358979323846;

double dirichlet_energy(const RealVector& u, const RealVector& v) {
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < u.size(); ++k)
        acc += (u[k + 1] - u[k]) * (v[k + 1] - v[k]);
    return acc;
}

void fix_sign(RealVector& w) {
    const double peak = max_abs(w);
    for (double v : w) {
        if (std::abs(v) > 1e-12 * peak) {
            if (v < 0.0)
                for (double& x : w) x = -x;
            return;
        }
    }
}

} // namespace

std::size_t WellSpectrum::count(StateLabel l) const {
    std::size_t c = 0;
    for (StateLabel x : labels)
        if (x == l) ++c;
    return c;
}

std::size_t WellSpectrum::physical_index(int n) const {
    if (n < 1)
        throw ContractViolation("physical_index: level must be >= 1");
    int seen = 0;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (labels[k] == StateLabel::physical && ++seen == n) return k;
    }
    throw ContractViolation("physical_index: grid N_x=" + std::to_string(grid.n_points) +
                            " has fewer than " + std::to_string(n) + " physical levels");
}

std::size_t WellSpectrum::unphysical_index(int n) const {
    if (n < 1)
        throw ContractViolation("unphysical_index: level must be >= 1");
    int seen = 0;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (labels[k] == StateLabel::unphysical && ++seen == n) return k;
    }
    throw ContractViolation("unphysical_index: grid N_x=" + std::to_string(grid.n_points) +
                            " has fewer than " + std::to_string(n) + " unphysical states");
}

RealMatrix build_hamiltonian(const Grid& grid, const PotentialSpec& pot, double mass, double hbar) {
    if (pot.kind != PotentialSpec::Kind::infinite_well_approx)
        throw ContractViolation("build_hamiltonian: unknown potential kind");
    if (!(mass > 0.0))
        throw ContractViolation("build_hamiltonian: mass must be > 0");
    if (!(pot.wall_height > 0.0))
        throw ContractViolation("build_hamiltonian: wall_height must be > 0");

    const SbpOperator op = build_sbp21(grid);
    const std::size_t n = grid.n_points;
    const double scale = hbar * hbar / (2.0 * mass);

    RealMatrix h(n, n);
    // upper triangle of scale * D^T D, mirrored so symmetry is bit-exact
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += op.d_matrix(k, i) * op.d_matrix(k, j);
            h(i, j) = scale * acc;
            h(j, i) = h(i, j);
        }
    }
    for (std::size_t k = 1; k + 1 < n; ++k) h(k, k) += pot.interior_value;
    h(0, 0) += pot.wall_height;
    h(n - 1, n - 1) += pot.wall_height;
    return h;
}

WellSpectrum solve_well(const Grid& grid, const PotentialSpec& pot, double mass, double hbar) {
    const RealMatrix h = build_hamiltonian(grid, pot, mass, hbar);
    EigenDecomposition eig = symmetric_eigensolve(h);
    const SbpOperator op = build_sbp21(grid);
    const std::size_t n = grid.n_points;

    WellSpectrum spec;
    spec.grid = grid;
    spec.mass = mass;
    spec.hbar = hbar;
    spec.energies = std::move(eig.eigenvalues);
    spec.states = std::move(eig.eigenvectors);
    spec.labels.assign(n, StateLabel::physical);

    for (std::size_t k = 0; k < n; ++k) {
        RealVector v = spec.states.column(k);
        const double hn = h_norm(op, v);
        for (std::size_t i = 0; i < n; ++i) spec.states(i, k) = v[i] / hn;
    }

    std::vector<std::size_t> nonwall;
    for (std::size_t k = 0; k < n; ++k) {
        if (spec.energies[k] >= 0.5 * pot.wall_height)
            spec.labels[k] = StateLabel::wall;
        else
            nonwall.push_back(k);
    }

    for (std::size_t i = 0; i < nonwall.size();) {
        if (i + 1 < nonwall.size()) {
            const std::size_t a = nonwall[i], b = nonwall[i + 1];
            const double gap = std::abs(spec.energies[a] - spec.energies[b]);
            if (gap <= kPairingTolerance * std::max(std::abs(spec.energies[a]), 1.0)) {
                spec.pairs.push_back({a, b, gap});
                i += 2;
                continue;
            }
        }
        spec.anomalies.push_back(nonwall[i]);
        ++i;
    }
    return split_physical(std::move(spec));
}

WellSpectrum split_physical(WellSpectrum spec) {
    if (spec.pairs.empty() && spec.anomalies.empty() && spec.count(StateLabel::wall) == 0)
        throw ContractViolation("split_physical: pairs not populated");

    const SbpOperator op = build_sbp21(spec.grid);
    const std::size_t n = spec.grid.n_points;

    for (const DegeneratePair& pair : spec.pairs) {
        RealVector u = spec.states.column(pair.index_a);
        RealVector v = spec.states.column(pair.index_b);

        // re-orthonormalize the pair span in the Euclidean sense
        double un = 0.0;
        for (double x : u) un += x * x;
        un = std::sqrt(un);
        for (double& x : u) x /= un;
        double uv = 0.0;
        for (std::size_t k = 0; k < n; ++k) uv += u[k] * v[k];
        for (std::size_t k = 0; k < n; ++k) v[k] -= uv * u[k];
        double vn = 0.0;
        for (double x : v) vn += x * x;
        vn = std::sqrt(vn);
        for (double& x : v) x /= vn;

        // 2x2 Dirichlet-energy eigenproblem in span{u, v}. The rotation-angle
        // form stays accurate when m01 is tiny, where the direct eigenvector
        // formula (m01, lambda - m00) cancels catastrophically and would
        // leak the oscillatory member into the physical state.
        const double m00 = dirichlet_energy(u, u);
        const double m01 = dirichlet_energy(u, v);
        const double m11 = dirichlet_energy(v, v);
        const double phi = 0.5 * std::atan2(2.0 * m01, m00 - m11);
        const double c = std::cos(phi), s = std::sin(phi);
        const double ray1 = m00 * c * c + 2.0 * m01 * s * c + m11 * s * s;
        const double ray2 = m00 * s * s - 2.0 * m01 * s * c + m11 * c * c;

        double alpha = c, beta = s;  // minimizer (alpha u + beta v)
        if (ray2 < ray1) {
            alpha = -s;
            beta = c;
        }

        RealVector phys(n), unph(n);
        for (std::size_t k = 0; k < n; ++k) {
            phys[k] = alpha * u[k] + beta * v[k];
            unph[k] = -beta * u[k] + alpha * v[k];
        }
        fix_sign(phys);
        fix_sign(unph);
        const double hp = h_norm(op, phys);
        const double hu = h_norm(op, unph);
        for (std::size_t k = 0; k < n; ++k) {
            spec.states(k, pair.index_a) = phys[k] / hp;
            spec.states(k, pair.index_b) = unph[k] / hu;
        }
        spec.labels[pair.index_a] = StateLabel::physical;
        spec.labels[pair.index_b] = StateLabel::unphysical;
    }
    return spec;
}

double continuum_energy(int n, double length, double mass, double hbar) {
    if (n < 1)
        throw ContractViolation("continuum_energy: level must be >= 1");
    const double k = static_cast<double>(n) * kPi / length;
    return hbar * hbar * k * k / (2.0 * mass);
}

std::vector<WellSpectrum> well_sweep(const std::vector<Grid>& grids, const PotentialSpec& pot,
                                     double mass, double hbar) {
    std::vector<WellSpectrum> sweep;
    sweep.reserve(grids.size());
    for (const Grid& g : grids) sweep.push_back(solve_well(g, pot, mass, hbar));
    return sweep;
}

ConvergenceSeries energy_deviation_series(int n, const std::vector<WellSpectrum>& sweep) {
    ConvergenceSeries series;
    series.label = "deltaE_n" + std::to_string(n);
    for (const WellSpectrum& spec : sweep) {
        const std::size_t k = spec.physical_index(n);
        const double cont = continuum_energy(n, spec.grid.length, spec.mass, spec.hbar);
        series.samples.emplace_back(spec.grid.dx, std::abs(spec.energies[k] - cont));
    }
    series.finalize();
    return series;
}

ConvergenceSeries energy_deviation_series(int n, const std::vector<Grid>& grids,
                                          const PotentialSpec& pot, double mass, double hbar) {
    for (std::size_t i = 1; i < grids.size(); ++i)
        if (!(grids[i].dx < grids[i - 1].dx))
            throw ContractViolation("energy_deviation_series: grids must strictly refine");
    return energy_deviation_series(n, well_sweep(grids, pot, mass, hbar));
}

} // namespace sbpbox
