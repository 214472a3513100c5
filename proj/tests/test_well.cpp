#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "sbpbox/errors.hpp"
#include "sbpbox/well.hpp"

using namespace sbpbox;

namespace {

constexpr double kPi = 3.14159265358979323846;

double euclid_cosine(const RealVector& a, const RealVector& b) {
    double ab = 0.0, aa = 0.0, bb = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        ab += a[k] * b[k];
        aa += a[k] * a[k];
        bb += b[k] * b[k];
    }
    return std::abs(ab) / std::sqrt(aa * bb);
}

RealVector sampled_well_state(const Grid& g, int n) {
    RealVector v(g.n_points);
    for (std::size_t k = 0; k < g.n_points; ++k)
        v[k] = std::sin(static_cast<double>(n) * kPi * (g.point(k) - g.a) / g.length);
    return v;
}

} // namespace

TEST_CASE("hamiltonian assembly: hand value, walls, symmetry, positivity") {
    // N=3 on [0,1]: dx = 1/2, top-left of D^T D / 2 is (4+1)/2 * (1/(2 dx))^2 = 2.5
    const Grid g3(0.0, 1.0, 3);
    PotentialSpec pot;
    const RealMatrix h3 = build_hamiltonian(g3, pot);
    CHECK(h3(0, 0) == doctest::Approx(2.5 + 1e7).epsilon(1e-15));
    CHECK(h3(2, 2) == doctest::Approx(2.5 + 1e7).epsilon(1e-15));

    // independent matrix-product oracle for the kinetic part
    const SbpOperator op = build_sbp21(g3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < 3; ++k) acc += op.d_matrix(k, i) * op.d_matrix(k, j);
            double expect = 0.5 * acc;
            if (i == j && (i == 0 || i == 2)) expect += 1e7;
            CHECK(h3(i, j) == doctest::Approx(expect).epsilon(1e-15));
        }

    const Grid g(0.0, 1.0, 16);
    const RealMatrix h = build_hamiltonian(g, pot);
    CHECK(h.asymmetry() == 0.0);

    // V = 0: Gram form, positive semidefinite
    PotentialSpec free = pot;
    free.wall_height = 1e-300;  // effectively zero while staying positive
    RealMatrix hf = build_hamiltonian(g, free);
    const EigenDecomposition e = symmetric_eigensolve(hf);
    CHECK(e.eigenvalues.front() >= -1e-10);

    CHECK_THROWS_AS(build_hamiltonian(g, pot, -1.0), ContractViolation);
}

TEST_CASE("well spectrum at N=32: pairing, labels, counts") {
    const Grid g(0.0, 1.0, 32);
    const WellSpectrum spec = solve_well(g, PotentialSpec{});

    CHECK(spec.count(StateLabel::physical) == 15);
    CHECK(spec.count(StateLabel::unphysical) == 15);
    CHECK(spec.count(StateLabel::wall) == 2);
    CHECK(spec.anomalies.empty());
    CHECK(spec.count(StateLabel::physical) + spec.count(StateLabel::unphysical) +
              spec.count(StateLabel::wall) ==
          g.n_points);
    CHECK(spec.pairs.size() == 15);

    for (const DegeneratePair& p : spec.pairs)
        CHECK(p.gap <= 1e-3 * std::max(std::abs(spec.energies[p.index_a]), 1.0));

    // low energies sit near the continuum levels
    for (int n = 1; n <= 4; ++n) {
        const double e = spec.energies[spec.physical_index(n)];
        const double cont = continuum_energy(n, g.length);
        CHECK(std::abs(e - cont) / cont < 0.05);
    }

    // wall states: energy above wall/2 and H-weighted mass on the endpoints
    const SbpOperator op = build_sbp21(g);
    for (std::size_t k = 0; k < g.n_points; ++k) {
        if (spec.labels[k] != StateLabel::wall) continue;
        CHECK(spec.energies[k] >= 0.5e7);
        const RealVector v = spec.states.column(k);
        double endpoint = op.norm_diag.front() * v.front() * v.front() +
                          op.norm_diag.back() * v.back() * v.back();
        double total = 0.0;
        for (std::size_t i = 0; i < g.n_points; ++i)
            total += op.norm_diag[i] * v[i] * v[i];
        CHECK(endpoint / total >= 0.99);
    }
}

TEST_CASE("states are H-normalized and Euclid-orthogonal across the physical/unphysical split") {
    const Grid g(0.0, 1.0, 32);
    const WellSpectrum spec = solve_well(g, PotentialSpec{});
    const SbpOperator op = build_sbp21(g);

    for (std::size_t k = 0; k < g.n_points; ++k)
        CHECK(std::abs(h_norm(op, spec.states.column(k)) - 1.0) <= 1e-12);

    double worst = 0.0;
    for (std::size_t i = 0; i < g.n_points; ++i) {
        if (spec.labels[i] != StateLabel::physical) continue;
        for (std::size_t j = 0; j < g.n_points; ++j) {
            if (spec.labels[j] != StateLabel::unphysical) continue;
            worst = std::max(worst, euclid_cosine(spec.states.column(i), spec.states.column(j)));
        }
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("ground state matches the continuum profile; doubler is its pi-mode image") {
    const Grid g64(0.0, 1.0, 64);
    const WellSpectrum spec64 = solve_well(g64, PotentialSpec{});
    const SbpOperator op64 = build_sbp21(g64);

    RealVector cont = sampled_well_state(g64, 1);
    const double cn = h_norm(op64, cont);
    for (double& v : cont) v /= cn;
    const RealVector gs = spec64.states.column(spec64.physical_index(1));
    CHECK(std::abs(inner_product(op64, gs, cont)) >= 0.999);

    // lowest four pairs at N=64: unphysical = pi-mode o physical
    for (int n = 1; n <= 4; ++n) {
        const DegeneratePair& pair = spec64.pairs[n - 1];
        RealVector modulated = spec64.states.column(pair.index_a);
        for (std::size_t k = 0; k < modulated.size(); ++k)
            if (k % 2 == 1) modulated[k] = -modulated[k];
        CHECK(euclid_cosine(spec64.states.column(pair.index_b), modulated) >= 1.0 - 1e-3);
    }

    // the spec'd tighter bound at N=32 for the ground pair
    const Grid g32(0.0, 1.0, 32);
    const WellSpectrum spec32 = solve_well(g32, PotentialSpec{});
    const DegeneratePair& p0 = spec32.pairs[0];
    RealVector mod = spec32.states.column(p0.index_a);
    for (std::size_t k = 0; k < mod.size(); ++k)
        if (k % 2 == 1) mod[k] = -mod[k];
    CHECK(euclid_cosine(spec32.states.column(p0.index_b), mod) >= 1.0 - 1e-4);
}

TEST_CASE("split_physical: Dirichlet separation, idempotence, pair span") {
    const Grid g(0.0, 1.0, 32);
    WellSpectrum spec = solve_well(g, PotentialSpec{});

    auto dirichlet = [](const RealVector& v) {
        double acc = 0.0;
        for (std::size_t k = 0; k + 1 < v.size(); ++k)
            acc += (v[k + 1] - v[k]) * (v[k + 1] - v[k]);
        return acc;
    };
    for (const DegeneratePair& p : spec.pairs)
        CHECK(dirichlet(spec.states.column(p.index_a)) < dirichlet(spec.states.column(p.index_b)));

    const WellSpectrum again = split_physical(spec);
    for (std::size_t k = 0; k < g.n_points; ++k) {
        CHECK(again.labels[k] == spec.labels[k]);
        for (std::size_t i = 0; i < g.n_points; ++i)
            CHECK(again.states(i, k) == doctest::Approx(spec.states(i, k)).epsilon(1e-10));
    }

    WellSpectrum empty;
    CHECK_THROWS_AS(static_cast<void>(split_physical(empty)), ContractViolation);
}

TEST_CASE("continuum energies") {
    CHECK(continuum_energy(1, 1.0) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-15));
    CHECK(continuum_energy(2, 1.0) ==
          doctest::Approx(4.0 * continuum_energy(1, 1.0)).epsilon(1e-15));
    for (int n = 1; n <= 6; ++n) CHECK(continuum_energy(n, 2.5, 0.7, 1.3) > 0.0);
    CHECK_THROWS_AS(static_cast<void>(continuum_energy(0, 1.0)), ContractViolation);
}

TEST_CASE("energy deviation series: ground level converges at first order") {
    std::vector<Grid> grids;
    for (std::size_t n : {32ul, 64ul, 128ul, 256ul}) grids.emplace_back(0.0, 1.0, n);
    const std::vector<WellSpectrum> sweep = well_sweep(grids, PotentialSpec{});

    const ConvergenceSeries s1 = energy_deviation_series(1, sweep);
    REQUIRE(s1.fit.has_value());
    CHECK(s1.fit->exponent >= 0.7);
    CHECK(s1.fit->exponent <= 1.3);
    CHECK(s1.strictly_decreasing());
    // >= 4x reduction over an 8x refinement (measured ~7.7x)
    CHECK(s1.samples.back().second * 4.0 <= s1.samples.front().second);

    const ConvergenceSeries s2 = energy_deviation_series(2, sweep);
    REQUIRE(s2.fit.has_value());
    CHECK(s2.fit->exponent >= 0.7);
    CHECK(s2.fit->exponent <= 1.3);

    // non-refining ladder is rejected
    std::vector<Grid> bad = {Grid(0.0, 1.0, 64), Grid(0.0, 1.0, 32)};
    CHECK_THROWS_AS(static_cast<void>(energy_deviation_series(1, bad, PotentialSpec{})),
                    ContractViolation);

    // asking for more levels than a grid supplies names the grid
    CHECK_THROWS_WITH_AS(static_cast<void>(sweep.front().physical_index(200)),
                         doctest::Contains("N_x=32"), ContractViolation);
}
