#pragma once

#include "sbpbox/eigen.hpp"
#include "sbpbox/momentum.hpp"
#include "sbpbox/powerlaw.hpp"

namespace sbpbox {

/// Approximate infinite square well: a large finite value on the two
/// endpoint sites, zero inside.
struct PotentialSpec {
    enum class Kind { infinite_well_approx };
    Kind kind = Kind::infinite_well_approx;
    double wall_height = 1e7;
    double interior_value = 0.0;
};

enum class StateLabel { physical, unphysical, wall };

struct DegeneratePair {
    std::size_t index_a = 0;
    std::size_t index_b = 0;
    double gap = 0.0;
};

/// Spectrum of H_well = P^dagger P / 2m + V(X), with P^dagger the plain
/// conjugate transpose so the assembled matrix is hbar^2 D^T D / 2m + V,
/// real symmetric. States are stored as columns, H-normalized (Euclidean
/// orthogonality is the solver's guarantee and is what tests assert; both
/// norms of each state are emitted by the harness).
struct WellSpectrum {
    Grid grid;
    double mass = 1.0;
    double hbar = 1.0;
    RealVector energies;          // ascending
    RealMatrix states;            // column k belongs to energies[k]
    std::vector<DegeneratePair> pairs;
    std::vector<StateLabel> labels;
    std::vector<std::size_t> anomalies;  // unpaired non-wall states, flagged not thrown

    std::size_t count(StateLabel l) const;
    /// Column index of the n-th (1-based) physical level, ascending in energy.
    std::size_t physical_index(int n) const;
    /// Column index of the n-th (1-based) unphysical (doubler) state.
    std::size_t unphysical_index(int n) const;
};

/// Two non-wall neighbours are degenerate partners when
/// |E_a - E_b| <= kPairingTolerance * max(|E_a|, 1). The wall splits the
/// doubler degeneracy at the 1e-5..1e-4 relative level over the acceptance
/// grids, well below the 1e-3 level spacing of interest.
inline constexpr double kPairingTolerance = 1e-3;

/// Assembles hbar^2 D^T D / (2m) + V in the coordinate representation.
/// Symmetric by construction (the upper triangle is mirrored bit-exactly).
RealMatrix build_hamiltonian(const Grid& grid, const PotentialSpec& pot,
                             double mass = 1.0, double hbar = 1.0);

/// Full well spectrum: eigensolve, H-normalize, label wall states
/// (E >= wall_height/2), pair adjacent non-wall levels, and split each pair
/// into its physical/unphysical members (see split_physical).
WellSpectrum solve_well(const Grid& grid, const PotentialSpec& pot,
                        double mass = 1.0, double hbar = 1.0);

/// Re-rotates every degenerate pair so the physical member minimizes the
/// discrete Dirichlet energy sum |w_{k+1} - w_k|^2 over unit-norm
/// combinations (a 2x2 symmetric eigenproblem in the pair span) and the
/// unphysical member maximizes it; labels set accordingly. Idempotent.
WellSpectrum split_physical(WellSpectrum spectrum);

/// Continuum infinite-well level: E_n = n^2 pi^2 hbar^2 / (2 m L^2), n >= 1.
double continuum_energy(int n, double length, double mass = 1.0, double hbar = 1.0);

/// |E_n^discrete - E_n^continuum| across a refinement ladder, with power-law
/// fit. Throws ContractViolation naming the grid if some grid cannot supply
/// n paired physical levels.
ConvergenceSeries energy_deviation_series(int n, const std::vector<Grid>& grids,
                                          const PotentialSpec& pot,
                                          double mass = 1.0, double hbar = 1.0);

/// Spectra for a refinement ladder, solved once and shared between the
/// energy- and moment-deviation series.
std::vector<WellSpectrum> well_sweep(const std::vector<Grid>& grids, const PotentialSpec& pot,
                                     double mass = 1.0, double hbar = 1.0);

/// energy_deviation_series on precomputed spectra.
ConvergenceSeries energy_deviation_series(int n, const std::vector<WellSpectrum>& sweep);

} // namespace sbpbox
