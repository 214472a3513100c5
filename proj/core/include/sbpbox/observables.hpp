#pragma once

#include "sbpbox/well.hpp"

namespace sbpbox {

/// One n-point-function sample: <psi_n | P^power | psi_n> against its
/// continuum value.
struct MomentRecord {
    int state_index = 0;   // well level n (1-based)
    int power = 0;
    double discrete_value = 0.0;
    double continuum_value = 0.0;
    double deviation = 0.0;
};

/// (psi, P^power psi)_H. Requires psi H-normalized to 1e-8 (no silent
/// renormalization) and 1 <= power <= 8; beyond the paper's range of 4 the
/// boundary rows of repeated P applications dominate and results are
/// exploratory.
Complex moment(const MomentumOperator& op, const ComplexVector& psi, int power);

/// Same in the (P^dagger P)^(power/2) form, power in {2,4}: the value the
/// moments experiment emits alongside <P^power> for comparison.
double gram_moment(const MomentumOperator& op, const ComplexVector& psi, int power);

/// Continuum <p^power> in well level n: (n pi hbar / L)^power, power in {2,4}.
/// Odd continuum moments vanish and are the caller's business.
double continuum_moment(int n, int power, double length, double hbar = 1.0);

/// |<P^power>_n - continuum| across a refinement ladder with fit; spectra
/// are computed internally (see the sweep overload to share them).
ConvergenceSeries moment_deviation_series(int n, int power, const std::vector<Grid>& grids,
                                          const PotentialSpec& pot,
                                          double mass = 1.0, double hbar = 1.0);

ConvergenceSeries moment_deviation_series(int n, int power, const std::vector<WellSpectrum>& sweep);

/// <P^power> of the n-th physical level of a solved spectrum, as a complex
/// number (tests assert the imaginary part is at noise level).
Complex well_moment(const WellSpectrum& spectrum, int n, int power);

/// Full record for the n-th physical level: discrete and continuum values
/// with their deviation. Throws if the imaginary part of the discrete value
/// exceeds 1e-10 of its scale (even powers carry real values on real states).
MomentRecord make_moment_record(const WellSpectrum& spectrum, int n, int power);

} // namespace sbpbox
