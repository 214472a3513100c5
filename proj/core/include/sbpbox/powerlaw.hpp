#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sbpbox {

/// Least-squares fit of err ~ c * dx^nu in log-log space.
struct PowerLawFit {
    double exponent = 0.0;         // nu
    double prefactor = 0.0;        // c
    double rms_log_residual = 0.0;
};

/// Fits log(err) = nu*log(dx) + log(c). Requires >= 2 samples with dx > 0 and
/// err > 0; a sample with err <= 0 raises ContractViolation telling the
/// caller to clamp at a machine-epsilon floor or drop the sample — this
/// routine never clamps silently.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& samples);

/// A labelled (dx, error) refinement series with its fit. Samples are kept
/// sorted by decreasing dx; the fit is present once two positive samples
/// exist.
struct ConvergenceSeries {
    std::string label;
    std::vector<std::pair<double, double>> samples;
    std::optional<PowerLawFit> fit;

    /// Sorts by decreasing dx and fits when possible (errors must be > 0 to
    /// fit; otherwise fit stays empty).
    void finalize();
    bool strictly_decreasing() const;
};

} // namespace sbpbox
