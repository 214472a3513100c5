#include "sbpbox/powerlaw.hpp"

#include <algorithm>
#include <cmath>

#include "sbpbox/errors.hpp"

namespace sbpbox {

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 2)
        throw ContractViolation("fit_power_law: need at least 2 samples");
    for (const auto& [dx, err] : samples) {
        if (!(dx > 0.0))
            throw ContractViolation("fit_power_law: all dx must be > 0");
        if (!(err > 0.0))
            throw ContractViolation(
                "fit_power_law: sample with err <= 0; clamp it at a machine-epsilon floor "
                "or drop it before fitting (this routine never clamps silently)");
    }

    const double n = static_cast<double>(samples.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [dx, err] : samples) {
        mx += std::log(dx);
        my += std::log(err);
    }
    mx /= n;
    my /= n;

    double sxx = 0.0, sxy = 0.0;
    for (const auto& [dx, err] : samples) {
        const double x = std::log(dx) - mx;
        sxx += x * x;
        sxy += x * (std::log(err) - my);
    }
    if (sxx == 0.0)
        throw ContractViolation("fit_power_law: all dx identical, slope undefined");

    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    fit.prefactor = std::exp(my - fit.exponent * mx);

    double ss = 0.0;
    for (const auto& [dx, err] : samples) {
        const double r = std::log(err) - (fit.exponent * std::log(dx) + std::log(fit.prefactor));
        ss += r * r;
    }
    fit.rms_log_residual = std::sqrt(ss / n);
    return fit;
}

void ConvergenceSeries::finalize() {
    std::stable_sort(samples.begin(), samples.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    fit.reset();
    if (samples.size() >= 2 &&
        std::all_of(samples.begin(), samples.end(), [](const auto& s) { return s.second > 0.0; }))
        fit = fit_power_law(samples);
}

bool ConvergenceSeries::strictly_decreasing() const {
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i].second < samples[i - 1].second)) return false;
    return true;
}

} // namespace sbpbox
