#pragma once

#include <cstddef>
#include <vector>

namespace sbpbox {

/// Uniform 1-D grid on [a,b] with n_points nodes, the two endpoints included.
/// dx = (b-a)/(n_points-1); length = (n_points-1)*dx, equal to b-a up to
/// rounding.
struct Grid {
    double a = 0.0;
    double b = 1.0;
    std::size_t n_points = 0;
    double dx = 0.0;
    double length = 0.0;

    Grid() = default;
    /// Throws ContractViolation unless b > a and n_points >= 3.
    Grid(double a, double b, std::size_t n_points);

    double point(std::size_t k) const { return a + static_cast<double>(k) * dx; }
    /// All node coordinates, point(0) .. point(n_points-1).
    std::vector<double> coordinates() const;
};

} // namespace sbpbox
