#include "sbpbox/grid.hpp"

#include "sbpbox/errors.hpp"

namespace sbpbox {

Grid::Grid(double a_, double b_, std::size_t n_points_)
    : a(a_), b(b_), n_points(n_points_) {
    if (!(b > a))
        throw ContractViolation("Grid: require b > a");
    if (n_points < 3)
        throw ContractViolation("Grid: require n_points >= 3");
    dx = (b - a) / static_cast<double>(n_points - 1);
    length = static_cast<double>(n_points - 1) * dx;
}

std::vector<double> Grid::coordinates() const {
    std::vector<double> x(n_points);
    for (std::size_t k = 0; k < n_points; ++k) x[k] = point(k);
    return x;
}

} // namespace sbpbox
