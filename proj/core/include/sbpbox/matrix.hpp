#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace sbpbox {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;

/// Dense real matrix, row-major.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static RealMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row_data(std::size_t i) { return data_.data() + i * cols_; }
    const double* row_data(std::size_t i) const { return data_.data() + i * cols_; }

    RealMatrix transposed() const;
    RealMatrix operator*(const RealMatrix& rhs) const;

    RealVector apply(const RealVector& v) const;
    ComplexVector apply(const ComplexVector& v) const;

    /// Column j as a vector.
    RealVector column(std::size_t j) const;

    double frobenius_norm() const;
    /// max_ij |A_ij - A_ji|
    double asymmetry() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Dense complex matrix, row-major. Used by the small-dimension spectrum
/// oracle and by tests; not performance-critical.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols, Complex fill = {})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    explicit ComplexMatrix(const RealMatrix& re);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Complex operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexVector apply(const ComplexVector& v) const;
    double frobenius_norm() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

RealVector real_part(const ComplexVector& v);
RealVector imag_part(const ComplexVector& v);
ComplexVector to_complex(const RealVector& v);

double max_abs(const RealVector& v);
double max_abs(const ComplexVector& v);

} // namespace sbpbox
