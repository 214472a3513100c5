#include "sbpbox/matrix.hpp"

#include <cmath>

#include "sbpbox/errors.hpp"

namespace sbpbox {

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

RealMatrix RealMatrix::transposed() const {
    RealMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RealMatrix RealMatrix::operator*(const RealMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw ContractViolation("RealMatrix multiply: inner dimensions differ");
    RealMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            const double* rrow = rhs.row_data(k);
            double* orow = out.row_data(i);
            for (std::size_t j = 0; j < rhs.cols_; ++j) orow[j] += aik * rrow[j];
        }
    }
    return out;
}

RealVector RealMatrix::apply(const RealVector& v) const {
    if (v.size() != cols_)
        throw ContractViolation("RealMatrix apply: length mismatch");
    RealVector out(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        const double* row = row_data(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * v[j];
        out[i] = acc;
    }
    return out;
}

ComplexVector RealMatrix::apply(const ComplexVector& v) const {
    if (v.size() != cols_)
        throw ContractViolation("RealMatrix apply: length mismatch");
    ComplexVector out(rows_, Complex{});
    for (std::size_t i = 0; i < rows_; ++i) {
        const double* row = row_data(i);
        Complex acc{};
        for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * v[j];
        out[i] = acc;
    }
    return out;
}

RealVector RealMatrix::column(std::size_t j) const {
    RealVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

double RealMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

double RealMatrix::asymmetry() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    return worst;
}

ComplexMatrix::ComplexMatrix(const RealMatrix& re)
    : rows_(re.rows()), cols_(re.cols()), data_(re.rows() * re.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) data_[i * cols_ + j] = re(i, j);
}

ComplexVector ComplexMatrix::apply(const ComplexVector& v) const {
    if (v.size() != cols_)
        throw ContractViolation("ComplexMatrix apply: length mismatch");
    ComplexVector out(rows_, Complex{});
    for (std::size_t i = 0; i < rows_; ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < cols_; ++j) acc += data_[i * cols_ + j] * v[j];
        out[i] = acc;
    }
    return out;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

RealVector real_part(const ComplexVector& v) {
    RealVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].real();
    return out;
}

RealVector imag_part(const ComplexVector& v) {
    RealVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].imag();
    return out;
}

ComplexVector to_complex(const RealVector& v) {
    return ComplexVector(v.begin(), v.end());
}

double max_abs(const RealVector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs(const ComplexVector& v) {
    double m = 0.0;
    for (const Complex& x : v) m = std::max(m, std::abs(x));
    return m;
}

} // namespace sbpbox
