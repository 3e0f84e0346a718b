#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "symp/errors.hpp"

namespace symp {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

// Reduced fraction with positive denominator; rejects den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Dense row-major matrix of exact scalars. Value semantics throughout;
// entries are zero-initialized.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<T>& entries() const { return entries_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw invalid_dimension("matrix sum: shape mismatch");
    Matrix<T> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw invalid_dimension("matrix difference: shape mismatch");
    Matrix<T> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a) {
    Matrix<T> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = -a(i, j);
    return r;
}

template <typename T, typename S>
Matrix<T> scaled(const Matrix<T>& a, const S& c) {
    Matrix<T> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) * c;
    return r;
}

template <typename T>
bool is_zero(const Matrix<T>& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0) return false;
    return true;
}

template <typename T>
std::vector<T> matvec(const Matrix<T>& a, const std::vector<T>& x) {
    if (a.cols() != x.size()) throw invalid_dimension("matvec: shape mismatch");
    std::vector<T> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

// Products dispatch to the kernels (see kernels.hpp); defined in kernels.cpp.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

RatMatrix to_rational(const IntMatrix& a);

// Requires every entry to have denominator 1.
IntMatrix to_integral(const RatMatrix& a);
bool is_integral(const RatMatrix& a);

// Entrywise exact division; throws internal_error if some entry is not divisible.
IntMatrix divide_exact(const IntMatrix& a, const Integer& c);

IntVector unit_vector(std::size_t len, std::size_t index);

}  // namespace symp
