#include "symp/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <utility>
#include <vector>

namespace symp::kernels {

namespace {

// Entry-count threshold below which threading is pure overhead.
constexpr std::size_t kParallelWork = 4096;

template <typename T>
Matrix<T> matmul_serial_impl(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw invalid_dimension("matmul: shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

// Rows of the result are independent; GMP values in distinct objects are safe
// to touch from different threads.
template <typename T>
Matrix<T> matmul_omp_impl(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw invalid_dimension("matmul: shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    const long m = static_cast<long>(a.rows());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < m; ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <typename T>
Matrix<T> matmul_dispatch(const Matrix<T>& a, const Matrix<T>& b) {
    const std::size_t work = a.rows() * a.cols() * b.cols();
    return work >= kParallelWork ? matmul_omp_impl(a, b) : matmul_serial_impl(a, b);
}

// Lexicographic successor of a k-subset of {0..n-1}; false once exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

std::vector<std::vector<std::size_t>> all_combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    auto idx = first_combination(k);
    do {
        out.push_back(idx);
    } while (next_combination(idx, n));
    return out;
}

IntMatrix select(const IntMatrix& a, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
    IntMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(rows[i], cols[j]);
    return s;
}

void check_minor_args(const IntMatrix& a, std::size_t k) {
    if (k < 1 || k > std::min(a.rows(), a.cols()))
        throw std::invalid_argument("minor_gcd: k out of range");
}

// gcd over the k x k minors with the given row set; stops once the running
// gcd reaches 1 (it can only stay 1).
Integer fold_cols(const IntMatrix& a, const std::vector<std::size_t>& rowsel,
                  std::size_t k, Integer acc) {
    auto colsel = first_combination(k);
    do {
        acc = gcd(acc, determinant(select(a, rowsel, colsel)));
        if (acc == 1) break;
    } while (next_combination(colsel, a.cols()));
    return acc;
}

}  // namespace

IntMatrix matmul_serial(const IntMatrix& a, const IntMatrix& b) { return matmul_serial_impl(a, b); }
IntMatrix matmul_omp(const IntMatrix& a, const IntMatrix& b) { return matmul_omp_impl(a, b); }
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) { return matmul_dispatch(a, b); }

RatMatrix matmul_serial(const RatMatrix& a, const RatMatrix& b) { return matmul_serial_impl(a, b); }
RatMatrix matmul_omp(const RatMatrix& a, const RatMatrix& b) { return matmul_omp_impl(a, b); }
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) { return matmul_dispatch(a, b); }

Integer determinant(const IntMatrix& a) {
    if (!a.square()) throw invalid_dimension("determinant: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Integer denom = 1;
    Integer t;
    int sign = 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (m(p, p) == 0) {
            std::size_t r = p + 1;
            while (r < n && m(r, p) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = p; j < n; ++j) std::swap(m(p, j), m(r, j));
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) {
                t = m(i, j) * m(p, p) - m(i, p) * m(p, j);
                // Bareiss: division by the previous pivot is exact.
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), denom.get_mpz_t());
            }
            m(i, p) = 0;
        }
        denom = m(p, p);
    }
    Integer det = m(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

Integer minor_gcd_serial(const IntMatrix& a, std::size_t k) {
    check_minor_args(a, k);
    Integer g = 0;
    auto rowsel = first_combination(k);
    do {
        g = fold_cols(a, rowsel, k, std::move(g));
        if (g == 1) return g;
    } while (next_combination(rowsel, a.rows()));
    return g;
}

Integer minor_gcd_omp(const IntMatrix& a, std::size_t k) {
    check_minor_args(a, k);
    const auto rowsets = all_combinations(a.rows(), k);
    Integer global = 0;
    int done = 0;
#pragma omp parallel
    {
        Integer local = 0;
#pragma omp for schedule(dynamic) nowait
        for (long r = 0; r < static_cast<long>(rowsets.size()); ++r) {
            int skip;
#pragma omp atomic read
            skip = done;
            if (skip) continue;
            local = fold_cols(a, rowsets[static_cast<std::size_t>(r)], k, std::move(local));
            if (local == 1) {
#pragma omp atomic write
                done = 1;
            }
        }
#pragma omp critical
        global = gcd(global, local);
    }
    return global;
}

Integer minor_gcd(const IntMatrix& a, std::size_t k) {
    check_minor_args(a, k);
    // Rough minor count; parallelize only when the enumeration is sizeable.
    double minors = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        minors *= static_cast<double>(a.rows() - i) / static_cast<double>(i + 1);
        minors *= static_cast<double>(a.cols() - i) / static_cast<double>(i + 1);
        if (minors > 1e6) break;
    }
    return (minors >= 256.0 && k >= 2) ? minor_gcd_omp(a, k) : minor_gcd_serial(a, k);
}

}  // namespace symp::kernels

namespace symp {

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return kernels::matmul(a, b); }
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return kernels::matmul(a, b); }

}  // namespace symp
