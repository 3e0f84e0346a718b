#pragma once

#include <cstddef>

#include "symp/matrix.hpp"

// Data-parallel inner loops of the library. Each kernel comes in two
// flavours: an OpenMP one and a plain serial reference. The serial versions
// are kept for cross-checking in tests and for the bench_kernels comparison;
// the undecorated name dispatches on problem size. Results are bit-identical
// between flavours (entries are independent, and gcd folding is
// order-insensitive).
namespace symp::kernels {

IntMatrix matmul_serial(const IntMatrix& a, const IntMatrix& b);
IntMatrix matmul_omp(const IntMatrix& a, const IntMatrix& b);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

RatMatrix matmul_serial(const RatMatrix& a, const RatMatrix& b);
RatMatrix matmul_omp(const RatMatrix& a, const RatMatrix& b);
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);

// Exact integer determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& a);

// gcd of the absolute values of all k x k minors; 0 when all minors vanish.
// Requires 1 <= k <= min(rows, cols).
Integer minor_gcd_serial(const IntMatrix& a, std::size_t k);
Integer minor_gcd_omp(const IntMatrix& a, std::size_t k);
Integer minor_gcd(const IntMatrix& a, std::size_t k);

}  // namespace symp::kernels
