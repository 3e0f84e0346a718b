#pragma once

#include <optional>

#include "symp/matrix.hpp"

// The standard symplectic form and the membership predicates built on it.
// Basis convention: e_1..e_n, f_1..f_n with omega = sum e_i* ^ f_i*; plane
// indices are 1-based in the API, storage is 0-based (e_j at j-1, f_j at
// n+j-1).
namespace symp {

template <typename T>
struct BlockPartsT {
    Matrix<T> alpha, beta, gamma, delta;
};
using BlockParts = BlockPartsT<Rational>;
using IntBlockParts = BlockPartsT<Integer>;

// The 2n x 2n form matrix J with blocks (0, 1_n; -1_n, 0). n >= 1.
IntMatrix standard_form_matrix(std::size_t n);

// tg J g - J; zero iff g is symplectic. Requires square, even dimension.
RatMatrix symplectic_defect(const RatMatrix& g);
IntMatrix symplectic_defect(const IntMatrix& g);

// True iff g is 2n x 2n and symplectic. Malformed shapes return false.
bool is_symplectic(const RatMatrix& g);
bool is_symplectic(const IntMatrix& g);

// lambda^2 when tg J g = lambda^2 J with a positive constant; absent when the
// constant is <= 0 or tg J g is not proportional to J. Requires a square
// even-dimensional matrix.
std::optional<Integer> mp_scale(const IntMatrix& g);

// gcd of all entries; 0 for the zero matrix.
Integer content(const IntMatrix& g);

template <typename T>
BlockPartsT<T> block_parts(const Matrix<T>& g) {
    if (!g.square() || g.rows() % 2 != 0)
        throw invalid_dimension("block_parts: need a square even-dimensional matrix");
    const std::size_t n = g.rows() / 2;
    BlockPartsT<T> p{Matrix<T>(n, n), Matrix<T>(n, n), Matrix<T>(n, n), Matrix<T>(n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            p.alpha(i, j) = g(i, j);
            p.beta(i, j) = g(i, n + j);
            p.gamma(i, j) = g(n + i, j);
            p.delta(i, j) = g(n + i, n + j);
        }
    return p;
}

template <typename T>
Matrix<T> assemble_blocks(const BlockPartsT<T>& p) {
    const std::size_t n = p.alpha.rows();
    Matrix<T> g(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            g(i, j) = p.alpha(i, j);
            g(i, n + j) = p.beta(i, j);
            g(n + i, j) = p.gamma(i, j);
            g(n + i, n + j) = p.delta(i, j);
        }
    return g;
}

// True iff v != 0 and the gcd of its entries is 1.
bool is_primitive(const IntVector& v);

// Exact Gauss-Jordan inverse; throws singular_matrix.
RatMatrix rat_inverse(const RatMatrix& a);

// Inverse of a matrix with |det| = 1; stays integral.
IntMatrix unimodular_inverse(const IntMatrix& a);

// g^{-1} = J^{-1} tg J for symplectic g; cheap and exact.
RatMatrix symplectic_inverse(const RatMatrix& g);
IntMatrix symplectic_inverse(const IntMatrix& g);

// lcm of the entry denominators: the least m > 0 with m*g integral.
Integer denominator_lcm(const RatMatrix& g);

}  // namespace symp
