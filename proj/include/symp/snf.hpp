#pragma once

#include <vector>

#include "symp/matrix.hpp"

namespace symp {

// g = u * diag(divisors) * v with u, v unimodular, divisors >= 0 and
// divisors[i] | divisors[i+1] (0 divides only 0). Works for any rectangular
// matrix; the diagonal core is padded with zero rows/columns.
struct SnfDecomposition {
    IntMatrix u;
    std::vector<Integer> divisors;  // min(rows, cols) of them
    IntMatrix v;
};

// Gcd-driven row/column elimination with minimal-|pivot| selection and the
// standard divisibility-repair pass. With sl_normalize_v the sign of det v is
// transferred into u so that det v = +1.
SnfDecomposition smith_normal_form(const IntMatrix& g, bool sl_normalize_v = false);

// The rows x cols diagonal core diag(divisors) of a decomposition.
IntMatrix snf_core(const SnfDecomposition& dec, std::size_t rows, std::size_t cols);

// gcd of all k x k minors. Independent oracle for the divisors:
// a_1 * ... * a_k = minor_gcd_divisors(g, k).
Integer minor_gcd_divisors(const IntMatrix& g, std::size_t k);

// For primitive v of length n, a matrix in SL(n, Z) (det exactly +1) sending
// v to e_1. For n = 1 only v = (1) is reachable; v = (-1) throws.
IntMatrix complete_primitive_to_unimodular(const IntVector& v);

}  // namespace symp
