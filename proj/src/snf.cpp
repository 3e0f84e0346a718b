#include "symp/snf.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "symp/exactcore.hpp"
#include "symp/kernels.hpp"

namespace symp {

namespace {

// Elimination state. Maintains g = u * a * v while a is reduced: every row
// operation E applied to a (a <- E a) is compensated on u (u <- u E^{-1}),
// and symmetrically for column operations on v.
struct Eliminator {
    IntMatrix a, u, v;

    explicit Eliminator(const IntMatrix& g)
        : a(g), u(IntMatrix::identity(g.rows())), v(IntMatrix::identity(g.cols())) {}

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < u.rows(); ++k) std::swap(u(k, i), u(k, j));
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
        for (std::size_t k = 0; k < v.cols(); ++k) std::swap(v(i, k), v(j, k));
    }
    void row_negate(std::size_t i) {
        for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) = -a(i, k);
        for (std::size_t k = 0; k < u.rows(); ++k) u(k, i) = -u(k, i);
    }
    // a: row dst += c * row src;  u: col src -= c * col dst
    void row_addmul(std::size_t dst, std::size_t src, const Integer& c) {
        for (std::size_t k = 0; k < a.cols(); ++k) a(dst, k) += c * a(src, k);
        for (std::size_t k = 0; k < u.rows(); ++k) u(k, src) -= c * u(k, dst);
    }
    // a: col dst += c * col src;  v: row src -= c * row dst
    void col_addmul(std::size_t dst, std::size_t src, const Integer& c) {
        for (std::size_t k = 0; k < a.rows(); ++k) a(k, dst) += c * a(k, src);
        for (std::size_t k = 0; k < v.cols(); ++k) v(src, k) -= c * v(dst, k);
    }
};

std::optional<std::pair<std::size_t, std::size_t>> min_abs_pivot(const IntMatrix& a,
                                                                 std::size_t s) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = s; i < a.rows(); ++i)
        for (std::size_t j = s; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Integer ab = abs(a(i, j));
            if (!best || ab < best_abs) {
                best = {i, j};
                best_abs = ab;
            }
        }
    return best;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& g, bool sl_normalize_v) {
    Eliminator e(g);
    const std::size_t r = std::min(g.rows(), g.cols());

    for (std::size_t s = 0; s < r; ++s) {
        for (;;) {
            auto piv = min_abs_pivot(e.a, s);
            if (!piv) break;  // remaining submatrix is zero
            e.row_swap(s, piv->first);
            e.col_swap(s, piv->second);

            bool dirty = false;
            for (std::size_t i = s + 1; i < e.a.rows(); ++i) {
                if (e.a(i, s) == 0) continue;
                Integer q = e.a(i, s) / e.a(s, s);  // truncated: |rem| < |pivot|
                if (q != 0) e.row_addmul(i, s, -q);
                dirty = dirty || e.a(i, s) != 0;
            }
            if (dirty) continue;
            for (std::size_t j = s + 1; j < e.a.cols(); ++j) {
                if (e.a(s, j) == 0) continue;
                Integer q = e.a(s, j) / e.a(s, s);
                if (q != 0) e.col_addmul(j, s, -q);
                dirty = dirty || e.a(s, j) != 0;
            }
            if (dirty) continue;

            // Divisibility repair: drag an offending column into column s so
            // the next sweep shrinks the pivot.
            bool repaired = false;
            for (std::size_t i = s + 1; i < e.a.rows() && !repaired; ++i)
                for (std::size_t j = s + 1; j < e.a.cols() && !repaired; ++j)
                    if (!mpz_divisible_p(e.a(i, j).get_mpz_t(), e.a(s, s).get_mpz_t())) {
                        e.col_addmul(s, j, 1);
                        repaired = true;
                    }
            if (!repaired) break;
        }
        if (e.a(s, s) < 0) e.row_negate(s);
    }

    if (sl_normalize_v && kernels::determinant(e.v) == -1) {
        // Negating row k of v and column k of u moves the sign through the
        // diagonal core untouched (row k of the core is a_k e_k or zero).
        // With more columns than rows, row k = rows of v faces a zero column
        // of the core and u needs no compensation at all.
        const std::size_t k = g.rows() < g.cols() ? g.rows() : 0;
        for (std::size_t j = 0; j < e.v.cols(); ++j) e.v(k, j) = -e.v(k, j);
        if (g.rows() >= g.cols())
            for (std::size_t i = 0; i < e.u.rows(); ++i) e.u(i, k) = -e.u(i, k);
    }

    SnfDecomposition dec;
    dec.u = std::move(e.u);
    dec.v = std::move(e.v);
    dec.divisors.resize(r);
    for (std::size_t s = 0; s < r; ++s) dec.divisors[s] = e.a(s, s);
    return dec;
}

IntMatrix snf_core(const SnfDecomposition& dec, std::size_t rows, std::size_t cols) {
    IntMatrix a(rows, cols);
    for (std::size_t s = 0; s < dec.divisors.size(); ++s) a(s, s) = dec.divisors[s];
    return a;
}

Integer minor_gcd_divisors(const IntMatrix& g, std::size_t k) {
    if (k < 1 || k > std::min(g.rows(), g.cols()))
        throw std::invalid_argument("minor_gcd_divisors: k out of range");
    return kernels::minor_gcd(g, k);
}

IntMatrix complete_primitive_to_unimodular(const IntVector& v) {
    if (!is_primitive(v))
        throw precondition_violation("complete_primitive_to_unimodular: vector not primitive");
    const std::size_t n = v.size();

    IntMatrix col(n, 1);
    for (std::size_t i = 0; i < n; ++i) col(i, 0) = v[i];
    SnfDecomposition dec = smith_normal_form(col);
    if (dec.divisors[0] != 1)
        throw internal_error("complete_primitive_to_unimodular: primitive vector with a_1 != 1");

    // col = u * (e_1 in n x 1) * w, so (u * diag(w11, 1, ..)) e_1 = v.
    IntMatrix m = dec.u;
    if (dec.v(0, 0) == -1)
        for (std::size_t i = 0; i < n; ++i) m(i, 0) = -m(i, 0);
    IntMatrix s0 = unimodular_inverse(m);

    if (kernels::determinant(s0) == -1) {
        if (n == 1)
            throw precondition_violation(
                "complete_primitive_to_unimodular: no det +1 solution for v = (-1)");
        for (std::size_t j = 0; j < n; ++j) s0(1, j) = -s0(1, j);
    }

    if (matvec(s0, v) != unit_vector(n, 0) || kernels::determinant(s0) != 1)
        throw internal_error("complete_primitive_to_unimodular: postcondition failed");
    return s0;
}

}  // namespace symp
