#include "symp/exactcore.hpp"

#include "symp/kernels.hpp"

namespace symp {

namespace {

// J * g without forming J: row i <- row n+i of g, row n+i <- -row i of g.
template <typename T>
Matrix<T> j_times(const Matrix<T>& g) {
    const std::size_t n = g.rows() / 2;
    Matrix<T> r(g.rows(), g.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            r(i, j) = g(n + i, j);
            r(n + i, j) = -g(i, j);
        }
    return r;
}

template <typename T>
Matrix<T> defect_impl(const Matrix<T>& g) {
    if (!g.square() || g.rows() % 2 != 0 || g.rows() == 0)
        throw invalid_dimension("symplectic_defect: need a square 2n x 2n matrix");
    Matrix<T> d = transpose(g) * j_times(g);
    const std::size_t n = g.rows() / 2;
    for (std::size_t i = 0; i < n; ++i) {
        d(i, n + i) -= 1;
        d(n + i, i) += 1;
    }
    return d;
}

template <typename T>
bool is_symplectic_impl(const Matrix<T>& g) {
    if (!g.square() || g.rows() % 2 != 0 || g.rows() == 0) return false;
    return is_zero(defect_impl(g));
}

// Block inverse (tdelta, -tbeta; -tgamma, talpha), valid exactly on Sp.
template <typename T>
Matrix<T> symplectic_inverse_impl(const Matrix<T>& g) {
    if (!is_symplectic_impl(g)) throw not_symplectic("symplectic_inverse: input not symplectic");
    auto p = block_parts(g);
    BlockPartsT<T> q{transpose(p.delta), -transpose(p.beta), -transpose(p.gamma),
                     transpose(p.alpha)};
    return assemble_blocks(q);
}

}  // namespace

IntMatrix standard_form_matrix(std::size_t n) {
    if (n == 0) throw invalid_dimension("standard_form_matrix: n must be >= 1");
    IntMatrix j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, n + i) = 1;
        j(n + i, i) = -1;
    }
    return j;
}

RatMatrix symplectic_defect(const RatMatrix& g) { return defect_impl(g); }
IntMatrix symplectic_defect(const IntMatrix& g) { return defect_impl(g); }

bool is_symplectic(const RatMatrix& g) { return is_symplectic_impl(g); }
bool is_symplectic(const IntMatrix& g) { return is_symplectic_impl(g); }

std::optional<Integer> mp_scale(const IntMatrix& g) {
    if (!g.square() || g.rows() % 2 != 0 || g.rows() == 0)
        throw invalid_dimension("mp_scale: need a square 2n x 2n matrix");
    const std::size_t n = g.rows() / 2;
    IntMatrix d = transpose(g) * j_times(g);
    const Integer c = d(0, n);
    if (c <= 0) return std::nullopt;
    IntMatrix cj = standard_form_matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        cj(i, n + i) = c;
        cj(n + i, i) = -c;
    }
    if (d != cj) return std::nullopt;
    return c;
}

Integer content(const IntMatrix& g) {
    Integer c = 0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            c = gcd(c, g(i, j));
            if (c == 1) return c;
        }
    return c;
}

bool is_primitive(const IntVector& v) {
    if (v.empty()) return false;
    Integer c = 0;
    for (const auto& x : v) {
        c = gcd(c, x);
        if (c == 1) return true;
    }
    return false;
}

RatMatrix rat_inverse(const RatMatrix& a) {
    if (!a.square()) throw invalid_dimension("rat_inverse: matrix not square");
    const std::size_t n = a.rows();
    RatMatrix m = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) throw singular_matrix("rat_inverse: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(col, j), m(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        const Rational p = m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
    Integer det = kernels::determinant(a);
    if (det != 1 && det != -1)
        throw precondition_violation("unimodular_inverse: determinant is not +-1");
    return to_integral(rat_inverse(to_rational(a)));
}

RatMatrix symplectic_inverse(const RatMatrix& g) { return symplectic_inverse_impl(g); }
IntMatrix symplectic_inverse(const IntMatrix& g) { return symplectic_inverse_impl(g); }

Integer denominator_lcm(const RatMatrix& g) {
    Integer m = 1;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) m = lcm(m, Integer(g(i, j).get_den()));
    return m;
}

}  // namespace symp
