#include "symp/sympgen.hpp"

#include <algorithm>
#include <utility>

#include "symp/kernels.hpp"
#include "symp/rng.hpp"
#include "symp/snf.hpp"

namespace symp {

SpElement::SpElement(IntMatrix m) : n_(m.rows() / 2), mat_(std::move(m)) {
    if (!mat_.square() || mat_.rows() % 2 != 0 || mat_.rows() == 0)
        throw invalid_dimension("SpElement: need a square 2n x 2n matrix");
    if (!is_symplectic(mat_)) throw not_symplectic("SpElement: matrix is not symplectic");
}

SpElement SpElement::identity(std::size_t n) {
    if (n == 0) throw invalid_dimension("SpElement: n must be >= 1");
    return SpElement(IntMatrix::identity(2 * n));
}

SpElement SpElement::inverse() const { return SpElement(symplectic_inverse(mat_)); }

SpElement operator*(const SpElement& a, const SpElement& b) {
    return SpElement(a.matrix() * b.matrix());
}

const char* to_string(GenKind kind) {
    switch (kind) {
        case GenKind::Sl2Plane: return "sl2_plane";
        case GenKind::GlBlock: return "gl_block";
        case GenKind::TransvectionRow: return "transvection_row";
        case GenKind::TransvectionCol: return "transvection_col";
        case GenKind::WeylSwap: return "weyl_swap";
        case GenKind::Composite: return "composite";
    }
    return "?";
}

SpFactor SpFactor::inverse() const {
    // All families except the Weyl rotation are closed under inversion.
    switch (kind) {
        case GenKind::Sl2Plane: {
            IntMatrix inv(2, 2);  // adjugate; det is 1
            inv(0, 0) = param(1, 1);
            inv(0, 1) = -param(0, 1);
            inv(1, 0) = -param(1, 0);
            inv(1, 1) = param(0, 0);
            return sl2_plane_factor(elem.n(), plane, inv);
        }
        case GenKind::GlBlock: return gl_block_factor(unimodular_inverse(param));
        case GenKind::TransvectionRow:
        case GenKind::TransvectionCol: {
            std::vector<Integer> neg(coeffs.size());
            for (std::size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
            return kind == GenKind::TransvectionRow ? transvection_row_factor(elem.n(), neg)
                                                    : transvection_col_factor(elem.n(), neg);
        }
        default: return composite_factor(label + "^-1", elem.inverse());
    }
}

void SpWord::push_left(SpFactor f) {
    product_ = f.elem * product_;
    factors_.insert(factors_.begin(), std::move(f));
}

void SpWord::push_right(SpFactor f) {
    product_ = product_ * f.elem;
    factors_.push_back(std::move(f));
}

void SpWord::push_left(const SpWord& w) {
    for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it) push_left(*it);
}

void SpWord::push_right(const SpWord& w) {
    for (const auto& f : w.factors()) push_right(f);
}

SpWord SpWord::inverse() const {
    SpWord inv(n_);
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) inv.push_right(it->inverse());
    return inv;
}

SpElement embed_sl2_plane(std::size_t n, std::size_t j, const IntMatrix& m) {
    if (n == 0 || j < 1 || j > n) throw invalid_dimension("embed_sl2_plane: plane out of range");
    if (m.rows() != 2 || m.cols() != 2 || kernels::determinant(m) != 1)
        throw invalid_generator("embed_sl2_plane: need a 2 x 2 matrix with det 1");
    IntMatrix g = IntMatrix::identity(2 * n);
    g(j - 1, j - 1) = m(0, 0);
    g(j - 1, n + j - 1) = m(0, 1);
    g(n + j - 1, j - 1) = m(1, 0);
    g(n + j - 1, n + j - 1) = m(1, 1);
    return SpElement(std::move(g));
}

SpElement embed_gl_block(const IntMatrix& s0) {
    if (!s0.square() || s0.rows() == 0) throw invalid_generator("embed_gl_block: need square s0");
    Integer det = kernels::determinant(s0);
    if (det != 1 && det != -1) throw invalid_generator("embed_gl_block: s0 is not unimodular");
    const std::size_t n = s0.rows();
    IntMatrix tinv = transpose(unimodular_inverse(s0));
    IntMatrix g(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            g(i, j) = s0(i, j);
            g(n + i, n + j) = tinv(i, j);
        }
    return SpElement(std::move(g));
}

SpElement transvection_row(std::size_t n, const std::vector<Integer>& coeffs) {
    if (n == 0) throw invalid_dimension("transvection_row: n must be >= 1");
    if (coeffs.size() != n - 1)
        throw std::invalid_argument("transvection_row: need n - 1 coefficients");
    IntMatrix g = IntMatrix::identity(2 * n);
    for (std::size_t j = 2; j <= n; ++j) {
        const Integer& c = coeffs[j - 2];
        g(n + j - 1, n) += c;  // f_j (x) f_1*
        g(0, j - 1) -= c;      // e_1 (x) e_j*
    }
    return SpElement(std::move(g));
}

SpElement transvection_col(std::size_t n, const std::vector<Integer>& coeffs) {
    if (n == 0) throw invalid_dimension("transvection_col: n must be >= 1");
    if (coeffs.size() != n) throw std::invalid_argument("transvection_col: need n coefficients");
    IntMatrix g = IntMatrix::identity(2 * n);
    g(0, n) -= coeffs[0];  // e_1 (x) f_1*
    for (std::size_t j = 2; j <= n; ++j) {
        const Integer& c = coeffs[j - 1];
        g(j - 1, n) -= c;      // e_j (x) f_1*
        g(0, n + j - 1) -= c;  // e_1 (x) f_j*
    }
    return SpElement(std::move(g));
}

SpElement weyl_swap(std::size_t n, const std::vector<std::size_t>& planes) {
    if (n == 0) throw invalid_dimension("weyl_swap: n must be >= 1");
    IntMatrix g = IntMatrix::identity(2 * n);
    for (std::size_t j : planes) {
        if (j < 1 || j > n) throw invalid_dimension("weyl_swap: plane out of range");
        g(j - 1, j - 1) = 0;
        g(n + j - 1, n + j - 1) = 0;
        g(j - 1, n + j - 1) = 1;
        g(n + j - 1, j - 1) = -1;
    }
    return SpElement(std::move(g));
}

namespace {

SpFactor make_factor(GenKind kind, std::string label, SpElement elem) {
    return SpFactor{kind, std::move(label), std::move(elem), 0, IntMatrix(), {}, {}};
}

}  // namespace

SpFactor sl2_plane_factor(std::size_t n, std::size_t j, const IntMatrix& m) {
    SpFactor f = make_factor(GenKind::Sl2Plane, "sl2(plane " + std::to_string(j) + ")",
                             embed_sl2_plane(n, j, m));
    f.plane = j;
    f.param = m;
    return f;
}

SpFactor gl_block_factor(const IntMatrix& s0) {
    SpFactor f = make_factor(GenKind::GlBlock, "gl_block", embed_gl_block(s0));
    f.param = s0;
    return f;
}

SpFactor transvection_row_factor(std::size_t n, const std::vector<Integer>& coeffs) {
    SpFactor f = make_factor(GenKind::TransvectionRow, "transvection_row",
                             transvection_row(n, coeffs));
    f.coeffs = coeffs;
    return f;
}

SpFactor transvection_col_factor(std::size_t n, const std::vector<Integer>& coeffs) {
    SpFactor f = make_factor(GenKind::TransvectionCol, "transvection_col",
                             transvection_col(n, coeffs));
    f.coeffs = coeffs;
    return f;
}

SpFactor weyl_swap_factor(std::size_t n, const std::vector<std::size_t>& planes) {
    std::string label = "weyl_swap{";
    for (std::size_t i = 0; i < planes.size(); ++i)
        label += (i ? "," : "") + std::to_string(planes[i]);
    label += "}";
    SpFactor f = make_factor(GenKind::WeylSwap, std::move(label), weyl_swap(n, planes));
    f.planes = planes;
    return f;
}

SpFactor composite_factor(std::string label, SpElement elem) {
    return make_factor(GenKind::Composite, std::move(label), std::move(elem));
}

namespace {

void check_reduction_input(const IntVector& v) {
    if (v.size() < 2 || v.size() % 2 != 0)
        throw invalid_dimension("primitive reduction: need a vector of even length 2n");
    if (!is_primitive(v)) throw precondition_violation("primitive reduction: vector not primitive");
}

}  // namespace

SpWord plane_reduction(const IntVector& v) {
    check_reduction_input(v);
    const std::size_t n = v.size() / 2;
    SpWord word(n);
    IntVector w = v;
    for (std::size_t j = 1; j <= n; ++j) {
        const Integer a = w[j - 1];
        const Integer b = w[n + j - 1];
        if (a == 0 && b == 0) continue;
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        IntMatrix m(2, 2);
        m(0, 0) = s;
        m(0, 1) = t;
        mpz_divexact(m(1, 0).get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
        m(1, 0) = -m(1, 0);
        mpz_divexact(m(1, 1).get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        if (m == IntMatrix::identity(2)) continue;
        word.push_left(sl2_plane_factor(n, j, m));
        w[j - 1] = g;
        w[n + j - 1] = 0;
    }
    for (std::size_t j = 0; j < n; ++j)
        if (w[n + j] != 0) throw internal_error("plane_reduction: tail not cleared");
    return word;
}

SpWord reduce_primitive(const IntVector& v) {
    SpWord word = plane_reduction(v);
    const std::size_t n = v.size() / 2;
    IntVector w = matvec(word.product().matrix(), v);
    IntVector head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
    IntMatrix s0 = complete_primitive_to_unimodular(head);
    if (s0 != IntMatrix::identity(n)) word.push_left(gl_block_factor(s0));
    if (matvec(word.product().matrix(), v) != unit_vector(2 * n, 0))
        throw internal_error("reduce_primitive: sigma * v != e_1");
    return word;
}

SpWord random_sp(std::size_t n, std::size_t word_length, std::uint64_t seed) {
    if (n == 0) throw invalid_dimension("random_sp: n must be >= 1");
    Rng rng(seed);
    SpWord word(n);
    for (std::size_t step = 0; step < word_length; ++step) {
        switch (rng.uniform(0, 4)) {
            case 0: {
                auto j = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
                IntMatrix m = IntMatrix::identity(2);
                switch (rng.uniform(0, 2)) {
                    case 0: m(0, 1) = rng.uniform(-5, 5); break;
                    case 1: m(1, 0) = rng.uniform(-5, 5); break;
                    default: {
                        m(0, 0) = 0;
                        m(1, 1) = 0;
                        m(0, 1) = 1;
                        m(1, 0) = -1;
                    }
                }
                word.push_right(sl2_plane_factor(n, j, m));
                break;
            }
            case 1: {
                IntMatrix s0 = IntMatrix::identity(n);
                if (n == 1) {
                    s0(0, 0) = rng.uniform(0, 1) ? 1 : -1;
                } else {
                    auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
                    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
                    if (j >= i) ++j;
                    s0(i, j) = rng.uniform(-5, 5);
                }
                word.push_right(gl_block_factor(s0));
                break;
            }
            case 2: {
                std::vector<Integer> coeffs(n - 1);
                for (auto& c : coeffs) c = rng.uniform(-5, 5);
                word.push_right(transvection_row_factor(n, coeffs));
                break;
            }
            case 3: {
                std::vector<Integer> coeffs(n);
                for (auto& c : coeffs) c = rng.uniform(-5, 5);
                word.push_right(transvection_col_factor(n, coeffs));
                break;
            }
            default: {
                std::vector<std::size_t> planes;
                for (std::size_t j = 1; j <= n; ++j)
                    if (rng.uniform(0, 1)) planes.push_back(j);
                word.push_right(weyl_swap_factor(n, planes));
            }
        }
    }
    return word;
}

}  // namespace symp
