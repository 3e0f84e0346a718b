#include <doctest.h>

#include "symp/exactcore.hpp"
#include "symp/kernels.hpp"
#include "symp/rng.hpp"
#include "symp/sympgen.hpp"

using namespace symp;

namespace {

IntMatrix int2x2(long a, long b, long c, long d) {
    IntMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

IntVector random_primitive(std::size_t len, long bound, Rng& rng) {
    for (;;) {
        IntVector v(len);
        Integer g = 0;
        for (auto& x : v) {
            x = rng.uniform(-bound, bound);
            g = gcd(g, x);
        }
        if (g == 0) continue;
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        return v;
    }
}

}  // namespace

TEST_CASE("SpElement validates membership") {
    CHECK_THROWS_AS(SpElement(int2x2(2, 0, 0, 2)), not_symplectic);
    CHECK_THROWS_AS(SpElement(IntMatrix::identity(3)), invalid_dimension);
    SpElement j(standard_form_matrix(2));
    CHECK(j * j.inverse() == SpElement::identity(2));
}

TEST_CASE("embed_sl2_plane") {
    CHECK(embed_sl2_plane(3, 2, IntMatrix::identity(2)) == SpElement::identity(3));
    CHECK(embed_sl2_plane(1, 1, int2x2(0, 1, -1, 0)).matrix() == standard_form_matrix(1));

    // n=2, j=2, shear: fixes e_1, f_1, sends f_2 to e_2 + f_2
    SpElement s = embed_sl2_plane(2, 2, int2x2(1, 1, 0, 1));
    CHECK(is_zero(symplectic_defect(s.matrix())));
    CHECK(matvec(s.matrix(), unit_vector(4, 3)) ==
          IntVector{Integer(0), Integer(1), Integer(0), Integer(1)});
    CHECK(matvec(s.matrix(), unit_vector(4, 0)) == unit_vector(4, 0));
    CHECK(matvec(s.matrix(), unit_vector(4, 2)) == unit_vector(4, 2));

    CHECK_THROWS_AS(embed_sl2_plane(2, 1, int2x2(1, 0, 0, -1)), invalid_generator);
    CHECK_THROWS_AS(embed_sl2_plane(2, 3, IntMatrix::identity(2)), invalid_dimension);
}

TEST_CASE("embed_gl_block") {
    CHECK(embed_gl_block(IntMatrix::identity(3)) == SpElement::identity(3));

    IntMatrix s0 = int2x2(1, 1, 0, 1);
    SpElement g = embed_gl_block(s0);
    IntMatrix expect = IntMatrix::identity(4);
    expect(0, 1) = 1;   // s0 block
    expect(3, 2) = -1;  // ts0^{-1} block
    CHECK(g.matrix() == expect);

    IntMatrix neg(2, 2);
    neg(0, 0) = -1;
    neg(1, 1) = -1;
    SpElement c = embed_gl_block(neg);
    for (std::size_t i = 0; i < 4; ++i) CHECK(c.matrix()(i, i) == -1);

    CHECK_THROWS_AS(embed_gl_block(int2x2(2, 0, 0, 1)), invalid_generator);
}

TEST_CASE("transvection_row") {
    CHECK(transvection_row(3, {Integer(0), Integer(0)}) == SpElement::identity(3));
    CHECK(transvection_row(1, {}) == SpElement::identity(1));

    SpElement t = transvection_row(2, {Integer(5)});
    IntMatrix expect = IntMatrix::identity(4);
    expect(3, 2) = 5;   // f_2 (x) f_1*
    expect(0, 1) = -5;  // -e_1 (x) e_2*
    CHECK(t.matrix() == expect);
    CHECK(is_zero(symplectic_defect(t.matrix())));

    SpElement u = transvection_row(3, {Integer(1), Integer(-2)});
    CHECK(is_zero(symplectic_defect(u.matrix())));
    CHECK(u * transvection_row(3, {Integer(-1), Integer(2)}) == SpElement::identity(3));

    CHECK_THROWS_AS(transvection_row(3, {Integer(1)}), std::invalid_argument);
}

TEST_CASE("transvection_col") {
    CHECK(transvection_col(2, {Integer(0), Integer(0)}) == SpElement::identity(2));
    CHECK(transvection_col(1, {Integer(3)}).matrix() == int2x2(1, -3, 0, 1));

    SpElement t = transvection_col(2, {Integer(0), Integer(1)});
    CHECK(is_zero(symplectic_defect(t.matrix())));
    CHECK(t * t == transvection_col(2, {Integer(0), Integer(2)}));

    CHECK_THROWS_AS(transvection_col(2, {Integer(1)}), std::invalid_argument);
}

TEST_CASE("transvection one-parameter additivity") {
    Rng rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        std::vector<Integer> a(n - 1), b(n - 1), ab(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            a[i] = rng.uniform(-9, 9);
            b[i] = rng.uniform(-9, 9);
            ab[i] = a[i] + b[i];
        }
        CHECK(transvection_row(n, a) * transvection_row(n, b) == transvection_row(n, ab));

        std::vector<Integer> c(n), d(n), cd(n);
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = rng.uniform(-9, 9);
            d[i] = rng.uniform(-9, 9);
            cd[i] = c[i] + d[i];
        }
        CHECK(transvection_col(n, c) * transvection_col(n, d) == transvection_col(n, cd));
    }
}

TEST_CASE("weyl_swap") {
    CHECK(weyl_swap(2, {}) == SpElement::identity(2));
    CHECK(weyl_swap(1, {std::size_t{1}}).matrix() == standard_form_matrix(1));
    CHECK(weyl_swap(3, {std::size_t{1}, std::size_t{2}, std::size_t{3}}).matrix() ==
          standard_form_matrix(3));

    // conjugation sends diag(t, 1/t) to diag(1/t, t)
    RatMatrix t(2, 2);
    t(0, 0) = Rational(5);
    t(1, 1) = make_rational(1, 5);
    RatMatrix w = to_rational(weyl_swap(1, {std::size_t{1}}).matrix());
    RatMatrix conj = w * t * rat_inverse(w);
    CHECK(conj(0, 0) == make_rational(1, 5));
    CHECK(conj(1, 1) == Rational(5));

    CHECK_THROWS_AS(weyl_swap(2, {std::size_t{3}}), invalid_dimension);
}

TEST_CASE("SpWord bookkeeping") {
    Rng rng(11);
    SpWord w = random_sp(2, 12, rng.next());
    SpElement prod = SpElement::identity(2);
    for (const auto& f : w.factors()) prod = prod * f.elem;
    CHECK(prod == w.product());

    SpWord inv = w.inverse();
    CHECK(w.product() * inv.product() == SpElement::identity(2));
    SpElement prod2 = SpElement::identity(2);
    for (const auto& f : inv.factors()) prod2 = prod2 * f.elem;
    CHECK(prod2 == inv.product());
}

TEST_CASE("plane reduction clears the tail") {
    Rng rng(606);
    for (int trial = 0; trial < 50; ++trial) {
        auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        IntVector v = random_primitive(2 * n, 1000000, rng);
        SpWord w = plane_reduction(v);
        IntVector img = matvec(w.product().matrix(), v);
        IntVector head(img.begin(), img.begin() + static_cast<std::ptrdiff_t>(n));
        for (std::size_t j = 0; j < n; ++j) CHECK(img[n + j] == 0);
        CHECK(is_primitive(head));
    }
}

TEST_CASE("reduce_primitive") {
    // e_1 -> empty word
    SpWord e = reduce_primitive(unit_vector(4, 0));
    CHECK(e.factors().empty());
    CHECK(e.product() == SpElement::identity(2));

    // (0, 1) -> exactly the rotation [[0,1],[-1,0]]
    SpWord r = reduce_primitive({Integer(0), Integer(1)});
    CHECK(r.product().matrix() == int2x2(0, 1, -1, 0));

    IntVector v{Integer(6), Integer(10), Integer(15), Integer(0)};
    SpWord w = reduce_primitive(v);
    CHECK(matvec(w.product().matrix(), v) == unit_vector(4, 0));

    CHECK_THROWS_AS(reduce_primitive({Integer(2), Integer(4)}), precondition_violation);
    CHECK_THROWS_AS(reduce_primitive({Integer(1), Integer(0), Integer(0)}), invalid_dimension);

    Rng rng(707);
    for (int trial = 0; trial < 100; ++trial) {
        auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        IntVector x = random_primitive(2 * n, 1000000, rng);
        SpWord word = reduce_primitive(x);
        CHECK(matvec(word.product().matrix(), x) == unit_vector(2 * n, 0));
    }
}

TEST_CASE("random_sp determinism and membership") {
    CHECK(random_sp(3, 0, 9).product() == SpElement::identity(3));
    CHECK(random_sp(2, 25, 4242).product() == random_sp(2, 25, 4242).product());
    CHECK(random_sp(2, 25, 4242).product() != random_sp(2, 25, 4243).product());

    Rng rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        SpWord w = random_sp(n, 10, rng.next());
        // membership is asserted at construction; recheck the cached product
        CHECK(is_zero(symplectic_defect(w.product().matrix())));
    }
}
