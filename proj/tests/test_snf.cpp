#include <doctest.h>

#include "symp/exactcore.hpp"
#include "symp/kernels.hpp"
#include "symp/rng.hpp"
#include "symp/snf.hpp"

using namespace symp;

namespace {

IntMatrix random_int_matrix(std::size_t rows, std::size_t cols, long bound, Rng& rng) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-bound, bound);
    return m;
}

// Random unimodular matrix from elementary row operations.
IntMatrix random_unimodular(std::size_t n, Rng& rng) {
    IntMatrix u = IntMatrix::identity(n);
    for (int ops = 0; ops < 12; ++ops) {
        auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        if (i == j) continue;
        const long c = rng.uniform(-3, 3);
        for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
    }
    return u;
}

void check_decomposition(const IntMatrix& g, const SnfDecomposition& dec) {
    Integer du = kernels::determinant(dec.u);
    Integer dv = kernels::determinant(dec.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK(g == dec.u * snf_core(dec, g.rows(), g.cols()) * dec.v);
    for (std::size_t i = 0; i + 1 < dec.divisors.size(); ++i) {
        CHECK(dec.divisors[i] >= 0);
        if (dec.divisors[i] == 0)
            CHECK(dec.divisors[i + 1] == 0);
        else
            CHECK(dec.divisors[i + 1] % dec.divisors[i] == 0);
    }
}

}  // namespace

TEST_CASE("smith normal form examples") {
    SnfDecomposition id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.divisors == std::vector<Integer>{1, 1, 1});
    CHECK(id.u == IntMatrix::identity(3));
    CHECK(id.v == IntMatrix::identity(3));

    IntMatrix a(2, 2);
    a(0, 0) = 2;
    a(1, 1) = 3;
    CHECK(smith_normal_form(a).divisors == std::vector<Integer>{1, 6});

    IntMatrix b(2, 2);
    b(0, 0) = 4;
    b(0, 1) = 6;
    b(1, 0) = 2;
    b(1, 1) = 8;
    SnfDecomposition dec = smith_normal_form(b);
    CHECK(dec.divisors == std::vector<Integer>{2, 10});
    check_decomposition(b, dec);
}

TEST_CASE("smith normal form of zero and rectangular matrices") {
    SnfDecomposition z = smith_normal_form(IntMatrix(3, 3));
    CHECK(z.divisors == std::vector<Integer>{0, 0, 0});
    check_decomposition(IntMatrix(3, 3), z);

    Rng rng(23);
    for (auto [r, c] : {std::pair<std::size_t, std::size_t>{2, 5}, {5, 2}, {1, 4}, {4, 1}}) {
        IntMatrix g = random_int_matrix(r, c, 50, rng);
        check_decomposition(g, smith_normal_form(g));
    }
}

TEST_CASE("smith normal form random suite with minor-gcd oracle") {
    Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        auto r = static_cast<std::size_t>(rng.uniform(1, 6));
        auto c = static_cast<std::size_t>(rng.uniform(1, 6));
        IntMatrix g = random_int_matrix(r, c, 100, rng);
        SnfDecomposition dec = smith_normal_form(g);
        check_decomposition(g, dec);
        Integer prod = 1;
        for (std::size_t k = 1; k <= dec.divisors.size(); ++k) {
            prod *= dec.divisors[k - 1];
            CHECK(prod == minor_gcd_divisors(g, k));
        }
    }
}

TEST_CASE("divisors are invariant under unimodular multiplication") {
    Rng rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix g = random_int_matrix(4, 4, 30, rng);
        IntMatrix p = random_unimodular(4, rng);
        IntMatrix q = random_unimodular(4, rng);
        CHECK(smith_normal_form(p * g * q).divisors == smith_normal_form(g).divisors);
    }
}

TEST_CASE("sl-normalized witnesses") {
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        auto r = static_cast<std::size_t>(rng.uniform(1, 5));
        auto c = static_cast<std::size_t>(rng.uniform(1, 5));
        IntMatrix g = random_int_matrix(r, c, 60, rng);
        SnfDecomposition dec = smith_normal_form(g, /*sl_normalize_v=*/true);
        CHECK(kernels::determinant(dec.v) == 1);
        check_decomposition(g, dec);
    }
}

TEST_CASE("minor_gcd_divisors argument checks") {
    IntMatrix g(2, 3);
    CHECK_THROWS_AS(minor_gcd_divisors(g, 0), std::invalid_argument);
    CHECK_THROWS_AS(minor_gcd_divisors(g, 3), std::invalid_argument);
    CHECK(minor_gcd_divisors(IntMatrix(2, 2), 1) == 0);
}

TEST_CASE("complete primitive vector to unimodular") {
    CHECK(complete_primitive_to_unimodular({Integer(1)}) == IntMatrix::identity(1));
    CHECK(complete_primitive_to_unimodular(unit_vector(4, 0)) == IntMatrix::identity(4));

    IntVector v{Integer(2), Integer(3)};
    IntMatrix s0 = complete_primitive_to_unimodular(v);
    CHECK(kernels::determinant(s0) == 1);
    CHECK(matvec(s0, v) == unit_vector(2, 0));

    IntVector w{Integer(0), Integer(1)};
    IntMatrix s1 = complete_primitive_to_unimodular(w);
    CHECK(kernels::determinant(s1) == 1);
    CHECK(matvec(s1, w) == unit_vector(2, 0));

    CHECK_THROWS_AS(complete_primitive_to_unimodular({Integer(2), Integer(4)}),
                    precondition_violation);
    // SL(1, Z) is trivial: (-1) cannot reach e_1
    CHECK_THROWS_AS(complete_primitive_to_unimodular({Integer(-1)}), precondition_violation);

    Rng rng(303);
    for (int trial = 0; trial < 60; ++trial) {
        auto n = static_cast<std::size_t>(rng.uniform(2, 6));
        IntVector x(n);
        Integer g = 0;
        for (auto& xi : x) {
            xi = rng.uniform(-1000000, 1000000);
            g = gcd(g, xi);
        }
        if (g == 0) continue;
        for (auto& xi : x) mpz_divexact(xi.get_mpz_t(), xi.get_mpz_t(), g.get_mpz_t());
        IntMatrix s = complete_primitive_to_unimodular(x);
        CHECK(kernels::determinant(s) == 1);
        CHECK(matvec(s, x) == unit_vector(n, 0));
    }
}
