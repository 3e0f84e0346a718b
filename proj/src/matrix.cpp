#include "symp/matrix.hpp"

namespace symp {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
    return r;
}

bool is_integral(const RatMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j).get_den() != 1) return false;
    return true;
}

IntMatrix to_integral(const RatMatrix& a) {
    IntMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).get_den() != 1)
                throw invalid_dimension("to_integral: entry has denominator > 1");
            r(i, j) = a(i, j).get_num();
        }
    return r;
}

IntMatrix divide_exact(const IntMatrix& a, const Integer& c) {
    if (c == 0) throw std::invalid_argument("divide_exact: zero divisor");
    IntMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!mpz_divisible_p(a(i, j).get_mpz_t(), c.get_mpz_t()))
                throw internal_error("divide_exact: entry not divisible");
            mpz_divexact(r(i, j).get_mpz_t(), a(i, j).get_mpz_t(), c.get_mpz_t());
        }
    return r;
}

IntVector unit_vector(std::size_t len, std::size_t index) {
    IntVector e(len);
    e.at(index) = 1;
    return e;
}

}  // namespace symp
