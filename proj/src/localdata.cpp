#include "symp/localdata.hpp"

#include <algorithm>

#include "symp/sympsnf.hpp"

namespace symp {

bool is_prime(const Integer& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (Integer f = 3; f * f <= p; f += 2)
        if (p % f == 0) return false;
    return true;
}

Integer p_adic_valuation(const Integer& x, const Integer& p) {
    if (x <= 0) throw std::invalid_argument("p_adic_valuation: x must be positive");
    if (!is_prime(p)) throw std::invalid_argument("p_adic_valuation: p is not prime");
    Integer v = 0;
    Integer r = x;
    while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

LocalCartanExponents local_exponents_of_chain(const std::vector<Integer>& d, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("local exponents: p is not prime");
    const std::size_t n = d.size();
    LocalCartanExponents out{p, std::vector<Integer>(n)};
    for (std::size_t i = 0; i < n; ++i) out.exps[i] = p_adic_valuation(d[n - 1 - i], p);
    // Nonincreasing because d_1 | ... | d_n forces monotone valuations.
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (out.exps[i] < out.exps[i + 1])
            throw internal_error("local exponents: valuations not monotone");
    return out;
}

std::vector<Integer> support_primes_of_chain(const std::vector<Integer>& d) {
    std::vector<Integer> primes;
    if (d.empty()) return primes;
    Integer rest = d.back();  // d_n collects every prime in the chain
    if (rest < 0) rest = -rest;
    for (Integer f = 2; f * f <= rest; ++f) {
        if (!mpz_divisible_p(rest.get_mpz_t(), f.get_mpz_t())) continue;
        primes.push_back(f);
        while (mpz_divisible_p(rest.get_mpz_t(), f.get_mpz_t()))
            mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), f.get_mpz_t());
    }
    if (rest > 1) primes.push_back(rest);
    return primes;
}

LocalCartanExponents local_cartan_exponents(const RatMatrix& g, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("local_cartan_exponents: p is not prime");
    return local_exponents_of_chain(double_coset_invariant(g), p);
}

std::vector<Integer> support_primes(const RatMatrix& g) {
    return support_primes_of_chain(double_coset_invariant(g));
}

std::vector<Integer> reconstruct_global(const std::vector<LocalCartanExponents>& locals,
                                        std::size_t n) {
    for (std::size_t i = 0; i < locals.size(); ++i) {
        if (!is_prime(locals[i].p))
            throw std::invalid_argument("reconstruct_global: non-prime entry");
        if (locals[i].exps.size() != n)
            throw std::invalid_argument("reconstruct_global: exponent list has wrong length");
        for (std::size_t k = 0; k + 1 < n; ++k)
            if (locals[i].exps[k] < locals[i].exps[k + 1])
                throw std::invalid_argument("reconstruct_global: exponents not nonincreasing");
        for (const auto& e : locals[i].exps)
            if (e < 0) throw std::invalid_argument("reconstruct_global: negative exponent");
        for (std::size_t j = i + 1; j < locals.size(); ++j)
            if (locals[i].p == locals[j].p)
                throw std::invalid_argument("reconstruct_global: duplicate prime");
    }
    std::vector<Integer> d(n, Integer(1));
    for (std::size_t i = 1; i <= n; ++i)
        for (const auto& loc : locals) {
            Integer pk;
            const Integer& e = loc.exps[n - i];  // exps[n+1-i], 0-based
            mpz_pow_ui(pk.get_mpz_t(), loc.p.get_mpz_t(), e.get_ui());
            d[i - 1] *= pk;
        }
    return d;
}

}  // namespace symp
