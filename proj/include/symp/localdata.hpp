#pragma once

#include <vector>

#include "symp/matrix.hpp"

namespace symp {

// Exponents of the local Cartan-type decomposition at p, sorted
// nonincreasing: exps = (v_p(d_n), ..., v_p(d_1)). The reversal relative to
// the chain order of d is deliberate.
struct LocalCartanExponents {
    Integer p;
    std::vector<Integer> exps;
};

// Deterministic trial division; inputs here are small factors of d_n.
bool is_prime(const Integer& p);

// v_p(x) for x > 0.
Integer p_adic_valuation(const Integer& x, const Integer& p);

LocalCartanExponents local_cartan_exponents(const RatMatrix& g, const Integer& p);
std::vector<Integer> support_primes(const RatMatrix& g);

// Chain-level versions, for callers that already hold the invariant d.
LocalCartanExponents local_exponents_of_chain(const std::vector<Integer>& d, const Integer& p);
std::vector<Integer> support_primes_of_chain(const std::vector<Integer>& d);

// Inverse of localization: d_i = prod_p p^{exps[n+1-i]}. At most one entry
// per prime; every exps must have length n and be nonincreasing.
std::vector<Integer> reconstruct_global(const std::vector<LocalCartanExponents>& locals,
                                        std::size_t n);

}  // namespace symp
