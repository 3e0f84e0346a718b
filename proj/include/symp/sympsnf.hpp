#pragma once

#include <string>
#include <vector>

#include "symp/matrix.hpp"
#include "symp/sympgen.hpp"

namespace symp {

// g = sigma * diag(a) * sigma_prime over Mp(n, Z): a positive with
// a_1 | ... | a_n, a_n | a_2n, and a_j * a_{n+j} = lambda_sq for every j <= n
// (hence a_2n | ... | a_{n+1}).
struct IntegralSympSmith {
    SpElement sigma;
    std::vector<Integer> a;  // 2n entries
    SpElement sigma_prime;
    Integer lambda_sq;
};

// g = sigma * diag(d, d^{-1}) * sigma_prime over Sp(n, Q) with d positive
// integral, d_1 | ... | d_n. d is the complete invariant of the double coset
// Sp(n,Z) g Sp(n,Z).
struct SympSmithDecomposition {
    SpElement sigma;
    std::vector<Integer> d;  // n entries
    SpElement sigma_prime;
};

// Least positive integer m with m * g integral; then content(m * g) = 1 and
// every d_i divides m.
struct DenominatorScale {
    Integer m;
};
DenominatorScale denominator_scale(const RatMatrix& g);

// The 2n x 2n rational diag(d_1..d_n, d_1^{-1}..d_n^{-1}).
RatMatrix diag_d_dinv(const std::vector<Integer>& d);

// --- the four-step reduction ------------------------------------------------
// All step functions take an integral matrix in Mp with content 1 and verify
// their stated pre/postconditions exactly, throwing precondition_violation /
// internal_error respectively.

// A primitive v such that g * v is primitive too (via the Smith form of g:
// a_1 = 1, so v = v_witness^{-1} e_1 works and g v = u_witness e_1).
IntVector find_good_primitive(const IntMatrix& g);

struct Step1Result {
    SpElement sigma, sigma_prime;
    IntMatrix g_prime;  // sigma * g * sigma_prime, fixes e_1
};
Step1Result step1_fix_e1(const IntMatrix& g);

struct StepResult {
    SpElement sigma_prime;
    IntMatrix g_prime;  // g * sigma_prime
};
// Clears the first row of the alpha block (a row transvection).
StepResult step2_clear_alpha_row(const IntMatrix& g);
// Clears the first row of the beta block (a column transvection); afterwards
// g' f_1 = lambda^2 f_1.
StepResult step3_fix_f1(const IntMatrix& g);

// Proposition-level decomposition over Mp(n, Z).
IntegralSympSmith symp_smith_integral(const IntMatrix& g);

// Theorem-level decomposition over Sp(n, Q).
SympSmithDecomposition symp_smith(const RatMatrix& g);

// Same, with the witnesses as words of labeled generators (ordered product
// of sigma_word equals dec.sigma, likewise for sigma_prime).
struct TracedSympSmith {
    SympSmithDecomposition dec;
    SpWord sigma_word;
    SpWord sigma_prime_word;
};
TracedSympSmith symp_smith_traced(const RatMatrix& g);

// --- verification and the double-coset API ----------------------------------

struct VerifyCheck {
    std::string name;
    bool pass;
};

// Re-checks every SympSmithDecomposition invariant against g. The raw-matrix
// overload accepts arbitrary (possibly tampered) witness matrices.
std::vector<VerifyCheck> verify_decomposition(const RatMatrix& g, const RatMatrix& sigma,
                                              const std::vector<Integer>& d,
                                              const RatMatrix& sigma_prime);
std::vector<VerifyCheck> verify_decomposition(const RatMatrix& g,
                                              const SympSmithDecomposition& dec);
bool all_pass(const std::vector<VerifyCheck>& checks);

// The unique d of the decomposition.
std::vector<Integer> double_coset_invariant(const RatMatrix& g);
bool double_coset_equal(const RatMatrix& g, const RatMatrix& h);

}  // namespace symp
