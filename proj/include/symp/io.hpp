#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "symp/localdata.hpp"
#include "symp/matrix.hpp"
#include "symp/sympsnf.hpp"

namespace symp {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// MatrixFile: a header line "rows cols", then rows * cols whitespace-separated
// entries, each an integer literal or "p/q". Whitespace placement is free;
// printing is canonical (reduced, positive denominator, one row per line).
RatMatrix parse_matrix(std::istream& in);
RatMatrix parse_matrix_file(const std::string& path);

std::string format_matrix(const RatMatrix& m);
std::string format_matrix(const IntMatrix& m);

// "p" or "p/q", canonical.
std::string rational_str(const Rational& q);

// What `decompose` emits and `verify` consumes.
struct WordEntry {
    std::string kind;
    std::string label;
    IntMatrix matrix;
};

struct DecompositionReport {
    RatMatrix input;
    Integer m;
    std::vector<Integer> d;
    IntMatrix sigma, sigma_prime;
    std::vector<VerifyCheck> verification;
    bool with_locals = false;
    std::vector<LocalCartanExponents> locals;
    bool with_words = false;
    std::vector<WordEntry> sigma_word, sigma_prime_word;
};

std::string report_to_json(const DecompositionReport& r);
std::string report_to_text(const DecompositionReport& r);

struct ParsedDecomposition {
    std::vector<Integer> d;
    RatMatrix sigma, sigma_prime;
};
ParsedDecomposition parse_decomposition_json(const std::string& path);

}  // namespace symp
