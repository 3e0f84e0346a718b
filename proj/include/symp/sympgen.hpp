#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symp/exactcore.hpp"
#include "symp/matrix.hpp"

namespace symp {

// An element of Sp(n, Z). Integrality comes from the type; the symplectic
// condition is checked at construction, never trusted from a formula.
class SpElement {
public:
    explicit SpElement(IntMatrix m);
    static SpElement identity(std::size_t n);

    std::size_t n() const { return n_; }
    const IntMatrix& matrix() const { return mat_; }
    SpElement inverse() const;

    bool operator==(const SpElement&) const = default;

private:
    std::size_t n_;
    IntMatrix mat_;
};

SpElement operator*(const SpElement& a, const SpElement& b);

enum class GenKind { Sl2Plane, GlBlock, TransvectionRow, TransvectionCol, WeylSwap, Composite };
const char* to_string(GenKind kind);

// One labeled factor of a witness word. elem is the authoritative value;
// kind, label and the parameter fields are provenance for auditing.
struct SpFactor {
    GenKind kind;
    std::string label;
    SpElement elem;

    std::size_t plane = 0;             // Sl2Plane (1-based)
    IntMatrix param;                   // Sl2Plane: the 2x2; GlBlock: s0
    std::vector<Integer> coeffs;       // transvections
    std::vector<std::size_t> planes;   // WeylSwap

    SpFactor inverse() const;
};

// A product of labeled generators with its cached value. The product always
// equals factors[0] * factors[1] * ... in order.
class SpWord {
public:
    explicit SpWord(std::size_t n) : n_(n), product_(SpElement::identity(n)) {}

    std::size_t n() const { return n_; }
    const SpElement& product() const { return product_; }
    const std::vector<SpFactor>& factors() const { return factors_; }

    void push_left(SpFactor f);   // product <- f * product
    void push_right(SpFactor f);  // product <- product * f
    void push_left(const SpWord& w);
    void push_right(const SpWord& w);

    SpWord inverse() const;

private:
    std::size_t n_;
    std::vector<SpFactor> factors_;
    SpElement product_;
};

// --- generator families ---------------------------------------------------
// Plane indices j are 1-based, matching the e_j / f_j naming.

// Acts as the det-1 matrix m on the plane (e_j, f_j), identity elsewhere.
SpElement embed_sl2_plane(std::size_t n, std::size_t j, const IntMatrix& m);

// diag(s0, ts0^{-1}) for unimodular s0.
SpElement embed_gl_block(const IntMatrix& s0);

// 1 + sum_{1<j<=n} coeffs[j-2] (f_j (x) f_1* - e_1 (x) e_j*); coeffs has n-1 entries.
SpElement transvection_row(std::size_t n, const std::vector<Integer>& coeffs);

// 1 - coeffs[0] e_1 (x) f_1* - sum_{1<j<=n} coeffs[j-1] (e_j (x) f_1* + e_1 (x) f_j*);
// coeffs has n entries.
SpElement transvection_col(std::size_t n, const std::vector<Integer>& coeffs);

// On each selected plane the block (0, 1; -1, 0), so weyl_swap(n, {1..n}) is
// the form matrix J itself.
SpElement weyl_swap(std::size_t n, const std::vector<std::size_t>& planes);

// Labeled-factor constructors for the same families.
SpFactor sl2_plane_factor(std::size_t n, std::size_t j, const IntMatrix& m);
SpFactor gl_block_factor(const IntMatrix& s0);
SpFactor transvection_row_factor(std::size_t n, const std::vector<Integer>& coeffs);
SpFactor transvection_col_factor(std::size_t n, const std::vector<Integer>& coeffs);
SpFactor weyl_swap_factor(std::size_t n, const std::vector<std::size_t>& planes);
SpFactor composite_factor(std::string label, SpElement elem);

// --- primitive-vector reduction -------------------------------------------

// Phase one only: per-plane SL2 actions (j = 1..n ascending) sending
// (x_j, x_{n+j}) to (gcd, 0). Afterwards coordinates n+1..2n of the image
// vanish and the first n coordinates form a primitive vector.
SpWord plane_reduction(const IntVector& v);

// Full reduction: sigma with sigma * v = e_1 (plane phase, then a GL block).
SpWord reduce_primitive(const IntVector& v);

// Seeded random word over the generator families, coefficients in [-5, 5].
// Identical output for identical arguments, on any platform.
SpWord random_sp(std::size_t n, std::size_t word_length, std::uint64_t seed);

}  // namespace symp
