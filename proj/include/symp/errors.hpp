#pragma once

#include <stdexcept>

namespace symp {

// Matrix shape is wrong for the operation (odd dimension where 2n x 2n is
// required, n = 0, mismatched products, ...).
struct invalid_dimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A documented precondition does not hold for the given input.
struct precondition_violation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Constructor input is not a valid generator (det != 1, non-unimodular block).
struct invalid_generator : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_symplectic : std::domain_error {
    using std::domain_error::domain_error;
};

// g is not proportional to a real symplectic matrix (tgJg != c*J with c > 0).
struct not_in_mp : std::domain_error {
    using std::domain_error::domain_error;
};

struct singular_matrix : std::domain_error {
    using std::domain_error::domain_error;
};

// An invariant the theory guarantees failed at runtime. Always a bug in this
// library, never bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace symp
