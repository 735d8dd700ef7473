#pragma once

#include <stdexcept>
#include <string>

namespace lcft {

// Precondition on a user-supplied parameter (p, sigma, alpha, tau, ...).
struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct shape_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Base for everything that goes wrong inside a numeric pipeline.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct divergent_limit : numerical_error {
    using numerical_error::numerical_error;
};

struct integrality_failure : numerical_error {
    using numerical_error::numerical_error;
};

struct limit_failure : numerical_error {
    using numerical_error::numerical_error;
};

struct projection_violation : numerical_error {
    using numerical_error::numerical_error;
};

struct factorization_error : numerical_error {
    using numerical_error::numerical_error;
};

struct precision_error : numerical_error {
    using numerical_error::numerical_error;
};

struct degenerate_error : numerical_error {
    using numerical_error::numerical_error;
};

struct malformed_table : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct replacement_insufficiency : malformed_table {
    using malformed_table::malformed_table;
};

}  // namespace lcft
