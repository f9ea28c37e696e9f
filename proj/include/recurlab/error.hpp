#pragma once

#include <stdexcept>
#include <string>

namespace recurlab {

/// Base class for all recoverable library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed recurrence description (wrong coefficient arity, |c0| != 1, ...).
struct invalid_spec_error : error {
    using error::error;
};

/// Range request with from > to.
struct empty_range_error : error {
    using error::error;
};

/// Index magnitude beyond the hard evaluation cap.
struct index_limit_error : error {
    using error::error;
};

/// Identity / inequality name not present in the registry.
struct unknown_identity_error : error {
    using error::error;
};

/// Offset pair that makes two rows of the characteristic determinant coincide.
struct degenerate_key_error : error {
    using error::error;
};

/// Duplicate observation indices or otherwise unusable recovery input.
struct invalid_input_error : error {
    using error::error;
};

/// Singular system whose right-hand side is not in the column span: the
/// observations cannot come from any shifted sequence.
struct inconsistent_observations_error : error {
    using error::error;
};

/// Closed-form evaluation requested outside the double-precision safety bound.
struct precision_bound_error : error {
    using error::error;
};

/// Nonpositive grid point or similar numeric-domain violation.
struct numeric_domain_error : error {
    using error::error;
};

/// Problem size beyond an operation's stated bound.
struct size_limit_error : error {
    using error::error;
};
}  // namespace recurlab
