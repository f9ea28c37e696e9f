#pragma once

#include <array>
#include <optional>
#include <vector>

#include "recurlab/numeric.hpp"

namespace recurlab {

using Mat3 = std::array<std::array<Int, 3>, 3>;

/// 2x2 determinant by direct cofactor expansion.
inline Int det2(const Int& a, const Int& b, const Int& c, const Int& d) { return a * d - b * c; }

/// 3x3 determinant by direct cofactor expansion; no pivoting or floats.
inline Int det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Rank of an integer matrix, computed by fraction-free (Bareiss) elimination.
/// Exact: every intermediate entry is a minor of the input.
long exact_rank(std::vector<std::vector<Int>> m);

/// A nonzero rational row vector v with v * m = 0, if the rows of m are
/// linearly dependent. Entries are scaled to coprime integers with the first
/// nonzero entry positive.
std::optional<std::vector<Int>> left_null_vector(const std::vector<std::vector<Int>>& m);

}  // namespace recurlab
