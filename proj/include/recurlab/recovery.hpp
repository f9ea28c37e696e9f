#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recurlab/numeric.hpp"
#include "recurlab/sequence.hpp"

namespace recurlab {

/// One observed term of a shifted sequence.
struct Observation {
    long long index = 0;
    Rat value;
};

enum class RecoveryStatus { solved, singular };

/// Outcome of identifying a shifted sequence from sparse terms.
/// status == singular exactly when the base determinant vanishes; in that
/// case dependency_note names one exact linear relation the observations
/// satisfy. When solved, re-predicting every observation from the recovered
/// coefficients reproduces it exactly.
struct RecoveryResult {
    RecoveryStatus status = RecoveryStatus::solved;
    std::vector<Rat> coefficients;  ///< (a, b) or (a', b', c') when solved
    Int denominator;                ///< the exact base determinant
    std::string dependency_note;    ///< set when singular
};

/// Recover (a, b) of a shifted fibonacci sequence from two observations.
/// The base determinant is a signed fibonacci number at a nonzero offset, so
/// this system is always solvable for distinct indices.
RecoveryResult recover_f(std::span<const Observation> obs);

/// Recover (a', b', c') of a shifted narayana sequence from three
/// observations. Singular exactly when the characteristic determinant of the
/// index offsets vanishes; a zero determinant with a nonzero numerator means
/// the observations lie on no shifted sequence at all.
RecoveryResult recover_e(std::span<const Observation> obs);

/// Same for a shifted padovan sequence.
RecoveryResult recover_d(std::span<const Observation> obs);

/// Smallest-|n0| index with term(f, n0 + i) == initials[i] for every i,
/// searching |n0| <= search_bound. Ties prefer the nonnegative candidate.
std::optional<long long> detect_shift(Family f, std::span<const Rat> initials,
                                      long long search_bound);

}  // namespace recurlab
