#pragma once

#include <span>
#include <string>
#include <vector>

#include "recurlab/numeric.hpp"

namespace recurlab {

/// The three cycle problems on positive values a_1..a_n:
///   hf_f:   f(f(a)) = a f(a)      -> a_{j+2} = a_j a_{j+1}  (cyclic)
///   hf_ff:  f(f(f(a))) = a f(f(a)) -> a_{j+3} = a_j a_{j+2}
///   hgg_g:  g(g(g(a))) = a g(a)    -> a_{j+3} = a_j a_{j+1}
enum class CycleCase { hf_f, hf_ff, hgg_g };

CycleCase cycle_case_from_name(std::string_view name);
std::string cycle_case_name(CycleCase c);

/// The multiplicative cycle equations in log space: v = M v, stored as the
/// homogeneous matrix M - I. `reduced` is the closure system in the first
/// 2 (hf_f) or 3 (hf_ff / hgg_g) variables obtained by propagating the chain
/// around the cycle; it is empty below the case's reduction minimum.
struct ExponentSystem {
    CycleCase kind = CycleCase::hf_f;
    long long n = 0;
    std::vector<std::vector<Int>> full;     ///< (M - I), n x n
    std::vector<std::vector<Int>> reduced;  ///< closure system, (M_red - I)
};

ExponentSystem build_system(CycleCase c, long long n);

struct Verdict {
    bool only_trivial = false;
    std::string witness_kind;  ///< "direct", "determinant" or "elimination"
    Int determinant;           ///< set for witness_kind == "determinant"
};

/// Decide whether the cycle system forces all values to 1. Small cycles use
/// the direct substitution argument; larger ones the exact determinant of the
/// reduced closure system.
Verdict decide(CycleCase c, long long n);

/// Independent brute-force check: exact elimination on the full n x n system.
/// n <= 200. Throws on disagreement with decide().
Verdict kernel_oracle(CycleCase c, long long n);

/// Exponent vector of a_k over the free block (a_1, a_2[, a_3]) obtained by
/// symbolic propagation of the (non-cyclic) chain; k >= 1.
std::vector<Int> chain_exponents(CycleCase c, long long k);

/// Decide an arbitrary permutation: strip fixed points, split into cycles,
/// decide each. perm[i] is the 0-based image of i and must be a bijection.
Verdict decide_permutation(CycleCase c, std::span<const int> perm);

}  // namespace recurlab
