#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recurlab/numeric.hpp"
#include "recurlab/sequence.hpp"

namespace recurlab {

enum class Relation { eq, lt, gt };

/// Per-index verdict produced by identity and inequality checks.
struct IdentityReport {
    std::string name;
    long long n = 0;
    long long m = 0;  ///< second index for two-parameter identities
    Int lhs;
    Int rhs;
    Relation relation = Relation::eq;
    bool holds = false;
};

/// An equality identity: a list of expressions in one integer index that must
/// all evaluate to the same exact value. Scans and property tests enumerate
/// this registry, so adding an identity needs no new test code.
struct EqualityIdentity {
    std::string name;
    std::vector<std::function<Int(long long)>> expressions;  // size >= 2
};

const std::vector<EqualityIdentity>& equality_registry();

/// Evaluate a registered equality identity at index n.
IdentityReport check_identity(std::string_view name, long long n);

/// All indices in [lo, hi] where the named equality identity fails.
std::vector<long long> identity_scan(std::string_view name, long long lo, long long hi,
                                     bool parallel = true);

/// F_n F_{m+1} - F_m F_{n+1} against both reflected closed forms.
IdentityReport vajda(long long n, long long m);

/// Which characteristic determinant a delta key refers to.
enum class DeltaFamily { narayana, padovan };

/// Offsets of the 3x3 characteristic determinant: rows at n, n+i, n+i+j.
/// Valid keys have i != 0, j != 0 and i+j != 0 (distinct rows).
struct DeltaKey {
    long long i = 0;
    long long j = 0;
    bool valid() const { return i != 0 && j != 0 && i + j != 0; }
};

/// n-independent closed form of the characteristic determinant. Total in
/// (i, j); degenerate keys evaluate to 0.
Int delta_closed_form(DeltaFamily fam, long long i, long long j);

/// The raw 3x3 determinant with rows at witness, witness+i, witness+i+j.
Int delta_determinant(DeltaFamily fam, long long i, long long j, long long witness);

struct DeltaReport {
    DeltaFamily family;
    long long i = 0;
    long long j = 0;
    Int value;                         ///< the common determinant value
    bool witness_independent = false;  ///< all witnesses produced the same value
    bool matches_closed_form = false;
};

/// Evaluate the determinant at every witness, check witness-independence and
/// agreement with the closed form. Throws degenerate_key_error on bad keys.
DeltaReport delta_ij(DeltaFamily fam, long long i, long long j,
                     std::span<const long long> witnesses);

/// Structural identities of the narayana delta table.
enum class DeltaStructure {
    row_recurrence,  ///< along a row: value(i,j-3) + value(i,j-1) = value(i,j), with anchors
    col_recurrence,  ///< down a column: value(i+2,j) + value(i,j) = value(i-1,j), with anchors
    separability,    ///< value(i,j+3) splits into anchor(i)-weighted terms at j and j+2
    special          ///< one of the registered single-parameter identities
};

/// Verify a structural identity at the given offsets. `special_name` selects
/// the single-parameter identity for kind == special (these are also in the
/// equality registry):
///   delta_cols_2_3_equal       value(i,2) =  value(i,3)
///   delta_col1_reflected       value(i,1) =  E_{-i-1}
///   delta_col2_neg_reflected   value(i,2) = -E_{-i-3}
///   delta_col1_from_col2       value(i,1) = -value(i-2,2) = -value(i-2,3)
///   delta_row2_row3_shift      value(2,j) =  value(3,j-1)
///   delta_row1_row3_negated    value(1,j) = -value(3,j)
///   delta_row2_row1_shift      value(2,j) = -value(1,j-1)
///   delta_row1_row5_term       value(1,j) =  value(5,j+3) = E_j
IdentityReport delta_structure(DeltaStructure kind, long long i, long long j,
                               std::string_view special_name = {});

/// A registered inequality family: a predicate in one index plus the smallest
/// index from which the relation is claimed.
struct InequalityFamily {
    std::string name;
    long long default_from = 1;
    long long default_to = 200;
    std::function<bool(long long)> holds;
};

const std::vector<InequalityFamily>& inequality_registry();
const InequalityFamily& inequality_family(std::string_view name);

/// All n in [lo, hi] violating the named relation; empty means the relation
/// held everywhere scanned. Counterexamples are reported, never asserted:
/// for two of the registered families the printed claim does fail.
std::vector<long long> inequality_scan(std::string_view name, long long lo, long long hi,
                                       bool parallel = true);

struct ThresholdRow {
    int k = 0;
    long long n0 = 0;  ///< least n with D_m < E_{m-k} for all scanned m >= n
    long long n1 = 0;  ///< least n with E_m < F_{m-k} for all scanned m >= n
    bool conclusive = true;  ///< false when a violation sits too close to the scan bound
};

/// Dominance thresholds n0(k), n1(k) for k = 0..k_max, scanned up to scan_bound.
std::vector<ThresholdRow> threshold_table(int k_max, long long scan_bound = 500);

/// Indices n in [-bound, bound] with term(f, n) == 0.
std::vector<long long> term_zeros(Family f, long long bound, bool parallel = true);

/// Valid keys (i, j) in [-bound, bound]^2 with a vanishing characteristic
/// determinant. Ordered lexicographically.
std::vector<std::pair<long long, long long>> delta_zeros(DeltaFamily fam, long long bound,
                                                         bool parallel = true);

}  // namespace recurlab
