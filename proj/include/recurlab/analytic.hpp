#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "recurlab/sequence.hpp"

namespace recurlab {

/// A registered characteristic polynomial, stored as ascending coefficients.
/// All registered shapes are monic with a single real root in (1, 2).
struct CharPoly {
    std::string name;
    std::vector<long> coeffs;  ///< coeffs[d] multiplies x^d

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double x) const;
    double deriv(double x) const;

    static CharPoly golden();        ///< x^2 - x - 1
    static CharPoly narayana();      ///< x^3 - x^2 - 1
    static CharPoly plastic();       ///< x^3 - x - 1
    static CharPoly nfold(int k);    ///< x^{k+1} - x^k - 1, k >= 1
    static CharPoly root_order(int m);  ///< x^{m+1} - x - 1, m >= 1
};

struct RootSet {
    double dominant = 0;                  ///< real root in (1, 2)
    double dominant_residual = 0;         ///< |p(dominant)|
    std::vector<double> real_roots;       ///< descending modulus, dominant first
    std::optional<std::complex<double>> complex_pair;  ///< cubic families only
};

/// Bracketed bisection on [1, 2] followed by Newton; cubics additionally get
/// their complex pair by quadratic deflation.
RootSet char_roots(const CharPoly& poly);

/// Linear coefficients and root data of the Binet-type closed form
///   s_n = c1 * dominant^n + rho^n (c2 cos(n zeta) + c3 sin(n zeta))
/// (for fibonacci: s_n = c1 * dominant^n + c2 * second_real^n).
struct ClosedFormConstants {
    Family family = Family::fibonacci;
    double dominant_root = 0;
    double second_real = 0;  ///< fibonacci only
    double rho = 0;          ///< modulus of the complex pair (cubics)
    double zeta = 0;         ///< argument of the complex pair, radians
    double c1 = 0, c2 = 0, c3 = 0;
    double anchor_residual = 0;  ///< max reconstruction error on the anchor block
};

ClosedFormConstants closed_form_constants(Family f);

/// Closed-form value at n; |n| <= 40 keeps double rounding below 1/2 so the
/// rounded value equals the exact term. Throws precision_bound_error beyond.
double closed_form_term(Family f, long long n);

struct CmEntry {
    int m = 0;
    double value = 0;
    int sign = 0;      ///< sign of value
    bool stable = false;  ///< |value| > 0.1, i.e. robust against constant error
};

/// The reflected-sign indicator c_m = (c1/c3) cos(m zeta) + sin(m zeta) of the
/// narayana family, for m = 1..m_max. Where E_{-m} != 0 its sign is -sign(c_m).
std::vector<CmEntry> c_m_table(int m_max);

struct LimitReport {
    std::string name;
    double max_tail_residual = 0;
    double tolerance = 0;
    bool ok = false;
    long long minimal_n = 0;   ///< for crossover-style checks
    bool has_minimal_n = false;
};

/// Tail residuals of the registered limit statements for a family, measured
/// over the last `tail_length` indices of a length-100 window (forward limits
/// use [1, 100], backward limits [-100, -1]). The two growth-crossover rows
/// report the minimal n from which the closed-form lower bound wins.
std::vector<LimitReport> limit_checks(Family f, int tail_length);

struct ResidualReport {
    std::string pattern;
    double exponent = 0;
    bool auto_exponent = false;
    double grid_lo = 0, grid_hi = 0;
    int grid_steps = 0;
    double max_residual = 0;
    double argmax_x = 0;
    long long argmax_n = 0;  ///< tower patterns only
    bool valid_solution = true;
    std::string note;
    double composite_exponent = 0;  ///< hgg_g: square of the exponent
};

/// Max relative residual |lhs - rhs| / max(|lhs|, |rhs|, 1) of a fixed-point
/// pattern for the power law x -> x^p over a positive grid.
/// Patterns: hf_f, hf_ff, hf_nfold, hgg_g, and the exponent-tower identities
/// tower_f, tower_e, tower_d (towers also sweep n in [-10, 10]).
/// exponent == nullopt selects the pattern's characteristic root.
ResidualReport verify_functional_equation(std::string_view pattern, std::optional<double> exponent,
                                          double grid_lo = 0.1, double grid_hi = 10.0,
                                          int grid_steps = 100, int nfold_k = 3);

struct ConjectureEntry {
    bool reciprocal = false;  ///< true for order 1/m, false for order n
    int order = 0;            ///< n or m
    double exponent = 0;      ///< d_n or d_{1/m}
};

struct ConjectureTable {
    std::vector<ConjectureEntry> entries;  ///< ascending by the order parameter
    bool strictly_decreasing = false;      ///< exponents decrease along the table
};

/// Power-law exponents of the generalized fixed-point problems: d_n for the
/// n-fold composition (n = 1..n_max) and d_{1/m} for the reciprocal orders
/// (m = 2..m_max), merged in ascending order of the order parameter.
ConjectureTable conjecture_exponents(int n_max, int m_max);

}  // namespace recurlab
