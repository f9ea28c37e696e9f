#include "recurlab/analytic.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "recurlab/error.hpp"

namespace recurlab {

double CharPoly::eval(double x) const {
    double acc = 0;
    for (size_t d = coeffs.size(); d-- > 0;) acc = acc * x + static_cast<double>(coeffs[d]);
    return acc;
}

double CharPoly::deriv(double x) const {
    double acc = 0;
    for (size_t d = coeffs.size(); d-- > 1;)
        acc = acc * x + static_cast<double>(d) * static_cast<double>(coeffs[d]);
    return acc;
}

CharPoly CharPoly::golden() { return {"golden", {-1, -1, 1}}; }
CharPoly CharPoly::narayana() { return {"narayana", {-1, 0, -1, 1}}; }
CharPoly CharPoly::plastic() { return {"plastic", {-1, -1, 0, 1}}; }

CharPoly CharPoly::nfold(int k) {
    if (k < 1) throw invalid_input_error("composition count must be >= 1");
    std::vector<long> c(static_cast<size_t>(k) + 2, 0);
    c[0] = -1;
    c[static_cast<size_t>(k)] = -1;
    c[static_cast<size_t>(k) + 1] = 1;
    return {"nfold(" + std::to_string(k) + ")", std::move(c)};
}

CharPoly CharPoly::root_order(int m) {
    if (m < 1) throw invalid_input_error("root order must be >= 1");
    std::vector<long> c(static_cast<size_t>(m) + 2, 0);
    c[0] = -1;
    c[1] = -1;
    c[static_cast<size_t>(m) + 1] = 1;
    return {"root_order(" + std::to_string(m) + ")", std::move(c)};
}

namespace {

// High-precision Newton for the root in (1, 2); every registered polynomial
// is increasing there, so plain bisection brackets safely first.
mpf_class dominant_root_hp(const CharPoly& poly, mp_bitcnt_t prec = 256) {
    auto eval = [&](const mpf_class& x) {
        mpf_class acc(0, prec);
        for (size_t d = poly.coeffs.size(); d-- > 0;) acc = acc * x + poly.coeffs[d];
        return acc;
    };
    auto deriv = [&](const mpf_class& x) {
        mpf_class acc(0, prec);
        for (size_t d = poly.coeffs.size(); d-- > 1;)
            acc = acc * x + mpf_class(static_cast<long>(d) * poly.coeffs[d], prec);
        return acc;
    };
    mpf_class lo(1, prec), hi(2, prec);
    for (int it = 0; it < 40; ++it) {
        mpf_class mid = (lo + hi) / 2;
        if (eval(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    mpf_class x = (lo + hi) / 2;
    for (int it = 0; it < 64; ++it) {
        mpf_class step = eval(x) / deriv(x);
        x -= step;
        if (abs(step) < mpf_class(1e-60, prec)) break;
    }
    return x;
}

double dominant_root(const CharPoly& poly) { return dominant_root_hp(poly).get_d(); }

}  // namespace

RootSet char_roots(const CharPoly& poly) {
    RootSet roots;
    roots.dominant = dominant_root(poly);
    roots.dominant_residual = std::fabs(poly.eval(roots.dominant));
    roots.real_roots.push_back(roots.dominant);
    if (poly.degree() == 2) {
        // monic quadratic: the other root is (sum of roots) - dominant
        double sum = -static_cast<double>(poly.coeffs[1]);
        roots.real_roots.push_back(sum - roots.dominant);
    } else if (poly.degree() == 3) {
        // deflate by the real root: x^3 + A x^2 + B x + C = (x - r)(x^2 + q1 x + q0)
        double a = static_cast<double>(poly.coeffs[2]);
        double b = static_cast<double>(poly.coeffs[1]);
        double r = roots.dominant;
        double q1 = a + r;
        double q0 = b + r * q1;
        double disc = q1 * q1 - 4 * q0;
        if (disc < 0) {
            roots.complex_pair = std::complex<double>(-q1 / 2, std::sqrt(-disc) / 2);
        } else {
            roots.real_roots.push_back((-q1 + std::sqrt(disc)) / 2);
            roots.real_roots.push_back((-q1 - std::sqrt(disc)) / 2);
            std::sort(roots.real_roots.begin() + 1, roots.real_roots.end(),
                      [](double x, double y) { return std::fabs(x) > std::fabs(y); });
        }
    }
    return roots;
}

static CharPoly family_poly(Family f) {
    switch (f) {
        case Family::fibonacci: return CharPoly::golden();
        case Family::narayana: return CharPoly::narayana();
        case Family::padovan: return CharPoly::plastic();
    }
    std::abort();
}

ClosedFormConstants closed_form_constants(Family f) {
    ClosedFormConstants k;
    k.family = f;
    RootSet roots = char_roots(family_poly(f));
    k.dominant_root = roots.dominant;

    std::array<double, 3> anchors{};
    int order = family_order(f);
    for (int n = 0; n < order; ++n)
        anchors[static_cast<size_t>(n)] = term(f, n).get_d();

    if (f == Family::fibonacci) {
        k.second_real = roots.real_roots[1];
        // c1 + c2 = s0 ; c1 a + c2 b = s1
        double a = k.dominant_root, b = k.second_real;
        k.c1 = (anchors[1] - b * anchors[0]) / (a - b);
        k.c2 = anchors[0] - k.c1;
        double r0 = std::fabs(k.c1 + k.c2 - anchors[0]);
        double r1 = std::fabs(k.c1 * a + k.c2 * b - anchors[1]);
        k.anchor_residual = std::max(r0, r1);
        return k;
    }

    std::complex<double> pair = *roots.complex_pair;
    k.rho = std::abs(pair);
    k.zeta = std::arg(pair);
    // 3x3 system in (c1, c2, c3) against the basis {root^n, rho^n cos, rho^n sin}
    // at n = 0, 1, 2; tiny and well-conditioned, plain elimination suffices.
    double A[3][4];
    for (int n = 0; n < 3; ++n) {
        A[n][0] = std::pow(k.dominant_root, n);
        A[n][1] = std::pow(k.rho, n) * std::cos(n * k.zeta);
        A[n][2] = std::pow(k.rho, n) * std::sin(n * k.zeta);
        A[n][3] = anchors[static_cast<size_t>(n)];
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
        std::swap(A[piv], A[col]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            double factor = A[r][col] / A[col][col];
            for (int c = col; c < 4; ++c) A[r][c] -= factor * A[col][c];
        }
    }
    k.c1 = A[0][3] / A[0][0];
    k.c2 = A[1][3] / A[1][1];
    k.c3 = A[2][3] / A[2][2];
    for (int n = 0; n < 3; ++n) {
        double rec = k.c1 * std::pow(k.dominant_root, n) +
                     std::pow(k.rho, n) * (k.c2 * std::cos(n * k.zeta) + k.c3 * std::sin(n * k.zeta));
        k.anchor_residual =
            std::max(k.anchor_residual, std::fabs(rec - anchors[static_cast<size_t>(n)]));
    }
    return k;
}

double closed_form_term(Family f, long long n) {
    if (n > 40 || n < -40)
        throw precision_bound_error("closed-form evaluation limited to |n| <= 40");
    ClosedFormConstants k = closed_form_constants(f);
    double nd = static_cast<double>(n);
    if (f == Family::fibonacci)
        return k.c1 * std::pow(k.dominant_root, nd) + k.c2 * std::pow(k.second_real, nd);
    return k.c1 * std::pow(k.dominant_root, nd) +
           std::pow(k.rho, nd) * (k.c2 * std::cos(nd * k.zeta) + k.c3 * std::sin(nd * k.zeta));
}

std::vector<CmEntry> c_m_table(int m_max) {
    if (m_max < 1) throw invalid_input_error("m_max must be >= 1");
    ClosedFormConstants k = closed_form_constants(Family::narayana);
    std::vector<CmEntry> out;
    out.reserve(static_cast<size_t>(m_max));
    for (int m = 1; m <= m_max; ++m) {
        CmEntry e;
        e.m = m;
        e.value = (k.c1 / k.c3) * std::cos(m * k.zeta) + std::sin(m * k.zeta);
        e.sign = e.value > 0 ? 1 : (e.value < 0 ? -1 : 0);
        e.stable = std::fabs(e.value) > 0.1;
        out.push_back(e);
    }
    return out;
}

namespace {

// |a*x + b*y + c*z| evaluated in 256-bit floats; the exact integer terms can
// reach ~10^20 over the scanned windows, where double cancellation would
// swamp the true residual.
double combo_residual_hp(const mpf_class& a, const Int& x, const mpf_class& b, const Int& y,
                         const mpf_class& c, const Int& z) {
    mpf_class acc(0, 256);
    acc += a * mpf_class(x, 256);
    acc += b * mpf_class(y, 256);
    acc += c * mpf_class(z, 256);
    return std::fabs(acc.get_d());
}

}  // namespace

std::vector<LimitReport> limit_checks(Family f, int tail_length) {
    if (tail_length < 10) throw invalid_input_error("tail length must be >= 10");
    const int window = 100;
    tail_length = std::min(tail_length, window);
    mpf_class root = dominant_root_hp(family_poly(f));
    std::vector<LimitReport> out;

    auto push_tail = [&](std::string name, double tol, auto&& residual_at, long long tail_lo,
                         long long tail_hi) {
        LimitReport rep;
        rep.name = std::move(name);
        rep.tolerance = tol;
        for (long long n = tail_lo; n <= tail_hi; ++n)
            rep.max_tail_residual = std::max(rep.max_tail_residual, residual_at(n));
        rep.ok = rep.max_tail_residual < tol;
        out.push_back(rep);
    };

    long long fwd_lo = window - tail_length + 1;  // tail of [1, 100]

    push_tail(
        "ratio_forward", f == Family::fibonacci ? 1e-6 : 1e-3,
        [&](long long n) {
            double q = term(f, n + 1).get_d() / term(f, n).get_d();
            return std::fabs(q - root.get_d());
        },
        fwd_lo, window);

    push_tail(
        "linear_forward", 1e-3,
        [&](long long n) {
            return combo_residual_hp(root, term(f, n), mpf_class(-1, 256), term(f, n + 1),
                                     mpf_class(0, 256), Int(0));
        },
        fwd_lo, window);

    if (f == Family::narayana) {
        // s_n + root*s_{n-1} + root^2*s_{n+1} collapses to a pure power of the
        // dominant root, so it vanishes toward -infinity.
        push_tail(
            "weighted_backward", 1e-6,
            [&](long long n) {
                return combo_residual_hp(mpf_class(1, 256), term(f, n), root, term(f, n - 1),
                                         mpf_class(root * root, 256), term(f, n + 1));
            },
            -window, -window + tail_length - 1);

        // Minimal n from which the closed-form growth bound
        //   c1*root^{n+1} - (c1+c3)(1/rho)^{n-1} > 2 c1 + c3
        // holds (it forces s_{n+1} > s_{-n+1}); and the mirrored bound with
        // exponents n-2 / n+2 (forcing s_{n-2} > s_{-n-2}).
        ClosedFormConstants k = closed_form_constants(f);
        double inv_rho = 1.0 / k.rho;
        auto crossover = [&](double up_shift, double down_shift) -> long long {
            long long last_violation = 0;
            for (long long n = 1; n <= 100; ++n) {
                double lhs = k.c1 * std::pow(k.dominant_root, static_cast<double>(n) + up_shift) -
                             (k.c1 + k.c3) * std::pow(inv_rho, static_cast<double>(n) + down_shift);
                if (!(lhs > 2 * k.c1 + k.c3)) last_violation = n;
            }
            return last_violation + 1;
        };
        LimitReport fwd;
        fwd.name = "growth_crossover_forward";
        fwd.has_minimal_n = true;
        fwd.minimal_n = crossover(+1, -1);
        fwd.ok = fwd.minimal_n <= 100;
        out.push_back(fwd);
        LimitReport bwd;
        bwd.name = "growth_crossover_backward";
        bwd.has_minimal_n = true;
        bwd.minimal_n = crossover(-2, +2);
        bwd.ok = bwd.minimal_n <= 100;
        out.push_back(bwd);
    }

    if (f == Family::padovan) {
        // s_n + root*s_{n+2} + root^2*s_{n+1} = root^n exactly.
        push_tail(
            "weighted_backward", 1e-6,
            [&](long long n) {
                return combo_residual_hp(mpf_class(1, 256), term(f, n), root, term(f, n + 2),
                                         mpf_class(root * root, 256), term(f, n + 1));
            },
            -window, -window + tail_length - 1);
    }

    return out;
}

namespace {

// Relative residual of exp(L) vs exp(R) with denominator max(|lhs|, |rhs|, 1),
// evaluated without overflow by shifting both exponents.
double reldiff_exp(double L, double R) {
    double shift = std::max(std::max(L, R), 0.0);
    return std::fabs(std::exp(L - shift) - std::exp(R - shift));
}

struct PatternGrid {
    std::vector<double> xs;
};

PatternGrid make_grid(double lo, double hi, int steps) {
    if (steps < 1) throw invalid_input_error("grid must have at least one point");
    if (lo > hi) throw invalid_input_error("grid lower bound exceeds upper bound");
    if (lo <= 0) throw numeric_domain_error("grid points must be strictly positive");
    PatternGrid g;
    g.xs.reserve(static_cast<size_t>(steps));
    if (steps == 1) {
        g.xs.push_back(lo);
        return g;
    }
    for (int s = 0; s < steps; ++s)
        g.xs.push_back(lo + (hi - lo) * static_cast<double>(s) / (steps - 1));
    return g;
}

double seq_d(Family f, long long n) { return term(f, n).get_d(); }

}  // namespace

ResidualReport verify_functional_equation(std::string_view pattern, std::optional<double> exponent,
                                          double grid_lo, double grid_hi, int grid_steps,
                                          int nfold_k) {
    ResidualReport rep;
    rep.pattern = std::string(pattern);
    rep.grid_lo = grid_lo;
    rep.grid_hi = grid_hi;
    rep.grid_steps = grid_steps;
    PatternGrid grid = make_grid(grid_lo, grid_hi, grid_steps);

    double auto_p = 0;
    bool tower = pattern == "tower_f" || pattern == "tower_e" || pattern == "tower_d";
    if (pattern == "hf_f" || pattern == "tower_f")
        auto_p = char_roots(CharPoly::golden()).dominant;
    else if (pattern == "hf_ff" || pattern == "tower_e")
        auto_p = char_roots(CharPoly::narayana()).dominant;
    else if (pattern == "hgg_g" || pattern == "tower_d")
        auto_p = char_roots(CharPoly::plastic()).dominant;
    else if (pattern == "hf_nfold")
        auto_p = char_roots(CharPoly::nfold(nfold_k)).dominant;
    else
        throw unknown_identity_error("unknown functional-equation pattern '" +
                                     std::string(pattern) + "'");

    rep.auto_exponent = !exponent.has_value();
    double p = exponent.value_or(auto_p);
    rep.exponent = p;
    if (p <= 0) {
        rep.valid_solution = false;
        rep.note = "exponent <= 0 violates positivity and the zero fixed point at 0";
    }
    if (pattern == "hgg_g") rep.composite_exponent = p * p;

    // Exponents of lhs/rhs as multiples of ln(x); the power law turns every
    // pattern into an exponent identity.
    auto scan = [&](auto&& lhs_exp, auto&& rhs_exp, long long n_lo, long long n_hi) {
        for (long long n = n_lo; n <= n_hi; ++n) {
            for (double x : grid.xs) {
                double lx = std::log(x);
                double r = reldiff_exp(lhs_exp(n) * lx, rhs_exp(n) * lx);
                if (r > rep.max_residual) {
                    rep.max_residual = r;
                    rep.argmax_x = x;
                    rep.argmax_n = n;
                }
            }
        }
    };

    if (pattern == "hf_f") {
        scan([&](long long) { return p * p; }, [&](long long) { return 1 + p; }, 0, 0);
    } else if (pattern == "hf_ff") {
        scan([&](long long) { return p * p * p; }, [&](long long) { return 1 + p * p; }, 0, 0);
    } else if (pattern == "hgg_g") {
        scan([&](long long) { return p * p * p; }, [&](long long) { return 1 + p; }, 0, 0);
    } else if (pattern == "hf_nfold") {
        double pk = std::pow(p, nfold_k);
        scan([&](long long) { return p * pk; }, [&](long long) { return 1 + pk; }, 0, 0);
    } else if (pattern == "tower_f") {
        Family f = Family::fibonacci;
        scan(
            [&](long long n) { return p * (seq_d(f, n) + p * seq_d(f, n + 1)); },
            [&](long long n) { return seq_d(f, n + 1) + p * seq_d(f, n + 2); }, -10, 10);
    } else if (pattern == "tower_e") {
        Family f = Family::narayana;
        scan(
            [&](long long n) {
                return p * (seq_d(f, n) + p * seq_d(f, n - 1) + p * p * seq_d(f, n + 1));
            },
            [&](long long n) {
                return seq_d(f, n + 1) + p * seq_d(f, n) + p * p * seq_d(f, n + 2);
            },
            -10, 10);
    } else if (pattern == "tower_d") {
        Family f = Family::padovan;
        scan(
            [&](long long n) {
                return p * (seq_d(f, n) + p * seq_d(f, n + 2) + p * p * seq_d(f, n + 1));
            },
            [&](long long n) {
                return seq_d(f, n + 1) + p * seq_d(f, n + 3) + p * p * seq_d(f, n + 2);
            },
            -10, 10);
    }

    if (tower && rep.note.empty()) rep.note = "scanned tower offsets n in [-10, 10]";
    return rep;
}

ConjectureTable conjecture_exponents(int n_max, int m_max) {
    if (n_max < 1 || m_max < 1) throw invalid_input_error("n_max and m_max must be >= 1");
    ConjectureTable table;
    for (int m = m_max; m >= 2; --m) {
        ConjectureEntry e;
        e.reciprocal = true;
        e.order = m;
        e.exponent = std::pow(char_roots(CharPoly::root_order(m)).dominant, m);
        table.entries.push_back(e);
    }
    for (int n = 1; n <= n_max; ++n) {
        ConjectureEntry e;
        e.reciprocal = false;
        e.order = n;
        e.exponent = char_roots(CharPoly::nfold(n)).dominant;
        table.entries.push_back(e);
    }
    table.strictly_decreasing = true;
    for (size_t k = 1; k < table.entries.size(); ++k) {
        if (!(table.entries[k - 1].exponent > table.entries[k].exponent)) {
            table.strictly_decreasing = false;
            break;
        }
    }
    return table;
}

}  // namespace recurlab
