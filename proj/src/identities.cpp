#include "recurlab/identities.hpp"

#include <algorithm>

#include "recurlab/error.hpp"
#include "recurlab/exact_linalg.hpp"
#include "recurlab/parallel.hpp"

namespace recurlab {

namespace {

Int F(long long n) { return term(Family::fibonacci, n); }
Int E(long long n) { return term(Family::narayana, n); }
Int D(long long n) { return term(Family::padovan, n); }

Int dE(long long i, long long j) { return delta_closed_form(DeltaFamily::narayana, i, j); }

// 3x3 determinant of consecutive-window rows: (E_{n-2} E_{n-3} E_{n-1}; ...),
// the unit determinant of the narayana family.
Int delta3_e_det(long long n) {
    return det3({{{E(n - 2), E(n - 3), E(n - 1)},
                  {E(n - 1), E(n - 2), E(n)},
                  {E(n), E(n - 1), E(n + 1)}}});
}

Int delta3_d_det(long long n) {
    return det3({{{D(n), D(n + 2), D(n + 1)},
                  {D(n + 1), D(n + 3), D(n + 2)},
                  {D(n + 2), D(n + 4), D(n + 3)}}});
}

// Main determinant of the narayana cycle-closure system.
Int bigdelta_e_det(long long n) {
    return det3({{{E(n - 2) - 1, E(n - 3), E(n - 1)},
                  {E(n - 1), E(n - 2) - 1, E(n)},
                  {E(n), E(n - 1), E(n + 1) - 1}}});
}

// Main determinant of the padovan cycle-closure system.
Int bigdelta_d_det(long long n) {
    return det3({{{D(n) - 1, D(n + 2), D(n + 1)},
                  {D(n + 1), D(n + 3) - 1, D(n + 2)},
                  {D(n + 2), D(n + 4), D(n + 3) - 1}}});
}

std::vector<EqualityIdentity> build_equality_registry() {
    std::vector<EqualityIdentity> reg;
    reg.push_back({"cassini_f",
                   {[](long long n) { return Int(F(n - 1) * F(n + 1) - F(n) * F(n)); },
                    [](long long n) { return neg_one_pow(n); }}});
    reg.push_back({"e_prod",
                   {[](long long n) { return Int(E(n) * E(n + 3) - E(n + 1) * E(n + 2)); },
                    [](long long n) { return E(-n - 4); },
                    [](long long n) { return Int(E(n + 3) * E(n + 3) - E(n + 2) * E(n + 4)); }}});
    reg.push_back({"e_sq",
                   {[](long long n) { return Int(E(n + 2) * E(n + 2) - E(n) * E(n + 4)); },
                    [](long long n) { return E(-n - 6); },
                    [](long long n) { return Int(E(n + 3) * E(n + 3) - E(n) * E(n + 6)); }}});
    reg.push_back({"d_sq",
                   {[](long long n) { return Int(D(n) * D(n) - D(n - 1) * D(n + 1)); },
                    [](long long n) { return D(-n + 3); },
                    [](long long n) { return Int(D(n) * D(n + 3) - D(n + 1) * D(n + 2)); }}});
    reg.push_back({"delta3_e",
                   {[](long long n) { return delta3_e_det(n); },
                    [](long long) { return Int(1); }}});
    reg.push_back({"delta3_d",
                   {[](long long n) { return delta3_d_det(n); },
                    [](long long) { return Int(1); }}});
    reg.push_back({"bigdelta_e",
                   {[](long long n) { return bigdelta_e_det(n); },
                    [](long long n) {
                        return Int(E(n + 1) - E(-n + 1) + 2 * (E(n - 2) - E(-n - 2)));
                    }}});
    reg.push_back({"bigdelta_d",
                   {[](long long n) { return bigdelta_d_det(n); },
                    [](long long n) {
                        return Int(D(n) - D(-n) + 2 * (D(n + 3) - D(-n + 3)));
                    }}});
    // Structural identities of the narayana delta table, via the closed form.
    reg.push_back({"delta_cols_2_3_equal",
                   {[](long long i) { return dE(i, 2); }, [](long long i) { return dE(i, 3); }}});
    reg.push_back({"delta_col1_reflected",
                   {[](long long i) { return dE(i, 1); }, [](long long i) { return E(-i - 1); }}});
    reg.push_back({"delta_col2_neg_reflected",
                   {[](long long i) { return dE(i, 2); },
                    [](long long i) { return Int(-E(-i - 3)); }}});
    reg.push_back({"delta_col1_from_col2",
                   {[](long long i) { return dE(i, 1); },
                    [](long long i) { return Int(-dE(i - 2, 2)); },
                    [](long long i) { return Int(-dE(i - 2, 3)); }}});
    reg.push_back({"delta_row2_row3_shift",
                   {[](long long j) { return dE(2, j); }, [](long long j) { return dE(3, j - 1); }}});
    reg.push_back({"delta_row1_row3_negated",
                   {[](long long j) { return dE(1, j); },
                    [](long long j) { return Int(-dE(3, j)); }}});
    reg.push_back({"delta_row2_row1_shift",
                   {[](long long j) { return dE(2, j); },
                    [](long long j) { return Int(-dE(1, j - 1)); }}});
    reg.push_back({"delta_row1_row5_term",
                   {[](long long j) { return dE(1, j); }, [](long long j) { return dE(5, j + 3); },
                    [](long long j) { return E(j); }}});
    return reg;
}

Int G(long long n) { return E(n) + F(n); }
Int H(long long n) { return D(n) + E(n) + F(n); }

std::vector<InequalityFamily> build_inequality_registry() {
    std::vector<InequalityFamily> reg;
    reg.push_back({"lemma2", 3, 200, [](long long n) {
                       return (F(n - 1) - 1) * (F(n + 1) - 1) < F(n) * F(n);
                   }});
    reg.push_back({"e_vs_reflected", 1, 300,
                   [](long long n) { return E(n + 1) > E(-n + 1); }});
    reg.push_back({"d_vs_reflected", 1, 300, [](long long n) { return D(n) > D(-n); }});
    reg.push_back({"d_lt_e", 4, 200, [](long long n) { return D(n) < E(n - 1); }});
    reg.push_back({"e_lt_f", 6, 200, [](long long n) { return E(n) < F(n - 1); }});
    reg.push_back({"diff_de", 5, 200,
                   [](long long n) { return D(n + 1) - D(n) < E(n + 1) - E(n); }});
    reg.push_back({"diff_ef", 4, 200,
                   [](long long n) { return E(n + 1) - E(n) < F(n + 1) - F(n); }});
    reg.push_back({"gap_growth", 5, 200, [](long long n) {
                       return E(n + 1) - D(n + 1) > E(n) - D(n) &&
                              F(n + 1) - E(n + 1) > F(n) - E(n);
                   }});
    // The chain inequality for G_n = E_n + F_n as printed; its right half
    // fails from n = 2 on (G_{n+3} - G_n - G_{n+2} = F_{n-1} >= 0).
    reg.push_back({"g_chain", 1, 50, [](long long n) {
                       return G(n) + G(n + 1) <= G(n + 3) && G(n + 3) <= G(n) + G(n + 2);
                   }});
    // Repaired right bound: G_{n+1} + G_{n+2} - G_{n+3} = E_{n+1} - E_n >= 0.
    reg.push_back({"g_chain_fixed", 1, 300, [](long long n) {
                       return G(n) + G(n + 1) <= G(n + 3) && G(n + 3) <= G(n + 1) + G(n + 2);
                   }});
    // Chain for H_n = D_n + E_n + F_n as printed; the right half fails at
    // n = 2 and from n = 4 on.
    reg.push_back({"h_chain", 1, 50, [](long long n) {
                       return H(n) + H(n + 1) <= H(n + 3) && H(n + 3) <= H(n) + H(n + 2);
                   }});
    reg.push_back({"h_chain_left", 1, 300,
                   [](long long n) { return H(n) + H(n + 1) <= H(n + 3); }});
    // Strict growth of F_n - (E_n + D_n), the exact-difference form of the
    // divergence claim.
    reg.push_back({"fe_hsum", 5, 200, [](long long n) {
                       return F(n + 1) - (E(n + 1) + D(n + 1)) > F(n) - (E(n) + D(n));
                   }});
    return reg;
}

}  // namespace

const std::vector<EqualityIdentity>& equality_registry() {
    static const std::vector<EqualityIdentity> reg = build_equality_registry();
    return reg;
}

static const EqualityIdentity& find_equality(std::string_view name) {
    for (const auto& id : equality_registry())
        if (id.name == name) return id;
    throw unknown_identity_error("unknown identity '" + std::string(name) + "'");
}

IdentityReport check_identity(std::string_view name, long long n) {
    const EqualityIdentity& id = find_equality(name);
    IdentityReport rep;
    rep.name = id.name;
    rep.n = n;
    rep.relation = Relation::eq;
    rep.lhs = id.expressions[0](n);
    rep.rhs = id.expressions[1](n);
    rep.holds = true;
    for (size_t k = 1; k < id.expressions.size(); ++k) {
        if (id.expressions[k](n) != rep.lhs) {
            rep.holds = false;
            break;
        }
    }
    return rep;
}

std::vector<long long> identity_scan(std::string_view name, long long lo, long long hi,
                                     bool parallel) {
    const EqualityIdentity& id = find_equality(name);  // validate before scanning
    // Warm the shared caches once so parallel workers only take shared locks.
    term(Family::fibonacci, lo - 8);
    term(Family::fibonacci, hi + 8);
    term(Family::narayana, -(std::max(std::llabs(lo), std::llabs(hi)) + 8));
    term(Family::narayana, std::max(std::llabs(lo), std::llabs(hi)) + 8);
    term(Family::padovan, -(std::max(std::llabs(lo), std::llabs(hi)) + 8));
    term(Family::padovan, std::max(std::llabs(lo), std::llabs(hi)) + 8);
    return par::collect(
        lo, hi, [&id](long long n) { return !check_identity(id.name, n).holds; }, parallel);
}

IdentityReport vajda(long long n, long long m) {
    IdentityReport rep;
    rep.name = "vajda";
    rep.n = n;
    rep.m = m;
    rep.relation = Relation::eq;
    rep.lhs = F(n) * F(m + 1) - F(m) * F(n + 1);
    rep.rhs = F(m - n) * neg_one_pow(n + 1);
    Int alt = F(n - m) * neg_one_pow(m);
    rep.holds = (rep.lhs == rep.rhs) && (rep.rhs == alt);
    return rep;
}

Int delta_closed_form(DeltaFamily fam, long long i, long long j) {
    if (fam == DeltaFamily::narayana) return E(i) * E(i + j - 1) - E(i + j) * E(i - 1);
    return D(i + 2) * D(i + j + 4) - D(i + j + 2) * D(i + 4);
}

Int delta_determinant(DeltaFamily fam, long long i, long long j, long long witness) {
    auto row = [&](long long x) -> std::array<Int, 3> {
        if (fam == DeltaFamily::narayana) return {E(x), E(x - 1), E(x + 1)};
        return {D(x + 2), D(x + 4), D(x + 3)};
    };
    Mat3 m{row(witness), row(witness + i), row(witness + i + j)};
    return det3(m);
}

DeltaReport delta_ij(DeltaFamily fam, long long i, long long j,
                     std::span<const long long> witnesses) {
    DeltaKey key{i, j};
    if (!key.valid())
        throw degenerate_key_error("degenerate delta key: offsets must satisfy i != 0, j != 0, "
                                   "i + j != 0");
    DeltaReport rep;
    rep.family = fam;
    rep.i = i;
    rep.j = j;
    rep.value = delta_closed_form(fam, i, j);
    std::vector<long long> ws(witnesses.begin(), witnesses.end());
    if (ws.empty()) ws.push_back(0);
    Int first = delta_determinant(fam, i, j, ws[0]);
    rep.witness_independent = true;
    for (size_t k = 1; k < ws.size(); ++k) {
        if (delta_determinant(fam, i, j, ws[k]) != first) {
            rep.witness_independent = false;
            break;
        }
    }
    rep.matches_closed_form = (first == rep.value);
    return rep;
}

IdentityReport delta_structure(DeltaStructure kind, long long i, long long j,
                               std::string_view special_name) {
    if (kind == DeltaStructure::special) return check_identity(special_name, i);
    DeltaKey key{i, j};
    if (!key.valid())
        throw degenerate_key_error("degenerate delta key: offsets must satisfy i != 0, j != 0, "
                                   "i + j != 0");
    IdentityReport rep;
    rep.n = i;
    rep.m = j;
    rep.relation = Relation::eq;
    switch (kind) {
        case DeltaStructure::row_recurrence: {
            rep.name = "delta_row_recurrence";
            rep.lhs = dE(i, j - 3) + dE(i, j - 1);
            rep.rhs = dE(i, j);
            bool anchors = dE(i, 1) == E(i) * E(i) - E(i - 1) * E(i + 1) &&
                           dE(i, 2) == E(i) * E(i + 1) - E(i - 1) * E(i + 2) &&
                           dE(i, 3) == E(i) * E(i + 2) - E(i - 1) * E(i + 3) &&
                           dE(i, 2) == dE(i, 3);
            rep.holds = (rep.lhs == rep.rhs) && anchors;
            return rep;
        }
        case DeltaStructure::col_recurrence: {
            rep.name = "delta_col_recurrence";
            rep.lhs = dE(i + 2, j) + dE(i, j);
            rep.rhs = dE(i - 1, j);
            bool anchors = dE(1, j) == E(j) && dE(2, j) == -E(j - 1) && dE(3, j) == -E(j);
            rep.holds = (rep.lhs == rep.rhs) && anchors;
            return rep;
        }
        case DeltaStructure::separability: {
            rep.name = "delta_separability";
            rep.lhs = dE(i, j + 3);
            rep.rhs = (E(i) * E(i) - E(i - 1) * E(i + 1)) * E(j) +
                      (E(i) * E(i + 1) - E(i - 1) * E(i + 2)) * E(j + 2);
            Int direct = E(i) * E(i + j + 2) - E(i + j + 3) * E(i - 1);
            rep.holds = (rep.lhs == rep.rhs) && (rep.lhs == direct);
            return rep;
        }
        case DeltaStructure::special: break;
    }
    throw unknown_identity_error("unknown delta structure kind");
}

const std::vector<InequalityFamily>& inequality_registry() {
    static const std::vector<InequalityFamily> reg = build_inequality_registry();
    return reg;
}

const InequalityFamily& inequality_family(std::string_view name) {
    for (const auto& fam : inequality_registry())
        if (fam.name == name) return fam;
    throw unknown_identity_error("unknown inequality family '" + std::string(name) + "'");
}

std::vector<long long> inequality_scan(std::string_view name, long long lo, long long hi,
                                       bool parallel) {
    const InequalityFamily& fam = inequality_family(name);
    long long pad = std::max(std::llabs(lo), std::llabs(hi)) + 8;
    for (Family f : {Family::fibonacci, Family::narayana, Family::padovan}) {
        term(f, -pad);
        term(f, pad);
    }
    return par::collect(
        lo, hi, [&fam](long long n) { return !fam.holds(n); }, parallel);
}

std::vector<ThresholdRow> threshold_table(int k_max, long long scan_bound) {
    if (k_max < 0) throw invalid_input_error("k_max must be >= 0");
    if (scan_bound < 2) throw invalid_input_error("scan bound too small");
    term(Family::fibonacci, scan_bound + 1);
    term(Family::narayana, scan_bound + 1);
    term(Family::padovan, scan_bound + 1);
    term(Family::narayana, -k_max - 1);
    term(Family::fibonacci, -k_max - 1);
    std::vector<ThresholdRow> rows;
    for (int k = 0; k <= k_max; ++k) {
        ThresholdRow row;
        row.k = k;
        long long last0 = 0, last1 = 0;
        for (long long m = 1; m <= scan_bound; ++m) {
            if (!(D(m) < E(m - k))) last0 = m;
            if (!(E(m) < F(m - k))) last1 = m;
        }
        row.n0 = last0 + 1;
        row.n1 = last1 + 1;
        // A violation in the upper half of the scan means the scan bound is
        // too small to call the threshold stable.
        row.conclusive = last0 <= scan_bound / 2 && last1 <= scan_bound / 2;
        rows.push_back(row);
    }
    return rows;
}

std::vector<long long> term_zeros(Family f, long long bound, bool parallel) {
    if (bound < 1) throw invalid_input_error("bound must be >= 1");
    Window w(f, -bound, bound);
    return par::collect(
        -bound, bound, [&w](long long n) { return w[n] == 0; }, parallel);
}

std::vector<std::pair<long long, long long>> delta_zeros(DeltaFamily fam, long long bound,
                                                         bool parallel) {
    if (bound < 1) throw invalid_input_error("bound must be >= 1");
    Family f = fam == DeltaFamily::narayana ? Family::narayana : Family::padovan;
    Window w(f, -2 * bound - 6, 2 * bound + 6);
    auto closed = [&](long long i, long long j) -> Int {
        if (fam == DeltaFamily::narayana) return w[i] * w[i + j - 1] - w[i + j] * w[i - 1];
        return w[i + 2] * w[i + j + 4] - w[i + j + 2] * w[i + 4];
    };
    std::vector<long long> rows = par::collect(
        -bound, bound,
        [&](long long i) {
            if (i == 0) return false;
            for (long long j = -bound; j <= bound; ++j) {
                if (j == 0 || i + j == 0) continue;
                if (closed(i, j) == 0) return true;
            }
            return false;
        },
        parallel);
    std::vector<std::pair<long long, long long>> out;
    for (long long i : rows) {
        for (long long j = -bound; j <= bound; ++j) {
            if (j == 0 || i + j == 0) continue;
            if (closed(i, j) == 0) out.emplace_back(i, j);
        }
    }
    return out;
}

}  // namespace recurlab
