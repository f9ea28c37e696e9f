#include "recurlab/recovery.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "recurlab/error.hpp"
#include "recurlab/exact_linalg.hpp"
#include "recurlab/identities.hpp"

namespace recurlab {

namespace {

void require_distinct(std::span<const Observation> obs, size_t want) {
    if (obs.size() != want)
        throw invalid_input_error("expected " + std::to_string(want) + " observations, got " +
                                  std::to_string(obs.size()));
    for (size_t a = 0; a < obs.size(); ++a)
        for (size_t b = a + 1; b < obs.size(); ++b)
            if (obs[a].index == obs[b].index)
                throw invalid_input_error("observation indices must be pairwise distinct");
}

// The base-row of the linear system for one observation: the system row is
// row(idx) . coeffs = value, matching the shifted_term expansion.
std::array<Int, 3> base_row(Family fam, long long idx) {
    switch (fam) {
        case Family::fibonacci:
            return {term(fam, idx - 2), term(fam, idx - 1), Int(0)};
        case Family::narayana:
            return {term(fam, idx - 3), term(fam, idx - 4), term(fam, idx - 2)};
        case Family::padovan:
            return {term(fam, idx - 1), term(fam, idx + 1), term(fam, idx)};
    }
    std::abort();
}

std::string spell_relation(Family fam, const std::vector<Int>& lambda,
                           std::span<const Observation> obs) {
    // lambda . values = 0; render with negative terms moved to the right.
    std::string prefix = fam == Family::fibonacci ? "F'_"
                         : fam == Family::narayana ? "E'_"
                                                   : "D'_";
    std::string lhs, rhs;
    auto add = [&](std::string& side, const Int& c, long long idx) {
        if (!side.empty()) side += " + ";
        Int a = abs(c);
        if (a != 1) side += a.get_str() + "*";
        side += prefix + std::to_string(idx);
    };
    for (size_t k = 0; k < lambda.size(); ++k) {
        if (lambda[k] == 0) continue;
        if (lambda[k] > 0)
            add(lhs, lambda[k], obs[k].index);
        else
            add(rhs, lambda[k], obs[k].index);
    }
    if (lhs.empty()) lhs = "0";
    if (rhs.empty()) rhs = "0";
    return lhs + " = " + rhs;
}

RecoveryResult recover_order3(Family fam, std::span<const Observation> raw) {
    require_distinct(raw, 3);
    std::vector<Observation> obs(raw.begin(), raw.end());
    std::sort(obs.begin(), obs.end(),
              [](const Observation& a, const Observation& b) { return a.index < b.index; });

    Mat3 base;
    for (int r = 0; r < 3; ++r) base[r] = base_row(fam, obs[r].index);
    Int denom = det3(base);

    // Cross-check against the offset closed form: with rows sorted ascending
    // the determinant depends only on the index gaps.
    long long i = obs[1].index - obs[0].index;
    long long j = obs[2].index - obs[1].index;
    DeltaFamily dfam =
        fam == Family::narayana ? DeltaFamily::narayana : DeltaFamily::padovan;
    if (delta_closed_form(dfam, i, j) != denom)
        throw std::logic_error("determinant disagrees with its closed form");

    RecoveryResult result;
    result.denominator = denom;

    if (denom != 0) {
        result.status = RecoveryStatus::solved;
        for (int col = 0; col < 3; ++col) {
            // Cramer numerator: replace column col by the observed values.
            // Expand along that column to keep the arithmetic in Int as far
            // as possible.
            Rat num(0);
            for (int r = 0; r < 3; ++r) {
                int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
                int c1 = (col + 1) % 3, c2 = (col + 2) % 3;
                Int minor = base[r1][c1] * base[r2][c2] - base[r1][c2] * base[r2][c1];
                // Column permutation parity: (r, col) cofactor with the other
                // rows/cols in cyclic order has sign +1.
                num += obs[static_cast<size_t>(r)].value * minor;
            }
            result.coefficients.push_back(num / Rat(denom));
        }
        // Exact post-condition: the coefficients reproduce every observation.
        for (const Observation& o : obs) {
            if (shifted_term(fam, result.coefficients, o.index) != o.value)
                throw std::logic_error("recovered coefficients fail to reproduce an observation");
        }
        return result;
    }

    // Singular base. Either all numerators vanish (observations consistent,
    // but they pin down no unique sequence) or some numerator is nonzero
    // (observations lie on no shifted sequence).
    std::vector<std::vector<Int>> rows(3, std::vector<Int>(3));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = base[r][c];
    auto lambda = left_null_vector(rows);
    if (!lambda) throw std::logic_error("zero determinant but no left null vector");
    Rat combo(0);
    for (int r = 0; r < 3; ++r) combo += Rat((*lambda)[static_cast<size_t>(r)]) * obs[static_cast<size_t>(r)].value;
    if (combo != 0)
        throw inconsistent_observations_error(
            "observations are not from any shifted sequence: the dependent rows demand " +
            spell_relation(fam, *lambda, obs));
    result.status = RecoveryStatus::singular;
    result.dependency_note = spell_relation(fam, *lambda, obs);
    return result;
}

}  // namespace

RecoveryResult recover_f(std::span<const Observation> raw) {
    require_distinct(raw, 2);
    std::vector<Observation> obs(raw.begin(), raw.end());
    std::sort(obs.begin(), obs.end(),
              [](const Observation& a, const Observation& b) { return a.index < b.index; });

    std::array<std::array<Int, 2>, 2> base;
    for (int r = 0; r < 2; ++r) {
        auto row = base_row(Family::fibonacci, obs[r].index);
        base[r] = {row[0], row[1]};
    }
    Int denom = det2(base[0][0], base[0][1], base[1][0], base[1][1]);
    // The base determinant is +-F_{gap} with gap != 0, never zero.
    if (denom == 0) throw std::logic_error("fibonacci recovery determinant vanished");

    RecoveryResult result;
    result.status = RecoveryStatus::solved;
    result.denominator = denom;
    Rat a = (obs[0].value * base[1][1] - obs[1].value * base[0][1]) / Rat(denom);
    Rat b = (obs[1].value * base[0][0] - obs[0].value * base[1][0]) / Rat(denom);
    result.coefficients = {a, b};
    for (const Observation& o : obs) {
        if (shifted_term(Family::fibonacci, result.coefficients, o.index) != o.value)
            throw std::logic_error("recovered coefficients fail to reproduce an observation");
    }
    return result;
}

RecoveryResult recover_e(std::span<const Observation> obs) {
    return recover_order3(Family::narayana, obs);
}

RecoveryResult recover_d(std::span<const Observation> obs) {
    return recover_order3(Family::padovan, obs);
}

std::optional<long long> detect_shift(Family f, std::span<const Rat> initials,
                                      long long search_bound) {
    if (initials.size() != static_cast<size_t>(family_order(f)))
        throw invalid_spec_error("initial block arity must match the family order");
    auto matches = [&](long long n0) {
        for (size_t i = 0; i < initials.size(); ++i)
            if (initials[i] != Rat(term(f, n0 + static_cast<long long>(i)))) return false;
        return true;
    };
    for (long long mag = 0; mag <= search_bound; ++mag) {
        if (matches(mag)) return mag;
        if (mag > 0 && matches(-mag)) return -mag;
    }
    return std::nullopt;
}

}  // namespace recurlab
