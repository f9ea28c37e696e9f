#include "recurlab/sequence.hpp"

#include <utility>

namespace recurlab {

int family_order(Family f) { return f == Family::fibonacci ? 2 : 3; }

char family_letter(Family f) {
    switch (f) {
        case Family::fibonacci: return 'F';
        case Family::narayana: return 'E';
        case Family::padovan: return 'D';
    }
    return '?';
}

Family family_from_letter(std::string_view s) {
    if (s == "F" || s == "f") return Family::fibonacci;
    if (s == "E" || s == "e") return Family::narayana;
    if (s == "D" || s == "d") return Family::padovan;
    throw invalid_spec_error("unknown family '" + std::string(s) + "' (expected F, E or D)");
}

RecurrenceSpec family_spec(Family f) {
    RecurrenceSpec spec;
    switch (f) {
        case Family::fibonacci:
            spec.order = 2;
            spec.forward_coeffs = {Int(1), Int(1)};
            spec.anchor_terms = {Int(0), Int(1)};
            break;
        case Family::narayana:
            spec.order = 3;
            spec.forward_coeffs = {Int(1), Int(0), Int(1)};
            spec.anchor_terms = {Int(0), Int(1), Int(1)};
            break;
        case Family::padovan:
            spec.order = 3;
            spec.forward_coeffs = {Int(1), Int(1), Int(0)};
            spec.anchor_terms = {Int(1), Int(0), Int(0)};
            break;
    }
    spec.anchor_index = 0;
    return spec;
}

const Sequence& sequence(Family f) {
    static const Sequence fib(family_spec(Family::fibonacci),
                              family_spec(Family::fibonacci).anchor_terms);
    static const Sequence nar(family_spec(Family::narayana),
                              family_spec(Family::narayana).anchor_terms);
    static const Sequence pad(family_spec(Family::padovan),
                              family_spec(Family::padovan).anchor_terms);
    switch (f) {
        case Family::fibonacci: return fib;
        case Family::narayana: return nar;
        case Family::padovan: return pad;
    }
    std::abort();
}

Int term(Family f, long long n) { return sequence(f).term(n); }

std::vector<Int> term_range(Family f, long long from, long long to) {
    return sequence(f).window(from, to);
}

static void check_arity(Family base, size_t got) {
    size_t want = static_cast<size_t>(family_order(base));
    if (got != want)
        throw invalid_spec_error("shift coefficient arity mismatch: family " +
                                 std::string(1, family_letter(base)) + " needs " +
                                 std::to_string(want) + " coefficients, got " +
                                 std::to_string(got));
}

Rat shifted_term(Family base, std::span<const Rat> coeffs, long long n) {
    check_arity(base, coeffs.size());
    switch (base) {
        case Family::fibonacci:
            return coeffs[0] * term(base, n - 2) + coeffs[1] * term(base, n - 1);
        case Family::narayana:
            return coeffs[0] * term(base, n - 3) + coeffs[1] * term(base, n - 4) +
                   coeffs[2] * term(base, n - 2);
        case Family::padovan:
            return coeffs[0] * term(base, n - 1) + coeffs[1] * term(base, n + 1) +
                   coeffs[2] * term(base, n);
    }
    std::abort();
}

std::vector<Rat> iterate_custom(Family base, std::span<const Rat> initials, long long from,
                                long long to) {
    check_arity(base, initials.size());
    if (from > to) throw empty_range_error("empty range: from > to");
    RecurrenceSpec spec = family_spec(base);
    spec.anchor_index = 1;  // initial block at indices 1..k
    RatSequence seq(spec, std::vector<Rat>(initials.begin(), initials.end()));
    return seq.window(from, to);
}

Rat term(const SeqFamily& fam, long long n) {
    if (!fam.is_shifted()) return Rat(term(fam.base, n));
    return shifted_term(fam.base, fam.shift, n);
}

}  // namespace recurlab
