#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "recurlab/error.hpp"
#include "recurlab/identities.hpp"
#include "recurlab/recovery.hpp"
#include "recurlab/sequence.hpp"

using namespace recurlab;

namespace {

Observation ob(long long idx, long val) { return {idx, make_rat(val)}; }

std::vector<Rat> rats(std::initializer_list<long> xs) {
    std::vector<Rat> out;
    for (long x : xs) out.push_back(make_rat(x));
    return out;
}

}  // namespace

TEST_CASE("lucas sequence from two values") {
    std::vector<Observation> consecutive = {ob(6, 18), ob(7, 29)};
    auto r = recover_f(consecutive);
    REQUIRE(r.status == RecoveryStatus::solved);
    CHECK(r.coefficients == rats({1, 3}));

    std::vector<Observation> gapped = {ob(6, 18), ob(8, 47)};
    auto r2 = recover_f(gapped);
    REQUIRE(r2.status == RecoveryStatus::solved);
    CHECK(r2.coefficients == rats({1, 3}));
}

TEST_CASE("self-identification of the fibonacci sequence") {
    std::vector<Observation> obs = {ob(1, 0), ob(2, 1)};
    auto r = recover_f(obs);
    REQUIRE(r.status == RecoveryStatus::solved);
    CHECK(r.coefficients == rats({0, 1}));
}

TEST_CASE("narayana-shift recovery: the three worked examples") {
    std::vector<Observation> consecutive = {ob(8, 23), ob(9, 34), ob(10, 50)};
    auto a = recover_e(consecutive);
    REQUIRE(a.status == RecoveryStatus::solved);
    CHECK(a.coefficients == rats({1, 2, 4}));
    CHECK(a.denominator == 1);

    std::vector<Observation> gapped = {ob(8, 23), ob(9, 34), ob(11, 73)};
    auto b = recover_e(gapped);
    REQUIRE(b.status == RecoveryStatus::solved);
    CHECK(b.coefficients == rats({1, 2, 4}));

    std::vector<Observation> dependent = {ob(8, 23), ob(10, 50), ob(11, 73)};
    auto c = recover_e(dependent);
    REQUIRE(c.status == RecoveryStatus::singular);
    CHECK(c.denominator == 0);
    CHECK(c.dependency_note == "E'_8 + E'_10 = E'_11");
    // offsets (2, 1): the closed form agrees that this key is singular
    CHECK(delta_closed_form(DeltaFamily::narayana, 2, 1) == 0);
}

TEST_CASE("inconsistent observations on a singular key raise, never mis-answer") {
    std::vector<Observation> off = {ob(8, 23), ob(10, 50), ob(11, 74)};  // 73 perturbed
    CHECK_THROWS_AS(recover_e(off), inconsistent_observations_error);
}

TEST_CASE("padovan-shift recovery: perrin and padovan") {
    std::vector<Observation> perrin = {ob(1, 0), ob(2, 2), ob(3, 3)};
    auto p = recover_d(perrin);
    REQUIRE(p.status == RecoveryStatus::solved);
    CHECK(p.coefficients == rats({0, 2, 3}));

    std::vector<Observation> padovan = {ob(1, 1), ob(2, 1), ob(3, 2)};
    auto q = recover_d(padovan);
    REQUIRE(q.status == RecoveryStatus::solved);
    CHECK(q.coefficients == rats({1, 1, 2}));
}

TEST_CASE("round trip through the iteration oracle") {
    auto coeffs = rats({2, -1, 5});
    auto seq = iterate_custom(Family::padovan, coeffs, 1, 9);
    std::vector<Observation> obs = {{4, seq[3]}, {7, seq[6]}, {9, seq[8]}};
    auto r = recover_d(obs);
    REQUIRE(r.status == RecoveryStatus::solved);
    CHECK(r.coefficients == coeffs);
}

TEST_CASE("input validation") {
    std::vector<Observation> dup = {ob(6, 18), ob(6, 18)};
    CHECK_THROWS_AS(recover_f(dup), invalid_input_error);
    std::vector<Observation> dup3 = {ob(6, 18), ob(6, 18), ob(7, 29)};
    CHECK_THROWS_AS(recover_e(dup3), invalid_input_error);
    std::vector<Observation> two = {ob(6, 18), ob(7, 29)};
    CHECK_THROWS_AS(recover_e(two), invalid_input_error);
    CHECK_THROWS_AS(recover_f(std::vector<Observation>{ob(6, 18)}), invalid_input_error);
}

TEST_CASE("randomized round trips recover coefficients exactly") {
    std::mt19937_64 rng(0xFEED);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<long long> idx(-20, 25);

    auto random_coeffs = [&](int k, int round) {
        std::vector<Rat> coeffs;
        for (int c = 0; c < k; ++c)
            coeffs.push_back(round % 4 == 0 ? make_rat(num(rng), den(rng)) : make_rat(num(rng)));
        return coeffs;
    };

    SUBCASE("order two never goes singular") {
        for (int round = 0; round < 200; ++round) {
            auto coeffs = random_coeffs(2, round);
            long long i1 = idx(rng), i2 = idx(rng);
            if (i1 == i2) continue;
            std::vector<Observation> obs = {
                {i1, shifted_term(Family::fibonacci, coeffs, i1)},
                {i2, shifted_term(Family::fibonacci, coeffs, i2)}};
            auto r = recover_f(obs);
            REQUIRE(r.status == RecoveryStatus::solved);
            CHECK(r.coefficients == coeffs);
        }
    }

    SUBCASE("order three: solved or singular exactly as the closed form says") {
        for (Family fam : {Family::narayana, Family::padovan}) {
            DeltaFamily dfam =
                fam == Family::narayana ? DeltaFamily::narayana : DeltaFamily::padovan;
            int solved = 0, singular = 0;
            for (int round = 0; round < 200; ++round) {
                auto coeffs = random_coeffs(3, round);
                long long i1 = idx(rng), i2 = idx(rng), i3 = idx(rng);
                if (i1 == i2 || i2 == i3 || i1 == i3) continue;
                std::vector<Observation> obs = {{i1, shifted_term(fam, coeffs, i1)},
                                                {i2, shifted_term(fam, coeffs, i2)},
                                                {i3, shifted_term(fam, coeffs, i3)}};
                auto r = fam == Family::narayana ? recover_e(obs) : recover_d(obs);
                std::vector<long long> sorted = {i1, i2, i3};
                std::sort(sorted.begin(), sorted.end());
                Int closed =
                    delta_closed_form(dfam, sorted[1] - sorted[0], sorted[2] - sorted[1]);
                if (r.status == RecoveryStatus::solved) {
                    ++solved;
                    CHECK(closed != 0);
                    CHECK(r.coefficients == coeffs);
                } else {
                    ++singular;
                    CHECK(closed == 0);
                    CHECK(!r.dependency_note.empty());
                }
            }
            CHECK(solved + singular > 150);  // the generator must mostly produce usable triples
            CHECK(solved > 100);
        }
    }

    SUBCASE("every singular key is reported singular, consistently with the closed form") {
        const std::pair<long long, long long> e_keys[] = {{2, 1}, {5, 2}, {5, 3}, {7, 1}};
        for (auto [i, j] : e_keys) {
            for (long long t : {-6LL, 1LL, 9LL}) {
                auto coeffs = random_coeffs(3, 1);
                std::vector<Observation> obs = {
                    {t, shifted_term(Family::narayana, coeffs, t)},
                    {t + i, shifted_term(Family::narayana, coeffs, t + i)},
                    {t + i + j, shifted_term(Family::narayana, coeffs, t + i + j)}};
                auto r = recover_e(obs);
                CHECK(r.status == RecoveryStatus::singular);
                CHECK(r.denominator == 0);
            }
        }
        const std::pair<long long, long long> d_keys[] = {{1, 2}, {4, 1}, {4, 3}, {5, 2}};
        for (auto [i, j] : d_keys) {
            auto coeffs = random_coeffs(3, 2);
            std::vector<Observation> obs = {
                {3, shifted_term(Family::padovan, coeffs, 3)},
                {3 + i, shifted_term(Family::padovan, coeffs, 3 + i)},
                {3 + i + j, shifted_term(Family::padovan, coeffs, 3 + i + j)}};
            auto r = recover_d(obs);
            CHECK(r.status == RecoveryStatus::singular);
        }
    }
}

TEST_CASE("shift detection") {
    CHECK(detect_shift(Family::fibonacci, rats({1, 1}), 50) == 1);
    CHECK(detect_shift(Family::narayana, rats({2, 3, 4}), 50) == 4);
    CHECK(detect_shift(Family::fibonacci, rats({1, 3}), 50) == std::nullopt);
    CHECK(detect_shift(Family::padovan, rats({1, 0, 0}), 50) == 0);
    CHECK_THROWS_AS(detect_shift(Family::narayana, rats({1, 2}), 10), invalid_spec_error);
}
