#include "recurlab/exact_linalg.hpp"

#include <utility>

namespace recurlab {

long exact_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    Int prev(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) std::swap(m[pivot], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                // Bareiss step: exact division, entries stay integral minors
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<long>(r);
}

std::optional<std::vector<Int>> left_null_vector(const std::vector<std::vector<Int>>& m) {
    const size_t rows = m.size();
    if (rows == 0) return std::nullopt;
    const size_t cols = m[0].size();

    // Row-reduce [m | I] over the rationals; a zero row of the reduced m
    // exposes its combination of original rows in the identity block.
    std::vector<std::vector<Rat>> aug(rows, std::vector<Rat>(cols + rows));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = Rat(m[i][j]);
        aug[i][cols + i] = 1;
    }
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && aug[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(aug[pivot], aug[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rat factor = aug[i][c] / aug[r][c];
            for (size_t j = 0; j < cols + rows; ++j) aug[i][j] -= factor * aug[r][j];
        }
        ++r;
    }
    for (size_t i = r; i < rows; ++i) {
        bool zero_row = true;
        for (size_t j = 0; j < cols; ++j) {
            if (aug[i][j] != 0) {
                zero_row = false;
                break;
            }
        }
        if (!zero_row) continue;
        std::vector<Rat> combo(aug[i].begin() + static_cast<long>(cols), aug[i].end());
        // Clear denominators, divide by the gcd, normalize the leading sign.
        Int lcm(1);
        for (const Rat& q : combo) {
            Int den = q.get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        std::vector<Int> out;
        out.reserve(combo.size());
        Int g(0);
        for (const Rat& q : combo) {
            Int v = Int(q.get_num() * (lcm / q.get_den()));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            out.push_back(std::move(v));
        }
        if (g != 0) {
            for (Int& v : out) v /= g;
        }
        for (const Int& v : out) {
            if (v == 0) continue;
            if (v < 0) {
                for (Int& w : out) w = -w;
            }
            break;
        }
        return out;
    }
    return std::nullopt;
}

}  // namespace recurlab
