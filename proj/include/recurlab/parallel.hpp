#pragma once

#include <cstddef>
#include <vector>

namespace recurlab::par {

/// Evaluate `keep` on every index of [lo, hi] and return, in ascending order,
/// the indices where it is true. The OpenMP kernel fills a flag array and a
/// serial pass gathers it, so the result is deterministic and identical to
/// the serial reference.
template <class Pred>
std::vector<long long> collect(long long lo, long long hi, Pred&& keep, bool parallel = true) {
    std::vector<long long> out;
    if (lo > hi) return out;
    const long long count = hi - lo + 1;
    if (!parallel || count < 32) {
        for (long long n = lo; n <= hi; ++n)
            if (keep(n)) out.push_back(n);
        return out;
    }
    std::vector<unsigned char> flags(static_cast<size_t>(count), 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (long long idx = 0; idx < count; ++idx) {
        flags[static_cast<size_t>(idx)] = keep(lo + idx) ? 1 : 0;
    }
    for (long long idx = 0; idx < count; ++idx)
        if (flags[static_cast<size_t>(idx)]) out.push_back(lo + idx);
    return out;
}

/// Serial reference for `collect`; kept for testing and benchmarking.
template <class Pred>
std::vector<long long> collect_serial(long long lo, long long hi, Pred&& keep) {
    std::vector<long long> out;
    for (long long n = lo; n <= hi; ++n)
        if (keep(n)) out.push_back(n);
    return out;
}

/// Run `body(n)` for every n in [lo, hi], in parallel.
template <class Body>
void for_each_index(long long lo, long long hi, Body&& body, bool parallel = true) {
    if (lo > hi) return;
    const long long count = hi - lo + 1;
    if (!parallel || count < 8) {
        for (long long n = lo; n <= hi; ++n) body(n);
        return;
    }
#pragma omp parallel for schedule(dynamic, 1)
    for (long long idx = 0; idx < count; ++idx) body(lo + idx);
}

}  // namespace recurlab::par
