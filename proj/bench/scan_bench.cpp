// Walltime comparison of the serial reference loops against the OpenMP scan
// kernels. Not part of the test suite; build target `scan_bench`.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "recurlab/discrete.hpp"
#include "recurlab/identities.hpp"
#include "recurlab/parallel.hpp"
#include "recurlab/sequence.hpp"

using namespace recurlab;

namespace {

double time_ms(const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.2f ms   openmp %9.2f ms   speedup %.2fx\n", name.c_str(),
                serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    // Warm the shared term caches so both variants measure pure scan cost.
    for (Family f : {Family::fibonacci, Family::narayana, Family::padovan}) {
        term(f, -2500);
        term(f, 2500);
    }

    {
        auto serial = time_ms([] {
            for (const auto& id : equality_registry()) identity_scan(id.name, -600, 600, false);
        });
        auto parallel = time_ms([] {
            for (const auto& id : equality_registry()) identity_scan(id.name, -600, 600, true);
        });
        report("identity registry sweep", serial, parallel);
    }

    {
        auto serial = time_ms([] {
            par::collect_serial(-400, 400, [](long long n) {
                for (long long m = -50; m <= 50; ++m)
                    if (!vajda(n, m).holds) return true;
                return false;
            });
        });
        auto parallel = time_ms([] {
            par::collect(-400, 400, [](long long n) {
                for (long long m = -50; m <= 50; ++m)
                    if (!vajda(n, m).holds) return true;
                return false;
            });
        });
        report("vajda grid", serial, parallel);
    }

    {
        auto serial = time_ms([] { delta_zeros(DeltaFamily::narayana, 220, false); });
        auto parallel = time_ms([] { delta_zeros(DeltaFamily::narayana, 220, true); });
        report("delta zero box", serial, parallel);
    }

    {
        auto run = [](bool parallel) {
            par::for_each_index(
                1, 160, [](long long n) { kernel_oracle(CycleCase::hf_ff, n); }, parallel);
        };
        auto serial = time_ms([&] { run(false); });
        auto parallel = time_ms([&] { run(true); });
        report("kernel elimination sweep", serial, parallel);
    }

    return 0;
}
