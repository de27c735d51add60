// Benchmark comparing the serial reference kernels against the OpenMP
// variants on the heavy verification sweeps.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mubforge/kernels.hpp"

using namespace mubforge;
using Clock = std::chrono::steady_clock;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   results %s\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms, agree ? "identical" : "DIVERGED");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel variant runs serially\n\n");
#endif

    {
        auto bases = mub::complete_set_prime(31);
        kernels::mub_pair_scan(bases, kernels::Exec::Serial);  // warm up
        kernels::MubScanResult rs, rp;
        double ts = time_ms([&] { rs = kernels::mub_pair_scan(bases, kernels::Exec::Serial); });
        double tp = time_ms([&] { rp = kernels::mub_pair_scan(bases, kernels::Exec::Parallel); });
        report("mub-pair-scan (p=31)", ts, tp, rs == rp);
    }
    {
        kernels::gauss_triple_sweep(12, 25, kernels::Exec::Serial);
        kernels::GaussSweepResult rs, rp;
        double ts = time_ms([&] { rs = kernels::gauss_triple_sweep(12, 25, kernels::Exec::Serial); });
        double tp = time_ms([&] { rp = kernels::gauss_triple_sweep(12, 25, kernels::Exec::Parallel); });
        report("gauss-triple-sweep (12,25)", ts, tp, rs == rp);
    }
    {
        kernels::structure_constant_scan(12, kernels::Exec::Serial);
        kernels::StructureScanResult rs, rp;
        double ts = time_ms([&] { rs = kernels::structure_constant_scan(12, kernels::Exec::Serial); });
        double tp = time_ms([&] { rp = kernels::structure_constant_scan(12, kernels::Exec::Parallel); });
        report("structure-scan (d=12)", ts, tp, rs == rp);
    }
    {
        kernels::class_table(8, kernels::Exec::Serial);
        pauli_group::ClassTable rs, rp;
        double ts = time_ms([&] { rs = kernels::class_table(8, kernels::Exec::Serial); });
        double tp = time_ms([&] { rp = kernels::class_table(8, kernels::Exec::Parallel); });
        report("class-table (d=8)", ts, tp, rs.classes == rp.classes);
    }
    return 0;
}
