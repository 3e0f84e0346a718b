// Compares the OpenMP kernels against their serial references on
// representative workloads and checks that both produce identical results.

#include <omp.h>

#include <cstdio>
#include <cstdlib>

#include "symp/kernels.hpp"
#include "symp/rng.hpp"

namespace {

using namespace symp;

// Dense matrix with ~bits-bit signed entries.
IntMatrix random_matrix(std::size_t n, int words, Rng& rng) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Integer v = 0;
            for (int w = 0; w < words; ++w) {
                v <<= 64;
                v += rng.next();
            }
            if (rng.uniform(0, 1)) v = -v;
            m(i, j) = v;
        }
    return m;
}

template <typename F>
double time_once(F&& f) {
    const double t0 = omp_get_wtime();
    f();
    return omp_get_wtime() - t0;
}

void row(const char* name, double serial, double parallel, bool match) {
    std::printf("%-34s %9.3fs %9.3fs %7.2fx  %s\n", name, serial, parallel,
                serial / (parallel > 0 ? parallel : 1e-9), match ? "ok" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "openmp", "speedup");

    Rng rng(42);
    bool all_ok = true;

    for (std::size_t n : {64, 128}) {
        IntMatrix a = random_matrix(n, 4, rng);
        IntMatrix b = random_matrix(n, 4, rng);
        IntMatrix cs, cp;
        double ts = time_once([&] { cs = kernels::matmul_serial(a, b); });
        double tp = time_once([&] { cp = kernels::matmul_omp(a, b); });
        bool ok = cs == cp;
        all_ok = all_ok && ok;
        char name[64];
        std::snprintf(name, sizeof name, "matmul %zux%zu (256-bit entries)", n, n);
        row(name, ts, tp, ok);
    }

    {
        IntMatrix a = random_matrix(11, 1, rng);
        Integer gs, gp;
        double ts = time_once([&] { gs = kernels::minor_gcd_serial(a, 5); });
        double tp = time_once([&] { gp = kernels::minor_gcd_omp(a, 5); });
        bool ok = gs == gp;
        all_ok = all_ok && ok;
        row("minor_gcd 11x11, k=5", ts, tp, ok);
    }
    {
        // Force a nontrivial common divisor so the gcd fold cannot stop early.
        Rng r2(7);
        IntMatrix a = random_matrix(10, 1, r2);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= 6;
        Integer gs, gp;
        double ts = time_once([&] { gs = kernels::minor_gcd_serial(a, 5); });
        double tp = time_once([&] { gp = kernels::minor_gcd_omp(a, 5); });
        bool ok = gs == gp;
        all_ok = all_ok && ok;
        row("minor_gcd 10x10 scaled, k=5", ts, tp, ok);
    }

    return all_ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
