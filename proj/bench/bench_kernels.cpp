// Compares the serial reference kernels against the OpenMP ones on the
// workloads that dominate real runs: dense big-integer multiplication and
// claim-suite fan-out.
#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "etaq/catalog.hpp"
#include "etaq/eta.hpp"
#include "etaq/parser.hpp"
#include "etaq/verify.hpp"

using namespace etaq;

namespace {

using Clock = std::chrono::steady_clock;

double time_once(auto&& fn) {
    auto start = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

double best_of(int reps, auto&& fn) {
    double best = time_once(fn);
    for (int i = 1; i < reps; ++i)
        best = std::min(best, time_once(fn));
    return best;
}

// partition-sized coefficients make the integer work realistic
LaurentSeries dense_series(long order, unsigned seed) {
    LaurentSeries base = invert(euler_factor(1, order));
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Int> co(base.coeffs().begin(), base.coeffs().end());
    for (auto& c : co)
        if (sign(rng))
            c = -c;
    return LaurentSeries(0, std::move(co));
}

const char* kCorpus = R"(
identity "d1": f1^2 == f2*f8^5/(f4^2*f16^2) - 2*q*f2*f16^2/f8
identity "d2": f1^4 == f4^10/(f2^2*f8^4) - 4*q*f2^2*f8^4/f4^2
identity "d3": f3^3/f1 == f4^3*f6^2/(f2^2*f12) + q*f12^3/f4
identity "d4": f2/f1^2 == f6^4*f9^6/(f3^8*f18^3) + 2*q*f6^3*f9^3/f3^7 + 4*q^2*f6^2*f18^3/f3^6
identity "d5": extract(CP3, 2, 1) == 2*f2^2*f3^8*f6^2/f1^4
identity "d6": extract(CP3, 3, 1) == 2*DQ + 27*q*CP3
congruence "c1": P[5*n+4] == 0 mod 5
congruence "c2": CP3[8*n+3] == 0 mod 8
)";

} // namespace

int main() {
    printf("threads available: %d\n\n", omp_get_max_threads());

    printf("dense mul, serial vs OpenMP (best of 3, ms)\n");
    printf("%8s %12s %12s %9s\n", "order", "serial", "parallel", "speedup");
    for (long order : {256L, 512L, 1024L, 2048L}) {
        LaurentSeries a = dense_series(order, 1);
        LaurentSeries b = dense_series(order, 2);
        LaurentSeries rs, rp;
        double ts = best_of(3, [&] { rs = mul_serial(a, b); });
        double tp = best_of(3, [&] { rp = mul_parallel(a, b); });
        if (!(rs == rp)) {
            printf("kernel mismatch at order %ld\n", order);
            return 1;
        }
        printf("%8ld %12.2f %12.2f %8.2fx\n", order, ts, tp, ts / tp);
    }

    printf("\nCP3 expansion (fresh catalog each time, ms)\n");
    printf("%8s %12s %12s %9s\n", "order", "serial", "parallel", "speedup");
    for (long order : {1000L, 2000L}) {
        int prior = omp_get_max_threads();
        double ts = time_once([&] {
            omp_set_num_threads(1);
            SeriesCatalog catalog;
            catalog.get("CP3", order);
        });
        omp_set_num_threads(prior);
        double tp = time_once([&] {
            SeriesCatalog catalog;
            catalog.get("CP3", order);
        });
        printf("%8ld %12.2f %12.2f %8.2fx\n", order, ts, tp, ts / tp);
    }

    printf("\nclaim suite at order 400 (ms)\n");
    ClaimFile file = parse_claim_file(kCorpus);
    RunOptions serial_opts;
    serial_opts.forced_order = 400;
    serial_opts.parallel = false;
    RunOptions parallel_opts = serial_opts;
    parallel_opts.parallel = true;
    double ts = time_once([&] {
        SeriesCatalog catalog;
        run(file, catalog, serial_opts);
    });
    double tp = time_once([&] {
        SeriesCatalog catalog;
        run(file, catalog, parallel_opts);
    });
    printf("%8s %12.2f %12.2f %8.2fx\n", "corpus", ts, tp, ts / tp);
    return 0;
}
