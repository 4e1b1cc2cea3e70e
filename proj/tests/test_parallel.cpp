#include <doctest.h>

#include <omp.h>
#include <random>

#include "etaq/catalog.hpp"
#include "etaq/eta.hpp"
#include "etaq/parser.hpp"
#include "etaq/verify.hpp"
#include "helpers.hpp"

using namespace etaq;

TEST_CASE("parallel kernel is coefficient-identical to the serial one") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> val(-5, 5), len(1, 400),
        coeff(-50, 50);
    std::bernoulli_distribution sparse(0.3);
    for (int trial = 0; trial < 40; ++trial) {
        auto gen = [&] {
            long n = len(rng);
            std::vector<Int> co(static_cast<std::size_t>(n));
            for (auto& c : co)
                if (!sparse(rng))
                    c = coeff(rng);
            co[0] = 1; // keep the valuation where we put it
            return LaurentSeries(val(rng), std::move(co));
        };
        LaurentSeries a = gen(), b = gen();
        CHECK(mul_serial(a, b) == mul_parallel(a, b));
    }
}

TEST_CASE("kernels agree on the workloads that matter") {
    // dense, partition-sized coefficients, straddling the dispatch cutoff
    for (long order : {64L, 300L, 700L}) {
        LaurentSeries p = invert(euler_factor(1, order));
        LaurentSeries a = invert(euler_factor(2, order));
        CHECK(mul_serial(p, a) == mul_parallel(p, a));
        CHECK(mul(p, a) == mul_serial(p, a));
    }
}

TEST_CASE("parallel and serial suite runs agree") {
    const char* text =
        "identity \"good\": f3^3/f1 == f4^3*f6^2/(f2^2*f12) + q*f12^3/f4\n"
        "identity \"bad\": f1 == f2\n"
        "congruence \"p5\": P[5*n+4] == 0 mod 5\n"
        "congruence \"mod8\": CP3[8*n+3] == 0 mod 8\n"
        "internal \"int2\": CP3[3*n+1] == CP3[1*n-1] mod 2\n";
    ClaimFile file = parse_claim_file(text);
    RunOptions serial_opts;
    serial_opts.forced_order = 150;
    serial_opts.parallel = false;
    RunOptions parallel_opts = serial_opts;
    parallel_opts.parallel = true;

    Report rs = run(file, builtin_catalog(), serial_opts);
    Report rp = run(file, builtin_catalog(), parallel_opts);
    REQUIRE(rs.claims.size() == rp.claims.size());
    CHECK(rs.passed == rp.passed);
    for (std::size_t i = 0; i < rs.claims.size(); ++i) {
        CHECK(rs.claims[i].label == rp.claims[i].label);
        CHECK(rs.claims[i].status == rp.claims[i].status);
        CHECK(rs.claims[i].checked == rp.claims[i].checked);
        CHECK(rs.claims[i].witness.has_value() ==
              rp.claims[i].witness.has_value());
        if (rs.claims[i].witness)
            CHECK(rs.claims[i].witness->index == rp.claims[i].witness->index);
    }
}

TEST_CASE("catalog cache is safe under concurrent readers") {
    SeriesCatalog catalog;
    bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
    for (int i = 0; i < 32; ++i) {
        long order = 40 + (i * 13) % 80;
        LaurentSeries s = catalog.get("CP3", order);
        ok = ok && s.order() == order && s.coeff(1) == 2 && s.coeff(3) == 8;
    }
    CHECK(ok);
}
