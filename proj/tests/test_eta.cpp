#include <doctest.h>

#include <random>

#include "etaq/errors.hpp"
#include "etaq/eta.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace etaq;
using etaq::testing::coeffs_from;

TEST_CASE("euler_factor matches the pentagonal expansion") {
    CHECK(coeffs_from(euler_factor(1, 13), 0, 13) ==
          std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1});
    CHECK(coeffs_from(euler_factor(2, 13), 0, 13) ==
          std::vector<long>{1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0});

    // scale law: f_m(q) = f_1(q^m)
    for (long m : {2L, 3L, 5L, 8L}) {
        long order = 60;
        LaurentSeries lhs = euler_factor(m, order);
        LaurentSeries rhs =
            substitute_qk(euler_factor(1, (order + m - 1) / m), m)
                .truncated(order);
        CHECK(lhs.truncated(rhs.order()) == rhs.truncated(lhs.order()));
    }
}

TEST_CASE("naive oracle edge cases") {
    CHECK(naive_euler_oracle(1, 2) == etaq::testing::make(0, {1, -1}));
    CHECK(naive_euler_oracle(6, 6) == LaurentSeries::one(6));
}

TEST_CASE("pentagonal path equals the literal product") {
    for (long m = 1; m <= 24; ++m)
        CHECK(euler_factor(m, 150) == naive_euler_oracle(m, 150));
}

TEST_CASE("eta_quotient examples") {
    // 1/f1: partition numbers
    CHECK(coeffs_from(eta_quotient({{1, -1}}, 10), 0, 10) ==
          std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30});

    // CP3 generating function
    CHECK(coeffs_from(eta_quotient({{3, 6}, {6, 6}, {1, -2}, {2, -2}}, 6), 0,
                      6) == std::vector<long>{1, 2, 7, 8, 23, 24});

    // 3-core counts
    CHECK(coeffs_from(eta_quotient({{3, 3}, {1, -1}}, 5), 0, 5) ==
          std::vector<long>{1, 1, 2, 0, 2});
}

TEST_CASE("eta_quotient matches enumeration") {
    LaurentSeries p = eta_quotient({{1, -1}}, 26);
    for (long n = 0; n <= 25; ++n)
        CHECK(p.coeff(n) == oracles::count_partitions(n));

    LaurentSeries a = eta_quotient({{1, -1}, {2, -1}}, 19);
    for (long n = 0; n <= 18; ++n)
        CHECK(a.coeff(n) == oracles::count_cubic_partitions(n));

    LaurentSeries c3 = eta_quotient({{3, 3}, {1, -1}}, 21);
    for (long n = 0; n <= 20; ++n)
        CHECK(c3.coeff(n) == oracles::count_3core_partitions(n));
}

TEST_CASE("eta_quotient through the naive-product route") {
    // same quotient, euler factors replaced by the oracle expansion
    long order = 40;
    LaurentSeries fast = eta_quotient({{3, 6}, {6, 6}, {1, -2}, {2, -2}}, order);
    LaurentSeries slow =
        mul(mul(pow(naive_euler_oracle(3, order), 6),
                pow(naive_euler_oracle(6, order), 6)),
            invert(mul(pow(naive_euler_oracle(1, order), 2),
                       pow(naive_euler_oracle(2, order), 2))));
    CHECK(equal_up_to(fast, slow, order));
}

TEST_CASE("spec merging") {
    EtaQuotientSpec merged{{1, 1}, {1, 1}};
    EtaQuotientSpec direct{{1, 2}};
    CHECK(merged == direct);
    CHECK(eta_quotient(merged, 20) == eta_quotient(direct, 20));

    EtaQuotientSpec cancel{{2, 3}, {2, -3}};
    CHECK(cancel.factors().empty());
    CHECK(eta_quotient(cancel, 8) == LaurentSeries::one(8));
}

TEST_CASE("every quotient starts at 1") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> scale(1, 12), expo(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::pair<long, long>> factors;
        for (int i = 0; i < 4; ++i)
            factors.emplace_back(scale(rng), expo(rng));
        LaurentSeries s = eta_quotient(EtaQuotientSpec(factors), 30);
        CHECK(s.valuation() == 0);
        CHECK(s.coeff(0) == 1);
        CHECK(s.order() == 30);
    }
}
