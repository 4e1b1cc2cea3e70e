#include <doctest.h>

#include <algorithm>

#include "etaq/catalog.hpp"
#include "etaq/congruence.hpp"
#include "etaq/dissect.hpp"
#include "etaq/errors.hpp"
#include "helpers.hpp"

using namespace etaq;
using etaq::testing::coeffs_from;

TEST_CASE("builtin series catalog") {
    CHECK(coeffs_from(builtin_series("CP3", 6), 0, 6) ==
          std::vector<long>{1, 2, 7, 8, 23, 24});
    CHECK(coeffs_from(builtin_series("DQ", 3), 0, 3) ==
          std::vector<long>{1, -2, -3});
    CHECK(builtin_series("P", 10).coeff(9) == 30);
    // CORE<t> family
    CHECK(builtin_series("CORE3", 5) == builtin_series("CORE3", 5));
    CHECK(SeriesCatalog::spec_for("CORE7") ==
          EtaQuotientSpec{{7, 7}, {1, -1}});
    CHECK_THROWS_AS(builtin_series("NOPE", 5), UnknownSeriesError);
    CHECK_THROWS_AS(builtin_series("CORE0", 5), UnknownSeriesError);
}

TEST_CASE("CP3 is the square of C3") {
    LaurentSeries c3 = builtin_series("C3", 60);
    LaurentSeries cp3 = builtin_series("CP3", 60);
    CHECK(equal_up_to(mul(c3, c3), cp3, 60));
}

TEST_CASE("reducing a vanishing progression mod its modulus gives zero") {
    LaurentSeries cp3 = builtin_series("CP3", 400);
    CHECK(reduce_mod(extract(cp3, 8, 3), 8).is_zero());
    // a scalar multiple dies mod its own factor
    LaurentSeries seven =
        eta_quotient({{3, 12}, {1, -4}}, 40).scaled(7);
    CHECK(reduce_mod(seven, 7).is_zero());
}

TEST_CASE("catalog cache grows monotonically") {
    SeriesCatalog catalog;
    LaurentSeries small = catalog.get("CP3", 15);
    LaurentSeries big = catalog.get("CP3", 40);
    CHECK(small.order() == 15);
    CHECK(big.truncated(15) == small);
    CHECK(catalog.get("CP3", 20).order() == 20);
    CHECK(catalog.coeff("CP3", 7) == 48);
}

TEST_CASE("ramanujan congruences") {
    LaurentSeries p = builtin_series("P", 500);
    CHECK(check_vanishing(p, 5, 4, 5).passed());
    CHECK(check_vanishing(p, 7, 5, 7).passed());
    CHECK(check_vanishing(p, 11, 6, 11).passed());
}

TEST_CASE("vanishing congruences for CP3 hold and sharpen no further") {
    LaurentSeries cp3 = builtin_series("CP3", 700);

    auto mod8 = check_vanishing(cp3, 8, 3, 8);
    CHECK(mod8.passed());
    CHECK(mod8.checked == 88); // n with 8n+3 < 700

    auto mod16 = check_vanishing(cp3, 8, 3, 16);
    REQUIRE(mod16.witness.has_value());
    CHECK(mod16.witness->n == 0);
    CHECK(mod16.witness->lhs == 8); // CP3(3) = 8

    CHECK(check_vanishing(cp3, 24, 13, 4).passed());
    auto mod8_13 = check_vanishing(cp3, 24, 13, 8);
    REQUIRE(mod8_13.witness.has_value());
    CHECK(mod8_13.witness->n == 0);
    CHECK(mod8_13.witness->lhs == 228); // CP3(13)

    CHECK_THROWS_AS(check_vanishing(cp3, 8, 9, 8), ResidueOutOfRangeError);
    CHECK_THROWS_AS(
        check_vanishing(builtin_series("CP3", 50), 24, 13, Int(4)),
        InsufficientOrderError);
}

TEST_CASE("internal congruences (corollary 3.4)") {
    LaurentSeries cp3 = builtin_series("CP3", 700);
    // k = 1, includes the n = 0 edge CP3(1) == CP3(-1) = 0 (mod 2)
    auto k1 = check_internal(cp3, 3, 1, cp3, 1, -1, 2);
    CHECK(k1.passed());
    CHECK(k1.checked == 233);
    // k = 2
    CHECK(check_internal(cp3, 9, 7, cp3, 1, -1, 2).passed());
    // sabotaged modulus fails fast: CP3(3n+1) is even but CP3(n-1) is not
    auto bad = check_internal(cp3, 3, 1, cp3, 1, -1, 4);
    CHECK(!bad.passed());
}

TEST_CASE("thm39 chain at moderate order") {
    auto checks = verify_thm39_chain(2, 700, builtin_catalog());
    CHECK(checks.size() == 3 + 3 * 2);
    for (const auto& chk : checks) {
        INFO(chk.label);
        CHECK(chk.passed());
    }
}

TEST_CASE("closed form coefficient") {
    CHECK(thm39_closed_form_coefficient(1) == 2);
    CHECK(thm39_closed_form_coefficient(2) == 48);
    CHECK(thm39_closed_form_coefficient(3) == 1314);
    CHECK(thm39_closed_form_coefficient(4) == 35424);
    // 9^k - (-1)^k stays divisible by 5
    for (long k = 1; k <= 10; ++k)
        CHECK_NOTHROW(thm39_closed_form_coefficient(k));
}

TEST_CASE("scanner") {
    LaurentSeries p = builtin_series("P", 500);
    auto hits = scan_congruences(p, 5, {Int(5)});
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].step == 5);
    CHECK(hits[0].offset == 4);
    CHECK(hits[0].modulus == 5);

    LaurentSeries cp3 = builtin_series("CP3", 700);
    auto cp_hits = scan_congruences(cp3, 8, {Int(2), Int(4), Int(8), Int(16)});
    auto find = [&](long a, long b) {
        std::vector<Int> ms;
        for (const auto& h : cp_hits)
            if (h.step == a && h.offset == b)
                ms.push_back(h.modulus);
        return ms;
    };
    // thm 3.2 congruences, collapsed to the maximal verified modulus
    CHECK(find(8, 3) == std::vector<Int>{8});
    CHECK(find(8, 7) == std::vector<Int>{16});

    CHECK_THROWS_AS(
        scan_congruences(builtin_series("CP3", 100), 8, {Int(2)}),
        InsufficientOrderError);
}
