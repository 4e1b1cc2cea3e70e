#include <doctest.h>

#include <random>

#include "etaq/catalog.hpp"
#include "etaq/dissect.hpp"
#include "etaq/errors.hpp"
#include "etaq/eta.hpp"
#include "etaq/parser.hpp"
#include "etaq/verify.hpp"
#include "helpers.hpp"

using namespace etaq;
using etaq::testing::coeffs_from;
using etaq::testing::make;
using etaq::testing::random_series;

TEST_CASE("extract basics") {
    LaurentSeries s = make(0, {10, 11, 12, 13, 14, 15, 16});
    CHECK(extract(s, 1, 0) == s);
    CHECK(extract(s, 3, 1) == make(0, {11, 14}));
    // order bookkeeping: floor((7 - 2 + 2)/3) = 2... then 16 at 3*2+2=8 is out
    CHECK(extract(s, 3, 2).order() == 2);

    CHECK_THROWS_AS(extract(s, 3, 3), ResidueOutOfRangeError);
    CHECK_THROWS_AS(extract(s, 3, -1), ResidueOutOfRangeError);
    CHECK_THROWS_AS(extract(make(-1, {1, 1}), 2, 0), NegativeValuationError);
}

TEST_CASE("dissection slices materialize with the promised order") {
    LaurentSeries cp3 = builtin_series("CP3", 50);
    for (long k : {2L, 3L, 5L}) {
        for (long r = 0; r < k; ++r) {
            DissectionSlice slice{cp3, k, r};
            LaurentSeries m = slice.materialize();
            CHECK(m.order() == slice.materialized_order());
            for (long n = 0; n < m.order(); ++n)
                CHECK(m.coeff(n) == cp3.coeff(k * n + r));
        }
    }
}

TEST_CASE("extract on CP3 slices") {
    LaurentSeries cp3 = builtin_series("CP3", 80);
    LaurentSeries odd = extract(cp3, 2, 1);
    CHECK(odd.coeff(0) == 2);
    CHECK(odd.coeff(1) == 8);
    // the closed form of the odd slice
    LaurentSeries rhs =
        eta_quotient({{2, 2}, {3, 8}, {6, 2}, {1, -4}}, odd.order()).scaled(2);
    CHECK(equal_up_to(odd, rhs, odd.order()));

    CHECK(extract(cp3, 3, 2).coeff(0) == 7);
}

TEST_CASE("huff") {
    std::vector<Int> ones(12, 1);
    LaurentSeries geo(0, std::move(ones));
    LaurentSeries h = huff(geo, 3);
    for (long e = 0; e < h.order(); ++e)
        CHECK(h.coeff(e) == (e % 3 == 0 ? 1 : 0));

    // negative exponents participate
    LaurentSeries a = make(-4, {1, 2, 3, 4, 5, 6, 7, 8});
    LaurentSeries ha = huff(a, 3);
    CHECK(ha.coeff(-3) == 2);
    CHECK(ha.coeff(-4) == 0);
    CHECK(ha.coeff(0) == 5);
    CHECK(ha.coeff(3) == 8);
    CHECK(ha.order() == a.order());
}

TEST_CASE("huff equals subst of extract on power series") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        LaurentSeries s = random_series(rng, false);
        if (!s.is_zero() && s.valuation() < 0)
            s = s.shifted(-s.valuation());
        std::uniform_int_distribution<long> kd(1, 5);
        long k = kd(rng);
        LaurentSeries lhs = huff(s, k);
        LaurentSeries rhs = substitute_qk(extract(s, k, 0), k);
        long upto = std::min(lhs.order(), rhs.order());
        CHECK(equal_up_to(lhs, rhs, upto));
    }
}

TEST_CASE("extract is linear") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        LaurentSeries s = random_series(rng, false);
        LaurentSeries t = random_series(rng, false);
        if (!s.is_zero() && s.valuation() < 0)
            s = s.shifted(-s.valuation());
        if (!t.is_zero() && t.valuation() < 0)
            t = t.shifted(-t.valuation());
        std::uniform_int_distribution<long> kd(1, 4), cd(-5, 5);
        long k = kd(rng), r = std::uniform_int_distribution<long>(0, k - 1)(rng);
        Int alpha = cd(rng), beta = cd(rng);
        LaurentSeries lhs =
            extract(add(s.scaled(alpha), t.scaled(beta)), k, r);
        LaurentSeries rhs =
            add(extract(s, k, r).scaled(alpha), extract(t, k, r).scaled(beta));
        long upto = std::min(lhs.order(), rhs.order());
        CHECK(equal_up_to(lhs, rhs, upto));
    }
}

TEST_CASE("dissection reconstruction") {
    LaurentSeries cp3 = builtin_series("CP3", 120);
    for (long k : {2L, 3L, 4L, 6L}) {
        LaurentSeries sum = LaurentSeries::zero(cp3.order());
        for (long r = 0; r < k; ++r) {
            LaurentSeries piece =
                substitute_qk(extract(cp3, k, r), k).shifted(r);
            sum = add(sum, piece);
        }
        long upto = std::min(sum.order(), cp3.order());
        CHECK(equal_up_to(sum, cp3, upto));
    }
}

TEST_CASE("verify_identity and a sign sabotage") {
    EvalEnv env(builtin_catalog());
    ExprPtr lhs = parse_expr("f1^4");
    ExprPtr good = parse_expr("f4^10/(f2^2*f8^4) - 4*q*f2^2*f8^4/f4^2");
    ExprPtr bad = parse_expr("f4^10/(f2^2*f8^4) + 4*q*f2^2*f8^4/f4^2");

    ClaimResult ok = verify_identity("f1^4 2-dissection", lhs, good, 120, env);
    CHECK(ok.status == ClaimStatus::Pass);
    CHECK(ok.checked == 120);

    ClaimResult sab = verify_identity("sabotaged sign", lhs, bad, 120, env);
    CHECK(sab.status == ClaimStatus::Fail);
    REQUIRE(sab.witness.has_value());
    CHECK(sab.witness->index == 1);
    CHECK(sab.witness->lhs == -4);
    CHECK(sab.witness->rhs == 4);
}
