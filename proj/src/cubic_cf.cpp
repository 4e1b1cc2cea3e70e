#include "etaq/cubic_cf.hpp"

#include <algorithm>

#include "etaq/dissect.hpp"
#include "etaq/errors.hpp"
#include "etaq/eta.hpp"

namespace etaq {

namespace {

LaurentSeries q_pow(long j, long order) {
    return LaurentSeries::monomial(j, order);
}

LaurentSeries scaled(long c, const LaurentSeries& s) {
    return s.scaled(Int(c));
}

// x(q^3) trusted to at least `order`
LaurentSeries x_of_q3(long order) {
    long xo = order / 3 + 2;
    return substitute_qk(cubic_cf_series(xo).x, 3).truncated(3 * xo);
}

IdentityCheck run_check(const std::string& label, const LaurentSeries& lhs,
                        const LaurentSeries& rhs, long order) {
    IdentityCheck chk;
    chk.label = label;
    long n = std::min({lhs.order(), rhs.order(), order});
    long lo = std::min(lhs.is_zero() ? n : lhs.valuation(),
                       rhs.is_zero() ? n : rhs.valuation());
    chk.checked = std::max(n - lo, 0L);
    chk.mismatch = first_mismatch(lhs, rhs, n);
    return chk;
}

} // namespace

LaurentSeries cubic_cf_series_at_depth(long order, long depth) {
    if (order < 1)
        throw Error("cubic_cf_series requires order >= 1");
    LaurentSeries t = LaurentSeries::one(order);
    for (long j = depth; j >= 1; --j) {
        LaurentSeries numer = add(q_pow(j, order), q_pow(2 * j, order));
        t = add(LaurentSeries::one(order), mul(numer, invert(t)));
    }
    return invert(t);
}

CubicCfSeries cubic_cf_series(long order) {
    long depth = order + 2;
    LaurentSeries x = cubic_cf_series_at_depth(order, depth);
    LaurentSeries again = cubic_cf_series_at_depth(order, depth + 1);
    if (auto w = first_mismatch(x, again, order))
        throw Error("cubic continued fraction depth " + std::to_string(depth) +
                    " is not stable at exponent " + std::to_string(w->exponent));
    return {std::move(x), depth};
}

Thm39Triple build_thm39_triple(long order) {
    if (order < 1)
        throw Error("build_thm39_triple requires order >= 1");
    const long pad = 14; // a^4 and c^2 below eat into Laurent orders
    const long n = order + pad;

    LaurentSeries a =
        eta_quotient({{1, 1}, {2, 1}, {9, -1}, {18, -1}}, n + 1).shifted(-1);
    LaurentSeries b = invert(x_of_q3(n + 1).truncated(n + 1)).shifted(-1);
    LaurentSeries c =
        eta_quotient({{3, 4}, {6, 4}, {9, -4}, {18, -4}}, n + 3).shifted(-3);

    LaurentSeries one = LaurentSeries::one(n);
    LaurentSeries b3 = pow(b, 3);
    LaurentSeries b3i = pow(b, -3);

    auto must_hold = [&](const char* what, const LaurentSeries& lhs,
                         const LaurentSeries& rhs) {
        long upto = std::min({lhs.order(), rhs.order(), order});
        if (auto w = first_mismatch(lhs, rhs, upto))
            throw Error(std::string(what) + " breaks at exponent " +
                        std::to_string(w->exponent) + ": " + w->lhs.get_str() +
                        " vs " + w->rhs.get_str());
    };

    must_hold("a = b - 1 - 2/b", a,
              sub(sub(b, one), scaled(2, invert(b))));
    must_hold("c = b^3 - 7 - 8/b^3", c,
              sub(sub(b3, LaurentSeries::constant(7, n)), scaled(8, b3i)));
    must_hold("c = a^3 + 3a^2 + 9a", c,
              add(add(pow(a, 3), scaled(3, pow(a, 2))), scaled(9, a)));
    LaurentSeries poly = add(
        add(add(add(pow(a, 4), scaled(6, pow(a, 3))), scaled(27, pow(a, 2))),
            scaled(54, a)),
        LaurentSeries::constant(81, n));
    must_hold("1/a^2 = (a^4+6a^3+27a^2+54a+81)/c^2", pow(a, -2),
              mul(pow(c, -2), poly));

    return {a.truncated(order), b.truncated(order), c.truncated(order), order};
}

std::vector<IdentityCheck> verify_cubic_cf_lemma(long order) {
    std::vector<IdentityCheck> out;
    LaurentSeries x3 = x_of_q3(order + 7);
    LaurentSeries x3inv = invert(x3);

    LaurentSeries lhs10 = eta_quotient({{1, 1}, {2, 1}, {9, -1}, {18, -1}}, order);
    LaurentSeries rhs10 = sub(sub(x3inv, q_pow(1, order)),
                              scaled(2, mul(q_pow(2, order), x3)));
    out.push_back(run_check("f1f2/(f9f18) = 1/x(q^3) - q - 2q^2 x(q^3)",
                            lhs10, rhs10, order));

    LaurentSeries lhs11 =
        eta_quotient({{3, 4}, {6, 4}, {9, -4}, {18, -4}}, order);
    LaurentSeries rhs11 =
        sub(sub(pow(x3inv, 3), scaled(7, q_pow(3, order))),
            scaled(8, mul(q_pow(6, order), pow(x3, 3))));
    out.push_back(run_check(
        "f3^4f6^4/(f9^4f18^4) = 1/x(q^3)^3 - 7q^3 - 8q^6 x(q^3)^3",
        lhs11, rhs11, order));
    return out;
}

std::vector<IdentityCheck> verify_h3_images(long order) {
    const long pad = 10;
    Thm39Triple t = build_thm39_triple(order + pad);
    const long n = t.order;
    LaurentSeries one = LaurentSeries::one(n);
    LaurentSeries b3 = pow(t.b, 3);
    LaurentSeries b3i = pow(t.b, -3);
    LaurentSeries ci = invert(t.c);
    LaurentSeries c2i = pow(t.c, -2);

    std::vector<IdentityCheck> out;
    out.push_back(run_check("H3(1) = 1", huff(one, 3), one, order));
    out.push_back(run_check("H3(a) = -1", huff(t.a, 3),
                            LaurentSeries::constant(-1, n), order));
    out.push_back(run_check("H3(a^2) = -3", huff(pow(t.a, 2), 3),
                            LaurentSeries::constant(-3, n), order));
    out.push_back(run_check(
        "H3(a^3) = -8/b^3 + 11 + b^3", huff(pow(t.a, 3), 3),
        add(add(scaled(-8, b3i), LaurentSeries::constant(11, n)), b3), order));
    out.push_back(run_check(
        "H3(a^4) = 32/b^3 + 1 - 4b^3", huff(pow(t.a, 4), 3),
        add(add(scaled(32, b3i), one), scaled(-4, b3)), order));
    out.push_back(run_check("H3(1/a^2) = 2/c + 27/c^2",
                            huff(pow(t.a, -2), 3),
                            add(scaled(2, ci), scaled(27, c2i)), order));
    return out;
}

} // namespace etaq
