#include "etaq/eta.hpp"

#include <algorithm>

#include "etaq/errors.hpp"

namespace etaq {

EtaQuotientSpec::EtaQuotientSpec(
    std::initializer_list<std::pair<long, long>> factors) {
    for (auto [m, e] : factors)
        push(m, e);
    normalize();
}

EtaQuotientSpec::EtaQuotientSpec(
    const std::vector<std::pair<long, long>>& factors) {
    for (auto [m, e] : factors)
        push(m, e);
    normalize();
}

void EtaQuotientSpec::push(long scale, long exponent) {
    if (scale < 1)
        throw Error("eta factor scale must be positive, got " +
                    std::to_string(scale));
    factors_.push_back({scale, exponent});
}

void EtaQuotientSpec::normalize() {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.scale < b.scale; });
    std::vector<Factor> merged;
    for (const Factor& f : factors_) {
        if (!merged.empty() && merged.back().scale == f.scale)
            merged.back().exponent += f.exponent;
        else
            merged.push_back(f);
    }
    std::erase_if(merged, [](const Factor& f) { return f.exponent == 0; });
    factors_ = std::move(merged);
}

LaurentSeries euler_factor(long m, long order) {
    if (m < 1)
        throw Error("euler_factor requires m >= 1");
    if (order < 1)
        return LaurentSeries::zero(std::max(order, 0L));
    std::vector<Int> co(static_cast<std::size_t>(order));
    co[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = m * (k * (3 * k - 1) / 2);  // pentagonal, k > 0
        long g2 = m * (k * (3 * k + 1) / 2);  // pentagonal, k < 0
        if (g1 >= order && g2 >= order)
            break;
        int sign = (k % 2 == 0) ? 1 : -1;
        if (g1 < order)
            co[static_cast<std::size_t>(g1)] += sign;
        if (g2 < order)
            co[static_cast<std::size_t>(g2)] += sign;
    }
    return LaurentSeries(0, std::move(co));
}

LaurentSeries naive_euler_oracle(long m, long order) {
    if (m < 1)
        throw Error("naive_euler_oracle requires m >= 1");
    if (order < 1)
        return LaurentSeries::zero(std::max(order, 0L));
    std::vector<Int> co(static_cast<std::size_t>(order));
    co[0] = 1;
    // multiply by (1 - q^{mn}) in place, highest exponent first
    for (long n = 1; m * n < order; ++n) {
        long shift = m * n;
        for (long i = order - 1; i >= shift; --i)
            co[static_cast<std::size_t>(i)] -=
                co[static_cast<std::size_t>(i - shift)];
    }
    return LaurentSeries(0, std::move(co));
}

LaurentSeries eta_quotient(const EtaQuotientSpec& spec, long order) {
    if (order < 1)
        throw Error("eta_quotient requires order >= 1");
    LaurentSeries num = LaurentSeries::one(order);
    LaurentSeries den;
    bool have_den = false;
    for (const auto& f : spec.factors()) {
        LaurentSeries base = euler_factor(f.scale, order);
        if (f.exponent > 0) {
            num = mul(num, pow(base, f.exponent));
        } else {
            LaurentSeries p = pow(base, -f.exponent);
            den = have_den ? mul(den, p) : p;
            have_den = true;
        }
    }
    if (!have_den)
        return num;
    return mul(num, invert(den));
}

} // namespace etaq
