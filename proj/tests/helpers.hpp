#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "etaq/laurent.hpp"

namespace etaq::testing {

inline LaurentSeries make(long val, std::initializer_list<long> coeffs) {
    std::vector<Int> co;
    for (long c : coeffs)
        co.emplace_back(c);
    return LaurentSeries(val, std::move(co));
}

inline std::vector<long> coeffs_from(const LaurentSeries& s, long from,
                                     long count) {
    std::vector<long> out;
    for (long e = from; e < from + count; ++e)
        out.push_back(s.coeff(e).get_si());
    return out;
}

inline LaurentSeries random_series(std::mt19937& rng, bool unit) {
    std::uniform_int_distribution<long> val(-3, 3);
    std::uniform_int_distribution<long> len(1, 10);
    std::uniform_int_distribution<long> coeff(-9, 9);
    long n = len(rng);
    std::vector<Int> co;
    co.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        co.emplace_back(coeff(rng));
    if (unit)
        co[0] = (coeff(rng) % 2 == 0) ? 1 : -1;
    return LaurentSeries(val(rng), std::move(co));
}

} // namespace etaq::testing
