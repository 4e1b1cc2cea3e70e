#include "etaq/dissect.hpp"

#include "etaq/errors.hpp"

namespace etaq {

LaurentSeries extract(const LaurentSeries& s, long k, long r) {
    if (k < 1 || r < 0 || r >= k)
        throw ResidueOutOfRangeError("extract requires 0 <= r < k, got k=" +
                                     std::to_string(k) + " r=" +
                                     std::to_string(r));
    if (!s.is_zero() && s.valuation() < 0)
        throw NegativeValuationError(
            "extract is defined on power series only (valuation " +
            std::to_string(s.valuation()) + ")");
    long n = (s.order() - r + k - 1) / k;
    if (n <= 0)
        return LaurentSeries::zero(std::max(n, 0L));
    std::vector<Int> out(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        long e = k * i + r;
        if (e < s.order() && e >= s.valuation())
            out[static_cast<std::size_t>(i)] = s.coeff(e);
    }
    return LaurentSeries(0, std::move(out));
}

LaurentSeries huff(const LaurentSeries& s, long k) {
    if (k < 1)
        throw Error("huff requires k >= 1");
    if (s.is_zero())
        return s;
    auto co = s.coeffs();
    std::vector<Int> out(co.size());
    for (std::size_t i = 0; i < co.size(); ++i) {
        long e = s.valuation() + static_cast<long>(i);
        // e mod k == 0, valid for negative exponents too
        if (((e % k) + k) % k == 0)
            out[i] = co[i];
    }
    return LaurentSeries(s.valuation(), std::move(out));
}

} // namespace etaq
