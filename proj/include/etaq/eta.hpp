#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "etaq/laurent.hpp"

namespace etaq {

// A finite product prod_m f_m^{e_m} of Euler factors f_m = (q^m; q^m)_inf.
// Factors are kept sorted by scale with duplicate scales merged and zero
// exponents dropped, so equal quotients compare equal structurally.
class EtaQuotientSpec {
  public:
    struct Factor {
        long scale;    // m >= 1
        long exponent; // nonzero after normalization
        bool operator==(const Factor&) const = default;
    };

    EtaQuotientSpec() = default;
    EtaQuotientSpec(std::initializer_list<std::pair<long, long>> factors);
    explicit EtaQuotientSpec(const std::vector<std::pair<long, long>>& factors);

    const std::vector<Factor>& factors() const { return factors_; }
    bool operator==(const EtaQuotientSpec&) const = default;

  private:
    void push(long scale, long exponent);
    void normalize();
    std::vector<Factor> factors_;
};

// f_m to the given order via the pentagonal number theorem: the only nonzero
// coefficients sit at exponents m*k(3k-1)/2, k in Z, with sign (-1)^k.
LaurentSeries euler_factor(long m, long order);

// The literal truncated product prod_{n>=1} (1 - q^{mn}), one binomial at a
// time, with no pentagonal shortcut. Kept deliberately independent of the
// series multiplication kernels so it can stand as an oracle against them.
LaurentSeries naive_euler_oracle(long m, long order);

// Exact expansion of the quotient to the requested order. Numerator and
// denominator are accumulated separately so only one inversion happens.
LaurentSeries eta_quotient(const EtaQuotientSpec& spec, long order);

} // namespace etaq
