#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etaq/laurent.hpp"

namespace etaq {

// x(q) = q^(-1/3) c(q) for Ramanujan's cubic continued fraction c(q).
// x is an honest power series with constant term 1; the fractional power
// never appears. `depth` is the continued-fraction truncation actually used.
struct CubicCfSeries {
    LaurentSeries x;
    long depth;
};

// Bottom-up evaluation of the truncated continued fraction: level j has
// numerator q^j + q^{2j}, so truncating at depth D = order + 2 perturbs only
// exponents beyond the requested order. The result is recomputed at depth
// D + 1 and must agree on all tracked coefficients; anything else throws.
CubicCfSeries cubic_cf_series(long order);

// Same, at an explicit depth and without the agreement check (used by the
// depth-stability tests).
LaurentSeries cubic_cf_series_at_depth(long order, long depth);

// The Laurent triple behind the CP_3(3^k n + 3^k - 2) chain:
//   a = q^-1 f1 f2 / (f9 f18)          (valuation -1)
//   b = q^-1 / x(q^3)                  (valuation -1)
//   c = q^-3 f3^4 f6^4 / (f9^4 f18^4)  (valuation -3)
// Construction validates a = b - 1 - 2/b, c = b^3 - 7 - 8/b^3,
// c = a^3 + 3a^2 + 9a and a^-2 = (a^4+6a^3+27a^2+54a+81)/c^2 on the tracked
// range and fails loudly if any of them breaks.
struct Thm39Triple {
    LaurentSeries a;
    LaurentSeries b;
    LaurentSeries c;
    long order;
};

Thm39Triple build_thm39_triple(long order);

struct IdentityCheck {
    std::string label;
    long checked = 0; // coefficients compared
    std::optional<CoeffMismatch> mismatch;
    bool passed() const { return !mismatch.has_value(); }
};

// The two continued-fraction identities:
//   f1 f2/(f9 f18)        == 1/x(q^3) - q - 2 q^2 x(q^3)
//   f3^4 f6^4/(f9^4 f18^4) == 1/x(q^3)^3 - 7 q^3 - 8 q^6 x(q^3)^3
std::vector<IdentityCheck> verify_cubic_cf_lemma(long order);

// The six huffing images:
//   H3(1) = 1, H3(a) = -1, H3(a^2) = -3,
//   H3(a^3) = -8/b^3 + 11 + b^3, H3(a^4) = 32/b^3 + 1 - 4 b^3,
//   H3(1/a^2) = 2/c + 27/c^2
// compared coefficient-by-coefficient on the whole tracked Laurent range.
std::vector<IdentityCheck> verify_h3_images(long order);

} // namespace etaq
