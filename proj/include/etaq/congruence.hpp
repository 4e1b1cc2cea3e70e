#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etaq/catalog.hpp"
#include "etaq/laurent.hpp"

namespace etaq {

// failing index n with the two values that disagree (mod M)
struct IndexWitness {
    long n;
    Int lhs;
    Int rhs;
};

struct CongruenceOutcome {
    long checked = 0;
    std::optional<IndexWitness> witness;
    bool passed() const { return !witness.has_value(); }
};

// a(A n + B) == 0 (mod M) for every n with A n + B < s.order(). Fewer than
// min_witnesses testable indices raises InsufficientOrderError.
CongruenceOutcome check_vanishing(const LaurentSeries& s, long step,
                                  long offset, const Int& modulus,
                                  long min_witnesses = 10);

// a(A n + B) == b(C n + D) (mod M) on the overlapping testable range, with
// the a(-1) = 0 convention when an offset of -1 puts n = 0 below the series.
CongruenceOutcome check_internal(const LaurentSeries& lhs, long lhs_step,
                                 long lhs_offset, const LaurentSeries& rhs,
                                 long rhs_step, long rhs_offset,
                                 const Int& modulus, long min_witnesses = 10);

struct ScanHit {
    long step;
    long offset;
    Int modulus;
    long checked;
};

// All (A <= max_step, 0 <= B < A, M in moduli) with a(An+B) == 0 (mod M) for
// every testable n. Moduli subsumed by a larger verified multiple at the same
// (A, B) are collapsed away; output sorted by (A, B, M). Requires
// s.order() >= 20 * max_step so every candidate sees at least ~20 witnesses.
std::vector<ScanHit> scan_congruences(const LaurentSeries& s, long max_step,
                                      std::vector<Int> moduli);

struct ValueCheck {
    std::string label;
    long checked = 0;
    std::optional<IndexWitness> witness;
    bool passed() const { return !witness.has_value(); }
};

// The d(n) recursion machinery behind CP_3(2*3^k n + 3^k - 2) == 0
// (mod 2*3^(k-1)): for each k <= kmax verifies, on every testable n,
//   CP3(3n+1)  = 2 d(n) + 27 CP3(n-1)
//   d(3n+2)    = -3 d(n)
//   CP3(9n+7)  = 48 d(n) + 729 CP3(n-1)
//   CP3(3^k n + 3^k - 2) = 3^(k-1) (9^k - (-1)^k)/5 d(n) + 27^k CP3(n-1)
//   CP3(3^k n + 3^k - 2)   == 0 (mod 3^(k-1))
//   CP3(2 3^k n + 3^k - 2) == 0 (mod 2*3^(k-1))
// using CP3/DQ expansions of the given order from the catalog.
std::vector<ValueCheck> verify_thm39_chain(long kmax, long order,
                                           const SeriesCatalog& catalog);

// 3^(k-1) * (9^k - (-1)^k) / 5; throws if the division is not exact.
Int thm39_closed_form_coefficient(long k);

} // namespace etaq
