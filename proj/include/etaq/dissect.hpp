#pragma once

#include "etaq/laurent.hpp"

namespace etaq {

// The subsequence series sum_n a(kn+r) q^n of a power series (valuation >= 0
// required; exponents below the valuation read as zero). The result order is
// floor((s.order - r + k - 1) / k), never more.
LaurentSeries extract(const LaurentSeries& s, long k, long r);

// A coefficient subsequence viewed lazily: step k, residue r over a source
// power series.
struct DissectionSlice {
    LaurentSeries source;
    long step;
    long residue;

    long materialized_order() const {
        return (source.order() - residue + step - 1) / step;
    }
    LaurentSeries materialize() const {
        return extract(source, step, residue);
    }
};

// Huffing operator H_k: zero every coefficient whose exponent is not
// divisible by k. Laurent inputs are allowed and the result stays on the
// q^k grid; nothing is relabeled.
LaurentSeries huff(const LaurentSeries& s, long k);

} // namespace etaq
