#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace etaq {

using Int = mpz_class;

// Truncated Laurent series over exact integers.
//
// A series tracks every coefficient of exponent < order() (exclusive bound):
// exponents below valuation() are exactly zero, and coeffs()[i] holds the
// coefficient of q^(valuation()+i), so valuation() + coeffs().size() ==
// order(). A nonzero series always has a nonzero leading coefficient; the
// zero series is the canonical empty form with valuation() == order().
//
// Every operation derives the tightest order that is sound for its operands
// and never reports a coefficient it cannot trust. Values are immutable
// after construction and may be shared freely across threads.
class LaurentSeries {
  public:
    LaurentSeries() : val_(0), order_(0) {}

    // Normalizes: strips leading zero coefficients, collapses to the
    // canonical zero form when everything vanishes.
    LaurentSeries(long valuation, std::vector<Int> coeffs);

    static LaurentSeries zero(long order);
    static LaurentSeries constant(Int c, long order);
    // q^exp, trusted below `order` (requires order > exp)
    static LaurentSeries monomial(long exp, long order);
    static LaurentSeries one(long order) { return constant(1, order); }

    long valuation() const { return val_; }
    long order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of q^exp; exact zero below the valuation, error at or
    // beyond order() (those coefficients are not trusted).
    const Int& coeff(long exp) const;
    std::span<const Int> coeffs() const { return coeffs_; }

    LaurentSeries truncated(long new_order) const;
    LaurentSeries shifted(long delta) const; // multiply by q^delta
    LaurentSeries scaled(const Int& c) const;

    bool operator==(const LaurentSeries& o) const = default;

    // "1 - 2*q + q^3 + ..." with at most max_terms printed
    std::string str(std::size_t max_terms = 12) const;

  private:
    long val_;
    long order_;
    std::vector<Int> coeffs_;
};

LaurentSeries add(const LaurentSeries& s, const LaurentSeries& t);
LaurentSeries sub(const LaurentSeries& s, const LaurentSeries& t);
LaurentSeries neg(const LaurentSeries& s);

// Cauchy product with order = min(s.order + t.valuation, t.order +
// s.valuation). Dispatches to the OpenMP kernel for large dense operands;
// both kernels produce identical coefficients.
LaurentSeries mul(const LaurentSeries& s, const LaurentSeries& t);
// Serial schoolbook reference kernel.
LaurentSeries mul_serial(const LaurentSeries& s, const LaurentSeries& t);
// OpenMP kernel, one output coefficient per task.
LaurentSeries mul_parallel(const LaurentSeries& s, const LaurentSeries& t);

// Requires a nonzero series whose leading coefficient is +1 or -1.
LaurentSeries invert(const LaurentSeries& s);
LaurentSeries pow(const LaurentSeries& s, long e);
// s(q^k); exponents between multiples of k are exactly zero, so the order
// scales to k * s.order.
LaurentSeries substitute_qk(const LaurentSeries& s, long k);
// Least nonnegative residues mod m (m >= 2).
LaurentSeries reduce_mod(const LaurentSeries& s, const Int& m);

struct CoeffMismatch {
    long exponent;
    Int lhs;
    Int rhs;
};

// Compares every coefficient of exponent < n; n must not exceed either
// operand's order. Returns the smallest disagreeing exponent, or nullopt.
std::optional<CoeffMismatch> first_mismatch(const LaurentSeries& s,
                                            const LaurentSeries& t, long n);
bool equal_up_to(const LaurentSeries& s, const LaurentSeries& t, long n);

inline LaurentSeries operator+(const LaurentSeries& s, const LaurentSeries& t) { return add(s, t); }
inline LaurentSeries operator-(const LaurentSeries& s, const LaurentSeries& t) { return sub(s, t); }
inline LaurentSeries operator-(const LaurentSeries& s) { return neg(s); }
inline LaurentSeries operator*(const LaurentSeries& s, const LaurentSeries& t) { return mul(s, t); }

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

} // namespace etaq
