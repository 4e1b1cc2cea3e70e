#include "etaq/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <omp.h>

#include "etaq/errors.hpp"

namespace etaq {

namespace {

const Int kZero = 0;

// Below this many coefficient products the parallel kernel is not worth the
// fork/join overhead.
constexpr long kParallelCutoff = 1L << 17;

long min_order(const LaurentSeries& s, const LaurentSeries& t) {
    return std::min(s.order(), t.order());
}

} // namespace

LaurentSeries::LaurentSeries(long valuation, std::vector<Int> coeffs)
    : val_(valuation), order_(valuation + static_cast<long>(coeffs.size())),
      coeffs_(std::move(coeffs)) {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && mpz_sgn(coeffs_[lead].get_mpz_t()) == 0)
        ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        val_ = order_;
    } else if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        val_ += static_cast<long>(lead);
    }
}

LaurentSeries LaurentSeries::zero(long order) {
    LaurentSeries s;
    s.val_ = s.order_ = order;
    return s;
}

LaurentSeries LaurentSeries::constant(Int c, long order) {
    if (order < 1 || mpz_sgn(c.get_mpz_t()) == 0)
        return zero(std::max(order, 0L));
    std::vector<Int> co(static_cast<std::size_t>(order));
    co[0] = std::move(c);
    return LaurentSeries(0, std::move(co));
}

LaurentSeries LaurentSeries::monomial(long exp, long order) {
    if (order <= exp)
        return zero(order);
    std::vector<Int> co(static_cast<std::size_t>(order - exp));
    co[0] = 1;
    return LaurentSeries(exp, std::move(co));
}

const Int& LaurentSeries::coeff(long exp) const {
    if (exp >= order_)
        throw InsufficientOrderError("coefficient of q^" + std::to_string(exp) +
                                     " requested beyond order " +
                                     std::to_string(order_));
    if (exp < val_)
        return kZero;
    return coeffs_[static_cast<std::size_t>(exp - val_)];
}

LaurentSeries LaurentSeries::truncated(long new_order) const {
    if (new_order >= order_)
        return *this;
    if (is_zero() || new_order <= val_)
        return zero(new_order);
    std::vector<Int> co(coeffs_.begin(),
                        coeffs_.begin() + (new_order - val_));
    return LaurentSeries(val_, std::move(co));
}

LaurentSeries LaurentSeries::shifted(long delta) const {
    LaurentSeries s(*this);
    s.val_ += delta;
    s.order_ += delta;
    return s;
}

LaurentSeries LaurentSeries::scaled(const Int& c) const {
    if (mpz_sgn(c.get_mpz_t()) == 0)
        return zero(order_);
    std::vector<Int> co(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        co[i] = coeffs_[i] * c;
    return LaurentSeries(val_, std::move(co));
}

std::string LaurentSeries::str(std::size_t max_terms) const {
    if (is_zero())
        return "0 (order " + std::to_string(order_) + ")";
    std::ostringstream os;
    std::size_t printed = 0;
    for (std::size_t i = 0; i < coeffs_.size() && printed < max_terms; ++i) {
        const Int& c = coeffs_[i];
        if (mpz_sgn(c.get_mpz_t()) == 0)
            continue;
        long e = val_ + static_cast<long>(i);
        if (printed == 0) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || e == 0)
            os << a.get_str();
        if (e != 0) {
            if (a != 1)
                os << "*";
            os << "q";
            if (e != 1)
                os << "^" << e;
        }
        ++printed;
    }
    if (printed == max_terms)
        os << " + ...";
    os << " (order " << order_ << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) {
    return os << s.str();
}

LaurentSeries add(const LaurentSeries& s, const LaurentSeries& t) {
    long o = min_order(s, t);
    if (s.is_zero() && t.is_zero())
        return LaurentSeries::zero(o);
    long v = std::min(s.is_zero() ? o : s.valuation(),
                      t.is_zero() ? o : t.valuation());
    if (o <= v)
        return LaurentSeries::zero(o);
    std::vector<Int> out(static_cast<std::size_t>(o - v));
    auto accumulate = [&](const LaurentSeries& x, bool negate) {
        auto co = x.coeffs();
        for (std::size_t i = 0; i < co.size(); ++i) {
            long e = x.valuation() + static_cast<long>(i);
            if (e >= o)
                break;
            if (negate)
                out[static_cast<std::size_t>(e - v)] -= co[i];
            else
                out[static_cast<std::size_t>(e - v)] += co[i];
        }
    };
    accumulate(s, false);
    accumulate(t, false);
    return LaurentSeries(v, std::move(out));
}

LaurentSeries neg(const LaurentSeries& s) {
    std::vector<Int> co(s.coeffs().begin(), s.coeffs().end());
    for (auto& c : co)
        c = -c;
    LaurentSeries r(s.valuation(), std::move(co));
    return s.is_zero() ? LaurentSeries::zero(s.order()) : r;
}

LaurentSeries sub(const LaurentSeries& s, const LaurentSeries& t) {
    return add(s, neg(t));
}

namespace {

struct MulShape {
    long v;    // result valuation
    long o;    // result order
    long n;    // tracked coefficient count
};

MulShape mul_shape(const LaurentSeries& a, const LaurentSeries& b) {
    MulShape m;
    m.o = std::min(a.order() + b.valuation(), b.order() + a.valuation());
    m.v = a.valuation() + b.valuation();
    m.n = m.o - m.v;
    return m;
}

std::vector<std::size_t> nonzero_indices(std::span<const Int> co) {
    std::vector<std::size_t> nz;
    nz.reserve(co.size());
    for (std::size_t i = 0; i < co.size(); ++i)
        if (mpz_sgn(co[i].get_mpz_t()) != 0)
            nz.push_back(i);
    return nz;
}

} // namespace

LaurentSeries mul_serial(const LaurentSeries& s, const LaurentSeries& t) {
    if (s.is_zero() || t.is_zero())
        return LaurentSeries::zero(mul_shape(s, t).o);
    MulShape m = mul_shape(s, t);
    if (m.n <= 0)
        return LaurentSeries::zero(m.o);
    auto ca = s.coeffs(), cb = t.coeffs();
    std::vector<Int> out(static_cast<std::size_t>(m.n));
    for (std::size_t i = 0; i < ca.size() && static_cast<long>(i) < m.n; ++i) {
        if (mpz_sgn(ca[i].get_mpz_t()) == 0)
            continue;
        std::size_t jmax = std::min(cb.size(), static_cast<std::size_t>(m.n) - i);
        for (std::size_t j = 0; j < jmax; ++j)
            mpz_addmul(out[i + j].get_mpz_t(), ca[i].get_mpz_t(),
                       cb[j].get_mpz_t());
    }
    return LaurentSeries(m.v, std::move(out));
}

LaurentSeries mul_parallel(const LaurentSeries& s, const LaurentSeries& t) {
    if (s.is_zero() || t.is_zero())
        return LaurentSeries::zero(mul_shape(s, t).o);
    MulShape m = mul_shape(s, t);
    if (m.n <= 0)
        return LaurentSeries::zero(m.o);
    // Iterate the sparser operand's nonzero support in the inner loop.
    const LaurentSeries& a = s.coeffs().size() <= t.coeffs().size() ? s : t;
    const LaurentSeries& b = s.coeffs().size() <= t.coeffs().size() ? t : s;
    auto ca = a.coeffs(), cb = b.coeffs();
    std::vector<std::size_t> nz = nonzero_indices(ca);
    std::vector<Int> out(static_cast<std::size_t>(m.n));
    const long nb = static_cast<long>(cb.size());
#pragma omp parallel for schedule(static)
    for (long k = 0; k < m.n; ++k) {
        Int acc = 0;
        // need i <= k and k - i < nb
        long lo = std::max(0L, k - nb + 1);
        auto it = std::lower_bound(nz.begin(), nz.end(),
                                   static_cast<std::size_t>(lo));
        for (; it != nz.end() && static_cast<long>(*it) <= k; ++it)
            mpz_addmul(acc.get_mpz_t(), ca[*it].get_mpz_t(),
                       cb[static_cast<std::size_t>(k - static_cast<long>(*it))].get_mpz_t());
        out[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return LaurentSeries(m.v, std::move(out));
}

LaurentSeries mul(const LaurentSeries& s, const LaurentSeries& t) {
    long work = static_cast<long>(s.coeffs().size()) *
                static_cast<long>(t.coeffs().size());
    if (work < kParallelCutoff || omp_in_parallel() || omp_get_max_threads() < 2)
        return mul_serial(s, t);
    return mul_parallel(s, t);
}

LaurentSeries invert(const LaurentSeries& s) {
    if (s.is_zero())
        throw ZeroSeriesError("cannot invert the zero series");
    const Int& lead = s.coeffs()[0];
    if (lead != 1 && lead != -1)
        throw LeadingCoefficientNotUnitError(
            "leading coefficient " + lead.get_str() + " is not a unit");
    auto c = s.coeffs();
    long m = s.order() - s.valuation(); // relative precision carries over
    std::vector<Int> d(static_cast<std::size_t>(m));
    d[0] = lead;
    std::vector<std::size_t> nz; // nonzero tail support of c
    for (std::size_t j = 1; j < c.size(); ++j)
        if (mpz_sgn(c[j].get_mpz_t()) != 0)
            nz.push_back(j);
    for (long n = 1; n < m; ++n) {
        Int acc = 0;
        for (std::size_t j : nz) {
            if (static_cast<long>(j) > n)
                break;
            mpz_addmul(acc.get_mpz_t(), c[j].get_mpz_t(),
                       d[static_cast<std::size_t>(n - static_cast<long>(j))].get_mpz_t());
        }
        // lead * d[n] = -acc and lead is +-1
        d[static_cast<std::size_t>(n)] = (lead == 1) ? Int(-acc) : Int(acc);
    }
    return LaurentSeries(-s.valuation(), std::move(d));
}

LaurentSeries pow(const LaurentSeries& s, long e) {
    if (e == 0) {
        long m = s.is_zero() ? s.order() : s.order() - s.valuation();
        return LaurentSeries::one(std::max(m, 1L));
    }
    if (e < 0)
        return pow(invert(s), -e);
    LaurentSeries base = s;
    LaurentSeries result;
    bool have = false;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) {
            result = have ? mul(result, base) : base;
            have = true;
        }
        n >>= 1;
        if (n > 0)
            base = mul(base, base);
    }
    return result;
}

LaurentSeries substitute_qk(const LaurentSeries& s, long k) {
    if (k < 1)
        throw Error("substitute_qk requires k >= 1");
    if (k == 1)
        return s;
    if (s.is_zero())
        return LaurentSeries::zero(k * s.order());
    auto c = s.coeffs();
    long n = k * (s.order() - s.valuation());
    std::vector<Int> out(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i * static_cast<std::size_t>(k)] = c[i];
    return LaurentSeries(k * s.valuation(), std::move(out));
}

LaurentSeries reduce_mod(const LaurentSeries& s, const Int& m) {
    if (m < 2)
        throw Error("reduce_mod requires modulus >= 2");
    std::vector<Int> out(s.coeffs().begin(), s.coeffs().end());
    for (auto& c : out)
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (s.is_zero())
        return LaurentSeries::zero(s.order());
    return LaurentSeries(s.valuation(), std::move(out));
}

std::optional<CoeffMismatch> first_mismatch(const LaurentSeries& s,
                                            const LaurentSeries& t, long n) {
    if (n > s.order() || n > t.order())
        throw InsufficientOrderError(
            "equality requested up to exponent " + std::to_string(n) +
            " but orders are " + std::to_string(s.order()) + " and " +
            std::to_string(t.order()));
    long lo = std::min(s.is_zero() ? n : s.valuation(),
                       t.is_zero() ? n : t.valuation());
    for (long e = lo; e < n; ++e) {
        const Int& a = s.coeff(e);
        const Int& b = t.coeff(e);
        if (a != b)
            return CoeffMismatch{e, a, b};
    }
    return std::nullopt;
}

bool equal_up_to(const LaurentSeries& s, const LaurentSeries& t, long n) {
    return !first_mismatch(s, t, n).has_value();
}

} // namespace etaq
