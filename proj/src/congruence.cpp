#include "etaq/congruence.hpp"

#include <algorithm>

#include "etaq/errors.hpp"

namespace etaq {

namespace {

long testable_count(long order, long step, long offset) {
    // number of n >= 0 with step*n + offset < order
    if (offset >= order)
        return 0;
    return (order - 1 - offset) / step + 1;
}

bool congruent(const Int& a, const Int& b, const Int& m) {
    return mpz_congruent_p(a.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t()) != 0;
}

} // namespace

CongruenceOutcome check_vanishing(const LaurentSeries& s, long step,
                                  long offset, const Int& modulus,
                                  long min_witnesses) {
    if (step < 1 || offset < 0 || offset >= step)
        throw ResidueOutOfRangeError(
            "vanishing congruence requires 0 <= B < A");
    long count = testable_count(s.order(), step, offset);
    if (count < min_witnesses)
        throw InsufficientOrderError(
            "only " + std::to_string(count) + " testable indices at order " +
            std::to_string(s.order()) + ", need " +
            std::to_string(min_witnesses));
    const Int zero = 0;
    CongruenceOutcome out;
    out.checked = count;
    for (long n = 0; n < count; ++n) {
        const Int& v = s.coeff(step * n + offset);
        if (mpz_divisible_p(v.get_mpz_t(), modulus.get_mpz_t()) == 0) {
            out.witness = IndexWitness{n, v, zero};
            break;
        }
    }
    return out;
}

CongruenceOutcome check_internal(const LaurentSeries& lhs, long lhs_step,
                                 long lhs_offset, const LaurentSeries& rhs,
                                 long rhs_step, long rhs_offset,
                                 const Int& modulus, long min_witnesses) {
    if (lhs_step < 1 || rhs_step < 1 || lhs_offset < 0 || rhs_offset < -1)
        throw ResidueOutOfRangeError("malformed internal congruence");
    long count = std::min(testable_count(lhs.order(), lhs_step, lhs_offset),
                          testable_count(rhs.order(), rhs_step,
                                         std::max(rhs_offset, 0L)));
    if (count < min_witnesses)
        throw InsufficientOrderError(
            "only " + std::to_string(count) + " overlapping indices, need " +
            std::to_string(min_witnesses));
    const Int zero = 0;
    CongruenceOutcome out;
    out.checked = count;
    for (long n = 0; n < count; ++n) {
        const Int& a = lhs.coeff(lhs_step * n + lhs_offset);
        long r = rhs_step * n + rhs_offset;
        const Int& b = (r < 0) ? zero : rhs.coeff(r); // a(-1) = 0 convention
        if (!congruent(a, b, modulus)) {
            out.witness = IndexWitness{n, a, b};
            break;
        }
    }
    return out;
}

std::vector<ScanHit> scan_congruences(const LaurentSeries& s, long max_step,
                                      std::vector<Int> moduli) {
    if (max_step < 1)
        throw Error("scan requires max_step >= 1");
    if (s.order() < 20 * max_step)
        throw InsufficientOrderError(
            "scan at max step " + std::to_string(max_step) +
            " requires order >= " + std::to_string(20 * max_step));
    std::sort(moduli.begin(), moduli.end());
    moduli.erase(std::unique(moduli.begin(), moduli.end()), moduli.end());
    std::vector<ScanHit> hits;
    for (long step = 1; step <= max_step; ++step) {
        for (long offset = 0; offset < step; ++offset) {
            long count = testable_count(s.order(), step, offset);
            std::vector<const Int*> verified;
            for (const Int& m : moduli) {
                bool ok = true;
                for (long n = 0; n < count; ++n) {
                    if (mpz_divisible_p(
                            s.coeff(step * n + offset).get_mpz_t(),
                            m.get_mpz_t()) == 0) {
                        ok = false;
                        break;
                    }
                }
                if (ok)
                    verified.push_back(&m);
            }
            // keep only moduli not dividing a larger verified one
            for (const Int* m : verified) {
                bool subsumed = false;
                for (const Int* other : verified)
                    if (other != m && *other != *m &&
                        mpz_divisible_p(other->get_mpz_t(), m->get_mpz_t()))
                        subsumed = true;
                if (!subsumed)
                    hits.push_back({step, offset, *m, count});
            }
        }
    }
    return hits;
}

Int thm39_closed_form_coefficient(long k) {
    Int nine_k;
    mpz_ui_pow_ui(nine_k.get_mpz_t(), 9, static_cast<unsigned long>(k));
    Int numer = nine_k - ((k % 2 == 0) ? 1 : -1);
    if (!mpz_divisible_ui_p(numer.get_mpz_t(), 5))
        throw Error("9^k - (-1)^k is not divisible by 5 at k = " +
                    std::to_string(k));
    Int pow3;
    mpz_ui_pow_ui(pow3.get_mpz_t(), 3, static_cast<unsigned long>(k - 1));
    return pow3 * (numer / 5);
}

std::vector<ValueCheck> verify_thm39_chain(long kmax, long order,
                                           const SeriesCatalog& catalog) {
    if (kmax < 1)
        throw Error("verify_thm39_chain requires kmax >= 1");
    LaurentSeries cp3 = catalog.get("CP3", order);
    LaurentSeries dq = catalog.get("DQ", order);
    const Int zero = 0;
    auto cp = [&](long n) -> const Int& {
        return n < 0 ? zero : cp3.coeff(n);
    };
    auto d = [&](long n) -> const Int& { return dq.coeff(n); };

    std::vector<ValueCheck> out;
    auto run_values = [&](const std::string& label, long count, auto&& lhs_fn,
                          auto&& rhs_fn) {
        if (count < 10)
            throw InsufficientOrderError(label + ": only " +
                                         std::to_string(count) +
                                         " testable indices");
        ValueCheck chk;
        chk.label = label;
        chk.checked = count;
        for (long n = 0; n < count; ++n) {
            Int lhs = lhs_fn(n);
            Int rhs = rhs_fn(n);
            if (lhs != rhs) {
                chk.witness = IndexWitness{n, lhs, rhs};
                break;
            }
        }
        out.push_back(std::move(chk));
    };

    run_values(
        "CP3(3n+1) = 2 d(n) + 27 CP3(n-1)",
        testable_count(order, 3, 1), [&](long n) { return cp(3 * n + 1); },
        [&](long n) { return Int(2 * d(n) + 27 * cp(n - 1)); });
    run_values(
        "d(3n+2) = -3 d(n)", testable_count(order, 3, 2),
        [&](long n) { return d(3 * n + 2); },
        [&](long n) { return Int(-3 * d(n)); });
    run_values(
        "CP3(9n+7) = 48 d(n) + 729 CP3(n-1)", testable_count(order, 9, 7),
        [&](long n) { return cp(9 * n + 7); },
        [&](long n) { return Int(48 * d(n) + 729 * cp(n - 1)); });

    for (long k = 1; k <= kmax; ++k) {
        Int coeff_k = thm39_closed_form_coefficient(k);
        Int pow27;
        mpz_ui_pow_ui(pow27.get_mpz_t(), 27, static_cast<unsigned long>(k));
        Int mod3;
        mpz_ui_pow_ui(mod3.get_mpz_t(), 3, static_cast<unsigned long>(k - 1));
        long A = 1;
        for (long i = 0; i < k; ++i)
            A *= 3;
        const long B = A - 2;
        std::string kk = std::to_string(k);

        run_values(
            "closed form k=" + kk + ": CP3(" + std::to_string(A) + "n+" +
                std::to_string(B) + ") = c_k d(n) + 27^k CP3(n-1)",
            testable_count(order, A, B),
            [&](long n) { return cp(A * n + B); },
            [&, coeff_k, pow27](long n) {
                return Int(coeff_k * d(n) + pow27 * cp(n - 1));
            });
        run_values(
            "k=" + kk + ": CP3(" + std::to_string(A) + "n+" +
                std::to_string(B) + ") == 0 mod 3^" + std::to_string(k - 1),
            testable_count(order, A, B),
            [&, mod3](long n) { return Int(cp(A * n + B) % mod3); },
            [&](long) { return Int(0); });
        run_values(
            "k=" + kk + ": CP3(" + std::to_string(2 * A) + "n+" +
                std::to_string(B) + ") == 0 mod 2*3^" + std::to_string(k - 1),
            testable_count(order, 2 * A, B),
            [&, mod3](long n) { return Int(cp(2 * A * n + B) % (2 * mod3)); },
            [&](long) { return Int(0); });
    }
    return out;
}

} // namespace etaq
