#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "jg/errors.hpp"
#include "jg/numeric.hpp"

namespace jg {

// The coset r + p^N * Z_p: a p-adic integer known to N base-p digits.
// Precision semantics are interval-style: every reported digit is certain, so
// add/mul take the min precision and exact halving at p = 2 costs one digit.
class TruncatedPAdicInt {
public:
    TruncatedPAdicInt(std::uint32_t p, std::uint32_t precision, Int residue)
        : p_(p), n_(precision) {
        if (!is_prime(Int(p_))) throw ValidationError("p-adic: p must be prime, got " + std::to_string(p_));
        if (n_ < 1) throw ValidationError("p-adic: precision must be >= 1");
        pn_ = int_pow(Int(p_), Int(n_));
        r_ = mod_floor(residue, pn_);
    }

    std::uint32_t prime() const { return p_; }
    std::uint32_t precision() const { return n_; }
    const Int& residue() const { return r_; }
    const Int& modulus() const { return pn_; }

    // Largest k <= precision with p^k dividing the residue; a zero residue
    // reports the full precision ("at least N").
    std::uint32_t valuation() const {
        if (r_ == 0) return n_;
        std::uint32_t v = 0;
        Int x = r_;
        while (x % p_ == 0) {
            x /= p_;
            ++v;
        }
        return v;
    }

    bool operator==(const TruncatedPAdicInt& o) const {
        return p_ == o.p_ && n_ == o.n_ && r_ == o.r_;
    }

    std::string str() const {
        return r_.str() + " + O(" + std::to_string(p_) + "^" + std::to_string(n_) + ")";
    }

private:
    std::uint32_t p_;
    std::uint32_t n_;
    Int pn_;
    Int r_;
};

inline void check_same_prime(const TruncatedPAdicInt& x, const TruncatedPAdicInt& y) {
    if (x.prime() != y.prime())
        throw PrimeMismatchError("p-adic: mixed primes " + std::to_string(x.prime()) + " and " +
                                 std::to_string(y.prime()));
}

inline TruncatedPAdicInt padic_from_integer(std::uint32_t p, std::uint32_t precision, const Int& x) {
    return TruncatedPAdicInt(p, precision, x);
}

inline TruncatedPAdicInt padic_add(const TruncatedPAdicInt& x, const TruncatedPAdicInt& y) {
    check_same_prime(x, y);
    std::uint32_t n = std::min(x.precision(), y.precision());
    return TruncatedPAdicInt(x.prime(), n, x.residue() + y.residue());
}

inline TruncatedPAdicInt padic_sub(const TruncatedPAdicInt& x, const TruncatedPAdicInt& y) {
    check_same_prime(x, y);
    std::uint32_t n = std::min(x.precision(), y.precision());
    return TruncatedPAdicInt(x.prime(), n, x.residue() - y.residue());
}

inline TruncatedPAdicInt padic_neg(const TruncatedPAdicInt& x) {
    return TruncatedPAdicInt(x.prime(), x.precision(), -x.residue());
}

inline TruncatedPAdicInt padic_mul(const TruncatedPAdicInt& x, const TruncatedPAdicInt& y) {
    check_same_prime(x, y);
    std::uint32_t n = std::min(x.precision(), y.precision());
    return TruncatedPAdicInt(x.prime(), n, x.residue() * y.residue());
}

// True iff x and y agree at the coarser of the two precisions.
inline bool padic_congruent(const TruncatedPAdicInt& x, const TruncatedPAdicInt& y) {
    check_same_prime(x, y);
    std::uint32_t n = std::min(x.precision(), y.precision());
    Int pn = int_pow(Int(x.prime()), Int(n));
    return mod_floor(x.residue(), pn) == mod_floor(y.residue(), pn);
}

// Exact halving in Z_2: requires an even residue and costs one digit.
inline TruncatedPAdicInt padic_exact_div2(const TruncatedPAdicInt& x) {
    if (x.prime() != 2) throw PrimeMismatchError("padic_exact_div2: requires p = 2");
    if (x.precision() < 2) throw PrecisionError("padic_exact_div2: no precision left");
    if (x.residue() % 2 != 0)
        throw NotDivisibleError("padic_exact_div2: residue " + x.residue().str() + " is odd");
    return TruncatedPAdicInt(2, x.precision() - 1, x.residue() / 2);
}

// x(x-1)/2 in Z_p. For odd p, 2 is a unit and precision is preserved; for
// p = 2 the product x(x-1) is even, halved exactly at the cost of one digit.
inline TruncatedPAdicInt padic_binom2(const TruncatedPAdicInt& x) {
    Int prod = x.residue() * (x.residue() - 1);
    if (x.prime() != 2) {
        Int inv2 = mod_inverse(2, x.modulus());
        return TruncatedPAdicInt(x.prime(), x.precision(), prod * inv2);
    }
    if (x.precision() < 2) throw PrecisionError("padic_binom2: p = 2 needs precision >= 2");
    return padic_exact_div2(TruncatedPAdicInt(2, x.precision(), prod));
}

}  // namespace jg
