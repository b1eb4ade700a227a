#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jg/errors.hpp"
#include "jg/jstructure.hpp"
#include "jg/numeric.hpp"
#include "jg/padic.hpp"
#include "jg/rng.hpp"

namespace jg {

// One of: Z, Z/m, Z_p at finite precision, or Q.
struct RingDescriptor {
    enum class Kind { Integers, Mod, PAdic, Rational };
    Kind kind = Kind::Integers;
    Int modulus = 0;             // Mod
    std::uint32_t p = 0;         // PAdic
    std::uint32_t precision = 0; // PAdic

    static RingDescriptor integers() { return {Kind::Integers, 0, 0, 0}; }
    static RingDescriptor rationals() { return {Kind::Rational, 0, 0, 0}; }
    static RingDescriptor mod(Int m) {
        if (m < 1) throw ValidationError("ring: modulus must be >= 1");
        return {Kind::Mod, std::move(m), 0, 0};
    }
    static RingDescriptor padic(std::uint32_t p, std::uint32_t precision) {
        if (!is_prime(Int(p))) throw ValidationError("ring: p must be prime");
        if (precision < 1) throw ValidationError("ring: precision must be >= 1");
        return {Kind::PAdic, 0, p, precision};
    }

    Int characteristic() const { return kind == Kind::Mod ? modulus : Int(0); }

    std::string str() const {
        switch (kind) {
            case Kind::Integers: return "Z";
            case Kind::Mod: return "Z/" + modulus.str();
            case Kind::PAdic:
                return "Z_" + std::to_string(p) + " (precision " + std::to_string(precision) + ")";
            case Kind::Rational: return "Q";
        }
        return "?";
    }
};

using RingElement = std::variant<Int, Rat, TruncatedPAdicInt>;

// f(x) = x(x-1)/2, interpreted in R: via the inverse of 2 when 2 is a unit,
// via exact halving over Z, Q, and Z_2.
inline RingElement binomial_map(const RingDescriptor& r, const RingElement& x) {
    switch (r.kind) {
        case RingDescriptor::Kind::Integers: {
            const Int* v = std::get_if<Int>(&x);
            if (!v) throw ValidationError("binomial map: expected an integer element");
            return binom2(*v);
        }
        case RingDescriptor::Kind::Rational: {
            if (const Rat* v = std::get_if<Rat>(&x)) return binom2(*v);
            if (const Int* v = std::get_if<Int>(&x)) return binom2(Rat(*v));
            throw ValidationError("binomial map: expected a rational element");
        }
        case RingDescriptor::Kind::Mod: {
            const Int* v = std::get_if<Int>(&x);
            if (!v) throw ValidationError("binomial map: expected a residue element");
            if (r.modulus % 2 == 0)
                throw CharacteristicError("binomial map: 2 is not invertible in " + r.str() +
                                          " — the characteristic must be odd");
            ModRing ring(r.modulus);
            Int inv2 = r.modulus == 1 ? Int(0) : ring.inverse(Int(2));
            Int e = ring.reduce(*v);
            return ring.mul(ring.mul(inv2, e), ring.sub(e, Int(1)));
        }
        case RingDescriptor::Kind::PAdic: {
            const TruncatedPAdicInt* v = std::get_if<TruncatedPAdicInt>(&x);
            if (!v) throw ValidationError("binomial map: expected a p-adic element");
            if (v->prime() != r.p)
                throw PrimeMismatchError("binomial map: element prime " +
                                         std::to_string(v->prime()) + " does not match ring " +
                                         r.str());
            return padic_binom2(*v);
        }
    }
    throw ValidationError("binomial map: unknown ring kind");
}

// The additive group of R with witness 1_R and the binomial map. Finite rings
// carry a fully verified structure; Z, Q, and Z_p act through apply().
struct RingJGroup {
    RingDescriptor ring;
    std::optional<JStructure> finite;

    RingElement witness_element() const {
        switch (ring.kind) {
            case RingDescriptor::Kind::Integers: return Int(1);
            case RingDescriptor::Kind::Rational: return Rat(1);
            case RingDescriptor::Kind::Mod: return mod_floor(Int(1), ring.modulus);
            case RingDescriptor::Kind::PAdic:
                return TruncatedPAdicInt(ring.p, ring.precision, Int(1));
        }
        throw ValidationError("ring structure: unknown ring kind");
    }

    RingElement apply(const RingElement& x) const { return binomial_map(ring, x); }
};

inline RingJGroup ring_to_jgroup(const RingDescriptor& r) {
    Int ch = r.characteristic();
    if (ch != 0 && ch % 2 == 0)
        throw CharacteristicError("ring " + r.str() + " rejected: characteristic " + ch.str() +
                                  " is even, and a J-ring characteristic must be odd");
    RingJGroup out{r, std::nullopt};
    if (r.kind == RingDescriptor::Kind::Mod) {
        std::uint32_t m = static_cast<std::uint32_t>(r.modulus);
        JStructure s;
        s.group = share(make_cyclic(m));
        s.witness = m == 1 ? 0 : 1;
        s.fmap.reserve(m);
        for (std::uint32_t x = 0; x < m; ++x)
            s.fmap.push_back(
                static_cast<element_t>(std::get<Int>(binomial_map(r, Int(x)))));
        if (!verify_axiom(s).valid) throw Error("ring structure: verification failed");
        s.verified = true;
        out.finite = std::move(s);
    }
    return out;
}

// A subring S of R on which the binomial map must restrict. The supported
// embeddings: Z in Q, Z_p in Q_p (at finite truncation), and kZ in Z.
struct SubringDescriptor {
    enum class Kind { IntegersInRationals, PAdicIntegers, ScaledIntegers };
    Kind kind = Kind::IntegersInRationals;
    Int scale = 1;                        // ScaledIntegers: the k of kZ
    std::uint32_t p = 0, precision = 0;   // PAdicIntegers

    static SubringDescriptor integers_in_rationals() { return {Kind::IntegersInRationals, 1, 0, 0}; }
    static SubringDescriptor padic_integers(std::uint32_t p, std::uint32_t precision) {
        if (!is_prime(Int(p))) throw ValidationError("subring: p must be prime");
        if (p == 2 && precision < 2)
            throw ValidationError("subring: p = 2 needs precision >= 2 for the binomial map");
        return {Kind::PAdicIntegers, 1, p, precision};
    }
    static SubringDescriptor scaled_integers(Int k) { return {Kind::ScaledIntegers, std::move(k), 0, 0}; }
};

// True iff the binomial map sends S-elements into S: symbolic for Z in Q,
// sampled for p-adics. A non-unital subset (kZ with |k| != 1) is rejected.
inline bool subring_restriction_check(const RingDescriptor& r, const SubringDescriptor& s,
                                      std::uint64_t samples = 256, std::uint64_t seed = 0) {
    SampleRng rng(seed);
    switch (s.kind) {
        case SubringDescriptor::Kind::IntegersInRationals: {
            if (r.kind != RingDescriptor::Kind::Rational)
                throw ValidationError("subring check: Z embeds in Q only");
            // x(x-1) is even for every integer x, so x(x-1)/2 stays integral;
            // spot-check the symbolic fact on samples.
            for (std::uint64_t i = 0; i < samples; ++i) {
                Int x = rng.big_signed(Int(1000000));
                Rat fx = std::get<Rat>(binomial_map(r, Rat(x)));
                if (rat_den(fx) != 1) return false;
            }
            return true;
        }
        case SubringDescriptor::Kind::PAdicIntegers: {
            if (r.kind != RingDescriptor::Kind::PAdic || r.p != s.p)
                throw ValidationError("subring check: p-adic integers embed in the matching Q_p");
            Int pn = int_pow(Int(s.p), Int(s.precision));
            for (std::uint64_t i = 0; i < samples; ++i) {
                TruncatedPAdicInt x(s.p, s.precision, rng.big_below(pn));
                // membership in Z_p is integrality of the residue: automatic,
                // provided the map evaluates without leaving the ring
                binomial_map(r, x);
            }
            return true;
        }
        case SubringDescriptor::Kind::ScaledIntegers: {
            if (r.kind != RingDescriptor::Kind::Integers)
                throw ValidationError("subring check: scaled integers embed in Z only");
            if (s.scale != 1 && s.scale != -1)
                throw ValidationError("subring check: " + s.scale.str() +
                                      "Z contains no multiplicative unit, so it is not a unital subring");
            for (std::uint64_t i = 0; i < samples; ++i) {
                Int x = rng.big_signed(Int(1000000));
                std::get<Int>(binomial_map(r, x));
            }
            return true;
        }
    }
    throw ValidationError("subring check: unknown subring kind");
}

struct TorsionFactor {
    std::uint32_t p;
    std::uint32_t i;
    std::uint32_t multiplicity;
};

struct FreeFactor {
    std::uint32_t p;
    std::uint32_t multiplicity;
};

// Finite-rank stand-in for the profinite classification: either a finite
// product of rings Z/p^i (torsion) or a product of p-adic rings Z_p
// (torsion-free), never mixed.
struct ProfiniteProductDescriptor {
    std::vector<TorsionFactor> torsion;
    std::vector<FreeFactor> torsion_free;
    std::uint32_t truncation = 12;
};

// Componentwise structure on a product of truncated p-adic rings.
struct PAdicProductStructure {
    std::vector<std::uint32_t> primes;  // one entry per component
    std::uint32_t truncation = 12;

    std::vector<TruncatedPAdicInt> witness() const {
        std::vector<TruncatedPAdicInt> out;
        out.reserve(primes.size());
        for (std::uint32_t p : primes) out.emplace_back(p, truncation, Int(1));
        return out;
    }

    std::vector<TruncatedPAdicInt> apply(const std::vector<TruncatedPAdicInt>& x) const {
        if (x.size() != primes.size())
            throw ValidationError("p-adic product: component count mismatch");
        std::vector<TruncatedPAdicInt> out;
        out.reserve(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].prime() != primes[i])
                throw PrimeMismatchError("p-adic product: component " + std::to_string(i) +
                                         " has prime " + std::to_string(x[i].prime()) +
                                         ", expected " + std::to_string(primes[i]));
            out.push_back(padic_binom2(x[i]));
        }
        return out;
    }
};

using ProfiniteStructure = std::variant<JStructure, PAdicProductStructure>;

inline ProfiniteStructure profinite_product(const ProfiniteProductDescriptor& d) {
    if (!d.torsion.empty() && !d.torsion_free.empty())
        throw ValidationError("profinite product: torsion and torsion-free factors cannot be mixed "
                              "in one descriptor");
    if (d.torsion_free.empty()) {
        // torsion case: every element order p^i must be odd
        for (const auto& f : d.torsion)
            if (f.p == 2 && f.multiplicity > 0)
                throw CharacteristicError(
                    "profinite product: torsion factor with p = 2 gives elements of even order, "
                    "but the order of every element must be odd");
        JStructure acc;
        acc.group = share(make_cyclic(1));
        acc.witness = 0;
        acc.fmap = {0};
        acc.verified = true;
        for (const auto& f : d.torsion) {
            if (!is_prime(Int(f.p))) throw ValidationError("profinite product: p must be prime");
            if (f.i < 1) throw ValidationError("profinite product: exponent must be >= 1");
            Int order = int_pow(Int(f.p), Int(f.i));
            if (order > 1000) throw ValidationError("profinite product: factor order too large");
            auto factor = ring_to_jgroup(RingDescriptor::mod(order)).finite.value();
            for (std::uint32_t m = 0; m < f.multiplicity; ++m)
                acc = product_structure(acc, factor);
        }
        return acc;
    }
    if (d.truncation < 1) throw ValidationError("profinite product: truncation must be >= 1");
    PAdicProductStructure out;
    out.truncation = d.truncation;
    for (const auto& f : d.torsion_free) {
        if (!is_prime(Int(f.p))) throw ValidationError("profinite product: p must be prime");
        if (f.p == 2 && d.truncation < 2)
            throw ValidationError("profinite product: p = 2 needs truncation >= 2");
        for (std::uint32_t m = 0; m < f.multiplicity; ++m) out.primes.push_back(f.p);
    }
    return out;
}

}  // namespace jg
