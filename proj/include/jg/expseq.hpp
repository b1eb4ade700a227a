#pragma once

#include <cstdint>
#include <vector>

#include "jg/errors.hpp"
#include "jg/group.hpp"
#include "jg/numeric.hpp"
#include "jg/padic.hpp"
#include "jg/rings.hpp"
#include "jg/rng.hpp"

namespace jg {

// A finite truncation of a sequence of nonzero integer exponents.
struct ExponentSequence {
    std::vector<Int> terms;

    static ExponentSequence constant(const Int& value, std::size_t length) {
        return ExponentSequence{std::vector<Int>(length, value)};
    }

    static ExponentSequence geometric(const Int& base, std::size_t length) {
        ExponentSequence s;
        Int acc = base;
        for (std::size_t k = 0; k < length; ++k) {
            s.terms.push_back(acc);
            acc *= base;
        }
        return s;
    }
};

inline void check_exponent_sequence(const ExponentSequence& s) {
    if (s.terms.empty())
        throw ValidationError("exponent sequence: at least one term is required");
    for (const Int& t : s.terms)
        if (t == 0) throw ValidationError("exponent sequence: terms must be nonzero");
}

// Discrete convergence on a finite truncation: the listed powers have settled
// at the identity by the end, i.e. every violation sits in a proper prefix.
inline bool check_exponent_sequence_finite(const FiniteGroup& g, element_t x,
                                           const ExponentSequence& s) {
    check_exponent_sequence(s);
    g.at(x);
    return g.power(x, s.terms.back()) == g.identity();
}

// p-adic convergence at working precision: the valuation of term*x reaches
// the target somewhere in the list and never decreases afterwards.
inline bool check_exponent_sequence_padic(const TruncatedPAdicInt& x, const ExponentSequence& s,
                                          std::uint32_t valuation_target) {
    check_exponent_sequence(s);
    if (valuation_target > x.precision())
        throw PrecisionError("exponent sequence: valuation target exceeds the working precision");
    bool reached = false;
    std::uint32_t prev = 0;
    for (const Int& t : s.terms) {
        TruncatedPAdicInt scaled(x.prime(), x.precision(), x.residue() * t);
        std::uint32_t v = scaled.valuation();
        if (reached && v < prev) return false;
        if (!reached && v >= valuation_target) reached = true;
        prev = v;
    }
    return reached;
}

// Evidence that one exponent sequence for the witness already works for every
// sampled element, together with the intermediate claim that binom2(n_k)*w
// tends to zero.
struct PropagationReport {
    std::uint32_t samples_requested = 0;
    std::uint32_t samples_passed = 0;
    bool witness_ok = false;
    bool binom_claim_ok = false;
    std::uint32_t valuation_target = 0;           // p-adic runs only
    std::vector<std::uint32_t> witness_valuations;  // p-adic runs only

    bool all_pass() const {
        return witness_ok && binom_claim_ok && samples_passed == samples_requested;
    }
};

inline PropagationReport pointwise_propagation_demo(const RingJGroup& structure,
                                                    const ExponentSequence& s,
                                                    std::uint32_t sample_count,
                                                    std::uint64_t seed = 0) {
    check_exponent_sequence(s);
    PropagationReport report;

    if (structure.ring.kind == RingDescriptor::Kind::PAdic) {
        std::uint32_t p = structure.ring.p;
        std::uint32_t n = structure.ring.precision;
        TruncatedPAdicInt w(p, n, Int(1));

        // The demo's target is the deepest valuation the sequence drives the
        // witness to; a sequence that never moves the witness is rejected.
        std::uint32_t target = 0;
        for (const Int& t : s.terms) {
            TruncatedPAdicInt scaled(p, n, w.residue() * t);
            report.witness_valuations.push_back(scaled.valuation());
            if (scaled.valuation() > target) target = scaled.valuation();
        }
        if (target == 0 || !check_exponent_sequence_padic(w, s, target))
            throw ValidationError(
                "propagation demo: the sequence is not an exponent sequence for the witness");
        report.valuation_target = target;
        report.witness_ok = true;

        // binom2(n_k)*w -> 0; over the 2-adics the halving costs one digit.
        std::uint32_t binom_target = p == 2 ? target - 1 : target;
        ExponentSequence binoms;
        for (const Int& t : s.terms) binoms.terms.push_back(binom2(t));
        report.binom_claim_ok =
            binom_target == 0 || check_exponent_sequence_padic(w, binoms, binom_target);

        report.samples_requested = sample_count;
        SampleRng rng(seed);
        Int modulus = int_pow(Int(p), n);
        for (std::uint32_t i = 0; i < sample_count; ++i) {
            TruncatedPAdicInt x(p, n, rng.big_below(modulus));
            if (check_exponent_sequence_padic(x, s, target)) ++report.samples_passed;
        }
        return report;
    }

    if (structure.ring.kind == RingDescriptor::Kind::Mod) {
        if (!structure.finite)
            throw ValidationError("propagation demo: modular structure carries no finite table");
        const JStructure& js = *structure.finite;
        const FiniteGroup& g = *js.group;
        if (!check_exponent_sequence_finite(g, js.witness, s))
            throw ValidationError(
                "propagation demo: the sequence is not an exponent sequence for the witness");
        report.witness_ok = true;

        // binom2(n_k)*w must settle at zero as well.
        Int bw = mod_floor(binom2(s.terms.back()) * js.witness, g.order());
        report.binom_claim_ok = bw == 0;

        report.samples_requested = g.order();
        for (element_t x = 0; x < g.order(); ++x)
            if (check_exponent_sequence_finite(g, x, s)) ++report.samples_passed;
        return report;
    }

    throw ValidationError("propagation demo: requires a modular or p-adic structure");
}

}  // namespace jg
