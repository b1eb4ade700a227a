#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jg/errors.hpp"
#include "jg/group.hpp"
#include "jg/numeric.hpp"

namespace jg {

// The defining identity comes in four flavors, depending on which side the
// witness multiplies and which side the increment lands:
//   J1: f(x*w) = x*f(x)    J2: f(x*w) = f(x)*x   (default)
//   J3: f(w*x) = x*f(x)    J4: f(w*x) = f(x)*x
enum class Variant { J1, J2, J3, J4 };

inline const char* variant_name(Variant v) {
    switch (v) {
        case Variant::J1: return "J1";
        case Variant::J2: return "J2";
        case Variant::J3: return "J3";
        case Variant::J4: return "J4";
    }
    return "?";
}

// A candidate pair (witness w, self-map f) on a finite group.
struct JStructure {
    GroupPtr group;
    element_t witness = 0;
    std::vector<element_t> fmap;
    Variant variant = Variant::J2;
    bool verified = false;
};

inline void check_well_formed(const JStructure& s) {
    if (!s.group) throw ValidationError("structure: missing group");
    std::uint32_t n = s.group->order();
    if (s.witness >= n) throw ValidationError("structure: witness index out of range");
    if (s.fmap.size() != n) throw ValidationError("structure: fmap length != group order");
    for (element_t v : s.fmap)
        if (v >= n) throw ValidationError("structure: fmap entry out of range");
}

struct Violation {
    element_t x;
    element_t lhs;
    element_t rhs;
};

struct VerificationReport {
    bool valid = false;
    std::vector<Violation> violations;
    std::uint64_t checks_performed = 0;
};

// Check the selected variant identity at every x; report every violation.
inline VerificationReport verify_axiom(const JStructure& s) {
    check_well_formed(s);
    const FiniteGroup& g = *s.group;
    std::uint32_t n = g.order();
    VerificationReport report;
    for (element_t x = 0; x < n; ++x) {
        element_t arg = (s.variant == Variant::J1 || s.variant == Variant::J2)
                            ? g.compose(x, s.witness)
                            : g.compose(s.witness, x);
        element_t lhs = s.fmap[arg];
        element_t rhs = (s.variant == Variant::J1 || s.variant == Variant::J3)
                            ? g.compose(x, s.fmap[x])
                            : g.compose(s.fmap[x], x);
        ++report.checks_performed;
        if (lhs != rhs) report.violations.push_back({x, lhs, rhs});
    }
    report.valid = report.violations.empty();
    return report;
}

struct WitnessReport {
    bool admissible = false;
    std::string reason;
};

// Necessary conditions on a witness: its order must be odd, every element
// commuting with it must have order dividing it, and only the trivial group
// admits the identity as witness.
inline WitnessReport check_witness_necessary(const FiniteGroup& g, element_t w) {
    g.at(w);
    std::uint32_t d = g.element_order(w);
    if (d % 2 == 0)
        return {false, "witness order " + std::to_string(d) + " is even"};
    if (w == g.identity() && g.order() > 1)
        return {false, "identity witness forces the trivial group"};
    for (element_t y : centralizer(g, w).elements()) {
        std::uint32_t k = g.element_order(y);
        if (d % k != 0)
            return {false, "element " + std::to_string(y) + " commutes with the witness but has order " +
                               std::to_string(k) + ", which does not divide " + std::to_string(d)};
    }
    return {true, "witness order " + std::to_string(d) + " is odd and all centralizer orders divide it"};
}

// For x commuting with w and any integer n:
//   f(x * w^n) = f(x) * x^n * w^binom2(n).
// Requires a verified default-variant structure.
inline bool shift_identity_oracle(const JStructure& s, element_t x, const Int& n) {
    check_well_formed(s);
    if (s.variant != Variant::J2) throw ValidationError("shift identity: requires the default variant");
    if (!s.verified && !verify_axiom(s).valid)
        throw ValidationError("shift identity: structure is not verified");
    const FiniteGroup& g = *s.group;
    g.at(x);
    if (g.compose(x, s.witness) != g.compose(s.witness, x))
        throw ValidationError("shift identity: element does not commute with the witness");
    element_t lhs = s.fmap[g.compose(x, g.power(s.witness, n))];
    element_t rhs = g.compose(g.compose(s.fmap[x], g.power(x, n)), g.power(s.witness, binom2(n)));
    return lhs == rhs;
}

struct TrivialityDiagnostics {
    bool f_injective = false;
    bool f_homomorphism = false;
    bool witness_is_identity = false;
    bool group_trivial = false;
    // informational: whether the witness commutes with everything
    bool witness_central = false;
};

// The four equivalent triviality criteria; on any verified structure they all
// agree (all true exactly on the trivial group).
inline TrivialityDiagnostics triviality_diagnostics(const JStructure& s) {
    check_well_formed(s);
    if (!s.verified && !verify_axiom(s).valid)
        throw ValidationError("triviality diagnostics: structure is not verified");
    const FiniteGroup& g = *s.group;
    std::uint32_t n = g.order();
    TrivialityDiagnostics d;
    std::vector<bool> seen(n, false);
    d.f_injective = true;
    for (element_t v : s.fmap) {
        if (seen[v]) {
            d.f_injective = false;
            break;
        }
        seen[v] = true;
    }
    d.f_homomorphism = true;
    for (element_t a = 0; a < n && d.f_homomorphism; ++a)
        for (element_t b = 0; b < n; ++b)
            if (s.fmap[g.compose(a, b)] != g.compose(s.fmap[a], s.fmap[b])) {
                d.f_homomorphism = false;
                break;
            }
    d.witness_is_identity = s.witness == g.identity();
    d.group_trivial = n == 1;
    d.witness_central = centralizer(g, s.witness).size() == n;
    return d;
}

// Componentwise structure on the direct product of two verified structures
// sharing a variant.
inline JStructure product_structure(const JStructure& s1, const JStructure& s2) {
    check_well_formed(s1);
    check_well_formed(s2);
    if (s1.variant != s2.variant) throw ValidationError("product structure: variant mismatch");
    if ((!s1.verified && !verify_axiom(s1).valid) || (!s2.verified && !verify_axiom(s2).valid))
        throw ValidationError("product structure: inputs must be verified");
    GroupPtr prod = share(make_direct_product(*s1.group, *s2.group));
    std::uint32_t nh = s2.group->order();
    JStructure out;
    out.group = prod;
    out.variant = s1.variant;
    out.witness = s1.witness * nh + s2.witness;
    out.fmap.resize(prod->order());
    for (element_t a = 0; a < s1.group->order(); ++a)
        for (element_t b = 0; b < nh; ++b) out.fmap[a * nh + b] = s1.fmap[a] * nh + s2.fmap[b];
    out.verified = verify_axiom(out).valid;
    if (!out.verified) throw Error("product structure: componentwise map failed verification");
    return out;
}

}  // namespace jg
