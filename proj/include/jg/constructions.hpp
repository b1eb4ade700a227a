#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jg/errors.hpp"
#include "jg/group.hpp"
#include "jg/jstructure.hpp"
#include "jg/numeric.hpp"
#include "jg/quadratic.hpp"
#include "jg/rings.hpp"

namespace jg {

inline RingElement ring_add(const RingDescriptor& r, const RingElement& a, const RingElement& b) {
    switch (r.kind) {
        case RingDescriptor::Kind::Integers: return Int(std::get<Int>(a) + std::get<Int>(b));
        case RingDescriptor::Kind::Rational: return Rat(std::get<Rat>(a) + std::get<Rat>(b));
        case RingDescriptor::Kind::Mod:
            return mod_floor(std::get<Int>(a) + std::get<Int>(b), r.modulus);
        case RingDescriptor::Kind::PAdic:
            return padic_add(std::get<TruncatedPAdicInt>(a), std::get<TruncatedPAdicInt>(b));
    }
    throw ValidationError("ring add: unknown ring kind");
}

inline RingElement ring_mul(const RingDescriptor& r, const RingElement& a, const RingElement& b) {
    switch (r.kind) {
        case RingDescriptor::Kind::Integers: return Int(std::get<Int>(a) * std::get<Int>(b));
        case RingDescriptor::Kind::Rational: return Rat(std::get<Rat>(a) * std::get<Rat>(b));
        case RingDescriptor::Kind::Mod:
            return mod_floor(std::get<Int>(a) * std::get<Int>(b), r.modulus);
        case RingDescriptor::Kind::PAdic:
            return padic_mul(std::get<TruncatedPAdicInt>(a), std::get<TruncatedPAdicInt>(b));
    }
    throw ValidationError("ring mul: unknown ring kind");
}

// A rational vector space Q^rank with a linear functional P (coefficient
// vector) and a witness w normalized by P(w) = 1.
struct ModuleDescriptor {
    std::uint32_t rank = 1;
    std::vector<Rat> projection;  // P(x) = sum projection[i] * x[i]
    std::vector<Rat> witness;

    static ModuleDescriptor coordinate(std::uint32_t rank, std::uint32_t index) {
        if (rank < 1) throw ValidationError("module: rank must be >= 1");
        if (index >= rank) throw ValidationError("module: projection index out of range");
        ModuleDescriptor m;
        m.rank = rank;
        m.projection.assign(rank, Rat(0));
        m.projection[index] = 1;
        m.witness.assign(rank, Rat(0));
        m.witness[index] = 1;
        return m;
    }
};

inline void check_module(const ModuleDescriptor& m) {
    if (m.rank < 1) throw ValidationError("module: rank must be >= 1");
    if (m.projection.size() != m.rank || m.witness.size() != m.rank)
        throw ValidationError("module: projection/witness length must equal the rank");
    Rat pw(0);
    for (std::uint32_t i = 0; i < m.rank; ++i) pw += m.projection[i] * m.witness[i];
    if (pw != 1) throw ValidationError("module: P(witness) must be exactly 1");
}

inline Rat module_project(const ModuleDescriptor& m, const std::vector<Rat>& x) {
    if (x.size() != m.rank) throw ValidationError("module: element length must equal the rank");
    Rat out(0);
    for (std::uint32_t i = 0; i < m.rank; ++i) out += m.projection[i] * x[i];
    return out;
}

// f(x) = P(x)*(x - P(x)*w) + binom2(P(x))*w; satisfies f(x+w) = f(x) + x.
inline std::vector<Rat> module_projection_structure(const ModuleDescriptor& m,
                                                    const std::vector<Rat>& x) {
    check_module(m);
    Rat p = module_project(m, x);
    Rat b = binom2(p);
    std::vector<Rat> out(m.rank);
    for (std::uint32_t i = 0; i < m.rank; ++i)
        out[i] = p * (x[i] - p * m.witness[i]) + b * m.witness[i];
    return out;
}

// The product R x R^rank with witness (1, 0) and f(r, v) = (f_R(r), r*v).
// Finite rings get a fully verified table; the others act through apply().
struct RingTimesModule {
    RingDescriptor ring;
    std::uint32_t rank = 1;
    std::optional<JStructure> finite;

    std::pair<RingElement, std::vector<RingElement>> apply(
        const RingElement& r, const std::vector<RingElement>& v) const {
        if (v.size() != rank) throw ValidationError("ring x module: element rank mismatch");
        std::vector<RingElement> rv;
        rv.reserve(rank);
        for (const auto& c : v) rv.push_back(ring_mul(ring, r, c));
        return {binomial_map(ring, r), std::move(rv)};
    }
};

inline RingTimesModule ring_times_module_structure(const RingDescriptor& r, std::uint32_t rank) {
    if (rank < 1) throw ValidationError("ring x module: rank must be >= 1");
    ring_to_jgroup(r);  // characteristic gate
    RingTimesModule out{r, rank, std::nullopt};
    if (r.kind == RingDescriptor::Kind::Mod) {
        std::uint32_t m = static_cast<std::uint32_t>(r.modulus);
        FiniteGroup base = make_cyclic(m);
        FiniteGroup grp = base;
        for (std::uint32_t i = 0; i < rank; ++i) grp = make_direct_product(grp, base);
        std::uint32_t order = grp.order();
        auto decode = [&](element_t idx) {
            std::vector<std::uint32_t> digits(rank + 1);
            for (std::uint32_t i = rank + 1; i-- > 0;) {
                digits[i] = idx % m;
                idx /= m;
            }
            return digits;  // digits[0] = r, digits[1..] = v
        };
        JStructure s;
        s.group = share(std::move(grp));
        std::uint64_t w = 1;
        for (std::uint32_t i = 0; i < rank; ++i) w *= m;
        s.witness = m == 1 ? 0 : static_cast<element_t>(w);
        s.fmap.resize(order);
        for (element_t idx = 0; idx < order; ++idx) {
            auto digits = decode(idx);
            Int fr = std::get<Int>(binomial_map(r, Int(digits[0])));
            std::uint64_t acc = static_cast<std::uint64_t>(fr);
            for (std::uint32_t i = 1; i <= rank; ++i)
                acc = acc * m + std::uint64_t(digits[0]) * digits[i] % m;
            s.fmap[idx] = static_cast<element_t>(acc);
        }
        if (!verify_axiom(s).valid) throw Error("ring x module: verification failed");
        s.verified = true;
        out.finite = std::move(s);
    }
    return out;
}

// The group Z x H with witness (1, 1_H) and f(k, u) = (binom2(k), u^k),
// verified exhaustively on the window |k| <= k_window.
struct ZCrossHStructure {
    GroupPtr h;
    Int k_window;
    bool window_verified = false;

    std::pair<Int, element_t> witness() const { return {1, h->identity()}; }

    std::pair<Int, element_t> apply(const Int& k, element_t u) const {
        h->at(u);
        return {binom2(k), h->power(u, k)};
    }
};

inline ZCrossHStructure z_times_h(GroupPtr h, Int k_window = Int(25)) {
    if (!h) throw ValidationError("z x h: missing group");
    if (k_window < 1) throw ValidationError("z x h: window must be >= 1");
    ZCrossHStructure s{std::move(h), std::move(k_window), false};
    const FiniteGroup& grp = *s.h;
    for (Int k = -s.k_window; k <= s.k_window; ++k)
        for (element_t u = 0; u < grp.order(); ++u) {
            auto fx = s.apply(k, u);
            auto fxw = s.apply(k + 1, u);
            if (fxw.first != fx.first + k || fxw.second != grp.compose(fx.second, u))
                throw Error("z x h: window verification failed");
        }
    s.window_verified = true;
    return s;
}

// The general form behind z_times_h, phrased through a central witness and an
// integer projection P with P(x*w) = P(x) + 1:
//   f(x) = (x * w^-P(x))^P(x) * w^binom2(P(x)).
// The domain is Z x H with w = (1, h_witness) and P = first coordinate + c.
struct CentralProjectionStructure {
    GroupPtr h;
    element_t h_witness = 0;
    Int p_offset = 0;

    Int project(const Int& k) const { return k + p_offset; }

    std::pair<Int, element_t> apply(const Int& k, element_t u) const {
        const FiniteGroup& grp = *h;
        grp.at(u);
        Int p = project(k);
        // x * w^-P = (k - P, u * hw^-P), raised to the P-th power, times
        // w^binom2(P); the Z coordinate collapses to P(k-P) + binom2(P).
        element_t base = grp.compose(u, grp.power(h_witness, -p));
        element_t hpart = grp.compose(grp.power(base, p), grp.power(h_witness, binom2(p)));
        return {p * (k - p) + binom2(p), hpart};
    }
};

inline CentralProjectionStructure central_projection_structure(GroupPtr h, element_t h_witness,
                                                               Int p_offset = Int(0),
                                                               Int check_window = Int(12)) {
    if (!h) throw ValidationError("central projection: missing group");
    h->at(h_witness);
    if (centralizer(*h, h_witness).size() != h->order())
        throw ValidationError("central projection: the witness must be central");
    CentralProjectionStructure s{std::move(h), h_witness, std::move(p_offset)};
    // P(x*w) = P(x) + 1 by construction; spot-check the shift plus the axiom
    // f(x*w) = f(x)*x on the window.
    const FiniteGroup& grp = *s.h;
    for (Int k = -check_window; k <= check_window; ++k) {
        if (s.project(k + 1) != s.project(k) + 1)
            throw Error("central projection: projection shift violated");
        for (element_t u = 0; u < grp.order(); ++u) {
            auto fx = s.apply(k, u);
            auto fxw = s.apply(k + 1, grp.compose(u, s.h_witness));
            std::pair<Int, element_t> rhs{fx.first + k, grp.compose(fx.second, u)};
            if (fxw != rhs) throw Error("central projection: axiom violated on the window");
        }
    }
    return s;
}

// A dense subgroup Z + Z*sqrt2 of the reals, with witness w in G and a cut
// point alpha outside G. P(x) = floor((x - alpha)/w) shifts by one along w,
// which drives the abelian projection formula.
struct RealSubgroupDescriptor {
    QuadRat witness{Rat(1), Rat(0)};
    QuadRat alpha{Rat(0), Rat(1, 2)};  // sqrt2/2, exactly outside Z + Z*sqrt2
};

inline bool real_subgroup_contains(const QuadRat& x) {
    return rat_den(x.a) == 1 && rat_den(x.b) == 1;
}

inline void check_real_subgroup(const RealSubgroupDescriptor& d) {
    if (quad_sign(d.witness) == 0) throw ValidationError("real subgroup: witness must be nonzero");
    if (!real_subgroup_contains(d.witness))
        throw ValidationError("real subgroup: witness must lie in Z + Z*sqrt2");
    if (real_subgroup_contains(d.alpha))
        throw ValidationError("real subgroup: alpha must lie outside Z + Z*sqrt2");
}

inline Int real_subgroup_project(const RealSubgroupDescriptor& d, const QuadRat& x) {
    check_real_subgroup(d);
    if (!real_subgroup_contains(x))
        throw ValidationError("real subgroup: element must lie in Z + Z*sqrt2");
    return quad_floor((x - d.alpha) / d.witness);
}

// f(x) = P(x)*(x - P(x)*w) + binom2(P(x))*w; satisfies f(x+w) = f(x) + x.
inline QuadRat real_subgroup_structure(const RealSubgroupDescriptor& d, const QuadRat& x) {
    Int p = real_subgroup_project(d, x);
    QuadRat pw{Rat(p), Rat(0)};
    QuadRat b{Rat(binom2(p)), Rat(0)};
    return pw * (x - pw * d.witness) + b * d.witness;
}

}  // namespace jg
