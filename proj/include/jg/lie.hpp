#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "jg/errors.hpp"
#include "jg/numeric.hpp"

namespace jg {

// Strictly upper triangular n x n rational matrix; nilpotent of index <= n.
struct NilpotentElement {
    std::uint32_t n = 2;
    std::vector<Rat> entries;  // row-major

    const Rat& at(std::uint32_t i, std::uint32_t j) const { return entries[i * n + j]; }
    Rat& at(std::uint32_t i, std::uint32_t j) { return entries[i * n + j]; }

    bool operator==(const NilpotentElement&) const = default;
};

// Upper triangular rational matrix with unit diagonal.
struct UnitriangularMatrix {
    std::uint32_t n = 2;
    std::vector<Rat> entries;  // row-major

    const Rat& at(std::uint32_t i, std::uint32_t j) const { return entries[i * n + j]; }
    Rat& at(std::uint32_t i, std::uint32_t j) { return entries[i * n + j]; }

    bool operator==(const UnitriangularMatrix&) const = default;
};

inline void check_dimension(std::uint32_t n) {
    if (n < 2 || n > 8) throw ValidationError("nilpotent: dimension must be between 2 and 8");
}

inline void check_nilpotent(const NilpotentElement& x) {
    check_dimension(x.n);
    if (x.entries.size() != std::size_t(x.n) * x.n)
        throw ValidationError("nilpotent: entry count must be n*n");
    for (std::uint32_t i = 0; i < x.n; ++i)
        for (std::uint32_t j = 0; j <= i; ++j)
            if (x.at(i, j) != 0)
                throw ValidationError("nilpotent: entries on and below the diagonal must be zero");
}

inline void check_unitriangular(const UnitriangularMatrix& g) {
    check_dimension(g.n);
    if (g.entries.size() != std::size_t(g.n) * g.n)
        throw ValidationError("unitriangular: entry count must be n*n");
    for (std::uint32_t i = 0; i < g.n; ++i) {
        if (g.at(i, i) != 1) throw ValidationError("unitriangular: diagonal must be one");
        for (std::uint32_t j = 0; j < i; ++j)
            if (g.at(i, j) != 0)
                throw ValidationError("unitriangular: entries below the diagonal must be zero");
    }
}

inline NilpotentElement nil_zero(std::uint32_t n) {
    check_dimension(n);
    return {n, std::vector<Rat>(std::size_t(n) * n, Rat(0))};
}

// Elementary matrix E_ij (requires i < j so the result is strictly upper).
inline NilpotentElement nil_basis(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
    check_dimension(n);
    if (i >= j || j >= n) throw ValidationError("nilpotent: basis index must satisfy i < j < n");
    NilpotentElement x = nil_zero(n);
    x.at(i, j) = 1;
    return x;
}

inline UnitriangularMatrix uni_identity(std::uint32_t n) {
    check_dimension(n);
    UnitriangularMatrix g{n, std::vector<Rat>(std::size_t(n) * n, Rat(0))};
    for (std::uint32_t i = 0; i < n; ++i) g.at(i, i) = 1;
    return g;
}

namespace detail {

inline std::vector<Rat> mat_mul(std::uint32_t n, const std::vector<Rat>& a,
                                const std::vector<Rat>& b) {
    std::vector<Rat> out(std::size_t(n) * n, Rat(0));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t k = 0; k < n; ++k) {
            const Rat& aik = a[i * n + k];
            if (aik == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j) out[i * n + j] += aik * b[k * n + j];
        }
    return out;
}

}  // namespace detail

inline NilpotentElement nil_add(const NilpotentElement& x, const NilpotentElement& y) {
    if (x.n != y.n) throw ValidationError("nilpotent: dimension mismatch");
    NilpotentElement out = x;
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += y.entries[i];
    return out;
}

inline NilpotentElement nil_scale(const Rat& c, const NilpotentElement& x) {
    NilpotentElement out = x;
    for (auto& e : out.entries) e *= c;
    return out;
}

inline NilpotentElement nil_neg(const NilpotentElement& x) { return nil_scale(Rat(-1), x); }

inline NilpotentElement nil_sub(const NilpotentElement& x, const NilpotentElement& y) {
    return nil_add(x, nil_neg(y));
}

inline NilpotentElement operator+(const NilpotentElement& x, const NilpotentElement& y) {
    return nil_add(x, y);
}
inline NilpotentElement operator-(const NilpotentElement& x, const NilpotentElement& y) {
    return nil_sub(x, y);
}
inline NilpotentElement operator-(const NilpotentElement& x) { return nil_neg(x); }
inline NilpotentElement operator*(const Rat& c, const NilpotentElement& x) {
    return nil_scale(c, x);
}

inline NilpotentElement nil_mul(const NilpotentElement& x, const NilpotentElement& y) {
    if (x.n != y.n) throw ValidationError("nilpotent: dimension mismatch");
    return {x.n, detail::mat_mul(x.n, x.entries, y.entries)};
}

// [x, y] = xy - yx.
inline NilpotentElement nil_bracket(const NilpotentElement& x, const NilpotentElement& y) {
    check_nilpotent(x);
    check_nilpotent(y);
    if (x.n != y.n) throw ValidationError("nilpotent: dimension mismatch");
    return nil_sub(nil_mul(x, y), nil_mul(y, x));
}

inline UnitriangularMatrix uni_mul(const UnitriangularMatrix& a, const UnitriangularMatrix& b) {
    if (a.n != b.n) throw ValidationError("unitriangular: dimension mismatch");
    return {a.n, detail::mat_mul(a.n, a.entries, b.entries)};
}

// (I + N)^-1 = I - N + N^2 - ... ; finite because N^n = 0.
inline UnitriangularMatrix uni_inverse(const UnitriangularMatrix& g) {
    check_unitriangular(g);
    std::uint32_t n = g.n;
    std::vector<Rat> nil = g.entries;
    for (std::uint32_t i = 0; i < n; ++i) nil[i * n + i] = 0;
    UnitriangularMatrix out = uni_identity(n);
    std::vector<Rat> power = nil;
    Rat sign(-1);
    for (std::uint32_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i < power.size(); ++i) out.entries[i] += sign * power[i];
        power = detail::mat_mul(n, power, nil);
        sign = -sign;
    }
    return out;
}

// exp(x) = I + x + x^2/2! + ... ; the series stops at degree n-1.
inline UnitriangularMatrix nil_exp(const NilpotentElement& x) {
    check_nilpotent(x);
    std::uint32_t n = x.n;
    UnitriangularMatrix out = uni_identity(n);
    std::vector<Rat> power = x.entries;
    Int factorial = 1;
    for (std::uint32_t k = 1; k < n; ++k) {
        factorial *= k;
        Rat coeff = Rat(1) / Rat(factorial);
        for (std::size_t i = 0; i < power.size(); ++i) out.entries[i] += coeff * power[i];
        power = detail::mat_mul(n, power, x.entries);
    }
    return out;
}

// log(I + N) = N - N^2/2 + N^3/3 - ... ; the series stops at degree n-1.
inline NilpotentElement nil_log(const UnitriangularMatrix& g) {
    check_unitriangular(g);
    std::uint32_t n = g.n;
    std::vector<Rat> nil = g.entries;
    for (std::uint32_t i = 0; i < n; ++i) nil[i * n + i] = 0;
    NilpotentElement out = nil_zero(n);
    std::vector<Rat> power = nil;
    Rat sign(1);
    for (std::uint32_t k = 1; k < n; ++k) {
        Rat coeff = sign / Rat(k);
        for (std::size_t i = 0; i < power.size(); ++i) out.entries[i] += coeff * power[i];
        power = detail::mat_mul(n, power, nil);
        sign = -sign;
    }
    return out;
}

// The group law pulled back through exp: x * y = log(exp(x) exp(y)).
inline NilpotentElement bch_product(const NilpotentElement& x, const NilpotentElement& y) {
    if (x.n != y.n) throw ValidationError("nilpotent: dimension mismatch");
    return nil_log(uni_mul(nil_exp(x), nil_exp(y)));
}

// Strict-upper basis positions in row-major order.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> strict_upper_positions(
    std::uint32_t n) {
    check_dimension(n);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

// Basis elements annihilated by every bracket; spans the center.
inline std::vector<NilpotentElement> center_basis(std::uint32_t n) {
    check_dimension(n);
    auto positions = strict_upper_positions(n);
    std::vector<NilpotentElement> basis;
    for (auto [i, j] : positions) basis.push_back(nil_basis(n, i, j));
    std::vector<NilpotentElement> out;
    for (const auto& c : basis) {
        bool central = true;
        for (const auto& x : basis)
            if (nil_bracket(c, x) != nil_zero(n)) {
                central = false;
                break;
            }
        if (central) out.push_back(c);
    }
    return out;
}

inline bool nil_is_central(const NilpotentElement& x) {
    check_nilpotent(x);
    for (auto [i, j] : strict_upper_positions(x.n))
        if (nil_bracket(x, nil_basis(x.n, i, j)) != nil_zero(x.n)) return false;
    return true;
}

// Linear functional on the algebra, as coefficients over the strict-upper
// basis in row-major order.
inline std::vector<Rat> coefficient_functional(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
    auto positions = strict_upper_positions(n);
    std::vector<Rat> out(positions.size(), Rat(0));
    for (std::size_t k = 0; k < positions.size(); ++k)
        if (positions[k] == std::pair<std::uint32_t, std::uint32_t>{i, j}) out[k] = 1;
    return out;
}

// f(x) = P(x)*(x - P(x)*w) + binom2(P(x))*w with w nonzero central and
// P(w) = 1. Because [f(x), x] = 0 and w is central, the group products
// x*w and f(x)*x collapse to sums, and f(x*w) = f(x)*x holds exactly.
struct NilpotentJStructure {
    std::uint32_t n = 2;
    NilpotentElement witness;
    std::vector<Rat> coeffs;

    Rat project(const NilpotentElement& x) const {
        check_nilpotent(x);
        if (x.n != n) throw ValidationError("nilpotent: dimension mismatch");
        auto positions = strict_upper_positions(n);
        Rat out(0);
        for (std::size_t k = 0; k < positions.size(); ++k)
            out += coeffs[k] * x.at(positions[k].first, positions[k].second);
        return out;
    }

    NilpotentElement apply(const NilpotentElement& x) const {
        Rat p = project(x);
        return nil_add(nil_scale(p, nil_sub(x, nil_scale(p, witness))),
                       nil_scale(binom2(p), witness));
    }
};

inline NilpotentJStructure nilpotent_jstructure(std::uint32_t n, const NilpotentElement& w,
                                                const std::vector<Rat>& coeffs) {
    check_dimension(n);
    check_nilpotent(w);
    if (w.n != n) throw ValidationError("nilpotent: dimension mismatch");
    if (w == nil_zero(n)) throw ValidationError("nilpotent structure: witness must be nonzero");
    if (!nil_is_central(w)) throw ValidationError("nilpotent structure: witness must be central");
    if (coeffs.size() != strict_upper_positions(n).size())
        throw ValidationError("nilpotent structure: functional coefficient count mismatch");
    NilpotentJStructure s{n, w, coeffs};
    if (s.project(w) != 1)
        throw ValidationError("nilpotent structure: P(witness) must be exactly 1");
    return s;
}

}  // namespace jg
