#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "jg/errors.hpp"

namespace jg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return Int(boost::multiprecision::numerator(r)); }
inline Int rat_den(const Rat& r) { return Int(boost::multiprecision::denominator(r)); }

// x(x-1)/2, defined for every integer (negative included).
inline Int binom2(const Int& x) { return x * (x - 1) / 2; }

inline Rat binom2(const Rat& x) { return x * (x - 1) / 2; }

// Floored quotient: the unique q with q*b <= a < (q+1)*b for b > 0 (mirrored for b < 0).
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw NotDivisibleError("floor_div: division by zero");
    Int q = a / b;
    Int r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// Representative of a mod m in [0, m), m >= 1.
inline Int mod_floor(const Int& a, const Int& m) { return a - m * floor_div(a, m); }

inline Int rat_floor(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

struct EgcdResult {
    Int g;  // gcd(a, b) >= 0
    Int x;
    Int y;  // a*x + b*y = g
};

inline EgcdResult egcd(Int a, Int b) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    return {a, x0, y0};
}

// Inverse of a mod m, in [0, m). Throws NotInvertibleError when gcd(a, m) != 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    if (m < 1) throw ValidationError("mod_inverse: modulus must be >= 1");
    if (m == 1) return 0;
    EgcdResult e = egcd(mod_floor(a, m), m);
    if (e.g != 1)
        throw NotInvertibleError("mod_inverse: " + a.str() + " is not invertible mod " + m.str());
    return mod_floor(e.x, m);
}

inline Int int_pow(Int base, Int exp) {
    if (exp < 0) throw ValidationError("int_pow: negative exponent");
    Int out = 1;
    while (exp > 0) {
        if ((exp & 1) != 0) out *= base;
        base *= base;
        exp >>= 1;
    }
    return out;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Arithmetic of residues mod a fixed modulus m >= 1; values kept in [0, m).
class ModRing {
public:
    explicit ModRing(Int modulus) : m_(std::move(modulus)) {
        if (m_ < 1) throw ValidationError("ModRing: modulus must be >= 1");
    }

    const Int& modulus() const { return m_; }
    Int reduce(const Int& x) const { return mod_floor(x, m_); }
    Int add(const Int& a, const Int& b) const { return reduce(a + b); }
    Int sub(const Int& a, const Int& b) const { return reduce(a - b); }
    Int mul(const Int& a, const Int& b) const { return reduce(a * b); }
    Int neg(const Int& a) const { return reduce(-a); }
    Int inverse(const Int& a) const { return mod_inverse(a, m_); }
    Int pow(const Int& a, const Int& e) const {
        if (e < 0) return pow(inverse(a), -e);
        Int base = reduce(a), out = reduce(1), k = e;
        while (k > 0) {
            if ((k & 1) != 0) out = mul(out, base);
            base = mul(base, base);
            k >>= 1;
        }
        return out;
    }

private:
    Int m_;
};

}  // namespace jg
