#pragma once

#include <string>
#include <utility>

#include "jg/errors.hpp"
#include "jg/numeric.hpp"

namespace jg {

// The real number a + b*sqrt(2) with rational a, b. All comparisons are exact:
// sign analysis needs at most one squaring, never floating point.
struct QuadRat {
    Rat a;
    Rat b;

    QuadRat() : a(0), b(0) {}
    QuadRat(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit QuadRat(const Int& n) : a(n), b(0) {}

    bool operator==(const QuadRat& o) const { return a == o.a && b == o.b; }

    std::string str() const {
        Rat num = a;
        std::string s = "(" + rat_num(a).str();
        if (rat_den(a) != 1) s += "/" + rat_den(a).str();
        s += ") + (" + rat_num(b).str();
        if (rat_den(b) != 1) s += "/" + rat_den(b).str();
        return s + ")*sqrt2";
    }
};

inline QuadRat operator+(const QuadRat& x, const QuadRat& y) { return {x.a + y.a, x.b + y.b}; }
inline QuadRat operator-(const QuadRat& x, const QuadRat& y) { return {x.a - y.a, x.b - y.b}; }
inline QuadRat operator-(const QuadRat& x) { return {-x.a, -x.b}; }

inline QuadRat operator*(const QuadRat& x, const QuadRat& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}

// Division by a nonzero element: multiply by the conjugate; the norm
// a^2 - 2b^2 vanishes only at zero because sqrt(2) is irrational.
inline QuadRat operator/(const QuadRat& x, const QuadRat& y) {
    Rat norm = y.a * y.a - 2 * y.b * y.b;
    if (norm == 0) throw NotDivisibleError("QuadRat: division by zero");
    return {(x.a * y.a - 2 * x.b * y.b) / norm, (x.b * y.a - x.a * y.b) / norm};
}

// Sign of a + b*sqrt(2): when a and b disagree in sign, compare a^2 with 2b^2.
inline int quad_sign(const QuadRat& x) {
    int sa = x.a == 0 ? 0 : (x.a > 0 ? 1 : -1);
    int sb = x.b == 0 ? 0 : (x.b > 0 ? 1 : -1);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rat aa = x.a * x.a;
    Rat bb = 2 * x.b * x.b;
    if (aa == bb) return 0;  // unreachable for nonzero b: sqrt(2) is irrational
    return aa > bb ? sa : sb;
}

inline bool operator<(const QuadRat& x, const QuadRat& y) { return quad_sign(x - y) < 0; }
inline bool operator>(const QuadRat& x, const QuadRat& y) { return quad_sign(x - y) > 0; }
inline bool operator<=(const QuadRat& x, const QuadRat& y) { return quad_sign(x - y) <= 0; }
inline bool operator>=(const QuadRat& x, const QuadRat& y) { return quad_sign(x - y) >= 0; }

// The unique integer m with m <= a + b*sqrt(2) < m + 1, found by binary search
// over exact integer comparisons (|b*sqrt(2)| < 2|b| + 1 bounds the bracket).
inline Int quad_floor(const QuadRat& x) {
    Int slack = 2 * rat_ceil(boost::multiprecision::abs(x.b)) + 1;
    Int lo = rat_floor(x.a) - slack;
    Int hi = rat_ceil(x.a) + slack;
    // Invariant: lo <= x < hi.
    while (hi - lo > 1) {
        Int mid = floor_div(lo + hi, 2);
        if (quad_sign(x - QuadRat(mid)) >= 0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace jg
