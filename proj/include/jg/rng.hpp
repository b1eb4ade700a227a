#pragma once

#include <cstdint>
#include <random>

#include "jg/errors.hpp"
#include "jg/numeric.hpp"

namespace jg {

// mt19937_64 with hand-rolled rejection sampling, so streams are identical
// across standard libraries for a given seed.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed = 0) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw ValidationError("SampleRng::below: empty range");
        if (n == 1) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            std::uint64_t v = engine_();
            if (v < limit) return v % n;
        }
    }

    // Uniform in [lo, hi] inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        if (lo > hi) throw ValidationError("SampleRng::range: lo > hi");
        return lo + below(hi - lo + 1);
    }

    // Uniform in [0, n) for arbitrary-precision n >= 1: assemble msb-first bits,
    // reject values >= n.
    Int big_below(const Int& n) {
        if (n < 1) throw ValidationError("SampleRng::big_below: empty range");
        if (n == 1) return 0;
        std::size_t bits = boost::multiprecision::msb(n - 1) + 1;
        for (;;) {
            Int v = 0;
            std::size_t got = 0;
            while (got < bits) {
                std::size_t take = bits - got < 64 ? bits - got : 64;
                std::uint64_t chunk = engine_() >> (64 - take);
                v <<= static_cast<unsigned>(take);
                v += chunk;
                got += take;
            }
            if (v < n) return v;
        }
    }

    // Uniform signed integer in [-bound, bound].
    Int big_signed(const Int& bound) {
        if (bound < 0) throw ValidationError("SampleRng::big_signed: negative bound");
        return big_below(2 * bound + 1) - bound;
    }

    // Random rational with numerator in [-max_num, max_num], denominator in [1, max_den].
    Rat rational(const Int& max_num, const Int& max_den) {
        Int num = big_signed(max_num);
        Int den = 1 + big_below(max_den);
        return Rat(num, den);
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

}  // namespace jg
