// The binomial map f(x) = x(x-1)/2 on the 3-adic integers, truncated to 12
// digits: its increments along the powers of 3 gain exactly one digit of
// divisibility per step, which is what makes (3^k) an exponent sequence.

#include <iostream>

#include "jg/expseq.hpp"
#include "jg/rings.hpp"

int main() {
    using namespace jg;
    const std::uint32_t precision = 12;
    auto rj = ring_to_jgroup(RingDescriptor::padic(3, precision));

    std::cout << "f(x) = x(x-1)/2 on Z_3 at " << precision << " digits\n\n";
    std::cout << "k   n_k = 3^k   v_3(f(n_k))\n";
    for (std::uint32_t k = 1; k <= 10; ++k) {
        Int nk = int_pow(Int(3), Int(k));
        TruncatedPAdicInt fnk(3, precision, binom2(nk));
        std::cout << k << (k < 10 ? "   " : "  ") << nk.str()
                  << std::string(nk.str().size() < 10 ? 11 - nk.str().size() : 1, ' ')
                  << fnk.valuation() << "\n";
    }

    auto seq = ExponentSequence::geometric(Int(3), 10);
    auto report = pointwise_propagation_demo(rj, seq, 200, 1);
    std::cout << "\npointwise propagation of f(x + n_k) = f(x) + n_k * x + f(n_k):\n"
              << "  witness valuations reach " << report.valuation_target
              << " and stay there: " << (report.witness_ok ? "yes" : "no") << "\n"
              << "  f(n_k) valuation claim: " << (report.binom_claim_ok ? "holds" : "fails")
              << "\n  random elements passing all steps: " << report.samples_passed << "/"
              << report.samples_requested << "\n";
    return report.all_pass() ? 0 : 1;
}
