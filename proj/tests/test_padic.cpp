#include <catch2/catch_amalgamated.hpp>

#include "jg/padic.hpp"
#include "jg/rng.hpp"

using jg::Int;
using jg::TruncatedPAdicInt;

TEST_CASE("p-adic construction validates and reduces", "[padic]") {
    TruncatedPAdicInt x(3, 2, Int(10));
    CHECK(x.residue() == 1);
    CHECK(x.modulus() == 9);
    TruncatedPAdicInt y(3, 2, Int(-1));
    CHECK(y.residue() == 8);
    CHECK_THROWS_AS(TruncatedPAdicInt(4, 2, Int(1)), jg::ValidationError);
    CHECK_THROWS_AS(TruncatedPAdicInt(1, 2, Int(1)), jg::ValidationError);
    CHECK_THROWS_AS(TruncatedPAdicInt(3, 0, Int(1)), jg::ValidationError);
}

TEST_CASE("p-adic add and mul take min precision", "[padic]") {
    TruncatedPAdicInt a(3, 4, Int(5)), b(3, 4, Int(4));
    auto s = jg::padic_add(a, b);
    CHECK(s.residue() == 9);
    CHECK(s.precision() == 4);

    TruncatedPAdicInt c(3, 2, Int(4));
    auto p = jg::padic_mul(a, c);
    CHECK(p.residue() == 2);  // 20 mod 9
    CHECK(p.precision() == 2);

    TruncatedPAdicInt u(2, 4, Int(15)), v(2, 4, Int(1));
    auto w = jg::padic_add(u, v);
    CHECK(w.residue() == 0);  // carries leave the window
    CHECK(w.precision() == 4);

    TruncatedPAdicInt other(5, 4, Int(1));
    CHECK_THROWS_AS(jg::padic_add(a, other), jg::PrimeMismatchError);
    CHECK_THROWS_AS(jg::padic_mul(a, other), jg::PrimeMismatchError);

    auto d = jg::padic_sub(a, b);
    CHECK(d.residue() == 1);
    CHECK(jg::padic_neg(b).residue() == 81 - 4);
}

TEST_CASE("exact halving at p = 2 costs one digit", "[padic]") {
    TruncatedPAdicInt x(2, 4, Int(6));
    auto h = jg::padic_exact_div2(x);
    CHECK(h.residue() == 3);
    CHECK(h.precision() == 3);

    auto z = jg::padic_exact_div2(TruncatedPAdicInt(2, 4, Int(0)));
    CHECK(z.residue() == 0);
    CHECK(z.precision() == 3);

    CHECK_THROWS_AS(jg::padic_exact_div2(TruncatedPAdicInt(2, 4, Int(5))), jg::NotDivisibleError);
    CHECK_THROWS_AS(jg::padic_exact_div2(TruncatedPAdicInt(2, 1, Int(0))), jg::PrecisionError);
    CHECK_THROWS_AS(jg::padic_exact_div2(TruncatedPAdicInt(3, 4, Int(6))), jg::PrimeMismatchError);
}

TEST_CASE("p-adic binom2", "[padic]") {
    auto odd = jg::padic_binom2(TruncatedPAdicInt(3, 4, Int(5)));
    CHECK(odd.residue() == 10);
    CHECK(odd.precision() == 4);

    auto even = jg::padic_binom2(TruncatedPAdicInt(2, 4, Int(3)));
    CHECK(even.residue() == 3);
    CHECK(even.precision() == 3);

    // x = -1: binom2 is 1, at one digit less for p = 2.
    auto minus = jg::padic_binom2(TruncatedPAdicInt(2, 4, Int(15)));
    CHECK(minus.residue() == 1);
    CHECK(minus.precision() == 3);

    CHECK_THROWS_AS(jg::padic_binom2(TruncatedPAdicInt(2, 1, Int(1))), jg::PrecisionError);

    auto seven = jg::padic_binom2(TruncatedPAdicInt(7, 12, Int(5)));
    CHECK(seven.residue() == 10);
    CHECK(seven.precision() == 12);
}

TEST_CASE("binom2 difference identity at working precision", "[padic]") {
    jg::SampleRng rng(7);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        Int pn = jg::int_pow(Int(p), Int(12));
        for (int i = 0; i < 1000; ++i) {
            TruncatedPAdicInt x(p, 12, rng.big_below(pn));
            TruncatedPAdicInt xp1 = jg::padic_add(x, TruncatedPAdicInt(p, 12, Int(1)));
            auto lhs = jg::padic_binom2(xp1);
            auto rhs = jg::padic_add(jg::padic_binom2(x), x);
            REQUIRE(jg::padic_congruent(lhs, rhs));
        }
    }
}

TEST_CASE("ring axioms on random triples", "[padic]") {
    jg::SampleRng rng(11);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        Int pn = jg::int_pow(Int(p), Int(12));
        for (int i = 0; i < 200; ++i) {
            TruncatedPAdicInt x(p, 12, rng.big_below(pn));
            TruncatedPAdicInt y(p, 12, rng.big_below(pn));
            TruncatedPAdicInt z(p, 12, rng.big_below(pn));
            REQUIRE(jg::padic_add(jg::padic_add(x, y), z) == jg::padic_add(x, jg::padic_add(y, z)));
            REQUIRE(jg::padic_mul(jg::padic_mul(x, y), z) == jg::padic_mul(x, jg::padic_mul(y, z)));
            REQUIRE(jg::padic_mul(x, jg::padic_add(y, z)) ==
                    jg::padic_add(jg::padic_mul(x, y), jg::padic_mul(x, z)));
            REQUIRE(jg::padic_mul(x, y) == jg::padic_mul(y, x));
        }
    }
}

TEST_CASE("valuation", "[padic]") {
    CHECK(TruncatedPAdicInt(3, 4, Int(9)).valuation() == 2);
    CHECK(TruncatedPAdicInt(3, 4, Int(5)).valuation() == 0);
    CHECK(TruncatedPAdicInt(3, 4, Int(0)).valuation() == 4);
    CHECK(TruncatedPAdicInt(2, 6, Int(48)).valuation() == 4);
}

TEST_CASE("congruence at the coarser precision", "[padic]") {
    TruncatedPAdicInt fine(3, 4, Int(10));
    TruncatedPAdicInt coarse(3, 2, Int(1));
    CHECK(jg::padic_congruent(fine, coarse));
    CHECK_FALSE(jg::padic_congruent(fine, TruncatedPAdicInt(3, 2, Int(2))));
    CHECK_FALSE(fine == coarse);
    CHECK(fine == TruncatedPAdicInt(3, 4, Int(10)));
    CHECK(fine.str() == "10 + O(3^4)");
}
