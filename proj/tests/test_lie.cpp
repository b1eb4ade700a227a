#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "jg/lie.hpp"
#include "jg/numeric.hpp"
#include "jg/rng.hpp"

namespace {

jg::NilpotentElement random_nil(jg::SampleRng& rng, std::uint32_t n) {
    jg::NilpotentElement x = jg::nil_zero(n);
    for (auto [i, j] : jg::strict_upper_positions(n)) x.at(i, j) = rng.rational(20, 8);
    return x;
}

}  // namespace

TEST_CASE("bracket arithmetic", "[lie]") {
    auto e12 = jg::nil_basis(3, 0, 1);
    auto e23 = jg::nil_basis(3, 1, 2);
    auto e13 = jg::nil_basis(3, 0, 2);

    CHECK(jg::nil_bracket(e12, e23) == e13);
    CHECK(jg::nil_bracket(e23, e12) == jg::nil_neg(e13));
    CHECK(jg::nil_bracket(e12, e12) == jg::nil_zero(3));
    CHECK(jg::nil_bracket(e12, e13) == jg::nil_zero(3));

    SECTION("bilinear in the first slot") {
        jg::SampleRng rng(7);
        for (int t = 0; t < 50; ++t) {
            auto x = random_nil(rng, 4);
            auto y = random_nil(rng, 4);
            auto z = random_nil(rng, 4);
            jg::Rat c = rng.rational(9, 5);
            CHECK(jg::nil_bracket(x + c * y, z) ==
                  jg::nil_bracket(x, z) + c * jg::nil_bracket(y, z));
        }
    }

    SECTION("jacobi identity on random triples") {
        jg::SampleRng rng(11);
        for (std::uint32_t n : {3u, 4u, 5u})
            for (int t = 0; t < 60; ++t) {
                auto x = random_nil(rng, n);
                auto y = random_nil(rng, n);
                auto z = random_nil(rng, n);
                auto total = jg::nil_bracket(x, jg::nil_bracket(y, z)) +
                             jg::nil_bracket(y, jg::nil_bracket(z, x)) +
                             jg::nil_bracket(z, jg::nil_bracket(x, y));
                REQUIRE(total == jg::nil_zero(n));
            }
    }

    SECTION("dimension mismatch and shape violations") {
        CHECK_THROWS_AS(jg::nil_bracket(e12, jg::nil_basis(4, 0, 1)), jg::ValidationError);
        jg::NilpotentElement bad = jg::nil_zero(3);
        bad.at(2, 0) = 1;
        CHECK_THROWS_AS(jg::check_nilpotent(bad), jg::ValidationError);
        CHECK_THROWS_AS(jg::nil_zero(1), jg::ValidationError);
        CHECK_THROWS_AS(jg::nil_zero(9), jg::ValidationError);
    }
}

TEST_CASE("exp and log are exact mutual inverses", "[lie]") {
    SECTION("closed forms") {
        auto e12 = jg::nil_basis(3, 0, 1);
        auto expected = jg::uni_identity(3);
        expected.at(0, 1) = 1;
        CHECK(jg::nil_exp(e12) == expected);
        CHECK(jg::nil_exp(jg::nil_zero(3)) == jg::uni_identity(3));

        // log(I + E12 + E23 + E13) = N - N^2/2 with N^2 = E13
        auto g = jg::uni_identity(3);
        g.at(0, 1) = 1;
        g.at(1, 2) = 1;
        g.at(0, 2) = 1;
        auto expected_log = jg::nil_zero(3);
        expected_log.at(0, 1) = 1;
        expected_log.at(1, 2) = 1;
        expected_log.at(0, 2) = jg::Rat(1, 2);
        CHECK(jg::nil_log(g) == expected_log);
    }

    SECTION("round trips on random elements") {
        jg::SampleRng rng(2233);
        for (std::uint32_t n : {2u, 3u, 4u, 5u})
            for (int t = 0; t < 1000; ++t) {
                auto x = random_nil(rng, n);
                REQUIRE(jg::nil_log(jg::nil_exp(x)) == x);
            }
    }

    SECTION("exp of log reproduces the group element") {
        jg::SampleRng rng(2234);
        for (std::uint32_t n : {3u, 4u, 5u})
            for (int t = 0; t < 200; ++t) {
                auto g = jg::nil_exp(random_nil(rng, n));
                REQUIRE(jg::nil_exp(jg::nil_log(g)) == g);
            }
    }

    SECTION("unitriangular inverses") {
        jg::SampleRng rng(5);
        for (int t = 0; t < 100; ++t) {
            auto g = jg::nil_exp(random_nil(rng, 5));
            auto gi = jg::uni_inverse(g);
            REQUIRE(jg::uni_mul(g, gi) == jg::uni_identity(5));
            REQUIRE(jg::uni_mul(gi, g) == jg::uni_identity(5));
        }
        auto bad = jg::uni_identity(3);
        bad.at(1, 1) = 2;
        CHECK_THROWS_AS(jg::uni_inverse(bad), jg::ValidationError);
    }
}

TEST_CASE("the log(exp exp) group product", "[lie]") {
    auto e12 = jg::nil_basis(3, 0, 1);
    auto e23 = jg::nil_basis(3, 1, 2);
    auto e13 = jg::nil_basis(3, 0, 2);

    SECTION("worked example and units") {
        CHECK(jg::bch_product(e12, e23) == e12 + e23 + jg::Rat(1, 2) * e13);
        jg::SampleRng rng(17);
        auto x = random_nil(rng, 4);
        CHECK(jg::bch_product(x, jg::nil_zero(4)) == x);
        CHECK(jg::bch_product(jg::nil_zero(4), x) == x);
        CHECK(jg::bch_product(x, jg::nil_neg(x)) == jg::nil_zero(4));
    }

    SECTION("class-2 closed form in dimension 3") {
        jg::SampleRng rng(23);
        for (int t = 0; t < 200; ++t) {
            auto x = random_nil(rng, 3);
            auto y = random_nil(rng, 3);
            auto closed = x + y + jg::Rat(1, 2) * jg::nil_bracket(x, y);
            REQUIRE(jg::bch_product(x, y) == closed);
        }
    }

    SECTION("group laws on random triples") {
        jg::SampleRng rng(29);
        for (std::uint32_t n : {2u, 3u, 4u, 5u})
            for (int t = 0; t < 200; ++t) {
                auto x = random_nil(rng, n);
                auto y = random_nil(rng, n);
                auto z = random_nil(rng, n);
                REQUIRE(jg::bch_product(jg::bch_product(x, y), z) ==
                        jg::bch_product(x, jg::bch_product(y, z)));
            }
    }

    SECTION("dimension mismatch") {
        CHECK_THROWS_AS(jg::bch_product(e12, jg::nil_zero(4)), jg::ValidationError);
    }
}

TEST_CASE("center of the strictly upper triangular algebra", "[lie]") {
    CHECK(jg::center_basis(3) == std::vector<jg::NilpotentElement>{jg::nil_basis(3, 0, 2)});
    CHECK(jg::center_basis(4) == std::vector<jg::NilpotentElement>{jg::nil_basis(4, 0, 3)});
    CHECK(jg::center_basis(2) == std::vector<jg::NilpotentElement>{jg::nil_basis(2, 0, 1)});

    for (std::uint32_t n : {2u, 3u, 4u, 5u, 6u})
        for (const auto& c : jg::center_basis(n)) {
            REQUIRE(jg::nil_is_central(c));
            for (auto [i, j] : jg::strict_upper_positions(n))
                REQUIRE(jg::nil_bracket(c, jg::nil_basis(n, i, j)) == jg::nil_zero(n));
        }

    CHECK_FALSE(jg::nil_is_central(jg::nil_basis(3, 0, 1)));
}

TEST_CASE("nilpotent structures from a central witness", "[lie]") {
    auto w = jg::nil_basis(3, 0, 2);
    auto s = jg::nilpotent_jstructure(3, w, jg::coefficient_functional(3, 0, 2));

    SECTION("worked example") {
        auto x = jg::nil_basis(3, 0, 1) + jg::Rat(2) * jg::nil_basis(3, 0, 2);
        CHECK(s.project(x) == 2);
        auto fx = s.apply(x);
        CHECK(fx == jg::Rat(2) * jg::nil_basis(3, 0, 1) + jg::nil_basis(3, 0, 2));
        // the axiom, with both products collapsing to sums
        CHECK(s.apply(jg::bch_product(x, w)) == jg::bch_product(fx, x));
        CHECK(s.apply(x + w) == fx + x);
    }

    SECTION("zero and the witness map to zero") {
        CHECK(s.apply(jg::nil_zero(3)) == jg::nil_zero(3));
        CHECK(s.apply(w) == jg::nil_zero(3));
        CHECK(s.apply(w) == s.apply(jg::nil_zero(3)));
    }

    SECTION("projection shift and the exact axiom on random samples") {
        jg::SampleRng rng(31);
        for (std::uint32_t n : {3u, 4u, 5u}) {
            auto wn = jg::nil_basis(n, 0, n - 1);
            auto sn = jg::nilpotent_jstructure(n, wn, jg::coefficient_functional(n, 0, n - 1));
            for (int t = 0; t < 200; ++t) {
                auto x = random_nil(rng, n);
                // x * w = x + w because the witness is central
                REQUIRE(jg::bch_product(x, wn) == x + wn);
                REQUIRE(sn.project(jg::bch_product(x, wn)) == sn.project(x) + 1);
                auto fx = sn.apply(x);
                // [f(x), x] = 0, so f(x) * x = f(x) + x
                REQUIRE(jg::nil_bracket(fx, x) == jg::nil_zero(n));
                REQUIRE(jg::bch_product(fx, x) == fx + x);
                REQUIRE(sn.apply(jg::bch_product(x, wn)) == jg::bch_product(fx, x));
            }
        }
    }

    SECTION("a scaled central witness with a fractional functional") {
        // w = 2*E14 with P = half the E14 coefficient still satisfies P(w) = 1
        auto w4 = jg::Rat(2) * jg::nil_basis(4, 0, 3);
        std::vector<jg::Rat> coeffs(jg::strict_upper_positions(4).size(), jg::Rat(0));
        coeffs[2] = jg::Rat(1, 2);  // position (0, 3)
        auto s4 = jg::nilpotent_jstructure(4, w4, coeffs);
        jg::SampleRng rng(37);
        for (int t = 0; t < 100; ++t) {
            auto x = random_nil(rng, 4);
            REQUIRE(s4.apply(x + w4) == s4.apply(x) + x);
        }
    }

    SECTION("rejections") {
        CHECK_THROWS_MATCHES(
            jg::nilpotent_jstructure(3, jg::nil_zero(3), jg::coefficient_functional(3, 0, 2)),
            jg::ValidationError,
            Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("nonzero")));
        CHECK_THROWS_MATCHES(
            jg::nilpotent_jstructure(3, jg::nil_basis(3, 0, 1),
                                     jg::coefficient_functional(3, 0, 1)),
            jg::ValidationError,
            Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("central")));
        CHECK_THROWS_MATCHES(
            jg::nilpotent_jstructure(3, w, jg::coefficient_functional(3, 0, 1)),
            jg::ValidationError,
            Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("P(witness)")));
        CHECK_THROWS_AS(jg::nilpotent_jstructure(3, w, std::vector<jg::Rat>(2, jg::Rat(0))),
                        jg::ValidationError);
    }
}
