#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "jg/expseq.hpp"
#include "jg/group.hpp"
#include "jg/numeric.hpp"
#include "jg/padic.hpp"
#include "jg/rings.hpp"
#include "jg/search.hpp"

TEST_CASE("discrete exponent sequence checks", "[expseq]") {
    auto z5 = jg::make_cyclic(5);

    SECTION("constant sequences on Z/5") {
        CHECK(jg::check_exponent_sequence_finite(z5, 1, jg::ExponentSequence::constant(5, 4)));
        CHECK_FALSE(
            jg::check_exponent_sequence_finite(z5, 1, jg::ExponentSequence::constant(2, 4)));
        CHECK(jg::check_exponent_sequence_finite(z5, 0, jg::ExponentSequence::constant(2, 4)));
        CHECK(jg::check_exponent_sequence_finite(z5, 0, jg::ExponentSequence{{-3, 7}}));
    }

    SECTION("only the settled tail matters") {
        CHECK(jg::check_exponent_sequence_finite(z5, 1, jg::ExponentSequence{{2, 5}}));
        CHECK_FALSE(jg::check_exponent_sequence_finite(z5, 1, jg::ExponentSequence{{5, 2}}));
        CHECK(jg::check_exponent_sequence_finite(z5, 2, jg::ExponentSequence{{3, -10}}));
    }

    SECTION("negative exponents work through inverse powers") {
        auto s3 = jg::make_symmetric(3);
        CHECK(jg::check_exponent_sequence_finite(s3, 3, jg::ExponentSequence{{-6}}));
        CHECK_FALSE(jg::check_exponent_sequence_finite(s3, 3, jg::ExponentSequence{{-4}}));
    }

    SECTION("validation") {
        CHECK_THROWS_AS(
            jg::check_exponent_sequence_finite(z5, 1, jg::ExponentSequence{{5, 0, 5}}),
            jg::ValidationError);
        CHECK_THROWS_AS(jg::check_exponent_sequence_finite(z5, 1, jg::ExponentSequence{}),
                        jg::ValidationError);
        CHECK_THROWS_AS(
            jg::check_exponent_sequence_finite(z5, 9, jg::ExponentSequence::constant(5, 1)),
            jg::ValidationError);
    }
}

TEST_CASE("p-adic exponent sequence checks", "[expseq]") {
    jg::TruncatedPAdicInt one(3, 12, 1);

    SECTION("geometric sequence drives the valuation up") {
        jg::ExponentSequence s{{3, 9, 27, 81}};
        CHECK(jg::check_exponent_sequence_padic(one, s, 4));
        CHECK(jg::check_exponent_sequence_padic(one, s, 1));
        CHECK_FALSE(jg::check_exponent_sequence_padic(one, s, 5));
    }

    SECTION("constant non-multiples never converge") {
        CHECK_FALSE(
            jg::check_exponent_sequence_padic(one, jg::ExponentSequence::constant(2, 6), 1));
    }

    SECTION("zero passes any sequence") {
        jg::TruncatedPAdicInt zero(3, 12, 0);
        CHECK(jg::check_exponent_sequence_padic(zero, jg::ExponentSequence::constant(2, 3), 12));
    }

    SECTION("a valuation drop after reaching the target fails") {
        CHECK_FALSE(jg::check_exponent_sequence_padic(one, jg::ExponentSequence{{81, 27}}, 4));
        CHECK_FALSE(
            jg::check_exponent_sequence_padic(one, jg::ExponentSequence{{3, 81, 27, 81}}, 4));
        // any drop after the target is reached fails, even one staying >= v
        CHECK_FALSE(jg::check_exponent_sequence_padic(one, jg::ExponentSequence{{81, 27}}, 3));
        CHECK(jg::check_exponent_sequence_padic(one, jg::ExponentSequence{{27, 81}}, 3));
    }

    SECTION("target beyond the precision is rejected") {
        CHECK_THROWS_AS(
            jg::check_exponent_sequence_padic(one, jg::ExponentSequence::constant(3, 2), 13),
            jg::PrecisionError);
    }
}

TEST_CASE("pointwise propagation demo", "[expseq]") {
    SECTION("geometric sequence on the 3-adics") {
        auto s = jg::ring_to_jgroup(jg::RingDescriptor::padic(3, 12));
        auto seq = jg::ExponentSequence::geometric(3, 10);
        auto report = jg::pointwise_propagation_demo(s, seq, 100, 42);
        CHECK(report.witness_ok);
        CHECK(report.binom_claim_ok);
        CHECK(report.valuation_target == 10);
        CHECK(report.samples_requested == 100);
        CHECK(report.samples_passed == 100);
        CHECK(report.all_pass());
        CHECK(report.witness_valuations ==
              std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});

        // the intermediate claim, exactly: valuation(binom2(3^k)) = k
        for (std::uint32_t k = 1; k <= 10; ++k) {
            jg::Int b = jg::binom2(jg::int_pow(3, k));
            CHECK(jg::TruncatedPAdicInt(3, 12, b).valuation() == k);
        }
    }

    SECTION("a 2-adic run costs the binomial claim one digit") {
        auto s = jg::ring_to_jgroup(jg::RingDescriptor::padic(2, 12));
        auto seq = jg::ExponentSequence::geometric(2, 10);
        auto report = jg::pointwise_propagation_demo(s, seq, 50, 7);
        CHECK(report.all_pass());
        CHECK(report.valuation_target == 10);
        for (std::uint32_t k = 1; k <= 10; ++k) {
            jg::Int b = jg::binom2(jg::int_pow(2, k));
            CHECK(jg::TruncatedPAdicInt(2, 12, b).valuation() == k - 1);
        }
    }

    SECTION("the constant exponent kills a finite cyclic structure") {
        auto s = jg::ring_to_jgroup(jg::RingDescriptor::mod(7));
        auto report =
            jg::pointwise_propagation_demo(s, jg::ExponentSequence::constant(7, 4), 0);
        CHECK(report.witness_ok);
        CHECK(report.binom_claim_ok);
        CHECK(report.samples_requested == 7);
        CHECK(report.samples_passed == 7);
        CHECK(report.all_pass());
    }

    SECTION("sequences failing at the witness are rejected") {
        auto padic3 = jg::ring_to_jgroup(jg::RingDescriptor::padic(3, 12));
        CHECK_THROWS_MATCHES(
            jg::pointwise_propagation_demo(padic3, jg::ExponentSequence::geometric(2, 8), 10),
            jg::ValidationError,
            Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("witness")));

        auto mod9 = jg::ring_to_jgroup(jg::RingDescriptor::mod(9));
        CHECK_THROWS_MATCHES(
            jg::pointwise_propagation_demo(mod9, jg::ExponentSequence::constant(3, 4), 0),
            jg::ValidationError,
            Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("witness")));
        CHECK(jg::pointwise_propagation_demo(mod9, jg::ExponentSequence::constant(9, 4), 0)
                  .all_pass());
    }

    SECTION("rings without finite or p-adic structure are rejected") {
        CHECK_THROWS_AS(jg::pointwise_propagation_demo(
                            jg::ring_to_jgroup(jg::RingDescriptor::integers()),
                            jg::ExponentSequence::constant(1, 1), 5),
                        jg::ValidationError);
    }
}

TEST_CASE("constant order sequence on found finite structures", "[expseq]") {
    // On every structure found by the exhaustive search, the constant
    // sequence ord(w) works for the whole centralizer of w — and for the
    // whole group when it is abelian.
    for (std::uint32_t n : {3u, 9u, 15u}) {
        auto g = jg::share(jg::make_cyclic(n));
        auto outcome = jg::search_coset(g);
        REQUIRE(outcome.exhaustive);
        REQUIRE_FALSE(outcome.structures.empty());
        for (const auto& st : outcome.structures) {
            auto seq =
                jg::ExponentSequence::constant(g->element_order(st.witness), 3);
            for (jg::element_t x = 0; x < g->order(); ++x)
                REQUIRE(jg::check_exponent_sequence_finite(*g, x, seq));
        }
    }

    auto g33 = jg::share(jg::make_direct_product(jg::make_cyclic(3), jg::make_cyclic(3)));
    auto outcome = jg::search_coset(g33);
    REQUIRE(outcome.exhaustive);
    REQUIRE(outcome.structures.size() == 5832);
    // spot-check the centralizer clause on a sample of the found structures
    for (std::size_t i = 0; i < outcome.structures.size(); i += 500) {
        const auto& st = outcome.structures[i];
        auto seq = jg::ExponentSequence::constant(g33->element_order(st.witness), 2);
        auto cent = jg::centralizer(*g33, st.witness);
        for (jg::element_t x : cent.elements())
            REQUIRE(jg::check_exponent_sequence_finite(*g33, x, seq));
    }

    // converse direction: a pointwise sequence is in particular a sequence
    // for the witness, by specialization
    auto z9 = jg::share(jg::make_cyclic(9));
    auto seq9 = jg::ExponentSequence::constant(9, 2);
    bool pointwise = true;
    for (jg::element_t x = 0; x < z9->order(); ++x)
        pointwise = pointwise && jg::check_exponent_sequence_finite(*z9, x, seq9);
    REQUIRE(pointwise);
    CHECK(jg::check_exponent_sequence_finite(*z9, 1, seq9));
}
