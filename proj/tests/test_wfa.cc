#include <catch_amalgamated.hpp>

#include "automin/pipeline.hh"
#include "automin/wfa.hh"
#include "generators.hh"
#include "oracles.hh"

using namespace automin;
using automin::wfa::Wfa;

namespace {

const Alphabet a_only("a");
const Alphabet ab("ab");

Wfa power(long base) { return Wfa(a_only, 1, {1}, {{{base}}}, {1}); }

// Counts occurrences of a.
Wfa count_a() { return Wfa(ab, 2, {1, 0}, {{{1, 1}, {0, 1}}, {{1, 0}, {0, 1}}}, {0, 1}); }

} // namespace

TEST_CASE("wfa construction checks shapes") {
    CHECK_THROWS_AS(Wfa(a_only, 2, {1}, {{{1, 0}, {0, 1}}}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Wfa(a_only, 1, {1}, {{{1, 0}}}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Wfa(ab, 1, {1}, {{{1}}}, {1}), std::invalid_argument);
}

TEST_CASE("wfa::weight") {
    const Wfa w(ab, 2, {1, 2}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}, {3, -1});
    CHECK(wfa::weight(w, "") == 1);
    for (unsigned n = 0; n <= 6; ++n) CHECK(wfa::weight(power(2), std::string(n, 'a')) == Rational(1 << n));
    CHECK(wfa::weight(count_a(), "") == 0);
    CHECK(wfa::weight(count_a(), "a") == 1);
    CHECK(wfa::weight(count_a(), "bab") == 1);
    CHECK(wfa::weight(count_a(), "aba") == 2);
    CHECK(wfa::weight(count_a(), "aaa") == 3);
    CHECK_THROWS_AS(wfa::weight(count_a(), "c"), InputError);
}

TEST_CASE("wfa::forward_reduce") {
    SECTION("zero initial vector") {
        const Wfa w(ab, 2, {0, 0}, {{{1, 1}, {0, 1}}, {{1, 0}, {1, 1}}}, {1, 1});
        const auto r = wfa::forward_reduce(w);
        CHECK(r.dim() == 0);
        CHECK(wfa::weight(r, "ab") == 0);
    }
    SECTION("an untouched coordinate is dropped") {
        const Wfa w(a_only, 2, {1, 0}, {{{2, 0}, {0, 3}}}, {1, 1});
        const auto r = wfa::forward_reduce(w);
        CHECK(r.dim() == 1);
        for (unsigned n = 0; n <= 5; ++n) CHECK(wfa::weight(r, std::string(n, 'a')) == Rational(1 << n));
    }
    SECTION("already reduced") { CHECK(wfa::forward_reduce(count_a()).dim() == 2); }
}

TEST_CASE("wfa::backward_reduce") {
    SECTION("zero final vector") {
        CHECK(wfa::backward_reduce(Wfa(a_only, 2, {1, 1}, {{{1, 1}, {0, 1}}}, {0, 0})).dim() == 0);
    }
    SECTION("coordinates with equal futures merge") {
        const Wfa w(a_only, 2, {1, 1}, {{{2, 0}, {0, 2}}}, {1, 1});
        const auto r = wfa::backward_reduce(w);
        CHECK(r.dim() == 1);
        for (unsigned n = 0; n <= 5; ++n) CHECK(wfa::weight(r, std::string(n, 'a')) == Rational(2 << n));
    }
    SECTION("already reduced") { CHECK(wfa::backward_reduce(count_a()).dim() == 2); }
}

TEST_CASE("wfa::transpose") {
    const Wfa w(ab, 2, {1, 2}, {{{1, -1}, {0, 2}}, {{0, 1}, {1, 1}}}, {3, -1});
    CHECK(wfa::transpose(wfa::transpose(w)) == w);
    CHECK(wfa::weight(wfa::transpose(w), "ab") == wfa::weight(w, "ba"));
    const Wfa zero(ab, 0, {}, {{}, {}}, {});
    CHECK(wfa::transpose(zero).dim() == 0);
}

TEST_CASE("wfa::minimize") {
    SECTION("zero function") { CHECK(wfa::minimize(Wfa(a_only, 1, {1}, {{{1}}}, {0})).dim() == 0); }
    SECTION("two copies of a one-dimensional automaton") {
        const auto d = testing::doubled(power(3));
        CHECK(d.dim() == 2);
        CHECK(wfa::minimize(d).dim() == 1);
    }
    SECTION("random automata: dimension is the Hankel rank and weights are kept") {
        testing::Rng rng(99);
        for (int i = 0; i < 40; ++i) {
            const auto w = testing::random_wfa(rng, 4, 2);
            const auto m = wfa::minimize(w);
            CHECK(m.dim() == testing::hankel_rank(w, 3));
            for (const auto& u : testing::all_words(w.alphabet(), 5)) REQUIRE(testing::wfa_weight(m, u) == testing::wfa_weight(w, u));
        }
    }
}

TEST_CASE("wfa::equivalent") {
    const auto w = count_a();
    CHECK(wfa::equivalent(w, w));
    CHECK(wfa::equivalent(w, wfa::minimize(w)));
    CHECK(wfa::equivalent(testing::doubled(w), w));
    CHECK_FALSE(wfa::equivalent(power(2), power(3)));
    CHECK_THROWS_AS(wfa::equivalent(power(2), w), AlphabetMismatch);
}

TEST_CASE("wfa::find_morphism") {
    const auto w = testing::doubled(count_a());
    const auto m = wfa::minimize(w);
    const auto h = wfa::find_morphism(wfa::forward_reduce(w), m);
    REQUIRE(h);
    CHECK(is_epi(h->kind));
    CHECK(wfa::is_isomorphic(m, wfa::minimize(count_a())));
    CHECK_FALSE(wfa::is_isomorphic(power(2), power(3)));
    CHECK(check_divides(wfa::WfaPort{}, m, w));
}
