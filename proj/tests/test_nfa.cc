#include <catch_amalgamated.hpp>

#include "automin/nfa.hh"
#include "generators.hh"
#include "oracles.hh"

using namespace automin;
using automin::nfa::Nfa;

namespace {

const Alphabet ab("ab");

// Guess-the-last-letter NFA: 0 loops on everything, 0 -a-> 1, 1 final.
Nfa ends_with_a() { return Nfa(ab, 2, {0}, {1}, {{{0, 1}, {0}}, {{}, {}}}); }

bool same_language(const Nfa& n, const dfa::Dfa& d, std::size_t len) {
    for (const auto& w : testing::all_words(n.alphabet(), len))
        if (testing::nfa_accepts_by_paths(n, w) != testing::dfa_accepts(d, d.initial(), w)) return false;
    return true;
}

bool backward_deterministic(const Nfa& n) {
    // Each state has at most one predecessor per symbol, and at most one final state.
    if (n.finals().size() > 1) return false;
    for (std::size_t a = 0; a < n.alphabet().size(); ++a) {
        std::vector<int> preds(n.num_states());
        for (State q = 0; q < n.num_states(); ++q)
            for (State t : n.next(q, a))
                if (++preds[t] > 1) return false;
    }
    return true;
}

} // namespace

TEST_CASE("nfa::accepts") {
    CHECK(nfa::accepts(Nfa(ab, 2, {0, 1}, {1}, {{{}, {}}, {{}, {}}}), ""));
    CHECK(nfa::accepts(ends_with_a(), "ba"));
    CHECK_FALSE(nfa::accepts(ends_with_a(), ""));
    CHECK_FALSE(nfa::accepts(ends_with_a(), "ab"));
    CHECK_THROWS_AS(nfa::accepts(ends_with_a(), "c"), InputError);
}

TEST_CASE("nfa::transpose") {
    const auto n = ends_with_a();
    CHECK(nfa::transpose(nfa::transpose(n)) == n);
    const auto t = nfa::transpose(n);
    for (const auto& w : testing::all_words(ab, 4)) CHECK(nfa::accepts(t, w) == (!w.empty() && w[0] == 'a'));

    // Trie for the palindromes {ε, a, b, aa, bb, aba, bab}, a mirror-closed language.
    const Nfa pal(ab, 9, {0}, {0, 1, 2, 3, 6, 7, 8},
                  {{{1}, {2}}, {{3}, {4}}, {{5}, {6}}, {{}, {}}, {{7}, {}}, {{}, {8}}, {{}, {}}, {{}, {}}, {{}, {}}});
    const auto tp = nfa::transpose(pal);
    for (const auto& w : testing::all_words(ab, 4)) CHECK(nfa::accepts(pal, w) == nfa::accepts(tp, w));
}

TEST_CASE("nfa::determinize") {
    SECTION("deterministic input") {
        const dfa::Dfa d(ab, 2, 0, {1}, {{1, 0}, {1, 0}});
        CHECK(dfa::is_isomorphic(nfa::determinize(nfa::embed(d)), d));
    }
    SECTION("ends with a: subsets {0} and {0,1}") {
        const auto d = nfa::determinize(ends_with_a());
        CHECK(d.num_states() == 2);
        CHECK(same_language(ends_with_a(), d, 6));
    }
    SECTION("no initial states") {
        const auto d = nfa::determinize(Nfa(ab, 2, {}, {1}, {{{0, 1}, {0}}, {{}, {}}}));
        CHECK(d.num_states() == 1);
        CHECK(d.finals().empty());
    }
    SECTION("random NFAs keep their language") {
        testing::Rng rng(7);
        for (int i = 0; i < 100; ++i) {
            const auto n = testing::random_nfa(rng, 5, 2);
            CHECK(same_language(n, nfa::determinize(n), 7));
        }
    }
}

TEST_CASE("nfa::codeterminize") {
    const auto n = ends_with_a();
    const auto c = nfa::codeterminize(n);
    CHECK(backward_deterministic(c));
    for (const auto& w : testing::all_words(ab, 6)) CHECK(nfa::accepts(c, w) == nfa::accepts(n, w));
    const auto cc = nfa::codeterminize(c);
    for (const auto& w : testing::all_words(ab, 4)) CHECK(nfa::accepts(cc, w) == nfa::accepts(n, w));
    CHECK(cc.num_states() == c.num_states());
    CHECK(backward_deterministic(cc));
}

TEST_CASE("nfa::embed") {
    testing::Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto d = testing::random_dfa(rng, 5, 2);
        const auto e = nfa::embed(d);
        CHECK(e.num_states() == d.num_states());
        for (const auto& w : testing::all_words(d.alphabet(), 2 * d.num_states()))
            REQUIRE(testing::nfa_accepts_by_paths(e, w) == dfa::accepts(d, w));
        CHECK(dfa::is_isomorphic(nfa::determinize(e), dfa::reach(d)));
    }
}

TEST_CASE("nfa::brzozowski") {
    SECTION("minimal dfa is a fixed point") {
        const dfa::Dfa d(ab, 2, 0, {1}, {{1, 0}, {1, 0}});
        CHECK(dfa::is_isomorphic(nfa::brzozowski(nfa::embed(d)), d));
    }
    SECTION("empty language") {
        const auto b = nfa::brzozowski(Nfa(ab, 2, {0}, {}, {{{0, 1}, {0}}, {{}, {}}}));
        CHECK(b.num_states() == 1);
        CHECK(b.finals().empty());
    }
    SECTION("random 5-state NFAs agree with subset construction plus refinement") {
        testing::Rng rng(55);
        for (int i = 0; i < 100; ++i) {
            const auto n = testing::random_nfa(rng, 5, testing::uniform(rng, 1, 3));
            const auto b = nfa::brzozowski(n);
            CHECK(dfa::is_isomorphic(b, dfa::minimize(nfa::determinize(n))));
        }
    }
}
