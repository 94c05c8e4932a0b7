#include <catch_amalgamated.hpp>

#include "automin/word.hh"

using namespace automin;

TEST_CASE("alphabet is kept sorted and rejects bad symbols") {
    const Alphabet a("cab");
    CHECK(a.symbols() == "abc");
    CHECK(a.index_of('c') == 2);
    CHECK_THROWS_AS(a.index_of('z'), InputError);
    CHECK_THROWS_AS(Alphabet("aa"), InputError);
    CHECK_THROWS_AS(Alphabet("a@"), InputError);
    CHECK_THROWS_AS(Alphabet("a#"), InputError);
    CHECK_THROWS_AS(Alphabet("a b"), InputError);
}

TEST_CASE("words_up_to enumerates shortlex") {
    const auto w = words_up_to(Alphabet("ab"), 2);
    CHECK(w == std::vector<Word>{"", "a", "b", "aa", "ab", "ba", "bb"});
    CHECK(words_up_to(Alphabet(""), 3) == std::vector<Word>{""});
}

TEST_CASE("prefix helpers") {
    CHECK(common_prefix("abc", "abd") == "ab");
    CHECK(common_prefix("", "abd").empty());
    CHECK(strip_prefix("ab", "abc") == "c");
    CHECK_THROWS_AS(strip_prefix("b", "abc"), ContractViolation);
    CHECK(show_word("") == "@");
    CHECK(reversed("abc") == "cba");
}
