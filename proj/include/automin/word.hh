// Symbols, alphabets and words shared by every automaton kind.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace automin {

using State = std::size_t;

/// A word is a sequence of single-character symbols. The empty word is the
/// empty string; in text formats it is written `@`.
using Word = std::string;

/// Raised when a word or symbol does not belong to an alphabet.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when the alphabets of two automata that must agree differ.
class AlphabetMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is called outside its documented precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Finite ordered set of symbols. Symbols are printable, non-blank ASCII
/// characters other than `@` and `#`; they are kept sorted so that the
/// declared order never depends on how a file listed them.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string_view symbols);

    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
    [[nodiscard]] char operator[](std::size_t i) const { return symbols_[i]; }
    [[nodiscard]] const std::string& symbols() const noexcept { return symbols_; }

    [[nodiscard]] bool contains(char c) const noexcept;
    /// Index of `c`; throws InputError for a foreign symbol.
    [[nodiscard]] std::size_t index_of(char c) const;
    /// Symbol indices of `w`; throws InputError on the first foreign symbol.
    [[nodiscard]] std::vector<std::size_t> encode(std::string_view w) const;

    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string symbols_;
};

[[nodiscard]] bool is_valid_symbol(char c) noexcept;

/// Throws AlphabetMismatch unless `a == b`.
void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what);

/// All words of length at most `max_len`, shortlex ordered.
[[nodiscard]] std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_len);

[[nodiscard]] Word reversed(std::string_view w);

/// Longest common prefix of two words.
[[nodiscard]] Word common_prefix(std::string_view a, std::string_view b);

/// `prefix`⁻¹·`w`; requires `prefix` to be a prefix of `w`.
[[nodiscard]] Word strip_prefix(std::string_view prefix, std::string_view w);

[[nodiscard]] inline bool has_prefix(std::string_view w, std::string_view prefix) noexcept {
    return w.substr(0, prefix.size()) == prefix;
}

/// Writes `w`, or `@` for the empty word.
[[nodiscard]] std::string show_word(std::string_view w);

} // namespace automin
