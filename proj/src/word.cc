#include "automin/word.hh"

#include <algorithm>

namespace automin {

bool is_valid_symbol(char c) noexcept {
    return c > ' ' && c < 0x7f && c != '@' && c != '#';
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    for (char c : symbols_) {
        if (!is_valid_symbol(c)) {
            throw InputError(std::string("invalid alphabet symbol '") + c + "'");
        }
    }
    std::sort(symbols_.begin(), symbols_.end());
    if (std::adjacent_find(symbols_.begin(), symbols_.end()) != symbols_.end()) {
        throw InputError("duplicate alphabet symbol in '" + std::string(symbols) + "'");
    }
}

bool Alphabet::contains(char c) const noexcept {
    return std::binary_search(symbols_.begin(), symbols_.end(), c);
}

std::size_t Alphabet::index_of(char c) const {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), c);
    if (it == symbols_.end() || *it != c) {
        throw InputError(std::string("symbol '") + c + "' is not in alphabet {" + symbols_ + "}");
    }
    return static_cast<std::size_t>(it - symbols_.begin());
}

std::vector<std::size_t> Alphabet::encode(std::string_view w) const {
    std::vector<std::size_t> out;
    out.reserve(w.size());
    for (char c : w) out.push_back(index_of(c));
    return out;
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what) {
    if (a != b) {
        throw AlphabetMismatch(std::string(what) + ": alphabets {" + a.symbols() + "} and {" +
                               b.symbols() + "} differ");
    }
}

std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len && !alphabet.empty(); ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (char c : alphabet) out.push_back(out[i] + c);
        }
        level_begin = level_end;
    }
    return out;
}

Word reversed(std::string_view w) { return Word(w.rbegin(), w.rend()); }

Word common_prefix(std::string_view a, std::string_view b) {
    auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    return Word(a.begin(), ia);
}

Word strip_prefix(std::string_view prefix, std::string_view w) {
    if (!has_prefix(w, prefix)) {
        throw ContractViolation("'" + std::string(prefix) + "' is not a prefix of '" +
                                std::string(w) + "'");
    }
    return Word(w.substr(prefix.size()));
}

std::string show_word(std::string_view w) { return w.empty() ? std::string("@") : std::string(w); }

} // namespace automin
