// Line-oriented text formats for the four automaton kinds, DOT export and a
// JSON dump of monoid recognizers. The grammar is documented in
// docs/format.md.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "automin/dfa.hh"
#include "automin/monoid.hh"
#include "automin/nfa.hh"
#include "automin/transducer.hh"
#include "automin/wfa.hh"

namespace automin::format {

using Automaton = std::variant<dfa::Dfa, nfa::Nfa, wfa::Wfa, transducer::SubseqTransducer>;

/// Syntax or invariant error in an input file. line() is 1-based, or 0 when
/// the problem concerns the file as a whole.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct ParseResult {
    Automaton automaton;
    std::vector<std::string> warnings;
};

/// Parses one automaton; the first meaningful line names its kind.
[[nodiscard]] ParseResult parse(std::string_view text);

/// Canonical text: states renumbered canonically, lines in a fixed order.
[[nodiscard]] std::string serialize(const Automaton& a);
[[nodiscard]] std::string serialize(const dfa::Dfa& d);
[[nodiscard]] std::string serialize(const nfa::Nfa& n);
[[nodiscard]] std::string serialize(const wfa::Wfa& w);
[[nodiscard]] std::string serialize(const transducer::SubseqTransducer& t);

/// `dfa`, `nfa`, `wfa` or `sst`.
[[nodiscard]] std::string_view kind_name(const Automaton& a);

[[nodiscard]] std::string to_dot(const Automaton& a);

/// Machine-readable dump: order, identity, table, phi, accepting, names.
[[nodiscard]] std::string monoid_to_json(const monoid::MonoidRecognizer& r);

} // namespace automin::format
