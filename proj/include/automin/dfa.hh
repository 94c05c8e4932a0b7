// Complete deterministic automata: a state set with an initial state, a set
// of accepting states and one total transition map per symbol.
#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "automin/pipeline.hh"
#include "automin/word.hh"

namespace automin::dfa {

class Dfa {
public:
    /// `delta[q][a]` is the successor of `q` on the `a`-th symbol. Throws
    /// std::invalid_argument unless delta is total and all indices are in range.
    Dfa(Alphabet alphabet, std::size_t n_states, State initial, const std::vector<State>& finals,
        std::vector<std::vector<State>> delta);

    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] std::size_t num_states() const noexcept { return n_states_; }
    [[nodiscard]] State initial() const noexcept { return initial_; }
    [[nodiscard]] bool is_final(State q) const { return finals_.at(q); }
    [[nodiscard]] std::vector<State> finals() const;
    [[nodiscard]] State next(State q, std::size_t symbol) const { return delta_[q * alphabet_.size() + symbol]; }
    /// δ_w(q).
    [[nodiscard]] State run(State q, const Word& w) const;

    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    Alphabet alphabet_;
    std::size_t n_states_;
    State initial_;
    std::vector<bool> finals_;
    std::vector<State> delta_;
};

[[nodiscard]] bool accepts(const Dfa& d, const Word& w);

/// Restriction to the states reachable from the initial state, in canonical order.
[[nodiscard]] Dfa reach(const Dfa& d);

/// Quotient by language equivalence of states (Moore partition refinement
/// from the accepting/rejecting split). Unreachable states are kept.
[[nodiscard]] Dfa obs(const Dfa& d);

/// Block index of each state under language equivalence, numbered by first
/// occurrence; the quotient map used by obs.
[[nodiscard]] std::vector<State> equivalence_classes(const Dfa& d);

/// obs(reach(d)) in canonical order: the minimal complete DFA.
[[nodiscard]] Dfa minimize(const Dfa& d);

/// Renumbers states breadth-first from the initial state, symbols in
/// alphabet order. Two reachable DFAs are isomorphic iff their canonical
/// forms are equal.
[[nodiscard]] Dfa canonicalize(const Dfa& d);

[[nodiscard]] bool is_reachable(const Dfa& d);

/// Exact for reachable automata; for automata with unreachable states it
/// compares canonical forms, which may report distinct for isomorphic inputs.
[[nodiscard]] bool is_isomorphic(const Dfa& a, const Dfa& b);

/// Words of length at most `max_len` accepted from state `q`.
[[nodiscard]] std::set<Word> residual(const Dfa& d, State q, std::size_t max_len);

/// The unique automaton morphism candidate, propagated from the initial
/// state along transitions over the reachable part of `from`. Throws
/// AlphabetMismatch when alphabets differ.
[[nodiscard]] std::optional<StateMap> find_morphism(const Dfa& from, const Dfa& to);

/// Adds a fresh rejecting sink for each missing transition; `delta[q][a]`
/// may be empty. Used for partial inputs.
[[nodiscard]] Dfa complete(Alphabet alphabet, std::size_t n_states, State initial, const std::vector<State>& finals,
                           const std::vector<std::vector<std::optional<State>>>& delta);

[[nodiscard]] std::string to_dot(const Dfa& d);

struct DfaPort {
    using automaton_type = Dfa;
    using morphism_type = StateMap;

    [[nodiscard]] Dfa reach(const Dfa& d) const { return dfa::reach(d); }
    [[nodiscard]] Dfa obs(const Dfa& d) const { return dfa::obs(d); }
    [[nodiscard]] std::optional<StateMap> find_morphism(const Dfa& a, const Dfa& b) const {
        return dfa::find_morphism(a, b);
    }
    [[nodiscard]] bool is_isomorphic(const Dfa& a, const Dfa& b) const { return dfa::is_isomorphic(a, b); }
    [[nodiscard]] MapKind kind_of(const StateMap& m) const { return m.kind; }
};

static_assert(MinimizablePort<DfaPort>);

} // namespace automin::dfa
