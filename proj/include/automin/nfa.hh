// Non-deterministic automata (no ε-transitions): sets of initial and final
// states and one transition relation per symbol. There is no obs/minimize
// for this kind; minimal acceptors are reached through determinization.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "automin/dfa.hh"
#include "automin/word.hh"

namespace automin::nfa {

class Nfa {
public:
    /// `delta[q][a]` lists the `a`-successors of `q`; duplicates are removed
    /// and every set is kept sorted.
    Nfa(Alphabet alphabet, std::size_t n_states, std::vector<State> initials, std::vector<State> finals,
        std::vector<std::vector<std::vector<State>>> delta);

    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] std::size_t num_states() const noexcept { return n_states_; }
    [[nodiscard]] const std::vector<State>& initials() const noexcept { return initials_; }
    [[nodiscard]] const std::vector<State>& finals() const noexcept { return finals_; }
    [[nodiscard]] bool is_final(State q) const;
    [[nodiscard]] const std::vector<State>& next(State q, std::size_t symbol) const {
        return delta_[q * alphabet_.size() + symbol];
    }
    /// The relational image of `states` under `symbol`, sorted.
    [[nodiscard]] std::vector<State> post(const std::vector<State>& states, std::size_t symbol) const;

    friend bool operator==(const Nfa&, const Nfa&) = default;

private:
    Alphabet alphabet_;
    std::size_t n_states_;
    std::vector<State> initials_;
    std::vector<State> finals_;
    std::vector<std::vector<State>> delta_;
};

[[nodiscard]] bool accepts(const Nfa& n, const Word& w);

/// Reverses every edge and swaps initial and final states.
[[nodiscard]] Nfa transpose(const Nfa& n);

/// Subset construction restricted to the reachable subsets. Subsets are
/// numbered in breadth-first discovery order from the initial subset.
[[nodiscard]] dfa::Dfa determinize(const Nfa& n);

/// The same graph seen as a non-deterministic automaton.
[[nodiscard]] Nfa embed(const dfa::Dfa& d);

/// transpose(embed(determinize(transpose(n)))): a backward-deterministic,
/// co-reachable acceptor of the same language.
[[nodiscard]] Nfa codeterminize(const Nfa& n);

/// determinize(codeterminize(n)), the minimal complete DFA of n's language.
[[nodiscard]] dfa::Dfa brzozowski(const Nfa& n);

/// Renumbers breadth-first from the initial states; used for serialization.
[[nodiscard]] Nfa canonicalize(const Nfa& n);

[[nodiscard]] std::string to_dot(const Nfa& n);

} // namespace automin::nfa
