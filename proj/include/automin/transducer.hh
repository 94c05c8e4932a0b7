// Subsequential transducers: deterministic machines computing partial
// functions A* ⇸ B*. Every step produces an output word; the output of a run
// is u0 · out(q0,a1) · … · out(q_{n-1},an) · term(q_n), undefined as soon as
// any piece is.
//
// Minimization follows the earliest-normal-form route: trim, compute for
// every state the longest common prefix of everything it can still emit,
// push those prefixes towards the initial output, then merge states whose
// (now irreducible) behaviours coincide.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "automin/pipeline.hh"
#include "automin/word.hh"

namespace automin::transducer {

/// One step of a Kleisli arrow: the next state together with the output
/// word produced. Absence is the undefined value.
struct Step {
    State target;
    Word output;

    friend bool operator==(const Step&, const Step&) = default;
    friend auto operator<=>(const Step&, const Step&) = default;
};

class SubseqTransducer {
public:
    /// `trans[q][a]` empty means q·a undefined; `term[q]` empty means t(q)
    /// undefined; `initial` empty means q0 (and u0) undefined. Output words
    /// must be over `output`. Throws std::invalid_argument.
    SubseqTransducer(Alphabet input, Alphabet output, std::size_t n_states, std::optional<Step> initial,
                     std::vector<std::vector<std::optional<Step>>> trans, std::vector<std::optional<Word>> term);

    /// The machine with no states, computing the nowhere-defined function.
    static SubseqTransducer empty(Alphabet input, Alphabet output);

    [[nodiscard]] const Alphabet& input() const noexcept { return input_; }
    [[nodiscard]] const Alphabet& output() const noexcept { return output_; }
    [[nodiscard]] std::size_t num_states() const noexcept { return n_states_; }
    [[nodiscard]] const std::optional<Step>& initial() const noexcept { return initial_; }
    [[nodiscard]] const std::optional<Step>& next(State q, std::size_t symbol) const {
        return trans_[q * input_.size() + symbol];
    }
    [[nodiscard]] const std::optional<Word>& term(State q) const { return term_[q]; }

    friend bool operator==(const SubseqTransducer&, const SubseqTransducer&) = default;

private:
    Alphabet input_;
    Alphabet output_;
    std::size_t n_states_;
    std::optional<Step> initial_;
    std::vector<std::optional<Step>> trans_;
    std::vector<std::optional<Word>> term_;
};

/// Finite part of a function A* ⇸ B*; words outside the domain are absent.
using PartialOutputMap = std::map<Word, Word>;

/// The computed partial function at `w`. Throws InputError on a foreign symbol.
[[nodiscard]] std::optional<Word> apply(const SubseqTransducer& t, const Word& w);

/// Behaviour of state `q` (re-rooted with empty initial output) on all
/// inputs of length at most `max_len`.
[[nodiscard]] PartialOutputMap residual(const SubseqTransducer& t, State q, std::size_t max_len);

/// States reachable from the initial state.
[[nodiscard]] std::vector<bool> accessible(const SubseqTransducer& t);
/// States from which some termination is reachable (nonempty residual domain).
[[nodiscard]] std::vector<bool> productive(const SubseqTransducer& t);

/// Restriction to the accessible and productive states, in canonical order.
[[nodiscard]] SubseqTransducer trim(const SubseqTransducer& t);

/// Longest common prefix of the outputs of all completions from each state.
/// Throws ContractViolation if some state is unproductive.
[[nodiscard]] std::vector<Word> state_lcp(const SubseqTransducer& t);

/// Earliest form of trim(t): every state's residual becomes irreducible.
[[nodiscard]] SubseqTransducer normalize(const SubseqTransducer& t);

/// Quotient by equality of irreducible residuals. Requires an input in
/// earliest form (checked through state_lcp; ContractViolation otherwise).
[[nodiscard]] SubseqTransducer merge_equivalent(const SubseqTransducer& t);

/// merge_equivalent(normalize(trim(t))) in canonical order.
[[nodiscard]] SubseqTransducer minimize(const SubseqTransducer& t);

/// Observable quotient: prunes unproductive states, pushes outputs and
/// merges, but keeps unreachable states.
[[nodiscard]] SubseqTransducer obs(const SubseqTransducer& t);

/// Renumbers breadth-first from the initial state, input symbols in order.
[[nodiscard]] SubseqTransducer canonicalize(const SubseqTransducer& t);

/// Structural equality of canonical forms; exact for accessible machines.
[[nodiscard]] bool is_isomorphic(const SubseqTransducer& a, const SubseqTransducer& b);

/// Same partial function. Throws AlphabetMismatch.
[[nodiscard]] bool equivalent(const SubseqTransducer& a, const SubseqTransducer& b);

/// Morphism in the Kleisli category: each source state goes to a target
/// state together with the output word the target is "ahead" by.
struct KleisliMap {
    std::vector<std::optional<Step>> image;
    MapKind kind = MapKind::general;
};

/// The morphism propagated from the initial data over the accessible part
/// of `from`, if the commutation conditions hold. Throws AlphabetMismatch.
[[nodiscard]] std::optional<KleisliMap> find_morphism(const SubseqTransducer& from, const SubseqTransducer& to);

/// Kleisli composition of two one-step arrows: outputs concatenate.
[[nodiscard]] std::optional<Step> compose(const std::optional<Step>& first, const SubseqTransducer& t,
                                          std::size_t symbol);

[[nodiscard]] std::string to_dot(const SubseqTransducer& t);

struct TransducerPort {
    using automaton_type = SubseqTransducer;
    using morphism_type = KleisliMap;

    [[nodiscard]] SubseqTransducer reach(const SubseqTransducer& t) const { return trim(t); }
    [[nodiscard]] SubseqTransducer obs(const SubseqTransducer& t) const { return transducer::obs(t); }
    [[nodiscard]] std::optional<KleisliMap> find_morphism(const SubseqTransducer& a, const SubseqTransducer& b) const {
        return transducer::find_morphism(a, b);
    }
    [[nodiscard]] bool is_isomorphic(const SubseqTransducer& a, const SubseqTransducer& b) const {
        return transducer::is_isomorphic(a, b);
    }
    [[nodiscard]] MapKind kind_of(const KleisliMap& m) const { return m.kind; }
};

static_assert(MinimizablePort<TransducerPort>);

} // namespace automin::transducer
