// Finite monoid recognizers, biaction recognizers, and the syntactic monoid
// of a regular language computed as the transition monoid of its minimal DFA.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "automin/dfa.hh"
#include "automin/word.hh"

namespace automin::monoid {

using Element = std::size_t;

class FiniteMonoid {
public:
    /// `mult[x][y]` is the product x·y. Only shapes are checked here; call
    /// validate() for the monoid laws.
    FiniteMonoid(std::vector<std::vector<Element>> mult, Element identity);

    [[nodiscard]] std::size_t order() const noexcept { return mult_.size(); }
    [[nodiscard]] Element identity() const noexcept { return identity_; }
    [[nodiscard]] Element multiply(Element x, Element y) const { return mult_[x][y]; }
    [[nodiscard]] const std::vector<std::vector<Element>>& table() const noexcept { return mult_; }

    /// Throws ContractViolation if associativity or the identity laws fail.
    void validate() const;

    friend bool operator==(const FiniteMonoid&, const FiniteMonoid&) = default;

private:
    std::vector<std::vector<Element>> mult_;
    Element identity_;
};

/// A monoid morphism φ: A* → M given on generators, and an accepting set P.
/// Recognizes {w : φ(w) ∈ P}.
struct MonoidRecognizer {
    Alphabet alphabet;
    FiniteMonoid monoid;
    std::vector<Element> phi;       ///< φ(a) per symbol index
    std::vector<bool> accepting;    ///< P as a membership mask

    /// Optional labels for printing, e.g. a shortest representative word.
    std::vector<Word> names;
};

[[nodiscard]] Element evaluate(const MonoidRecognizer& r, const Word& w);
[[nodiscard]] bool recognizes(const MonoidRecognizer& r, const Word& w);

/// A set with commuting left and right A*-actions (given on generators),
/// the image of the empty word, and an accepting subset. φ(w) = w·φ(ε).
struct BiactionRecognizer {
    Alphabet alphabet;
    std::size_t carrier_size = 0;
    std::vector<std::vector<Element>> left;   ///< left[a][x] = a·x
    std::vector<std::vector<Element>> right;  ///< right[a][x] = x·a
    Element phi_empty = 0;
    std::vector<bool> accepting;
};

/// Left action of a whole word: (a1…an)·x = a1·(…(an·x)).
[[nodiscard]] Element act_left(const BiactionRecognizer& b, const Word& w, Element x);
/// Right action of a whole word: x·(a1…an) = ((x·a1)…)·an.
[[nodiscard]] Element act_right(const BiactionRecognizer& b, Element x, const Word& w);
[[nodiscard]] bool recognizes(const BiactionRecognizer& b, const Word& w);

/// Transformations δ_w : Q → Q of `d`, closed under composition from the
/// generators and numbered in breadth-first order over words. Elements are
/// named by their shortest (shortlex-least) representative.
[[nodiscard]] MonoidRecognizer transition_monoid(const dfa::Dfa& d);

/// transition_monoid(dfa::minimize(d)).
[[nodiscard]] MonoidRecognizer syntactic_monoid(const dfa::Dfa& d);

/// Whether w and w2 are congruent for the language of `d` (equal
/// transformations of the minimal DFA).
[[nodiscard]] bool congruence_oracle(const dfa::Dfa& d, const Word& w, const Word& w2);

/// Carrier M with u·x = φ(u)x and x·v = xφ(v).
[[nodiscard]] BiactionRecognizer monoid_to_biaction(const MonoidRecognizer& r);

/// Monoid structure on a surjective biaction recognizer: φ(u)·φ(v) := φ(uv).
/// Throws ContractViolation when φ is not surjective and std::logic_error
/// when the actions do not commute or the product is not well defined.
[[nodiscard]] MonoidRecognizer biaction_to_monoid(const BiactionRecognizer& b);

/// Isomorphism of surjective recognizers: the bijection h with h∘φ = φ' and
/// h⁻¹(P') = P, built along generator images.
[[nodiscard]] bool recognizers_isomorphic(const MonoidRecognizer& a, const MonoidRecognizer& b);

/// The DFA over M with initial state 1, x --a--> xφ(a), accepting P.
[[nodiscard]] dfa::Dfa to_dfa(const MonoidRecognizer& r);

/// Aligned multiplication table followed by φ and P.
[[nodiscard]] std::string to_text(const MonoidRecognizer& r);

} // namespace automin::monoid
