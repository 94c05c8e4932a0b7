// Weighted automata over the rationals. Row-vector convention: the weight
// of a1…an is init · M_a1 · … · M_an · final, so words compose left to right.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "automin/pipeline.hh"
#include "automin/rational.hh"
#include "automin/word.hh"

namespace automin::wfa {

class Wfa {
public:
    /// `trans[a]` is the dim×dim matrix of the a-th symbol. Throws
    /// std::invalid_argument on shape mismatch.
    Wfa(Alphabet alphabet, std::size_t dim, Vector init, std::vector<Matrix> trans, Vector final);

    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const Vector& init() const noexcept { return init_; }
    [[nodiscard]] const Vector& final_weights() const noexcept { return final_; }
    [[nodiscard]] const Matrix& matrix(std::size_t symbol) const { return trans_[symbol]; }
    [[nodiscard]] const std::vector<Matrix>& matrices() const noexcept { return trans_; }

    friend bool operator==(const Wfa&, const Wfa&) = default;

private:
    Alphabet alphabet_;
    std::size_t dim_;
    Vector init_;
    std::vector<Matrix> trans_;
    Vector final_;
};

[[nodiscard]] Rational weight(const Wfa& w, const Word& word);

/// Swaps init and final and transposes every matrix; weight on u becomes
/// the original weight on reverse(u).
[[nodiscard]] Wfa transpose(const Wfa& w);

/// Restriction to span{init · M_u}, explored breadth-first over words.
[[nodiscard]] Wfa forward_reduce(const Wfa& w);

/// transpose(forward_reduce(transpose(w))): quotient onto span{M_u · final}.
[[nodiscard]] Wfa backward_reduce(const Wfa& w);

/// forward_reduce(backward_reduce(w)): minimal dimension, same weights.
[[nodiscard]] Wfa minimize(const Wfa& w);

/// Direct sum with the second final vector negated; computes w1 − w2.
[[nodiscard]] Wfa difference(const Wfa& w1, const Wfa& w2);

/// Same weight on every word. Throws AlphabetMismatch.
[[nodiscard]] bool equivalent(const Wfa& w1, const Wfa& w2);

/// Linear automaton morphism H (from.dim × to.dim) with
/// init·H = init', M_a·H = H·M'_a and final = H·final'.
struct LinearMap {
    Matrix h;
    MapKind kind = MapKind::general;
};

/// Some morphism `from` → `to`, if one exists. Unique when `from` is
/// forward-reduced. Throws AlphabetMismatch.
[[nodiscard]] std::optional<LinearMap> find_morphism(const Wfa& from, const Wfa& to);

/// Existence of an invertible morphism.
[[nodiscard]] bool is_isomorphic(const Wfa& a, const Wfa& b);

[[nodiscard]] std::string to_dot(const Wfa& w);

struct WfaPort {
    using automaton_type = Wfa;
    using morphism_type = LinearMap;

    [[nodiscard]] Wfa reach(const Wfa& w) const { return forward_reduce(w); }
    [[nodiscard]] Wfa obs(const Wfa& w) const { return backward_reduce(w); }
    [[nodiscard]] std::optional<LinearMap> find_morphism(const Wfa& a, const Wfa& b) const {
        return wfa::find_morphism(a, b);
    }
    [[nodiscard]] bool is_isomorphic(const Wfa& a, const Wfa& b) const { return wfa::is_isomorphic(a, b); }
    [[nodiscard]] MapKind kind_of(const LinearMap& m) const { return m.kind; }
};

static_assert(MinimizablePort<WfaPort>);

} // namespace automin::wfa
