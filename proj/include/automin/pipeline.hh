// The minimization contract shared by every automaton kind.
//
// An automaton kind plugs into the pipeline through a port: a stateless
// struct providing reach, obs, find_morphism and is_isomorphic. Minimization
// is obs after reach; the minimal automaton divides every acceptor of the same
// behaviour, i.e. it is a quotient of a sub-automaton of it.
#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <vector>

#include "automin/word.hh"

namespace automin {

enum class MapKind {
    general,
    epi,   ///< surjective on states
    mono,  ///< injective on states
    iso,   ///< both
};

[[nodiscard]] constexpr bool is_epi(MapKind k) noexcept { return k == MapKind::epi || k == MapKind::iso; }
[[nodiscard]] constexpr bool is_mono(MapKind k) noexcept { return k == MapKind::mono || k == MapKind::iso; }

[[nodiscard]] constexpr MapKind make_kind(bool surjective, bool injective) noexcept {
    if (surjective && injective) return MapKind::iso;
    if (surjective) return MapKind::epi;
    if (injective) return MapKind::mono;
    return MapKind::general;
}

/// Automaton morphism between state-based automata. `image[q]` is empty for
/// source states outside the reachable part, where the morphism is not
/// determined by the initial data.
struct StateMap {
    std::vector<std::optional<State>> image;
    MapKind kind = MapKind::general;

    friend bool operator==(const StateMap&, const StateMap&) = default;
};

/// Computes the kind of a partial state map into `target_size` states,
/// judged on its domain: undefined entries are skipped.
[[nodiscard]] MapKind classify(const std::vector<std::optional<State>>& image, std::size_t target_size);

template <class P>
concept MinimizablePort = requires(const P& port, const typename P::automaton_type& x,
                                   const typename P::morphism_type& m) {
    typename P::automaton_type;
    typename P::morphism_type;
    { port.reach(x) } -> std::same_as<typename P::automaton_type>;
    { port.obs(x) } -> std::same_as<typename P::automaton_type>;
    { port.find_morphism(x, x) } -> std::same_as<std::optional<typename P::morphism_type>>;
    { port.is_isomorphic(x, x) } -> std::convertible_to<bool>;
    { port.kind_of(m) } -> std::same_as<MapKind>;
};

/// obs(reach(x)). The result is reachable, observable and divides x.
template <MinimizablePort P>
[[nodiscard]] typename P::automaton_type minimize_generic(const P& port, const typename P::automaton_type& x) {
    return port.obs(port.reach(x));
}

/// True iff `small` is a quotient of a sub-automaton of `big`. Witnessed by
/// an epimorphism from the reachable part of `big` onto `small`.
template <MinimizablePort P>
[[nodiscard]] bool check_divides(const P& port, const typename P::automaton_type& small,
                                 const typename P::automaton_type& big) {
    const auto morphism = port.find_morphism(port.reach(big), small);
    return morphism && is_epi(port.kind_of(*morphism));
}

/// obs(reach(x)) ≅ reach(obs(x)).
template <MinimizablePort P>
[[nodiscard]] bool check_commutation(const P& port, const typename P::automaton_type& x) {
    return port.is_isomorphic(port.obs(port.reach(x)), port.reach(port.obs(x)));
}

/// minimize(minimize(x)) ≅ minimize(x).
template <MinimizablePort P>
[[nodiscard]] bool check_idempotence(const P& port, const typename P::automaton_type& x) {
    const auto once = minimize_generic(port, x);
    return port.is_isomorphic(minimize_generic(port, once), once);
}

} // namespace automin
