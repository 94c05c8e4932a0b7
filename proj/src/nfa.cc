#include "automin/nfa.hh"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "automin/detail/canonical_order.hh"

namespace automin::nfa {

namespace {

void normalize_set(std::vector<State>& s, std::size_t n, const char* what) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && s.back() >= n) throw std::invalid_argument(std::string("nfa: ") + what + " out of range");
}

} // namespace

Nfa::Nfa(Alphabet alphabet, std::size_t n_states, std::vector<State> initials, std::vector<State> finals,
         std::vector<std::vector<std::vector<State>>> delta)
    : alphabet_(std::move(alphabet)), n_states_(n_states), initials_(std::move(initials)), finals_(std::move(finals)) {
    normalize_set(initials_, n_states_, "initial state");
    normalize_set(finals_, n_states_, "final state");
    if (delta.size() != n_states_) throw std::invalid_argument("nfa: transition table needs one row per state");
    delta_.reserve(n_states_ * alphabet_.size());
    for (auto& row : delta) {
        if (row.size() != alphabet_.size()) throw std::invalid_argument("nfa: transition row has wrong width");
        for (auto& targets : row) {
            normalize_set(targets, n_states_, "transition target");
            delta_.push_back(std::move(targets));
        }
    }
}

bool Nfa::is_final(State q) const { return std::binary_search(finals_.begin(), finals_.end(), q); }

std::vector<State> Nfa::post(const std::vector<State>& states, std::size_t symbol) const {
    std::vector<bool> mark(n_states_, false);
    for (State q : states)
        for (State t : next(q, symbol)) mark[t] = true;
    std::vector<State> out;
    for (State q = 0; q < n_states_; ++q)
        if (mark[q]) out.push_back(q);
    return out;
}

bool accepts(const Nfa& n, const Word& w) {
    std::vector<State> current = n.initials();
    for (std::size_t a : n.alphabet().encode(w)) current = n.post(current, a);
    return std::any_of(current.begin(), current.end(), [&](State q) { return n.is_final(q); });
}

Nfa transpose(const Nfa& n) {
    const std::size_t k = n.alphabet().size();
    std::vector<std::vector<std::vector<State>>> delta(n.num_states(), std::vector<std::vector<State>>(k));
    for (State q = 0; q < n.num_states(); ++q)
        for (std::size_t a = 0; a < k; ++a)
            for (State t : n.next(q, a)) delta[t][a].push_back(q);
    return Nfa(n.alphabet(), n.num_states(), n.finals(), n.initials(), std::move(delta));
}

dfa::Dfa determinize(const Nfa& n) {
    const std::size_t k = n.alphabet().size();
    std::map<std::vector<State>, State> index;
    std::vector<std::vector<State>> subsets;
    std::deque<State> queue;
    auto intern = [&](std::vector<State> s) {
        auto [it, fresh] = index.try_emplace(s, subsets.size());
        if (fresh) {
            subsets.push_back(std::move(s));
            queue.push_back(it->second);
        }
        return it->second;
    };
    intern(n.initials());
    std::vector<std::vector<State>> delta;
    while (!queue.empty()) {
        const State id = queue.front();
        queue.pop_front();
        if (delta.size() <= id) delta.resize(id + 1);
        delta[id].resize(k);
        for (std::size_t a = 0; a < k; ++a) {
            // subsets may reallocate inside intern; copy before calling.
            std::vector<State> image = n.post(subsets[id], a);
            delta[id][a] = intern(std::move(image));
        }
    }
    std::vector<State> finals;
    for (State id = 0; id < subsets.size(); ++id) {
        const auto& s = subsets[id];
        if (std::any_of(s.begin(), s.end(), [&](State q) { return n.is_final(q); })) finals.push_back(id);
    }
    delta.resize(subsets.size());
    return dfa::Dfa(n.alphabet(), subsets.size(), 0, finals, std::move(delta));
}

Nfa embed(const dfa::Dfa& d) {
    const std::size_t k = d.alphabet().size();
    std::vector<std::vector<std::vector<State>>> delta(d.num_states(), std::vector<std::vector<State>>(k));
    for (State q = 0; q < d.num_states(); ++q)
        for (std::size_t a = 0; a < k; ++a) delta[q][a] = {d.next(q, a)};
    return Nfa(d.alphabet(), d.num_states(), {d.initial()}, d.finals(), std::move(delta));
}

Nfa codeterminize(const Nfa& n) { return transpose(embed(determinize(transpose(n)))); }

dfa::Dfa brzozowski(const Nfa& n) { return determinize(codeterminize(n)); }

Nfa canonicalize(const Nfa& n) {
    const std::size_t k = n.alphabet().size();
    const auto rank = detail::canonical_order(n.num_states(), n.initials(), [&](State q, auto&& visit) {
        for (std::size_t a = 0; a < k; ++a)
            for (State t : n.next(q, a)) visit(t);
    });
    std::vector<std::vector<std::vector<State>>> delta(n.num_states(), std::vector<std::vector<State>>(k));
    for (State q = 0; q < n.num_states(); ++q)
        for (std::size_t a = 0; a < k; ++a)
            for (State t : n.next(q, a)) delta[rank[q]][a].push_back(rank[t]);
    auto map_set = [&](const std::vector<State>& s) {
        std::vector<State> out;
        for (State q : s) out.push_back(rank[q]);
        return out;
    };
    return Nfa(n.alphabet(), n.num_states(), map_set(n.initials()), map_set(n.finals()), std::move(delta));
}

std::string to_dot(const Nfa& n) {
    std::ostringstream out;
    out << "digraph nfa {\n  rankdir=LR;\n";
    for (State q = 0; q < n.num_states(); ++q) {
        out << "  " << q << " [shape=" << (n.is_final(q) ? "doublecircle" : "circle") << "];\n";
    }
    for (State q : n.initials()) {
        out << "  __start" << q << " [shape=point];\n  __start" << q << " -> " << q << ";\n";
    }
    for (State q = 0; q < n.num_states(); ++q)
        for (std::size_t a = 0; a < n.alphabet().size(); ++a)
            for (State t : n.next(q, a))
                out << "  " << q << " -> " << t << " [label=\"" << n.alphabet()[a] << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace automin::nfa
