#include "automin/dfa.hh"

#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "automin/detail/canonical_order.hh"

namespace automin::dfa {

Dfa::Dfa(Alphabet alphabet, std::size_t n_states, State initial, const std::vector<State>& finals,
         std::vector<std::vector<State>> delta)
    : alphabet_(std::move(alphabet)), n_states_(n_states), initial_(initial), finals_(n_states, false) {
    if (n_states_ == 0) throw std::invalid_argument("dfa: a complete DFA needs at least one state");
    if (initial_ >= n_states_) throw std::invalid_argument("dfa: initial state out of range");
    for (State f : finals) {
        if (f >= n_states_) throw std::invalid_argument("dfa: final state out of range");
        finals_[f] = true;
    }
    if (delta.size() != n_states_) throw std::invalid_argument("dfa: transition table needs one row per state");
    delta_.reserve(n_states_ * alphabet_.size());
    for (std::size_t q = 0; q < n_states_; ++q) {
        if (delta[q].size() != alphabet_.size()) {
            throw std::invalid_argument("dfa: transition row " + std::to_string(q) + " is not total");
        }
        for (State t : delta[q]) {
            if (t >= n_states_) throw std::invalid_argument("dfa: transition target out of range");
            delta_.push_back(t);
        }
    }
}

std::vector<State> Dfa::finals() const {
    std::vector<State> out;
    for (State q = 0; q < n_states_; ++q)
        if (finals_[q]) out.push_back(q);
    return out;
}

State Dfa::run(State q, const Word& w) const {
    for (std::size_t a : alphabet_.encode(w)) q = next(q, a);
    return q;
}

bool accepts(const Dfa& d, const Word& w) { return d.is_final(d.run(d.initial(), w)); }

namespace {

// Builds the DFA whose state `rank[q]` copies old state `q`, keeping only
// states with rank < n.
Dfa renumber(const Dfa& d, const std::vector<State>& rank, std::size_t n) {
    const std::size_t k = d.alphabet().size();
    std::vector<std::vector<State>> delta(n, std::vector<State>(k));
    std::vector<State> finals;
    for (State q = 0; q < d.num_states(); ++q) {
        if (rank[q] >= n) continue;
        for (std::size_t a = 0; a < k; ++a) delta[rank[q]][a] = rank[d.next(q, a)];
        if (d.is_final(q)) finals.push_back(rank[q]);
    }
    return Dfa(d.alphabet(), n, rank[d.initial()], finals, std::move(delta));
}

auto successors_of(const Dfa& d) {
    return [&d](State q, auto&& visit) {
        for (std::size_t a = 0; a < d.alphabet().size(); ++a) visit(d.next(q, a));
    };
}

std::vector<State> reachable_rank(const Dfa& d, std::size_t& count) {
    std::vector<State> rank(d.num_states(), static_cast<State>(-1));
    std::deque<State> queue{d.initial()};
    rank[d.initial()] = 0;
    count = 1;
    while (!queue.empty()) {
        const State q = queue.front();
        queue.pop_front();
        for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
            const State t = d.next(q, a);
            if (rank[t] == static_cast<State>(-1)) {
                rank[t] = count++;
                queue.push_back(t);
            }
        }
    }
    return rank;
}

} // namespace

Dfa reach(const Dfa& d) {
    std::size_t count = 0;
    const auto rank = reachable_rank(d, count);
    return renumber(d, rank, count);
}

bool is_reachable(const Dfa& d) {
    std::size_t count = 0;
    reachable_rank(d, count);
    return count == d.num_states();
}

std::vector<State> equivalence_classes(const Dfa& d) {
    const std::size_t n = d.num_states();
    const std::size_t k = d.alphabet().size();
    std::vector<State> block(n);
    std::size_t n_blocks = 0;
    {
        // Accepting vs rejecting, numbered by first occurrence.
        std::map<bool, State> ids;
        for (State q = 0; q < n; ++q) {
            auto [it, fresh] = ids.try_emplace(d.is_final(q), ids.size());
            block[q] = it->second;
        }
        n_blocks = ids.size();
    }
    while (true) {
        std::map<std::vector<State>, State> ids;
        std::vector<State> refined(n);
        std::vector<State> signature(k + 1);
        for (State q = 0; q < n; ++q) {
            signature[0] = block[q];
            for (std::size_t a = 0; a < k; ++a) signature[a + 1] = block[d.next(q, a)];
            auto [it, fresh] = ids.try_emplace(signature, ids.size());
            refined[q] = it->second;
        }
        block = std::move(refined);
        if (ids.size() == n_blocks) break;
        n_blocks = ids.size();
    }
    return block;
}

Dfa obs(const Dfa& d) {
    const auto block = equivalence_classes(d);
    std::size_t n_blocks = 0;
    for (State b : block) n_blocks = std::max(n_blocks, b + 1);
    return renumber(d, block, n_blocks);
}

Dfa canonicalize(const Dfa& d) {
    const auto rank = detail::canonical_order(d.num_states(), {d.initial()}, successors_of(d));
    return renumber(d, rank, d.num_states());
}

Dfa minimize(const Dfa& d) { return canonicalize(obs(reach(d))); }

bool is_isomorphic(const Dfa& a, const Dfa& b) {
    return a.alphabet() == b.alphabet() && a.num_states() == b.num_states() && canonicalize(a) == canonicalize(b);
}

std::set<Word> residual(const Dfa& d, State q, std::size_t max_len) {
    if (q >= d.num_states()) throw std::out_of_range("dfa::residual: state out of range");
    std::set<Word> out;
    Word w;
    auto walk = [&](auto&& self, State s) -> void {
        if (d.is_final(s)) out.insert(w);
        if (w.size() == max_len) return;
        for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
            w.push_back(d.alphabet()[a]);
            self(self, d.next(s, a));
            w.pop_back();
        }
    };
    walk(walk, q);
    return out;
}

std::optional<StateMap> find_morphism(const Dfa& from, const Dfa& to) {
    require_same_alphabet(from.alphabet(), to.alphabet(), "dfa::find_morphism");
    std::vector<std::optional<State>> image(from.num_states());
    std::deque<State> queue{from.initial()};
    image[from.initial()] = to.initial();
    while (!queue.empty()) {
        const State q = queue.front();
        queue.pop_front();
        const State h = *image[q];
        if (from.is_final(q) != to.is_final(h)) return std::nullopt;
        for (std::size_t a = 0; a < from.alphabet().size(); ++a) {
            const State t = from.next(q, a);
            const State ht = to.next(h, a);
            if (!image[t]) {
                image[t] = ht;
                queue.push_back(t);
            } else if (*image[t] != ht) {
                return std::nullopt;
            }
        }
    }
    StateMap m{std::move(image), MapKind::general};
    m.kind = classify(m.image, to.num_states());
    return m;
}

Dfa complete(Alphabet alphabet, std::size_t n_states, State initial, const std::vector<State>& finals,
             const std::vector<std::vector<std::optional<State>>>& delta) {
    const std::size_t k = alphabet.size();
    bool partial = n_states == 0;
    for (const auto& row : delta)
        for (const auto& t : row) partial = partial || !t;
    const State sink = n_states;
    const std::size_t n = partial ? n_states + 1 : n_states;
    std::vector<std::vector<State>> total(n, std::vector<State>(k, sink));
    for (State q = 0; q < n_states && q < delta.size(); ++q) {
        for (std::size_t a = 0; a < k && a < delta[q].size(); ++a) {
            if (delta[q][a]) total[q][a] = *delta[q][a];
        }
    }
    return Dfa(std::move(alphabet), n, n_states == 0 ? sink : initial, finals, std::move(total));
}

std::string to_dot(const Dfa& d) {
    std::ostringstream out;
    out << "digraph dfa {\n  rankdir=LR;\n  __start [shape=point];\n";
    for (State q = 0; q < d.num_states(); ++q) {
        out << "  " << q << " [shape=" << (d.is_final(q) ? "doublecircle" : "circle") << "];\n";
    }
    out << "  __start -> " << d.initial() << ";\n";
    for (State q = 0; q < d.num_states(); ++q) {
        for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
            out << "  " << q << " -> " << d.next(q, a) << " [label=\"" << d.alphabet()[a] << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace automin::dfa
