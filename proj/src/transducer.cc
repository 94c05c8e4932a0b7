#include "automin/transducer.hh"

#include <deque>
#include <sstream>
#include <stdexcept>

#include "automin/detail/canonical_order.hh"

namespace automin::transducer {

namespace {

void check_output_word(const Alphabet& output, const Word& w) {
    for (char c : w) {
        if (!output.contains(c)) {
            throw std::invalid_argument("sst: output word '" + w + "' uses symbol outside {" + output.symbols() + "}");
        }
    }
}

} // namespace

SubseqTransducer::SubseqTransducer(Alphabet input, Alphabet output, std::size_t n_states, std::optional<Step> initial,
                                   std::vector<std::vector<std::optional<Step>>> trans,
                                   std::vector<std::optional<Word>> term)
    : input_(std::move(input)), output_(std::move(output)), n_states_(n_states), initial_(std::move(initial)),
      term_(std::move(term)) {
    if (initial_) {
        if (initial_->target >= n_states_) throw std::invalid_argument("sst: initial state out of range");
        check_output_word(output_, initial_->output);
    }
    if (trans.size() != n_states_) throw std::invalid_argument("sst: transition table needs one row per state");
    if (term_.size() != n_states_) throw std::invalid_argument("sst: termination table needs one entry per state");
    trans_.reserve(n_states_ * input_.size());
    for (auto& row : trans) {
        if (row.size() != input_.size()) throw std::invalid_argument("sst: transition row has wrong width");
        for (auto& step : row) {
            if (step) {
                if (step->target >= n_states_) throw std::invalid_argument("sst: transition target out of range");
                check_output_word(output_, step->output);
            }
            trans_.push_back(std::move(step));
        }
    }
    for (const auto& t : term_)
        if (t) check_output_word(output_, *t);
}

SubseqTransducer SubseqTransducer::empty(Alphabet input, Alphabet output) {
    return SubseqTransducer(std::move(input), std::move(output), 0, std::nullopt, {}, {});
}

std::optional<Word> apply(const SubseqTransducer& t, const Word& w) {
    const auto symbols = t.input().encode(w);
    if (!t.initial()) return std::nullopt;
    Word out = t.initial()->output;
    State q = t.initial()->target;
    for (std::size_t a : symbols) {
        const auto& step = t.next(q, a);
        if (!step) return std::nullopt;
        out += step->output;
        q = step->target;
    }
    if (!t.term(q)) return std::nullopt;
    return out + *t.term(q);
}

std::optional<Step> compose(const std::optional<Step>& first, const SubseqTransducer& t, std::size_t symbol) {
    if (!first) return std::nullopt;
    const auto& second = t.next(first->target, symbol);
    if (!second) return std::nullopt;
    return Step{second->target, first->output + second->output};
}

PartialOutputMap residual(const SubseqTransducer& t, State q, std::size_t max_len) {
    if (q >= t.num_states()) throw std::out_of_range("sst::residual: state out of range");
    PartialOutputMap out;
    Word input;
    Word produced;
    auto walk = [&](auto&& self, State s) -> void {
        if (t.term(s)) out.emplace(input, produced + *t.term(s));
        if (input.size() == max_len) return;
        for (std::size_t a = 0; a < t.input().size(); ++a) {
            const auto& step = t.next(s, a);
            if (!step) continue;
            const std::size_t mark = produced.size();
            input.push_back(t.input()[a]);
            produced += step->output;
            self(self, step->target);
            produced.resize(mark);
            input.pop_back();
        }
    };
    walk(walk, q);
    return out;
}

std::vector<bool> accessible(const SubseqTransducer& t) {
    std::vector<bool> seen(t.num_states(), false);
    if (!t.initial()) return seen;
    std::deque<State> queue{t.initial()->target};
    seen[t.initial()->target] = true;
    while (!queue.empty()) {
        const State q = queue.front();
        queue.pop_front();
        for (std::size_t a = 0; a < t.input().size(); ++a) {
            const auto& step = t.next(q, a);
            if (step && !seen[step->target]) {
                seen[step->target] = true;
                queue.push_back(step->target);
            }
        }
    }
    return seen;
}

std::vector<bool> productive(const SubseqTransducer& t) {
    const std::size_t n = t.num_states();
    std::vector<std::vector<State>> preds(n);
    for (State q = 0; q < n; ++q)
        for (std::size_t a = 0; a < t.input().size(); ++a)
            if (const auto& step = t.next(q, a)) preds[step->target].push_back(q);
    std::vector<bool> good(n, false);
    std::deque<State> queue;
    for (State q = 0; q < n; ++q) {
        if (t.term(q)) {
            good[q] = true;
            queue.push_back(q);
        }
    }
    while (!queue.empty()) {
        const State q = queue.front();
        queue.pop_front();
        for (State p : preds[q]) {
            if (!good[p]) {
                good[p] = true;
                queue.push_back(p);
            }
        }
    }
    return good;
}

namespace {

auto successors_of(const SubseqTransducer& t) {
    return [&t](State q, auto&& visit) {
        for (std::size_t a = 0; a < t.input().size(); ++a)
            if (const auto& step = t.next(q, a)) visit(step->target);
    };
}

// Copies the states with keep[q], numbered canonically among themselves.
// Transitions into dropped states become undefined; so does the initial
// data when q0 is dropped.
SubseqTransducer restrict_to(const SubseqTransducer& t, const std::vector<bool>& keep) {
    const std::size_t k = t.input().size();
    std::vector<State> roots;
    if (t.initial() && keep[t.initial()->target]) roots.push_back(t.initial()->target);
    const auto successors = successors_of(t);
    const auto kept_successors = [&](State q, auto&& visit) {
        successors(q, [&](State s) {
            if (keep[s]) visit(s);
        });
    };
    // Number kept states only: run the canonical order on the full machine
    // but with dropped states pushed to the end by a stable second pass.
    std::vector<State> rank(t.num_states(), static_cast<State>(-1));
    std::size_t n = 0;
    {
        const auto full = detail::canonical_order(t.num_states(), roots, kept_successors);
        std::vector<State> by_rank(t.num_states());
        for (State q = 0; q < t.num_states(); ++q) by_rank[full[q]] = q;
        for (State q : by_rank)
            if (keep[q]) rank[q] = n++;
    }
    std::vector<std::vector<std::optional<Step>>> trans(n, std::vector<std::optional<Step>>(k));
    std::vector<std::optional<Word>> term(n);
    for (State q = 0; q < t.num_states(); ++q) {
        if (!keep[q]) continue;
        for (std::size_t a = 0; a < k; ++a) {
            const auto& step = t.next(q, a);
            if (step && keep[step->target]) trans[rank[q]][a] = Step{rank[step->target], step->output};
        }
        term[rank[q]] = t.term(q);
    }
    std::optional<Step> initial;
    if (!roots.empty()) initial = Step{rank[roots.front()], t.initial()->output};
    return SubseqTransducer(t.input(), t.output(), n, std::move(initial), std::move(trans), std::move(term));
}

// Pushes each state's lcp backwards. Every state must be productive.
SubseqTransducer push_outputs(const SubseqTransducer& t) {
    if (t.num_states() == 0) return t;
    const auto v = state_lcp(t);
    const std::size_t k = t.input().size();
    std::vector<std::vector<std::optional<Step>>> trans(t.num_states(), std::vector<std::optional<Step>>(k));
    std::vector<std::optional<Word>> term(t.num_states());
    for (State q = 0; q < t.num_states(); ++q) {
        for (std::size_t a = 0; a < k; ++a) {
            if (const auto& step = t.next(q, a)) {
                trans[q][a] = Step{step->target, strip_prefix(v[q], step->output + v[step->target])};
            }
        }
        if (t.term(q)) term[q] = strip_prefix(v[q], *t.term(q));
    }
    std::optional<Step> initial;
    if (t.initial()) initial = Step{t.initial()->target, t.initial()->output + v[t.initial()->target]};
    return SubseqTransducer(t.input(), t.output(), t.num_states(), std::move(initial), std::move(trans),
                            std::move(term));
}

} // namespace

SubseqTransducer trim(const SubseqTransducer& t) {
    auto keep = accessible(t);
    const auto good = productive(t);
    for (State q = 0; q < t.num_states(); ++q) keep[q] = keep[q] && good[q];
    return restrict_to(t, keep);
}

std::vector<Word> state_lcp(const SubseqTransducer& t) {
    const std::size_t n = t.num_states();
    const std::size_t k = t.input().size();
    const auto good = productive(t);
    for (State q = 0; q < n; ++q) {
        if (!good[q]) {
            throw ContractViolation("sst::state_lcp: state " + std::to_string(q) +
                                    " has an empty residual; trim the machine first");
        }
    }
    // Seed every state with the output of one completion, found by a
    // backward search from the terminating states.
    std::vector<std::optional<Word>> v(n);
    std::vector<std::vector<std::pair<State, std::size_t>>> preds(n);
    for (State q = 0; q < n; ++q)
        for (std::size_t a = 0; a < k; ++a)
            if (const auto& step = t.next(q, a)) preds[step->target].emplace_back(q, a);
    std::deque<State> queue;
    for (State q = 0; q < n; ++q) {
        if (t.term(q)) {
            v[q] = *t.term(q);
            queue.push_back(q);
        }
    }
    while (!queue.empty()) {
        const State q = queue.front();
        queue.pop_front();
        for (auto [p, a] : preds[q]) {
            if (!v[p]) {
                v[p] = t.next(p, a)->output + *v[q];
                queue.push_back(p);
            }
        }
    }
    // Each pass can only shorten some v_q, so this reaches the greatest fixpoint.
    for (bool changed = true; changed;) {
        changed = false;
        for (State q = 0; q < n; ++q) {
            std::optional<Word> lcp = t.term(q);
            for (std::size_t a = 0; a < k; ++a) {
                const auto& step = t.next(q, a);
                if (!step) continue;
                const Word candidate = step->output + *v[step->target];
                lcp = lcp ? common_prefix(*lcp, candidate) : candidate;
            }
            if (*lcp != *v[q]) {
                v[q] = std::move(lcp);
                changed = true;
            }
        }
    }
    std::vector<Word> out;
    out.reserve(n);
    for (auto& w : v) out.push_back(std::move(*w));
    return out;
}

SubseqTransducer normalize(const SubseqTransducer& t) { return push_outputs(trim(t)); }

SubseqTransducer merge_equivalent(const SubseqTransducer& t) {
    const auto lcps = state_lcp(t);
    for (State q = 0; q < lcps.size(); ++q) {
        if (!lcps[q].empty()) {
            throw ContractViolation("sst::merge_equivalent: state " + std::to_string(q) +
                                    " is not in earliest form (lcp '" + lcps[q] + "')");
        }
    }
    const std::size_t n = t.num_states();
    const std::size_t k = t.input().size();
    std::vector<State> block(n);
    std::size_t n_blocks = 0;
    {
        std::map<std::optional<Word>, State> ids;
        for (State q = 0; q < n; ++q) {
            auto [it, fresh] = ids.try_emplace(t.term(q), ids.size());
            block[q] = it->second;
        }
        n_blocks = ids.size();
    }
    using Signature = std::pair<State, std::vector<std::optional<std::pair<Word, State>>>>;
    while (n > 0) {
        std::map<Signature, State> ids;
        std::vector<State> refined(n);
        for (State q = 0; q < n; ++q) {
            Signature sig{block[q], std::vector<std::optional<std::pair<Word, State>>>(k)};
            for (std::size_t a = 0; a < k; ++a)
                if (const auto& step = t.next(q, a)) sig.second[a] = std::make_pair(step->output, block[step->target]);
            auto [it, fresh] = ids.try_emplace(std::move(sig), ids.size());
            refined[q] = it->second;
        }
        block = std::move(refined);
        if (ids.size() == n_blocks) break;
        n_blocks = ids.size();
    }
    std::vector<std::optional<State>> representative(n_blocks);
    for (State q = 0; q < n; ++q)
        if (!representative[block[q]]) representative[block[q]] = q;
    std::vector<std::vector<std::optional<Step>>> trans(n_blocks, std::vector<std::optional<Step>>(k));
    std::vector<std::optional<Word>> term(n_blocks);
    for (State b = 0; b < n_blocks; ++b) {
        const State q = *representative[b];
        for (std::size_t a = 0; a < k; ++a)
            if (const auto& step = t.next(q, a)) trans[b][a] = Step{block[step->target], step->output};
        term[b] = t.term(q);
    }
    std::optional<Step> initial;
    if (t.initial()) initial = Step{block[t.initial()->target], t.initial()->output};
    return SubseqTransducer(t.input(), t.output(), n_blocks, std::move(initial), std::move(trans), std::move(term));
}

SubseqTransducer canonicalize(const SubseqTransducer& t) {
    std::vector<bool> all(t.num_states(), true);
    return restrict_to(t, all);
}

SubseqTransducer minimize(const SubseqTransducer& t) { return canonicalize(merge_equivalent(normalize(t))); }

SubseqTransducer obs(const SubseqTransducer& t) {
    return merge_equivalent(push_outputs(restrict_to(t, productive(t))));
}

bool is_isomorphic(const SubseqTransducer& a, const SubseqTransducer& b) {
    return a.num_states() == b.num_states() && canonicalize(a) == canonicalize(b);
}

bool equivalent(const SubseqTransducer& a, const SubseqTransducer& b) {
    require_same_alphabet(a.input(), b.input(), "sst::equivalent (input)");
    require_same_alphabet(a.output(), b.output(), "sst::equivalent (output)");
    return minimize(a) == minimize(b);
}

std::optional<KleisliMap> find_morphism(const SubseqTransducer& from, const SubseqTransducer& to) {
    require_same_alphabet(from.input(), to.input(), "sst::find_morphism (input)");
    require_same_alphabet(from.output(), to.output(), "sst::find_morphism (output)");
    const std::size_t k = from.input().size();
    std::vector<bool> visited(from.num_states(), false);
    std::vector<std::optional<Step>> image(from.num_states());
    std::deque<State> queue;
    // Records h(q) = value; false on a clash with an earlier assignment.
    auto assign = [&](State q, std::optional<Step> value) {
        if (visited[q]) return image[q] == value;
        visited[q] = true;
        image[q] = std::move(value);
        queue.push_back(q);
        return true;
    };
    // h ∘ i = i'
    if (from.initial()) {
        const Step& i = *from.initial();
        if (!to.initial()) {
            if (!assign(i.target, std::nullopt)) return std::nullopt;
        } else {
            if (!has_prefix(to.initial()->output, i.output)) return std::nullopt;
            assign(i.target, Step{to.initial()->target, strip_prefix(i.output, to.initial()->output)});
        }
    } else if (to.initial()) {
        return std::nullopt;
    }
    while (!queue.empty()) {
        const State q = queue.front();
        queue.pop_front();
        const auto h = image[q];
        // final' ∘ h = final
        if (!h) {
            if (from.term(q)) return std::nullopt;
        } else {
            const auto& tt = to.term(h->target);
            if (from.term(q).has_value() != tt.has_value()) return std::nullopt;
            if (tt && *from.term(q) != h->output + *tt) return std::nullopt;
        }
        // h ∘ δ_a = δ'_a ∘ h
        for (std::size_t a = 0; a < k; ++a) {
            const auto& step = from.next(q, a);
            const auto rhs = compose(h, to, a);
            if (!step) {
                if (rhs) return std::nullopt;
                continue;
            }
            if (!rhs) {
                if (!assign(step->target, std::nullopt)) return std::nullopt;
                continue;
            }
            if (!has_prefix(rhs->output, step->output)) return std::nullopt;
            if (!assign(step->target, Step{rhs->target, strip_prefix(step->output, rhs->output)})) return std::nullopt;
        }
    }
    std::vector<std::optional<State>> targets(from.num_states());
    bool silent = true;
    for (State q = 0; q < from.num_states(); ++q) {
        if (image[q]) {
            targets[q] = image[q]->target;
            silent = silent && image[q]->output.empty();
        }
    }
    const MapKind states = classify(targets, to.num_states());
    KleisliMap m{std::move(image), make_kind(is_epi(states), is_mono(states) && silent)};
    return m;
}

std::string to_dot(const SubseqTransducer& t) {
    std::ostringstream out;
    out << "digraph sst {\n  rankdir=LR;\n";
    for (State q = 0; q < t.num_states(); ++q) {
        out << "  " << q << " [shape=" << (t.term(q) ? "doublecircle" : "circle") << ", label=\"" << q;
        if (t.term(q)) out << "\\n/ " << show_word(*t.term(q));
        out << "\"];\n";
    }
    if (t.initial()) {
        out << "  __start [shape=point];\n  __start -> " << t.initial()->target << " [label=\""
            << show_word(t.initial()->output) << "\"];\n";
    }
    for (State q = 0; q < t.num_states(); ++q)
        for (std::size_t a = 0; a < t.input().size(); ++a)
            if (const auto& step = t.next(q, a))
                out << "  " << q << " -> " << step->target << " [label=\"" << t.input()[a] << " / "
                    << show_word(step->output) << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace automin::transducer
