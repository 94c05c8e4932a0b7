// Acceptance suite: one line per criterion, nonzero exit if any fails or
// runs over its time budget.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "automin/dfa.hh"
#include "automin/format.hh"
#include "automin/monoid.hh"
#include "automin/nfa.hh"
#include "automin/pipeline.hh"
#include "automin/transducer.hh"
#include "automin/wfa.hh"
#include "generators.hh"
#include "oracles.hh"

using namespace automin;
namespace t = automin::testing;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

// Serialization that keeps the given numbering, shuffles the body lines and
// sprinkles comments, so the parser sees non-canonical files.
std::string scramble(t::Rng& rng, std::vector<std::string> header, std::vector<std::vector<std::string>> blocks) {
    std::shuffle(blocks.begin(), blocks.end(), rng);
    std::ostringstream out;
    if (t::coin(rng, 0.5)) out << "# generated\n";
    for (const auto& h : header) out << h << '\n';
    for (const auto& block : blocks) {
        if (t::coin(rng, 0.1)) out << "\n";
        for (const auto& line : block) out << line << (t::coin(rng, 0.1) ? "  # note\n" : "\n");
    }
    return out.str();
}

std::string alphabet_line(const std::string& keyword, const Alphabet& a) {
    std::string s = keyword;
    for (char c : a) s += std::string(" ") + c;
    return s;
}

std::string raw_text(t::Rng& rng, const dfa::Dfa& d) {
    std::vector<std::vector<std::string>> blocks{{alphabet_line("alphabet", d.alphabet())},
                                                 {"states " + std::to_string(d.num_states())},
                                                 {"initial " + std::to_string(d.initial())}};
    std::string fin = "final";
    for (State q : d.finals()) fin += " " + std::to_string(q);
    blocks.push_back({fin});
    for (State q = 0; q < d.num_states(); ++q)
        for (std::size_t a = 0; a < d.alphabet().size(); ++a)
            blocks.push_back({std::to_string(q) + " " + d.alphabet()[a] + " " + std::to_string(d.next(q, a))});
    return scramble(rng, {"dfa"}, std::move(blocks));
}

std::string raw_text(t::Rng& rng, const nfa::Nfa& n) {
    std::vector<std::vector<std::string>> blocks{{alphabet_line("alphabet", n.alphabet())},
                                                 {"states " + std::to_string(n.num_states())}};
    std::string ini = "initial", fin = "final";
    for (State q : n.initials()) ini += " " + std::to_string(q);
    for (State q : n.finals()) fin += " " + std::to_string(q);
    blocks.push_back({ini});
    blocks.push_back({fin});
    for (State q = 0; q < n.num_states(); ++q)
        for (std::size_t a = 0; a < n.alphabet().size(); ++a)
            for (State r : n.next(q, a))
                blocks.push_back({std::to_string(q) + " " + n.alphabet()[a] + " " + std::to_string(r)});
    return scramble(rng, {"nfa"}, std::move(blocks));
}

std::string raw_text(t::Rng& rng, const wfa::Wfa& w) {
    auto row = [](const std::string& head, const Vector& v) {
        std::string s = head;
        for (const auto& x : v) s += (s.empty() ? "" : " ") + to_string(x);
        return s;
    };
    std::vector<std::vector<std::string>> blocks{{alphabet_line("alphabet", w.alphabet())},
                                                 {"dim " + std::to_string(w.dim())},
                                                 {row("initial", w.init())},
                                                 {row("final", w.final_weights())}};
    for (std::size_t a = 0; a < w.alphabet().size(); ++a) {
        std::vector<std::string> block{std::string("matrix ") + w.alphabet()[a]};
        for (const auto& r : w.matrix(a)) block.push_back(row("", r));
        blocks.push_back(std::move(block));
    }
    return scramble(rng, {"wfa"}, std::move(blocks));
}

std::string raw_text(t::Rng& rng, const transducer::SubseqTransducer& m) {
    std::vector<std::vector<std::string>> blocks{{alphabet_line("input", m.input())},
                                                 {alphabet_line("output", m.output())},
                                                 {"states " + std::to_string(m.num_states())}};
    if (m.initial())
        blocks.push_back({"initial " + std::to_string(m.initial()->target) + " " + show_word(m.initial()->output)});
    for (State q = 0; q < m.num_states(); ++q) {
        if (m.term(q)) blocks.push_back({"final " + std::to_string(q) + " " + show_word(*m.term(q))});
        for (std::size_t a = 0; a < m.input().size(); ++a)
            if (const auto& s = m.next(q, a))
                blocks.push_back({std::to_string(q) + " " + m.input()[a] + " " + std::to_string(s->target) + " " +
                                  show_word(s->output)});
    }
    return scramble(rng, {"sst"}, std::move(blocks));
}

Outcome brzozowski_correctness() {
    Outcome o;
    t::Rng rng(1001);
    for (int i = 0; i < 200 && o.ok; ++i) {
        const auto n = t::random_nfa(rng, 6, t::uniform(rng, 1, 3));
        if (!dfa::is_isomorphic(nfa::brzozowski(n), dfa::minimize(nfa::determinize(n))))
            o.fail("nfa #" + std::to_string(i));
    }
    o.detail = o.ok ? "200 nfas" : o.detail;
    return o;
}

Outcome commutation() {
    Outcome o;
    t::Rng rng(1002);
    const dfa::DfaPort dp;
    const transducer::TransducerPort tp;
    for (int i = 0; i < 200 && o.ok; ++i) {
        const auto d = t::random_dfa(rng, 6, t::uniform(rng, 1, 3));
        if (!check_commutation(dp, d)) o.fail("dfa commutation #" + std::to_string(i));
        if (!check_idempotence(dp, d)) o.fail("dfa idempotence #" + std::to_string(i));
    }
    for (int i = 0; i < 100 && o.ok; ++i) {
        const auto m = t::random_sst(rng, 6, t::uniform(rng, 1, 3));
        if (!check_commutation(tp, m)) o.fail("sst commutation #" + std::to_string(i));
        if (!check_idempotence(tp, m)) o.fail("sst idempotence #" + std::to_string(i));
    }
    if (o.ok) o.detail = "200 dfas, 100 ssts";
    return o;
}

Outcome transducer_minimization() {
    Outcome o;
    t::Rng rng(1003);
    for (int i = 0; i < 200 && o.ok; ++i) {
        const auto m = t::random_sst(rng, 6, t::uniform(rng, 1, 2));
        const auto min = transducer::minimize(m);
        const std::string tag = " #" + std::to_string(i);
        for (const auto& w : t::all_words(m.input(), 12)) {
            if (t::sst_apply(min, w) != t::sst_apply(m, w)) {
                o.fail("apply differs on '" + w + "'" + tag);
                break;
            }
        }
        const auto expected = t::count_distinct_reduced_residuals(m, 12);
        if (min.num_states() != expected)
            o.fail(std::to_string(min.num_states()) + " states, " + std::to_string(expected) + " residuals" + tag);
        for (const auto& v : transducer::state_lcp(transducer::normalize(m)))
            if (!v.empty()) o.fail("nonempty lcp after normalize" + tag);
    }
    if (o.ok) o.detail = "200 ssts, inputs up to length 12";
    return o;
}

Outcome weighted_minimization() {
    Outcome o;
    t::Rng rng(1004);
    for (int i = 0; i < 100 && o.ok; ++i) {
        const auto w = t::random_wfa(rng, 4, 2);
        const auto m = wfa::minimize(w);
        const std::string tag = " #" + std::to_string(i);
        const auto rank = t::hankel_rank(w, 4);
        if (m.dim() != rank) o.fail("dim " + std::to_string(m.dim()) + ", rank " + std::to_string(rank) + tag);
        for (const auto& u : t::all_words(w.alphabet(), 8)) {
            if (t::wfa_weight(m, u) != t::wfa_weight(w, u)) {
                o.fail("weight differs on '" + u + "'" + tag);
                break;
            }
        }
    }
    if (o.ok) o.detail = "100 wfas";
    return o;
}

Outcome syntactic_monoid() {
    Outcome o;
    const Alphabet a("a"), ab("ab");
    if (monoid::syntactic_monoid(dfa::Dfa(a, 2, 0, {0}, {{1}, {0}})).monoid.order() != 2) o.fail("(aa)*");
    if (monoid::syntactic_monoid(dfa::Dfa(ab, 1, 0, {}, {{0, 0}})).monoid.order() != 1) o.fail("empty language");
    if (monoid::syntactic_monoid(dfa::Dfa(ab, 1, 0, {0}, {{0, 0}})).monoid.order() != 1) o.fail("A*");
    t::Rng rng(1005);
    std::size_t mismatches = 0;
    std::string first;
    for (int i = 0; i < 50; ++i) {
        const auto d = t::random_dfa(rng, 4, 2);
        const auto order = monoid::syntactic_monoid(d).monoid.order();
        const auto classes = t::brute_force_congruence_classes(d, 4, 4);
        if (order == classes) continue;
        if (mismatches++ == 0)
            first = "order " + std::to_string(order) + " vs " + std::to_string(classes) + " classes at #" + std::to_string(i);
    }
    if (mismatches) o.fail(std::to_string(mismatches) + "/50 dfas differ, first " + first);
    if (o.ok) o.detail = "3 fixed languages, 50 dfas";
    return o;
}

Outcome divisibility() {
    Outcome o;
    t::Rng rng(1006);
    const dfa::DfaPort port;
    for (int i = 0; i < 100 && o.ok; ++i) {
        const auto base = t::random_dfa(rng, 5, t::uniform(rng, 1, 3));
        const auto x = t::pad_dfa(rng, base);
        const auto y = t::pad_dfa(rng, base);
        if (!check_divides(port, dfa::minimize(x), y)) o.fail("pair #" + std::to_string(i));
    }
    if (o.ok) o.detail = "100 pairs";
    return o;
}

Outcome round_trip() {
    Outcome o;
    t::Rng rng(1007);
    for (int i = 0; i < 500 && o.ok; ++i) {
        std::string text;
        switch (i % 4) {
        case 0: text = raw_text(rng, t::random_dfa(rng, 6, t::uniform(rng, 1, 3))); break;
        case 1: text = raw_text(rng, t::random_nfa(rng, 6, t::uniform(rng, 1, 3))); break;
        case 2: text = raw_text(rng, t::random_wfa(rng, 4, t::uniform(rng, 1, 3))); break;
        default: text = raw_text(rng, t::random_sst(rng, 6, t::uniform(rng, 1, 3))); break;
        }
        try {
            const auto once = format::serialize(format::parse(text).automaton);
            const auto twice = format::serialize(format::parse(once).automaton);
            if (once != twice) o.fail("file #" + std::to_string(i) + " not stable");
        } catch (const std::exception& e) {
            o.fail("file #" + std::to_string(i) + ": " + e.what());
        }
    }
    if (o.ok) o.detail = "500 files";
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"brzozowski equals minimized subset construction", 10, brzozowski_correctness},
        {"reach/obs commute and minimize is idempotent", 10, commutation},
        {"transducer minimization", 30, transducer_minimization},
        {"weighted minimization", 30, weighted_minimization},
        {"syntactic monoid", 30, syntactic_monoid},
        {"divisibility of padded automata", 5, divisibility},
        {"format round trip", 5, round_trip},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.budget_s) o.fail("over the time budget");
        if (!o.ok) ++failures;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << c.name << " (" << std::fixed
                  << std::setprecision(2) << secs << "s, limit " << std::setprecision(0) << c.budget_s << "s) "
                  << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
