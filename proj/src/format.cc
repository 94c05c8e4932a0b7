#include "automin/format.hh"

#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace automin::format {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;

    [[nodiscard]] const std::string& keyword() const { return tokens.front(); }
    [[nodiscard]] std::size_t args() const { return tokens.size() - 1; }
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::istringstream in{std::string(raw)};
        for (std::string tok; in >> tok;) line.tokens.push_back(std::move(tok));
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
    if (tok.empty() || tok.size() > 18 || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
    }
    return std::stoull(tok);
}

State parse_state(const std::string& tok, std::size_t n_states, std::size_t line) {
    const std::size_t q = parse_count(tok, line);
    if (q >= n_states) {
        throw ParseError(line, "state " + tok + " out of range (" + std::to_string(n_states) + " states)");
    }
    return q;
}

char parse_symbol(const std::string& tok, std::size_t line) {
    if (tok.size() != 1 || !is_valid_symbol(tok[0])) throw ParseError(line, "invalid symbol '" + tok + "'");
    return tok[0];
}

std::size_t parse_symbol_index(const std::string& tok, const Alphabet& alphabet, std::size_t line) {
    const char c = parse_symbol(tok, line);
    if (!alphabet.contains(c)) throw ParseError(line, "symbol '" + tok + "' is not declared");
    return alphabet.index_of(c);
}

Word parse_word(const std::string& tok, const Alphabet& alphabet, std::size_t line) {
    if (tok == "@") return {};
    for (char c : tok) {
        if (!alphabet.contains(c)) throw ParseError(line, "word '" + tok + "' uses undeclared symbol '" + c + "'");
    }
    return tok;
}

Rational parse_weight(const std::string& tok, std::size_t line) {
    try {
        return parse_rational(tok);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
    }
}

// Declarations (`alphabet`, `states`, …) may appear anywhere in the body;
// each must appear exactly once.
class Declarations {
public:
    Declarations(const std::vector<Line>& body, std::initializer_list<std::string_view> names) {
        for (const auto& line : body) {
            for (auto name : names) {
                if (line.keyword() != name) continue;
                if (!found_.emplace(std::string(name), &line).second) {
                    throw ParseError(line.number, "duplicate '" + std::string(name) + "' declaration");
                }
            }
        }
    }

    [[nodiscard]] bool is_declaration(const Line& line) const {
        const auto it = found_.find(line.keyword());
        return it != found_.end() && it->second == &line;
    }

    const Line& require(const std::string& name) const {
        const auto it = found_.find(name);
        if (it == found_.end()) throw ParseError(0, "missing '" + name + "' declaration");
        return *it->second;
    }

    Alphabet alphabet(const std::string& name) const {
        const Line& line = require(name);
        std::string symbols;
        for (std::size_t i = 1; i < line.tokens.size(); ++i) symbols += parse_symbol(line.tokens[i], line.number);
        try {
            return Alphabet(symbols);
        } catch (const InputError& e) {
            throw ParseError(line.number, e.what());
        }
    }

    std::size_t count(const std::string& name) const {
        const Line& line = require(name);
        if (line.args() != 1) throw ParseError(line.number, "'" + name + "' takes one integer");
        return parse_count(line.tokens[1], line.number);
    }

private:
    std::map<std::string, const Line*, std::less<>> found_;
};

template <class F>
auto build(F&& f) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

ParseResult parse_dfa(const std::vector<Line>& body) {
    const Declarations decl(body, {"alphabet", "states"});
    const Alphabet alphabet = decl.alphabet("alphabet");
    const std::size_t n = decl.count("states");
    const std::size_t k = alphabet.size();
    std::optional<State> initial;
    std::vector<State> finals;
    std::vector<std::vector<std::optional<State>>> delta(n, std::vector<std::optional<State>>(k));
    for (const auto& line : body) {
        if (decl.is_declaration(line)) continue;
        if (line.keyword() == "initial") {
            if (initial) throw ParseError(line.number, "duplicate 'initial' line");
            if (line.args() != 1) throw ParseError(line.number, "a dfa has exactly one initial state");
            initial = parse_state(line.tokens[1], n, line.number);
        } else if (line.keyword() == "final") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i) finals.push_back(parse_state(line.tokens[i], n, line.number));
        } else if (line.tokens.size() == 3) {
            const State q = parse_state(line.tokens[0], n, line.number);
            const std::size_t a = parse_symbol_index(line.tokens[1], alphabet, line.number);
            const State t = parse_state(line.tokens[2], n, line.number);
            if (delta[q][a]) throw ParseError(line.number, "duplicate transition from " + line.tokens[0] + " on " + line.tokens[1]);
            delta[q][a] = t;
        } else {
            throw ParseError(line.number, "expected 'initial', 'final' or a transition 'q a q2'");
        }
    }
    if (!initial) throw ParseError(0, "missing 'initial' line");
    std::size_t missing = 0;
    for (const auto& row : delta)
        for (const auto& t : row) missing += t ? 0 : 1;
    ParseResult result{build([&] { return dfa::complete(alphabet, n, *initial, finals, delta); }), {}};
    if (missing > 0) {
        result.warnings.push_back("dfa: " + std::to_string(missing) +
                                  " missing transition(s) completed with a rejecting sink state");
    }
    return result;
}

ParseResult parse_nfa(const std::vector<Line>& body) {
    const Declarations decl(body, {"alphabet", "states"});
    const Alphabet alphabet = decl.alphabet("alphabet");
    const std::size_t n = decl.count("states");
    std::vector<State> initials, finals;
    std::vector<std::vector<std::vector<State>>> delta(n, std::vector<std::vector<State>>(alphabet.size()));
    for (const auto& line : body) {
        if (decl.is_declaration(line)) continue;
        if (line.keyword() == "initial" || line.keyword() == "final") {
            auto& target = line.keyword() == "initial" ? initials : finals;
            for (std::size_t i = 1; i < line.tokens.size(); ++i) target.push_back(parse_state(line.tokens[i], n, line.number));
        } else if (line.tokens.size() == 3) {
            const State q = parse_state(line.tokens[0], n, line.number);
            const std::size_t a = parse_symbol_index(line.tokens[1], alphabet, line.number);
            delta[q][a].push_back(parse_state(line.tokens[2], n, line.number));
        } else {
            throw ParseError(line.number, "expected 'initial', 'final' or a transition 'q a q2'");
        }
    }
    return {build([&] { return nfa::Nfa(alphabet, n, initials, finals, delta); }), {}};
}

ParseResult parse_wfa(const std::vector<Line>& body) {
    const Declarations decl(body, {"alphabet", "dim"});
    const Alphabet alphabet = decl.alphabet("alphabet");
    const std::size_t dim = decl.count("dim");
    std::optional<Vector> init, final;
    std::vector<std::optional<Matrix>> trans(alphabet.size());
    auto read_vector = [&](const Line& line, std::size_t from) {
        if (line.tokens.size() - from != dim) {
            throw ParseError(line.number, "expected " + std::to_string(dim) + " weights, got " +
                                              std::to_string(line.tokens.size() - from));
        }
        Vector v;
        for (std::size_t i = from; i < line.tokens.size(); ++i) v.push_back(parse_weight(line.tokens[i], line.number));
        return v;
    };
    for (std::size_t i = 0; i < body.size(); ++i) {
        const Line& line = body[i];
        if (decl.is_declaration(line)) continue;
        if (line.keyword() == "initial" || line.keyword() == "final") {
            auto& target = line.keyword() == "initial" ? init : final;
            if (target) throw ParseError(line.number, "duplicate '" + line.keyword() + "' line");
            target = read_vector(line, 1);
        } else if (line.keyword() == "matrix") {
            if (line.args() != 1) throw ParseError(line.number, "'matrix' takes one symbol");
            const std::size_t a = parse_symbol_index(line.tokens[1], alphabet, line.number);
            if (trans[a]) throw ParseError(line.number, "duplicate matrix for '" + line.tokens[1] + "'");
            Matrix m;
            for (std::size_t r = 0; r < dim; ++r) {
                if (i + 1 >= body.size()) throw ParseError(line.number, "matrix '" + line.tokens[1] + "' has too few rows");
                m.push_back(read_vector(body[++i], 0));
            }
            trans[a] = std::move(m);
        } else {
            throw ParseError(line.number, "expected 'initial', 'final' or 'matrix'");
        }
    }
    if (!init) throw ParseError(0, "missing 'initial' line");
    if (!final) throw ParseError(0, "missing 'final' line");
    std::vector<Matrix> matrices;
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
        if (!trans[a]) throw ParseError(0, std::string("missing matrix for '") + alphabet[a] + "'");
        matrices.push_back(std::move(*trans[a]));
    }
    return {build([&] { return wfa::Wfa(alphabet, dim, *init, matrices, *final); }), {}};
}

ParseResult parse_sst(const std::vector<Line>& body) {
    using transducer::Step;
    const Declarations decl(body, {"input", "output", "states"});
    const Alphabet input = decl.alphabet("input");
    const Alphabet output = decl.alphabet("output");
    const std::size_t n = decl.count("states");
    std::optional<Step> initial;
    bool seen_initial = false;
    std::vector<std::vector<std::optional<Step>>> trans(n, std::vector<std::optional<Step>>(input.size()));
    std::vector<std::optional<Word>> term(n);
    for (const auto& line : body) {
        if (decl.is_declaration(line)) continue;
        if (line.keyword() == "initial") {
            if (seen_initial) throw ParseError(line.number, "duplicate 'initial' line");
            if (line.args() != 2) throw ParseError(line.number, "expected 'initial q u0'");
            seen_initial = true;
            initial = Step{parse_state(line.tokens[1], n, line.number), parse_word(line.tokens[2], output, line.number)};
        } else if (line.keyword() == "final") {
            if (line.args() != 2) throw ParseError(line.number, "expected 'final q out'");
            const State q = parse_state(line.tokens[1], n, line.number);
            if (term[q]) throw ParseError(line.number, "duplicate termination for state " + line.tokens[1]);
            term[q] = parse_word(line.tokens[2], output, line.number);
        } else if (line.tokens.size() == 4) {
            const State q = parse_state(line.tokens[0], n, line.number);
            const std::size_t a = parse_symbol_index(line.tokens[1], input, line.number);
            if (trans[q][a]) throw ParseError(line.number, "duplicate transition from " + line.tokens[0] + " on " + line.tokens[1]);
            trans[q][a] = Step{parse_state(line.tokens[2], n, line.number), parse_word(line.tokens[3], output, line.number)};
        } else {
            throw ParseError(line.number, "expected 'initial', 'final' or a transition 'q a q2 out'");
        }
    }
    return {build([&] {
                return transducer::SubseqTransducer(input, output, n, initial, trans, term);
            }),
            {}};
}

void write_symbols(std::ostream& out, std::string_view keyword, const Alphabet& alphabet) {
    out << keyword;
    for (char c : alphabet) out << ' ' << c;
    out << '\n';
}

void write_vector(std::ostream& out, const Vector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << to_string(v[i]);
}

} // namespace

ParseResult parse(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "empty input: expected a header line (dfa, nfa, wfa or sst)");
    const Line& header = lines.front();
    if (header.tokens.size() != 1) throw ParseError(header.number, "header line must be a single kind name");
    const std::vector<Line> body(lines.begin() + 1, lines.end());
    const std::string& kind = header.keyword();
    if (kind == "dfa") return parse_dfa(body);
    if (kind == "nfa") return parse_nfa(body);
    if (kind == "wfa") return parse_wfa(body);
    if (kind == "sst") return parse_sst(body);
    throw ParseError(header.number, "unknown automaton kind '" + kind + "'");
}

std::string serialize(const dfa::Dfa& input) {
    const auto d = dfa::canonicalize(input);
    std::ostringstream out;
    out << "dfa\n";
    write_symbols(out, "alphabet", d.alphabet());
    out << "states " << d.num_states() << "\ninitial " << d.initial() << "\nfinal";
    for (State q : d.finals()) out << ' ' << q;
    out << '\n';
    for (State q = 0; q < d.num_states(); ++q)
        for (std::size_t a = 0; a < d.alphabet().size(); ++a)
            out << q << ' ' << d.alphabet()[a] << ' ' << d.next(q, a) << '\n';
    return out.str();
}

std::string serialize(const nfa::Nfa& input) {
    const auto n = nfa::canonicalize(input);
    std::ostringstream out;
    out << "nfa\n";
    write_symbols(out, "alphabet", n.alphabet());
    out << "states " << n.num_states() << "\ninitial";
    for (State q : n.initials()) out << ' ' << q;
    out << "\nfinal";
    for (State q : n.finals()) out << ' ' << q;
    out << '\n';
    for (State q = 0; q < n.num_states(); ++q)
        for (std::size_t a = 0; a < n.alphabet().size(); ++a)
            for (State t : n.next(q, a)) out << q << ' ' << n.alphabet()[a] << ' ' << t << '\n';
    return out.str();
}

std::string serialize(const wfa::Wfa& w) {
    std::ostringstream out;
    out << "wfa\n";
    write_symbols(out, "alphabet", w.alphabet());
    out << "dim " << w.dim() << "\ninitial" << (w.dim() ? " " : "");
    write_vector(out, w.init());
    out << "\nfinal" << (w.dim() ? " " : "");
    write_vector(out, w.final_weights());
    out << '\n';
    for (std::size_t a = 0; a < w.alphabet().size(); ++a) {
        out << "matrix " << w.alphabet()[a] << '\n';
        for (const auto& row : w.matrix(a)) {
            write_vector(out, row);
            out << '\n';
        }
    }
    return out.str();
}

std::string serialize(const transducer::SubseqTransducer& input) {
    const auto t = transducer::canonicalize(input);
    std::ostringstream out;
    out << "sst\n";
    write_symbols(out, "input", t.input());
    write_symbols(out, "output", t.output());
    out << "states " << t.num_states() << '\n';
    if (t.initial()) out << "initial " << t.initial()->target << ' ' << show_word(t.initial()->output) << '\n';
    for (State q = 0; q < t.num_states(); ++q)
        if (t.term(q)) out << "final " << q << ' ' << show_word(*t.term(q)) << '\n';
    for (State q = 0; q < t.num_states(); ++q)
        for (std::size_t a = 0; a < t.input().size(); ++a)
            if (const auto& step = t.next(q, a))
                out << q << ' ' << t.input()[a] << ' ' << step->target << ' ' << show_word(step->output) << '\n';
    return out.str();
}

std::string serialize(const Automaton& a) {
    return std::visit([](const auto& x) { return serialize(x); }, a);
}

std::string_view kind_name(const Automaton& a) {
    static constexpr std::string_view names[] = {"dfa", "nfa", "wfa", "sst"};
    return names[a.index()];
}

std::string to_dot(const Automaton& a) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, dfa::Dfa>) return dfa::to_dot(x);
            else if constexpr (std::is_same_v<T, nfa::Nfa>) return nfa::to_dot(x);
            else if constexpr (std::is_same_v<T, wfa::Wfa>) return wfa::to_dot(x);
            else return transducer::to_dot(x);
        },
        a);
}

std::string monoid_to_json(const monoid::MonoidRecognizer& r) {
    nlohmann::ordered_json j;
    j["order"] = r.monoid.order();
    j["identity"] = r.monoid.identity();
    j["table"] = r.monoid.table();
    nlohmann::ordered_json phi = nlohmann::ordered_json::object();
    for (std::size_t a = 0; a < r.alphabet.size(); ++a) phi[std::string(1, r.alphabet[a])] = r.phi[a];
    j["phi"] = std::move(phi);
    std::vector<monoid::Element> accepting;
    for (monoid::Element x = 0; x < r.accepting.size(); ++x)
        if (r.accepting[x]) accepting.push_back(x);
    j["accepting"] = accepting;
    std::vector<std::string> names;
    for (const auto& w : r.names) names.push_back(show_word(w));
    j["names"] = names;
    return j.dump(2) + "\n";
}

} // namespace automin::format
