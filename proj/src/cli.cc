#include "automin/cli.hh"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "automin/format.hh"

namespace automin::cli {

namespace {

// Bad arguments or an input of the wrong kind.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    std::string output_path;

    format::Automaton load(const std::string& path) const {
        std::string text;
        if (path == "-") {
            text.assign(std::istreambuf_iterator<char>(in), {});
        } else {
            std::ifstream file(path, std::ios::binary);
            if (!file) throw UsageError("cannot open '" + path + "'");
            text.assign(std::istreambuf_iterator<char>(file), {});
        }
        try {
            auto result = format::parse(text);
            for (const auto& w : result.warnings) err << "warning: " << path << ": " << w << '\n';
            return std::move(result.automaton);
        } catch (const format::ParseError& e) {
            throw format::ParseError(e.line(), path + ": " + e.what());
        }
    }

    void emit(const std::string& text) const {
        if (output_path.empty() || output_path == "-") {
            out << text;
            return;
        }
        std::ofstream file(output_path, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + output_path + "'");
        file << text;
    }
};

Word parse_word_arg(const std::string& arg) { return arg == "@" ? Word{} : arg; }

[[noreturn]] void wrong_kind(const format::Automaton& a, std::string_view command, std::string_view expected) {
    throw UsageError(std::string(command) + ": expected " + std::string(expected) + ", got " +
                     std::string(format::kind_name(a)));
}

// Language-level view of dfa and nfa inputs.
nfa::Nfa as_nfa(const format::Automaton& a, std::string_view command) {
    if (const auto* d = std::get_if<dfa::Dfa>(&a)) return nfa::embed(*d);
    if (const auto* n = std::get_if<nfa::Nfa>(&a)) return *n;
    wrong_kind(a, command, "dfa or nfa");
}

dfa::Dfa as_dfa(const format::Automaton& a, std::string_view command) {
    if (const auto* d = std::get_if<dfa::Dfa>(&a)) return *d;
    if (const auto* n = std::get_if<nfa::Nfa>(&a)) return nfa::determinize(*n);
    wrong_kind(a, command, "dfa or nfa");
}

template <class T>
const T& expect(const format::Automaton& a, std::string_view command, std::string_view expected) {
    if (const auto* x = std::get_if<T>(&a)) return *x;
    wrong_kind(a, command, expected);
}

bool equivalent(const format::Automaton& a, const format::Automaton& b) {
    const bool a_lang = std::holds_alternative<dfa::Dfa>(a) || std::holds_alternative<nfa::Nfa>(a);
    const bool b_lang = std::holds_alternative<dfa::Dfa>(b) || std::holds_alternative<nfa::Nfa>(b);
    if (a_lang && b_lang) {
        const auto ma = dfa::minimize(as_dfa(a, "equiv"));
        const auto mb = dfa::minimize(as_dfa(b, "equiv"));
        require_same_alphabet(ma.alphabet(), mb.alphabet(), "equiv");
        return ma == mb;
    }
    if (a.index() != b.index()) {
        throw UsageError("equiv: cannot compare a " + std::string(format::kind_name(a)) + " with a " +
                         std::string(format::kind_name(b)));
    }
    if (const auto* w = std::get_if<wfa::Wfa>(&a)) return wfa::equivalent(*w, std::get<wfa::Wfa>(b));
    return transducer::equivalent(std::get<transducer::SubseqTransducer>(a), std::get<transducer::SubseqTransducer>(b));
}

std::string minimized(const format::Automaton& a) {
    if (const auto* w = std::get_if<wfa::Wfa>(&a)) return format::serialize(wfa::minimize(*w));
    if (const auto* t = std::get_if<transducer::SubseqTransducer>(&a)) return format::serialize(transducer::minimize(*t));
    return format::serialize(dfa::minimize(as_dfa(a, "min")));
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimization of automata and subsequential transducers", "automin"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    std::string file, file2, word, output;
    bool json = false;
    auto add = [&](const std::string& name, const std::string& help, bool with_output) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "Input file, or - for stdin")->required();
        if (with_output) sub->add_option("-o,--output", output, "Output file (default stdout)");
        return sub;
    };
    auto* accept_cmd = add("accept", "Exit 0 if the dfa/nfa accepts WORD, 1 otherwise", false);
    accept_cmd->add_option("word", word, "Input word, @ for the empty word")->required();
    auto* apply_cmd = add("apply", "Run a transducer on WORD; exit 1 when undefined", false);
    apply_cmd->add_option("word", word, "Input word, @ for the empty word")->required();
    auto* min_cmd = add("min", "Minimize any kind (an nfa is determinized first)", true);
    auto* det_cmd = add("det", "Subset construction of an nfa", true);
    auto* codet_cmd = add("codet", "Backward-deterministic acceptor of an nfa", true);
    auto* brz_cmd = add("brzozowski", "Minimal dfa by determinize(codeterminize(.))", true);
    auto* wmin_cmd = add("wmin", "Minimize a weighted automaton", true);
    auto* wapply_cmd = add("wapply", "Weight of WORD in a weighted automaton", false);
    wapply_cmd->add_option("word", word, "Input word, @ for the empty word")->required();
    auto* tmin_cmd = add("tmin", "Minimize a subsequential transducer", true);
    auto* synmon_cmd = add("synmon", "Syntactic monoid of a dfa/nfa language", true);
    synmon_cmd->add_flag("--json", json, "Machine-readable output");
    auto* equiv_cmd = add("equiv", "Exit 0 if both inputs have the same behaviour, 1 otherwise", false);
    equiv_cmd->add_option("other", file2, "Second input file")->required();
    auto* dot_cmd = add("export-dot", "Graphviz rendering", true);

    try {
        std::vector<std::string> reversed_args(args.rbegin(), args.rend());
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return usage_error;
    }

    Io io{in, out, err, output};
    try {
        const auto input = io.load(file);
        if (accept_cmd->parsed()) {
            const Word w = parse_word_arg(word);
            bool ok = false;
            if (const auto* d = std::get_if<dfa::Dfa>(&input)) ok = dfa::accepts(*d, w);
            else ok = nfa::accepts(as_nfa(input, "accept"), w);
            out << (ok ? "accepted" : "rejected") << '\n';
            return ok ? success : predicate_false;
        }
        if (apply_cmd->parsed()) {
            const auto& t = expect<transducer::SubseqTransducer>(input, "apply", "sst");
            const auto result = transducer::apply(t, parse_word_arg(word));
            out << (result ? show_word(*result) : std::string("undefined")) << '\n';
            return result ? success : predicate_false;
        }
        if (wapply_cmd->parsed()) {
            const auto& w = expect<wfa::Wfa>(input, "wapply", "wfa");
            out << to_string(wfa::weight(w, parse_word_arg(word))) << '\n';
            return success;
        }
        if (min_cmd->parsed()) {
            io.emit(minimized(input));
        } else if (det_cmd->parsed()) {
            io.emit(format::serialize(nfa::determinize(as_nfa(input, "det"))));
        } else if (codet_cmd->parsed()) {
            io.emit(format::serialize(nfa::codeterminize(as_nfa(input, "codet"))));
        } else if (brz_cmd->parsed()) {
            io.emit(format::serialize(nfa::brzozowski(as_nfa(input, "brzozowski"))));
        } else if (wmin_cmd->parsed()) {
            io.emit(format::serialize(wfa::minimize(expect<wfa::Wfa>(input, "wmin", "wfa"))));
        } else if (tmin_cmd->parsed()) {
            io.emit(format::serialize(
                transducer::minimize(expect<transducer::SubseqTransducer>(input, "tmin", "sst"))));
        } else if (synmon_cmd->parsed()) {
            const auto r = monoid::syntactic_monoid(as_dfa(input, "synmon"));
            io.emit(json ? format::monoid_to_json(r) : monoid::to_text(r));
        } else if (equiv_cmd->parsed()) {
            const bool same = equivalent(input, io.load(file2));
            out << (same ? "equivalent" : "not equivalent") << '\n';
            return same ? success : predicate_false;
        } else if (dot_cmd->parsed()) {
            io.emit(format::to_dot(input));
        }
        return success;
    } catch (const format::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const AlphabetMismatch& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    }
}

} // namespace automin::cli
