#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "automin/cli.hh"
#include "automin/format.hh"

using namespace automin;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string ends_with_a = "dfa\nalphabet a b\nstates 3\ninitial 0\nfinal 1 2\n"
                                "0 a 1\n0 b 0\n1 a 2\n1 b 0\n2 a 2\n2 b 0\n";
const std::string guess_last = "nfa\nalphabet a b\nstates 2\ninitial 0\nfinal 1\n0 a 0\n0 a 1\n0 b 0\n";
const std::string xx = "sst\ninput a\noutput x\nstates 1\ninitial 0 @\nfinal 0 @\n0 a 0 x\n";
const std::string pow2 = "wfa\nalphabet a\ndim 1\ninitial 1\nfinal 1\nmatrix a\n2\n";

} // namespace

TEST_CASE("accept") {
    CHECK(run({"accept", "-", "ba"}, ends_with_a).code == 0);
    const auto r = run({"accept", "-", "ab"}, ends_with_a);
    CHECK(r.code == 1);
    CHECK(r.out == "rejected\n");
    CHECK(run({"accept", "-", "@"}, guess_last).code == 1);
    CHECK(run({"accept", "-", "aba"}, guess_last).code == 0);
    CHECK(run({"accept", "-", "abc"}, ends_with_a).code == 2);
}

TEST_CASE("min canonical output") {
    const auto r = run({"min", "-"}, ends_with_a);
    CHECK(r.code == 0);
    CHECK(r.out == "dfa\nalphabet a b\nstates 2\ninitial 0\nfinal 1\n0 a 1\n0 b 0\n1 a 1\n1 b 0\n");
    CHECK(run({"min", "-"}, guess_last).out == r.out);
    CHECK(run({"brzozowski", "-"}, guess_last).out == r.out);
    CHECK(run({"det", "-"}, guess_last).out == r.out);
}

TEST_CASE("apply and wapply") {
    CHECK(run({"apply", "-", "aaa"}, xx).out == "xxx\n");
    CHECK(run({"apply", "-", "@"}, xx).out == "@\n");
    const auto undefined = run({"apply", "-", "a"}, "sst\ninput a\noutput x\nstates 1\ninitial 0 @\n");
    CHECK(undefined.code == 1);
    CHECK(undefined.out == "undefined\n");
    CHECK(run({"wapply", "-", "aaa"}, pow2).out == "8\n");
    CHECK(run({"wapply", "-", "aaa"}, ends_with_a).code == 2);
}

TEST_CASE("wmin and tmin") {
    CHECK(run({"wmin", "-"}, pow2).out == pow2);
    CHECK(run({"tmin", "-"}, xx).out == xx);
}

TEST_CASE("synmon") {
    const std::string even = "dfa\nalphabet a\nstates 2\ninitial 0\nfinal 0\n0 a 1\n1 a 0\n";
    const auto r = run({"synmon", "-", "--json"}, even);
    CHECK(r.code == 0);
    CHECK(r.out.find("\"order\": 2") != std::string::npos);
    CHECK(run({"synmon", "-"}, even).code == 0);
}

TEST_CASE("export-dot") {
    const auto r = run({"export-dot", "-"}, xx);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate", "-"}).code == 2);
    CHECK(run({"min"}).code == 2);
    CHECK(run({"min", "/nonexistent/file"}).code == 2);
    const auto bad = run({"min", "-"}, "dfa\nalphabet a\nstates two\n");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 3") != std::string::npos);
    CHECK(run({"tmin", "-"}, ends_with_a).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("equiv") {
    const auto dir = std::filesystem::temp_directory_path() / "automin_test_cli";
    std::filesystem::create_directories(dir);
    auto file = [&](const std::string& name, const std::string& text) {
        const auto path = (dir / name).string();
        std::ofstream(path) << text;
        return path;
    };
    const auto d = file("d.aut", ends_with_a);
    const auto n = file("n.aut", guess_last);
    const auto w = file("w.aut", pow2);
    const auto t = file("t.aut", xx);
    CHECK(run({"equiv", d, n}).code == 0);
    CHECK(run({"equiv", "-", n}, "dfa\nalphabet a b\nstates 1\ninitial 0\nfinal 0\n0 a 0\n0 b 0\n").code == 1);
    CHECK(run({"equiv", w, w}).code == 0);
    CHECK(run({"equiv", "-", w}, "wfa\nalphabet a\ndim 1\ninitial 1\nfinal 1\nmatrix a\n3\n").code == 1);
    CHECK(run({"equiv", t, t}).code == 0);
    CHECK(run({"equiv", "-", t}, "sst\ninput a\noutput x\nstates 1\ninitial 0 x\nfinal 0 @\n0 a 0 x\n").code == 1);
    CHECK(run({"equiv", d, w}).code == 2);
    const auto m = (dir / "m.aut").string();
    CHECK(run({"min", d, "-o", m}).code == 0);
    CHECK(run({"equiv", d, m}).code == 0);
    std::filesystem::remove_all(dir);
}
