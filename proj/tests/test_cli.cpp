#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <normarg/cli.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = normarg::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const fs::path& fixture_dir() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / "normarg_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string fixture(const std::string& name, const std::string& text) {
    const fs::path path = fixture_dir() / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
}

std::string overtaking_file() {
    return fixture("overtaking.norm",
                   "theory { }\n"
                   "level 1 { p -> !r }\n"
                   "level 2 { q -> r }\n"
                   "level 3 { !r }\n"
                   "situation { p, q }\n"
                   "consequence r\n");
}

std::string conflict_file() {
    return fixture("conflict.norm",
                   "level 1 { p -> !r, q -> r }\n"
                   "situation { p, q }\n"
                   "consequence r\n");
}

class EnvGuard {
public:
    EnvGuard(const char* name, const char* value) : name_(name) {
        const char* old = std::getenv(name);
        if (old != nullptr) saved_ = old;
        ::setenv(name, value, 1);
    }
    ~EnvGuard() {
        if (saved_)
            ::setenv(name_, saved_->c_str(), 1);
        else
            ::unsetenv(name_);
    }

private:
    const char* name_;
    std::optional<std::string> saved_;
};

}  // namespace

TEST_CASE("--help prints usage and succeeds") {
    const RunResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 16) == "usage: normarg <");
    CHECK(r.err.empty());
}

TEST_CASE("bad invocations exit with the usage code and a hint") {
    for (const auto& [args, needle] :
         std::vector<std::pair<std::vector<std::string>, std::string>>{
             {{}, "no command given"},
             {{"frobnicate"}, "unknown command 'frobnicate'"},
             {{"verdict"}, "'verdict' needs a norm file"},
             {{"verdict", "/nonexistent/path.norm"}, "cannot read file"},
             {{"verdict", "-x"}, "unknown option '-x'"},
             {{"verdict", "a.norm", "b.norm", "c.norm"}, "unexpected argument"},
             {{"verdict", "a.norm", "--format"}, "--format expects a value"},
         }) {
        CAPTURE(needle);
        const RunResult r = run(args);
        CHECK(r.code == 1);
        CHECK(r.out.empty());
        CHECK(r.err.find("error: ") == 0);
        CHECK(r.err.find(needle) != std::string::npos);
        CHECK(r.err.find("run 'normarg --help' for usage\n") != std::string::npos);
    }
}

TEST_CASE("exit codes separate parse, validation and cap failures") {
    const std::string bad_syntax = fixture("bad_syntax.norm", "level 1 { p & }\nconsequence r\n");
    const std::string bad_structure = fixture("bad_structure.norm", "situation { p }\n");
    const std::string bad_theory =
        fixture("bad_theory.norm", "theory { p, !p }\nlevel 1 { q }\nconsequence r\n");
    std::string wide = "level 1 { ";
    for (char c = 'a'; c <= 'u'; ++c) {
        if (c != 'a') wide += ", ";
        wide += c;
    }
    const std::string too_wide = fixture("too_wide.norm", wide + " }\nconsequence a\n");

    RunResult r = run({"verdict", bad_syntax});
    CHECK(r.code == 2);
    CHECK(r.err.find("error: line 1:") == 0);

    r = run({"verdict", bad_structure});
    CHECK(r.code == 2);
    CHECK(r.err == "error: a norm file needs at least one level\n");

    r = run({"verdict", bad_theory});
    CHECK(r.code == 3);
    CHECK(r.err == "error: background theory is inconsistent\n");

    r = run({"verdict", too_wide});
    CHECK(r.code == 4);
    CHECK(r.err.find("error: ") == 0);
}

TEST_CASE("verdict prints the decision and its witnesses") {
    const RunResult r = run({"verdict", overtaking_file()});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "FORBIDDEN\n"
          "maximal consistent sub-bases:\n"
          "  δ2 ⟨{p -> !r}, {}, {!r}⟩ [-]\n");
    CHECK(r.err.empty());
}

TEST_CASE("statespace honors --ascii") {
    const RunResult utf8 = run({"statespace", overtaking_file()});
    CHECK(utf8.code == 0);
    CHECK(utf8.out.find("δ0") != std::string::npos);
    CHECK(utf8.out.find("⊥") != std::string::npos);

    const RunResult ascii = run({"statespace", overtaking_file(), "--ascii"});
    CHECK(ascii.code == 0);
    CHECK(ascii.out.find("d0") != std::string::npos);
    CHECK(ascii.out.find("  B ") != std::string::npos);
    for (char c : ascii.out) CHECK(static_cast<unsigned char>(c) < 0x80);
}

TEST_CASE("framework defaults to JSON and accepts --format=dot") {
    const RunResult json = run({"framework", conflict_file()});
    CHECK(json.code == 0);
    const auto j = nlohmann::ordered_json::parse(json.out);
    CHECK(j.at("arguments").size() == 5);

    const RunResult dot = run({"framework", conflict_file(), "--format=dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.substr(0, 20) == "digraph framework {\n");
}

TEST_CASE("each command accepts only its own formats") {
    for (const auto& [args, needle] :
         std::vector<std::pair<std::vector<std::string>, std::string>>{
             {{"verdict", "x", "--format", "json"}, "'verdict' supports --format text"},
             {{"framework", "x", "--format", "dialogue"},
              "'framework' supports --format json, dot, got 'dialogue'"},
             {{"explain", "x", "--format", "text"},
              "'explain' supports --format dialogue, dot, json, got 'text'"},
             {{"check", "x", "--format", "dot"}, "'check' supports --format text"},
         }) {
        CAPTURE(needle);
        const RunResult r = run(args);
        CHECK(r.code == 1);
        CHECK(r.err.find(needle) != std::string::npos);
    }
}

TEST_CASE("selfcheck-only and explain-only flags are rejected elsewhere") {
    const std::string file = overtaking_file();
    CHECK(run({"verdict", file, "--seed", "2"}).code == 1);
    CHECK(run({"verdict", file, "--count", "10"}).code == 1);
    CHECK(run({"verdict", file, "--diagnostic"}).code == 1);
    CHECK(run({"verdict", file, "--seed", "2"}).err.find(
              "--seed only applies to 'selfcheck'") != std::string::npos);
    CHECK(run({"selfcheck", file}).err.find("'selfcheck' does not take a file") !=
          std::string::npos);
    CHECK(run({"selfcheck", "--format", "json"}).code == 1);
    CHECK(run({"selfcheck", "--diagnostic"}).code == 1);
    CHECK(run({"selfcheck", "--seed", "abc"}).err.find(
              "--seed expects a non-negative integer, got 'abc'") != std::string::npos);
}

TEST_CASE("explain refuses an undecided case unless --diagnostic is given") {
    const RunResult bare = run({"explain", conflict_file()});
    CHECK(bare.code == 3);
    CHECK(bare.err ==
          "error: the consequence is neither obligatory nor forbidden\n"
          "hint: use --diagnostic to see the rival tree families\n");

    const RunResult diag = run({"explain", conflict_file(), "--diagnostic"});
    CHECK(diag.code == 0);
    CHECK(diag.out.find("verdict: NEITHER\n") == 0);
    CHECK(diag.out.find("explanation that the consequence is OBLIGATORY (incomplete)") !=
          std::string::npos);
    CHECK(diag.out.find("explanation that the consequence is FORBIDDEN (incomplete)") !=
          std::string::npos);
}

TEST_CASE("explain emits a dialogue by default and JSON on request") {
    const RunResult dialogue = run({"explain", overtaking_file()});
    CHECK(dialogue.code == 0);
    CHECK(dialogue.out ==
          "explanation that the consequence is FORBIDDEN\n"
          "admissible dispute tree for ⟨δ0,{},-⟩:\n"
          "P: ⟨δ0,{},-⟩ sub-base ⟨{p -> !r}, {q -> r}, {!r}⟩\n"
          "  O: ⟨δ1,{q},+⟩ sub-base ⟨{p -> !r}, {q -> r}, {}⟩\n"
          "    P: ⟨δ2,{p,q},-⟩ sub-base ⟨{p -> !r}, {}, {!r}⟩\n");

    const RunResult json = run({"explain", overtaking_file(), "--format", "json"});
    CHECK(json.code == 0);
    const auto j = nlohmann::ordered_json::parse(json.out);
    CHECK(j.at("verdict") == "FORBIDDEN");
    CHECK(j.at("families").at(0).at("complete") == true);
}

TEST_CASE("check reports pass with exit 0 and failures with exit 1") {
    const RunResult good = run({"check", overtaking_file()});
    CHECK(good.code == 0);
    CHECK(good.out.find("verdict: FORBIDDEN\n") == 0);
    CHECK(good.out.find("FAIL") == std::string::npos);

    const std::string counterexample = fixture("neutral_attacker.norm",
                                               "theory { }\n"
                                               "level 1 { !p, !r -> p }\n"
                                               "level 2 { !r -> q, r -> r }\n"
                                               "situation { !q, p }\n"
                                               "consequence r\n");
    const RunResult bad = run({"check", counterexample});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("neutral-no-attack (neutral arguments launch no attacks): FAIL") !=
          std::string::npos);
    CHECK(bad.err.empty());
}

TEST_CASE("selfcheck runs a seeded batch and reports a pass") {
    const RunResult r = run({"selfcheck", "--seed", "1", "--count", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("selfcheck seed=1 count=20\n") == 0);
    CHECK(r.out.find("result: PASS\n") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("the atom cap can be lowered but not raised via the environment") {
    const std::string file = overtaking_file();
    {
        EnvGuard guard("NORMARG_MAX_ATOMS", "2");
        const RunResult r = run({"verdict", file});
        CHECK(r.code == 4);
    }
    {
        EnvGuard guard("NORMARG_MAX_ATOMS", "abc");
        const RunResult r = run({"verdict", file});
        CHECK(r.code == 1);
        CHECK(r.err.find("NORMARG_MAX_ATOMS must be a positive integer, got 'abc'") !=
              std::string::npos);
    }
    {
        EnvGuard guard("NORMARG_MAX_ATOMS", "0");
        CHECK(run({"verdict", file}).code == 1);
    }
    {
        EnvGuard guard("NORMARG_MAX_ATOMS", "1000000");
        const RunResult r = run({"verdict", file});
        CHECK(r.code == 0);
        CHECK(r.out.find("FORBIDDEN") == 0);
    }
    CHECK(run({"verdict", file}).code == 0);
}

TEST_CASE("repeated runs are byte-identical") {
    const std::string file = overtaking_file();
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"statespace", file},
          {"framework", file},
          {"explain", file, "--format", "dot"},
          {"check", file},
          {"selfcheck", "--seed", "3", "--count", "10"}}) {
        const RunResult a = run(args);
        const RunResult b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}
